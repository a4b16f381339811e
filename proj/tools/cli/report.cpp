#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "problem.hpp"

namespace dualrep::cli {
namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

bool is_flat(const Json& array) {
  for (const Json& v : array) {
    if (v.is_structured()) return false;
  }
  return true;
}

void write_scalar(std::ostream& os, const Json& value, Format format) {
  if (value.is_number_float()) {
    os << format_number(value.get<double>(), format);
  } else if (format == Format::kCsv && value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) {
      os << s;
    } else {
      os << '"';
      for (char c : s) os << (c == '"' ? "\"\"" : std::string(1, c));
      os << '"';
    }
  } else if (format == Format::kCsv && value.is_null()) {
    // empty cell
  } else {
    os << value.dump();
  }
}

void write_value(std::ostream& os, const Json& value, int depth) {
  if (value.is_object()) {
    if (value.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (const auto& item : value.items()) {
      indent(os, depth + 1);
      os << Json(item.key()).dump() << ": ";
      write_value(os, item.value(), depth + 1);
      os << (++k < value.size() ? ",\n" : "\n");
    }
    indent(os, depth);
    os << '}';
  } else if (value.is_array()) {
    if (value.empty()) {
      os << "[]";
      return;
    }
    if (is_flat(value)) {
      os << '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) os << ", ";
        write_scalar(os, value[i], Format::kJson);
      }
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < value.size(); ++i) {
      indent(os, depth + 1);
      write_value(os, value[i], depth + 1);
      os << (i + 1 < value.size() ? ",\n" : "\n");
    }
    indent(os, depth);
    os << ']';
  } else {
    write_scalar(os, value, Format::kJson);
  }
}

void flatten(const Json& value, const std::string& prefix, std::ostream& os) {
  if (value.is_object()) {
    for (const auto& item : value.items()) flatten(item.value(), prefix + "/" + item.key(), os);
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], prefix + "/" + std::to_string(i), os);
  } else {
    write_scalar(os, Json(prefix), Format::kCsv);
    os << ',';
    write_scalar(os, value, Format::kCsv);
    os << '\n';
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw InputError("unknown format \"" + name + "\" (expected json or csv)");
}

bool Contracts::check(const std::string& name, double value, double tolerance, Relation relation) {
  bool pass = false;
  const char* symbol = "<=";
  switch (relation) {
    case Relation::kAtMost:
      pass = value <= tolerance;
      break;
    case Relation::kAtLeast:
      pass = value >= tolerance;
      symbol = ">=";
      break;
    case Relation::kAbove:
      pass = value > tolerance;
      symbol = ">";
      break;
  }
  Json entry = Json::object();
  entry["name"] = name;
  entry["value"] = value;
  entry["relation"] = symbol;
  entry["tolerance"] = tolerance;
  entry["pass"] = pass;
  list_.push_back(std::move(entry));
  all_pass_ = all_pass_ && pass;
  return pass;
}

std::string format_number(double x, Format format) {
  if (std::isnan(x)) return format == Format::kJson ? "null" : "nan";
  if (std::isinf(x)) return format == Format::kJson ? "null" : (x > 0 ? "inf" : "-inf");
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  std::string s = buffer;
  // Keep floats recognizable as floats after a round trip.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write_json(std::ostream& os, const Json& value) {
  write_value(os, value, 0);
  os << '\n';
}

void write_csv(std::ostream& os, const Json& body) {
  if (!body.contains("rows") || !body["rows"].is_array()) {
    os << "key,value\n";
    flatten(body, "", os);
    return;
  }
  std::vector<std::string> columns;
  for (const Json& row : body["rows"]) {
    for (const auto& item : row.items()) {
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) columns.push_back(item.key());
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  for (const Json& row : body["rows"]) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) os << ',';
      if (row.contains(columns[c])) write_scalar(os, row[columns[c]], Format::kCsv);
    }
    os << '\n';
  }
}

void write_report(const Report& report, Format format, const std::string& path) {
  std::ostringstream buffer;
  if (format == Format::kJson) {
    write_json(buffer, report.body);
  } else {
    write_csv(buffer, report.body);
  }
  if (path.empty() || path == "-") {
    std::cout << buffer.str() << std::flush;
    if (!std::cout) throw InputError("error writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << buffer.str();
  out.close();
  if (!out) throw InputError(path + ": write error");
}

}  // namespace dualrep::cli
