#include "problem.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dualrep/errors.hpp"

namespace dualrep::cli {
namespace {

using nlohmann::json;
using Pointer = json::json_pointer;

std::size_t skip_ws(const std::string& text, std::size_t pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
    ++pos;
  }
  return pos;
}

std::size_t skip_string(const std::string& text, std::size_t pos) {
  for (++pos; pos < text.size(); ++pos) {
    if (text[pos] == '\\') {
      ++pos;
    } else if (text[pos] == '"') {
      return pos + 1;
    }
  }
  return pos;
}

std::size_t skip_value(const std::string& text, std::size_t pos) {
  if (pos >= text.size()) return pos;
  if (text[pos] == '"') return skip_string(text, pos);
  if (text[pos] == '[' || text[pos] == '{') {
    int depth = 0;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '"') {
        pos = skip_string(text, pos);
        continue;
      }
      if (c == '[' || c == '{') ++depth;
      if (c == ']' || c == '}') {
        if (--depth == 0) return pos + 1;
      }
      ++pos;
    }
    return pos;
  }
  while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && text[pos] != '}' && text[pos] != ' ' &&
         text[pos] != '\n' && text[pos] != '\r' && text[pos] != '\t') {
    ++pos;
  }
  return pos;
}

std::vector<std::string> tokens_of(const Pointer& pointer) {
  std::vector<std::string> out;
  const std::string s = pointer.to_string();
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t next = s.find('/', pos + 1);
    std::string token = s.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    for (std::size_t i; (i = token.find("~1")) != std::string::npos;) token.replace(i, 2, "/");
    for (std::size_t i; (i = token.find("~0")) != std::string::npos;) token.replace(i, 2, "~");
    out.push_back(std::move(token));
    pos = next == std::string::npos ? s.size() : next;
  }
  return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& text, const Pointer& at,
                       const std::string& message) {
  std::ostringstream os;
  os << where;
  if (const int line = locate(text, at); line > 0) os << ':' << line;
  os << ": " << (at.empty() ? std::string("/") : at.to_string()) << ": " << message;
  throw InputError(os.str());
}

struct Reader {
  const json& root;
  const std::string& text;
  const std::string& where;

  const json& at(const Pointer& p) const { return root.at(p); }

  void require_object(const Pointer& p, std::initializer_list<const char*> allowed) const {
    const json& v = at(p);
    if (!v.is_object()) fail(where, text, p, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : v.items()) {
      if (!keys.contains(item.key())) fail(where, text, p / item.key(), "unknown key \"" + item.key() + "\"");
    }
  }

  bool has(const Pointer& p, const char* key) const { return at(p).contains(key); }

  const json& member(const Pointer& p, const char* key) const {
    if (!has(p, key)) fail(where, text, p, std::string("missing required key \"") + key + "\"");
    return at(p / key);
  }

  double number(const Pointer& p) const {
    const json& v = at(p);
    if (!v.is_number()) fail(where, text, p, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, text, p, "expected a finite number");
    return x;
  }

  double exponent(const Pointer& p) const {
    const double x = number(p);
    if (!(x > 1.0)) {
      std::ostringstream os;
      os << "domain error: exponent must satisfy 1 < p < inf (got " << x << ")";
      fail(where, text, p, os.str());
    }
    return x;
  }

  std::string string(const Pointer& p) const {
    const json& v = at(p);
    if (!v.is_string()) fail(where, text, p, "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const Pointer& p) const {
    const json& v = at(p);
    if (!v.is_array()) fail(where, text, p, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(p / i));
    return out;
  }

  /// {"values": [...]} or a bare array.
  std::vector<double> values(const Pointer& p) const {
    if (at(p).is_object()) {
      require_object(p, {"values"});
      member(p, "values");
      return numbers(p / "values");
    }
    return numbers(p);
  }

  std::vector<RealFunction> basis(const Pointer& p) const {
    Pointer rows = p;
    if (at(p).is_object()) {
      require_object(p, {"basis"});
      member(p, "basis");
      rows = p / "basis";
    }
    const json& v = at(rows);
    if (!v.is_array() || v.empty()) fail(where, text, rows, "expected a non-empty array of basis vectors");
    std::vector<RealFunction> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
      std::vector<double> row = numbers(rows / j);
      if (row.empty()) fail(where, text, rows / j, "basis vector is empty");
      if (!out.empty() && row.size() != out.front().size()) {
        fail(where, text, rows / j, "basis vectors have different lengths");
      }
      out.emplace_back(std::move(row));
    }
    return out;
  }
};

std::string options_list(std::initializer_list<const char*> names) {
  std::string out;
  for (const char* n : names) out += std::string(out.empty() ? "" : ", ") + '"' + n + '"';
  return out;
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw InputError(path + ": read error");
  return os.str();
}

json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string what = e.what();
    if (const auto cut = what.find("parse error"); cut != std::string::npos) what = what.substr(cut);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(byte - line_start + 1) +
                     ": invalid JSON: " + what);
  }
}

int locate(const std::string& text, const Pointer& pointer) {
  std::size_t pos = skip_ws(text, 0);
  for (const std::string& token : tokens_of(pointer)) {
    if (pos >= text.size()) return 0;
    if (text[pos] == '{') {
      pos = skip_ws(text, pos + 1);
      bool found = false;
      while (pos < text.size() && text[pos] == '"') {
        const std::size_t end = skip_string(text, pos);
        const std::string key = text.substr(pos + 1, end - pos - 2);
        pos = skip_ws(text, end);
        if (pos >= text.size() || text[pos] != ':') return 0;
        pos = skip_ws(text, pos + 1);
        if (key == token) {
          found = true;
          break;
        }
        pos = skip_ws(text, skip_value(text, pos));
        if (pos < text.size() && text[pos] == ',') pos = skip_ws(text, pos + 1);
      }
      if (!found) return 0;
    } else if (text[pos] == '[') {
      std::size_t index = 0;
      try {
        index = std::stoul(token);
      } catch (const std::exception&) {
        return 0;
      }
      pos = skip_ws(text, pos + 1);
      for (std::size_t k = 0; k < index; ++k) {
        pos = skip_ws(text, skip_value(text, pos));
        if (pos >= text.size() || text[pos] != ',') return 0;
        pos = skip_ws(text, pos + 1);
      }
    } else {
      return 0;
    }
  }
  int line = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

YoungFunction parse_young(const json& doc, const std::string& text, const std::string& where, const Pointer& at) {
  const Reader r{doc, text, where};
  r.require_object(at, {"family", "p", "r", "normalized"});
  r.member(at, "family");
  const std::string family = r.string(at / "family");
  try {
    if (family == "power") {
      r.member(at, "p");
      const double p = r.exponent(at / "p");
      bool normalized = true;
      if (r.has(at, "normalized")) {
        if (!r.at(at / "normalized").is_boolean()) fail(where, text, at / "normalized", "expected true or false");
        normalized = r.at(at / "normalized").get<bool>();
      }
      if (r.has(at, "r")) fail(where, text, at / "r", "\"r\" belongs to the power_sum family");
      return power_young(p, normalized);
    }
    if (family == "power_sum") {
      r.member(at, "p");
      r.member(at, "r");
      if (r.has(at, "normalized")) fail(where, text, at / "normalized", "power_sum has no normalization flag");
      return power_sum_young(r.exponent(at / "p"), r.exponent(at / "r"));
    }
  } catch (const Error& e) {
    fail(where, text, at, std::string(to_string(e.kind())) + ": " + e.what());
  }
  fail(where, text, at / "family", "unknown Young family \"" + family + "\" (expected " +
                                       options_list({"power", "power_sum"}) + ")");
}

SpaceModel parse_model(const json& doc, const std::string& text, const std::string& where, const Pointer& at) {
  const Reader r{doc, text, where};
  r.require_object(at, {"space", "structure"});
  r.member(at, "space");
  const Pointer space_at = at / "space";
  r.require_object(space_at, {"weights"});
  r.member(space_at, "weights");
  const Pointer weights_at = space_at / "weights";
  const std::vector<double> weights = r.numbers(weights_at);
  if (weights.empty()) fail(where, text, weights_at, "schema error: a measure space needs at least one atom");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      std::ostringstream os;
      os << "schema error: atom weights must be positive (got " << weights[i] << ")";
      fail(where, text, weights_at / i, os.str());
    }
  }
  MeasureSpace space(weights);

  r.member(at, "structure");
  const Pointer structure_at = at / "structure";
  r.require_object(structure_at, {"kind", "p", "young"});
  r.member(structure_at, "kind");
  const std::string kind = r.string(structure_at / "kind");
  if (kind == "hilbert") {
    if (r.has(structure_at, "p") || r.has(structure_at, "young")) {
      fail(where, text, structure_at, "a hilbert structure takes no parameters");
    }
    return SpaceModel::hilbert(std::move(space));
  }
  if (kind == "lebesgue") {
    r.member(structure_at, "p");
    if (r.has(structure_at, "young")) fail(where, text, structure_at / "young", "lebesgue takes \"p\" only");
    return SpaceModel::lebesgue(std::move(space), r.exponent(structure_at / "p"));
  }
  if (kind == "orlicz") {
    r.member(structure_at, "young");
    if (r.has(structure_at, "p")) fail(where, text, structure_at / "p", "orlicz takes \"young\" only");
    return SpaceModel::orlicz(std::move(space), parse_young(doc, text, where, structure_at / "young"));
  }
  fail(where, text, structure_at / "kind",
       "unknown structure \"" + kind + "\" (expected " + options_list({"hilbert", "lebesgue", "orlicz"}) + ")");
}

ProblemFile load_problem(const std::string& path) {
  const std::string text = read_text(path);
  const json doc = parse_document(text, path);
  const Reader r{doc, text, path};
  ProblemFile out;
  out.source = path;
  if (!doc.is_object()) fail(path, text, Pointer(), "expected a JSON object");

  if (!doc.contains("model")) {
    if (!doc.contains("space") && !doc.contains("structure")) {
      fail(path, text, Pointer(), "expected a model ({\"space\", \"structure\"}) or a problem file with a \"model\" key");
    }
    out.model = parse_model(doc, text, path);
    return out;
  }

  r.require_object(Pointer(), {"model", "input", "functional", "subspace", "action", "seed", "parameters"});
  out.model = parse_model(doc, text, path, Pointer("/model"));
  const std::size_t n = out.model->dimension();
  const auto sized = [&](const char* key, std::size_t expected, const char* what) {
    const Pointer p = Pointer() / key;
    std::vector<double> v = r.values(p);
    if (v.size() != expected) {
      fail(path, text, p,
           "dimension error: " + std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
               std::to_string(expected));
    }
    return v;
  };
  if (doc.contains("input")) out.input = RealFunction(sized("input", n, "input"));
  if (doc.contains("functional")) out.functional = DualFunctional(sized("functional", n, "functional"));
  if (doc.contains("subspace")) {
    out.subspace = r.basis(Pointer("/subspace"));
    if (out.subspace.front().size() != n) {
      fail(path, text, Pointer("/subspace"),
           "dimension error: basis vectors have " + std::to_string(out.subspace.front().size()) +
               " entries, expected " + std::to_string(n));
    }
  }
  if (doc.contains("action")) {
    if (out.subspace.empty()) fail(path, text, Pointer("/action"), "\"action\" needs a \"subspace\"");
    out.action = sized("action", out.subspace.size(), "action");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail(path, text, Pointer("/seed"), "seed must be a nonnegative integer");
    out.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("parameters")) {
    if (!doc["parameters"].is_object()) fail(path, text, Pointer("/parameters"), "expected an object");
    out.parameters = doc["parameters"];
  }
  return out;
}

std::vector<double> load_values(const std::string& path) {
  const std::string text = read_text(path);
  const json doc = parse_document(text, path);
  return Reader{doc, text, path}.values(Pointer());
}

std::vector<RealFunction> load_subspace(const std::string& path) {
  const std::string text = read_text(path);
  const json doc = parse_document(text, path);
  return Reader{doc, text, path}.basis(Pointer());
}

void check_dimensions(const ProblemFile& problem) {
  if (!problem.model) return;
  const auto named = [&](const std::string& item) {
    const auto it = problem.origin.find(item);
    const std::string file = it != problem.origin.end() ? it->second : problem.source;
    return file.empty() ? item : item + " (" + file + ")";
  };
  const std::size_t n = problem.model->dimension();
  const auto check = [&](std::size_t size, const std::string& item, const char* what) {
    if (size != n) {
      throw InputError("dimension error: " + named(item) + " has " + std::to_string(size) + " " + what +
                       " but the " + named("model") + " has " + std::to_string(n) + " atoms");
    }
  };
  if (problem.input) check(problem.input->size(), "input", "entries");
  if (problem.functional) check(problem.functional->size(), "functional", "entries");
  if (!problem.subspace.empty()) check(problem.subspace.front().size(), "subspace", "entries per basis vector");
  if (problem.action && problem.action->size() != problem.subspace.size()) {
    throw InputError("dimension error: " + named("action") + " has " + std::to_string(problem.action->size()) +
                     " entries but the " + named("subspace") + " has " + std::to_string(problem.subspace.size()) +
                     " basis vectors");
  }
}

}  // namespace dualrep::cli
