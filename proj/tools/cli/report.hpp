#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace dualrep::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

Format parse_format(const std::string& name);

enum class Relation { kAtMost, kAtLeast, kAbove };

/// Every numeric contract of a command: measured value, tolerance, verdict.
class Contracts {
 public:
  bool check(const std::string& name, double value, double tolerance, Relation relation = Relation::kAtMost);
  bool all_pass() const noexcept { return all_pass_; }
  const Json& json() const noexcept { return list_; }

 private:
  Json list_ = Json::array();
  bool all_pass_ = true;
};

struct Report {
  Json body = Json::object();
  /// False when any contract (or verification trial) failed; exit code 3.
  bool passed = true;
};

/// %.17g; non-finite values become null in JSON.
std::string format_number(double x, Format format);

void write_json(std::ostream& os, const Json& value);

/// One line per element of body["rows"] when present, else "key,value"
/// lines for every scalar leaf, keyed by its JSON pointer.
void write_csv(std::ostream& os, const Json& body);

/// Writes to `path`, or to stdout when path is empty or "-".  I/O failures
/// throw InputError.
void write_report(const Report& report, Format format, const std::string& path);

}  // namespace dualrep::cli
