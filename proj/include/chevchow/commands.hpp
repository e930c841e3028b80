#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "chevchow/io.hpp"
#include "chevchow/limits.hpp"

namespace chevchow {

struct CommandOptions {
  std::string subgroup;  // empty: none
  std::optional<std::size_t> max_degree;
  bool rational = false;
  bool integral = false;
  Limits limits;
};

/// The group or the named subgroup failed validation; report() holds the
/// validation report as JSON.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(Json report) : Error("descriptor failed validation"), report_(std::move(report)) {}
  const Json& report() const { return report_; }

 private:
  Json report_;
};

struct CommandResult {
  Json result;
  bool ok = true;  // false only for a validate run that found problems
};

/// Runs one of validate, picard, ns, chow, hchow, hpic, complete, structure,
/// cover, echo on a parsed document. Commands other than validate and echo
/// throw ValidationFailed on an invalid descriptor.
CommandResult run_command(const std::string& command, const DescriptorDocument& doc, const CommandOptions& opts);

bool command_needs_subgroup(const std::string& command);

}  // namespace chevchow
