#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chevchow/chow_picard.hpp"
#include "chevchow/errors.hpp"
#include "chevchow/group_model.hpp"
#include "chevchow/structure_checks.hpp"

namespace chevchow {

inline constexpr const char* kSchemaVersion = "chevalley-chow/1";

using Json = nlohmann::ordered_json;

/// Malformed JSON; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not match the descriptor schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& reason)
      : Error(path + ": " + reason), path_(path), reason_(reason) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

struct DescriptorDocument {
  GroupDescriptor group;
  std::vector<std::pair<std::string, SubgroupDescriptor>> subgroups;  // file order

  const SubgroupDescriptor* find_subgroup(const std::string& name) const;
  bool operator==(const DescriptorDocument&) const = default;
};

/// Strict parse; throws SyntaxError or SchemaError, nothing else.
DescriptorDocument parse_descriptor(std::string_view bytes);
/// Reads a file and parses it; unreadable files raise InvalidArgument.
DescriptorDocument load_descriptor(const std::string& path);

/// Named subgroup from the document, or one of the built-in names
/// "trivial", "T", "B", "G_aff".
SubgroupDescriptor resolve_subgroup(const DescriptorDocument& doc, const std::string& name);

Json to_json(const DescriptorDocument& doc);
Json to_json(const GroupDescriptor& gd);
Json to_json(const SubgroupDescriptor& hd, const GroupDescriptor& gd);
std::string emit_descriptor(const DescriptorDocument& doc);

Json to_json(const BigInt& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const FGAbelianGroup& a);
Json to_json(const FormalPicardZero& p);
Json to_json(const ValidationReport& r);
Json to_json(const GroupAttributes& a);
Json to_json(const PicardReport& r);
Json to_json(const GradedPresentation& p, const WeylGroup* weyl = nullptr);
Json to_json(const HomogeneousPicardReport& r);
Json to_json(const HomogeneousNS& r);
Json to_json(const Verdict& v);
Json to_json(const FibrationReport& r);

enum class Format { json, text };

/// Wraps a result in the versioned envelope and renders it. JSON output is
/// byte-stable for a fixed result.
std::string emit_report(const std::string& command, const std::string& descriptor_name, const Json& result,
                        Format format);

/// Indented "key: value" rendering; abelian groups and formal Pic0 symbols
/// are printed in their usual notation.
std::string render_text(const Json& j);

}  // namespace chevchow
