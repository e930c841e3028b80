#include "chevchow/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "chevchow/root_datum.hpp"

namespace chevchow {

namespace {

constexpr std::size_t kMaxDepth = 64;
constexpr std::size_t kMaxRank = 256;
constexpr std::size_t kMaxRows = 4096;
constexpr std::size_t kMaxDigits = 4096;
constexpr std::size_t kMaxDimension = 1'000'000;
constexpr std::size_t kMaxSubgroups = 1024;

std::pair<std::size_t, std::size_t> line_column(std::string_view bytes, std::size_t offset) {
  offset = std::min(offset, bytes.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (bytes[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// nlohmann recurses on nesting, so deep inputs are rejected before parsing.
void check_depth(std::string_view bytes) {
  std::size_t depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '[' || c == '{') {
      if (++depth > kMaxDepth) {
        auto [line, col] = line_column(bytes, i);
        throw SyntaxError(line, col, "nesting deeper than " + std::to_string(kMaxDepth));
      }
    } else if (c == ']' || c == '}') {
      if (depth > 0) --depth;
    }
  }
}

std::string child(const std::string& path, const std::string& key) {
  if (key.empty()) return (path.empty() ? "$" : path) + "[\"\"]";
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError(child(path, it.key()), "unknown key");
  }
}

const Json* field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& required(const Json& obj, const char* key, const std::string& path) {
  const Json* f = field(obj, key);
  if (!f) throw SchemaError(child(path, key), "missing required key");
  return *f;
}

BigInt parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.size() > kMaxDigits ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw SchemaError(path, "expected an integer or a string of decimal digits");
    }
    return BigInt(s);
  }
  if (j.is_number_float()) throw SchemaError(path, "expected an integer, got a float");
  throw SchemaError(path, "expected an integer");
}

std::size_t parse_size(const Json& j, const std::string& path, std::size_t max) {
  BigInt v = parse_integer(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  if (v > max) throw SchemaError(path, "exceeds the limit of " + std::to_string(max));
  return static_cast<std::size_t>(v);
}

bool parse_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

std::string parse_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

const Json& parse_array(const Json& j, const std::string& path, std::size_t max = kMaxRows) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (j.size() > max) throw SchemaError(path, "more than " + std::to_string(max) + " entries");
  return j;
}

IntVector parse_vector(const Json& j, const std::string& path, std::size_t length) {
  parse_array(j, path);
  if (j.size() != length) {
    throw SchemaError(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  }
  IntVector v;
  v.reserve(length);
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], element(path, i)));
  return v;
}

IntMatrix parse_matrix(const Json& j, const std::string& path, std::size_t cols,
                       std::optional<std::size_t> rows = std::nullopt) {
  parse_array(j, path);
  if (rows && j.size() != *rows) {
    throw SchemaError(path, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
  }
  std::vector<IntVector> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vector(j[i], element(path, i), cols));
  return IntMatrix::from_rows(out, cols);
}

RootDatum parse_root_datum(const Json& j, const std::string& path) {
  require_object(j, path, {"rank", "simple_roots", "simple_coroots", "u_rad"});
  RootDatum rd;
  rd.rank = parse_size(required(j, "rank", path), child(path, "rank"), kMaxRank);
  if (const Json* f = field(j, "simple_roots")) {
    parse_array(*f, child(path, "simple_roots"), kMaxRank);
    for (std::size_t i = 0; i < f->size(); ++i) {
      rd.simple_roots.push_back(parse_vector((*f)[i], element(child(path, "simple_roots"), i), rd.rank));
    }
  }
  if (const Json* f = field(j, "simple_coroots")) {
    parse_array(*f, child(path, "simple_coroots"), kMaxRank);
    for (std::size_t i = 0; i < f->size(); ++i) {
      rd.simple_coroots.push_back(parse_vector((*f)[i], element(child(path, "simple_coroots"), i), rd.rank));
    }
  }
  if (rd.simple_roots.size() != rd.simple_coroots.size()) {
    throw SchemaError(child(path, "simple_coroots"), "must have as many entries as simple_roots");
  }
  if (const Json* f = field(j, "u_rad")) rd.u_rad = parse_size(*f, child(path, "u_rad"), kMaxDimension);
  return rd;
}

AbelianVarietyData parse_abelian(const Json& j, const std::string& path) {
  require_object(j, path, {"g", "ns_rank", "ns_torsion"});
  AbelianVarietyData av;
  if (const Json* f = field(j, "g")) av.g = parse_size(*f, child(path, "g"), kMaxDimension);
  std::size_t ns_rank = 0;
  if (const Json* f = field(j, "ns_rank")) ns_rank = parse_size(*f, child(path, "ns_rank"), kMaxRank);
  std::vector<BigInt> torsion;
  if (const Json* f = field(j, "ns_torsion")) {
    parse_array(*f, child(path, "ns_torsion"), kMaxRank);
    for (std::size_t i = 0; i < f->size(); ++i) {
      BigInt d = parse_integer((*f)[i], element(child(path, "ns_torsion"), i));
      if (d < 1) throw SchemaError(element(child(path, "ns_torsion"), i), "torsion orders must be positive");
      torsion.push_back(d);
    }
  }
  av.ns = FGAbelianGroup::from_cyclic_orders(ns_rank, torsion);
  return av;
}

AntiAffineGluing parse_gluing(const Json& j, const std::string& path, std::size_t rank) {
  require_object(j, path, {"xd_rank", "xd_relations", "v", "sigma_kernel", "unipotent_dim", "char"});
  AntiAffineGluing gl;
  std::size_t n = 0;
  if (const Json* f = field(j, "xd_rank")) n = parse_size(*f, child(path, "xd_rank"), kMaxRank);
  gl.xd = Presentation::free(n);
  if (const Json* f = field(j, "xd_relations")) gl.xd.relations = parse_matrix(*f, child(path, "xd_relations"), n);
  gl.v = IntMatrix(n, rank);
  if (const Json* f = field(j, "v")) gl.v = parse_matrix(*f, child(path, "v"), rank, n);
  gl.sigma_kernel = IntMatrix(0, n);
  if (const Json* f = field(j, "sigma_kernel")) gl.sigma_kernel = parse_matrix(*f, child(path, "sigma_kernel"), n);
  if (const Json* f = field(j, "unipotent_dim")) {
    gl.unipotent_dim = parse_size(*f, child(path, "unipotent_dim"), kMaxDimension);
  }
  if (const Json* f = field(j, "char")) {
    gl.characteristic = static_cast<unsigned long>(
        parse_size(*f, child(path, "char"), std::numeric_limits<std::uint32_t>::max()));
  }
  return gl;
}

GroupDescriptor parse_group(const Json& j) {
  // Group paths are reported relative to the group object.
  const std::string path;
  if (!j.is_object()) throw SchemaError("group", "expected an object");
  require_object(j, path, {"name", "root_datum", "abelian", "gluing"});
  GroupDescriptor gd;
  if (const Json* f = field(j, "name")) gd.name = parse_string(*f, "name");
  gd.rd = parse_root_datum(required(j, "root_datum", path), "root_datum");
  if (const Json* f = field(j, "abelian")) gd.av = parse_abelian(*f, "abelian");
  gd.gluing.xd = Presentation::free(0);
  gd.gluing.v = IntMatrix(0, gd.rd.rank);
  gd.gluing.sigma_kernel = IntMatrix(0, 0);
  if (const Json* f = field(j, "gluing")) gd.gluing = parse_gluing(*f, "gluing", gd.rd.rank);
  return gd;
}

// Positive roots of a datum, computed lazily and only for well-formed data.
class RootIndex {
 public:
  explicit RootIndex(const RootDatum& rd) : rd_(rd) {}

  const RootSystem& get(const std::string& path) {
    if (!roots_) {
      try {
        validate_root_datum(rd_);
        roots_ = root_system(rd_);
      } catch (const Error& e) {
        throw SchemaError(path, std::string("roots cannot be indexed: ") + e.what());
      }
    }
    return *roots_;
  }

 private:
  const RootDatum& rd_;
  std::optional<RootSystem> roots_;
};

std::vector<IntVector> parse_roots(const Json& j, const std::string& path, RootIndex& index) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const RootSystem& rs = index.get(path);
    std::vector<IntVector> out;
    if (s == "positive" || s == "all") {
      for (const auto& r : rs.positive) out.push_back(r.vector);
    }
    if (s == "negative" || s == "all") {
      for (std::size_t i = 0; i < rs.positive.size(); ++i) out.push_back(rs.signed_root(i, -1));
    }
    if (s != "positive" && s != "negative" && s != "all") {
      throw SchemaError(path, "expected a list of [index, sign] pairs or one of positive, negative, all");
    }
    return out;
  }
  parse_array(j, path, 1 << 20);
  std::vector<IntVector> out;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = element(path, i);
    if (!j[i].is_array() || j[i].size() != 2) throw SchemaError(p, "expected an [index, sign] pair");
    const RootSystem& rs = index.get(p);
    std::size_t idx = parse_size(j[i][0], element(p, 0), std::numeric_limits<std::uint32_t>::max());
    if (idx >= rs.positive.size()) {
      throw SchemaError(element(p, 0), "root index out of range (" + std::to_string(rs.positive.size()) +
                                           " positive roots)");
    }
    BigInt sign = parse_integer(j[i][1], element(p, 1));
    if (sign != 1 && sign != -1) throw SchemaError(element(p, 1), "sign must be 1 or -1");
    IntVector r = rs.signed_root(idx, sign == 1 ? 1 : -1);
    if (!seen.insert(r).second) throw SchemaError(p, "duplicate root");
    out.push_back(std::move(r));
  }
  return out;
}

SubgroupDescriptor parse_subgroup(const Json& j, const std::string& path, const GroupDescriptor& gd,
                                  RootIndex& index) {
  require_object(j, path, {"q", "roots", "extra_unipotent_dim", "component_group", "contains_G_ant",
                           "ant_contains_gantaff"});
  const std::size_t rank = gd.rd.rank;
  SubgroupDescriptor hd;
  hd.q = IntMatrix::identity(rank);
  if (const Json* f = field(j, "q")) {
    const std::string p = child(path, "q");
    parse_array(*f, p, kMaxRank);
    hd.q = parse_matrix(*f, p, rank);
  }
  if (const Json* f = field(j, "roots")) hd.roots = parse_roots(*f, child(path, "roots"), index);
  if (const Json* f = field(j, "extra_unipotent_dim")) {
    hd.extra_unipotent_dim = parse_size(*f, child(path, "extra_unipotent_dim"), kMaxDimension);
  }
  if (const Json* f = field(j, "component_group")) {
    const std::string p = child(path, "component_group");
    require_object(*f, p, {"generators", "translations"});
    const std::size_t m = hd.q.rows();
    std::vector<IntMatrix> gens;
    if (const Json* g = field(*f, "generators")) {
      parse_array(*g, child(p, "generators"), 256);
      for (std::size_t i = 0; i < g->size(); ++i) {
        gens.push_back(parse_matrix((*g)[i], element(child(p, "generators"), i), m, m));
      }
    }
    std::vector<bool> flags(gens.size(), false);
    if (const Json* t = field(*f, "translations")) {
      const std::string tp = child(p, "translations");
      parse_array(*t, tp, 256);
      if (t->size() != gens.size()) throw SchemaError(tp, "needs one flag per generator");
      for (std::size_t i = 0; i < t->size(); ++i) flags[i] = parse_bool((*t)[i], element(tp, i));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) hd.component_group.push_back({gens[i], flags[i]});
  }
  if (const Json* f = field(j, "contains_G_ant")) hd.contains_G_ant = parse_bool(*f, child(path, "contains_G_ant"));
  if (const Json* f = field(j, "ant_contains_gantaff")) {
    hd.ant_contains_gantaff = parse_bool(*f, child(path, "ant_contains_gantaff"));
  }
  return hd;
}

Json matrix_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json vectors(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json strings(const std::vector<std::string>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(s);
  return out;
}

Json expansion_json(const SchubertExpansion& e, const WeylGroup* weyl) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms) {
    Json term = Json::object();
    if (weyl) {
      term["class"] = weyl->word_string(w);
    } else {
      term["class"] = w;
    }
    term["coefficient"] = to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

bool is_abelian_group(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("rank") && j.contains("torsion") && j["torsion"].is_array();
}

bool is_formal(const Json& j) {
  return j.is_object() && j.contains("formal") && j.contains("g") && j.contains("mod");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

BigInt json_integer(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  return BigInt(j.get<std::int64_t>());
}

FGAbelianGroup abelian_from_json(const Json& j) {
  std::vector<BigInt> torsion;
  for (const auto& t : j["torsion"]) torsion.push_back(json_integer(t));
  return FGAbelianGroup::from_cyclic_orders(j["rank"].get<std::size_t>(), torsion);
}

bool flat_array(const Json& j) {
  auto atom = [](const Json& x) { return x.is_number() || x.is_boolean() || x.is_null(); };
  return std::all_of(j.begin(), j.end(), [&](const Json& e) {
    if (e.is_array()) return std::all_of(e.begin(), e.end(), atom);
    return atom(e);
  });
}

std::optional<std::string> inline_text(const Json& j) {
  if (j.is_primitive()) return scalar_text(j);
  if (is_abelian_group(j)) return abelian_from_json(j).to_string();
  if (is_formal(j)) {
    FormalPicardZero p{j["g"].get<std::size_t>(), abelian_from_json(j["mod"])};
    return p.to_string();
  }
  if (j.is_array() && flat_array(j)) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += j[i].is_array() ? j[i].dump() : scalar_text(j[i]);
    }
    return s + "]";
  }
  if (j.is_object() && j.empty()) return std::string("{}");
  return std::nullopt;
}

void render(const Json& j, std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (auto s = inline_text(*it)) {
        out << pad << it.key() << ": " << *s << "\n";
      } else {
        out << pad << it.key() << ":\n";
        render(*it, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (auto s = inline_text(e)) {
        out << pad << "- " << *s << "\n";
      } else {
        out << pad << "-\n";
        render(e, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

const SubgroupDescriptor* DescriptorDocument::find_subgroup(const std::string& name) const {
  for (const auto& [n, hd] : subgroups) {
    if (n == name) return &hd;
  }
  return nullptr;
}

DescriptorDocument parse_descriptor(std::string_view bytes) {
  check_depth(bytes);
  Json root;
  try {
    root = Json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_column(bytes, offset);
    std::string what = e.what();
    auto cut = what.find("] ");
    throw SyntaxError(line, col, cut == std::string::npos ? what : what.substr(cut + 2));
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(1, 1, e.what());
  }

  require_object(root, "", {"schema", "group", "subgroups"});
  if (const Json* f = field(root, "schema")) {
    if (parse_string(*f, "schema") != kSchemaVersion) {
      throw SchemaError("schema", std::string("unsupported schema, expected ") + kSchemaVersion);
    }
  }
  DescriptorDocument doc;
  doc.group = parse_group(required(root, "group", ""));
  if (const Json* f = field(root, "subgroups")) {
    if (!f->is_object()) throw SchemaError("subgroups", "expected an object");
    if (f->size() > kMaxSubgroups) throw SchemaError("subgroups", "too many subgroups");
    RootIndex index(doc.group.rd);
    for (auto it = f->begin(); it != f->end(); ++it) {
      doc.subgroups.emplace_back(it.key(), parse_subgroup(*it, "subgroups." + it.key(), doc.group, index));
    }
  }
  return doc;
}

DescriptorDocument load_descriptor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

SubgroupDescriptor resolve_subgroup(const DescriptorDocument& doc, const std::string& name) {
  if (const SubgroupDescriptor* hd = doc.find_subgroup(name)) return *hd;
  if (name == "trivial") return trivial_subgroup(doc.group);
  if (name == "T") return torus_subgroup(doc.group);
  if (name == "B") return borel_subgroup(doc.group);
  if (name == "G_aff") return gaff_subgroup(doc.group);
  throw InvalidArgument("unknown subgroup '" + name + "'");
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) { return matrix_rows(m); }

Json to_json(const FGAbelianGroup& a) {
  Json out = Json::object();
  out["rank"] = a.free_rank();
  out["torsion"] = to_json(a.torsion());
  return out;
}

Json to_json(const FormalPicardZero& p) {
  Json out = Json::object();
  out["formal"] = "Pic0";
  out["g"] = p.g;
  out["mod"] = to_json(p.quotient_by);
  return out;
}

Json to_json(const GroupDescriptor& gd) {
  Json out = Json::object();
  out["name"] = gd.name;
  Json rd = Json::object();
  rd["rank"] = gd.rd.rank;
  rd["simple_roots"] = vectors(gd.rd.simple_roots);
  rd["simple_coroots"] = vectors(gd.rd.simple_coroots);
  rd["u_rad"] = gd.rd.u_rad;
  out["root_datum"] = std::move(rd);
  Json av = Json::object();
  av["g"] = gd.av.g;
  av["ns_rank"] = gd.av.ns.free_rank();
  av["ns_torsion"] = to_json(gd.av.ns.torsion());
  out["abelian"] = std::move(av);
  Json gl = Json::object();
  gl["xd_rank"] = gd.gluing.xd.ambient_rank;
  gl["xd_relations"] = matrix_rows(gd.gluing.xd.relations);
  gl["v"] = matrix_rows(gd.gluing.v);
  gl["sigma_kernel"] = matrix_rows(gd.gluing.sigma_kernel);
  gl["unipotent_dim"] = gd.gluing.unipotent_dim;
  gl["char"] = gd.gluing.characteristic;
  out["gluing"] = std::move(gl);
  return out;
}

Json to_json(const SubgroupDescriptor& hd, const GroupDescriptor& gd) {
  Json out = Json::object();
  out["q"] = matrix_rows(hd.q);
  Json roots = Json::array();
  if (!hd.roots.empty()) {
    const RootSystem rs = root_system(gd.rd);
    for (const auto& r : hd.roots) {
      auto idx = rs.find_positive(r);
      int sign = 1;
      if (!idx) {
        IntVector neg = r;
        for (auto& x : neg) x = -x;
        idx = rs.find_positive(neg);
        sign = -1;
      }
      if (!idx) throw InvalidArgument("subgroup root is not a root of the group");
      roots.push_back(Json::array({*idx, sign}));
    }
  }
  out["roots"] = std::move(roots);
  out["extra_unipotent_dim"] = hd.extra_unipotent_dim;
  Json cg = Json::object();
  Json gens = Json::array();
  Json flags = Json::array();
  for (const auto& g : hd.component_group) {
    gens.push_back(matrix_rows(g.action));
    flags.push_back(g.translation);
  }
  cg["generators"] = std::move(gens);
  cg["translations"] = std::move(flags);
  out["component_group"] = std::move(cg);
  out["contains_G_ant"] = hd.contains_G_ant;
  out["ant_contains_gantaff"] = hd.ant_contains_gantaff;
  return out;
}

Json to_json(const DescriptorDocument& doc) {
  Json out = Json::object();
  out["schema"] = kSchemaVersion;
  out["group"] = to_json(doc.group);
  Json subs = Json::object();
  for (const auto& [name, hd] : doc.subgroups) subs[name] = to_json(hd, doc.group);
  out["subgroups"] = std::move(subs);
  return out;
}

std::string emit_descriptor(const DescriptorDocument& doc) { return to_json(doc).dump(2) + "\n"; }

Json to_json(const ValidationReport& r) {
  Json out = Json::object();
  out["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = Json::object();
    e["clause"] = c.clause;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  out["warnings"] = strings(r.warnings);
  return out;
}

Json to_json(const GroupAttributes& a) {
  Json out = Json::object();
  out["dim_G"] = a.dim_g;
  out["dim_G_aff"] = a.dim_g_aff;
  out["dim_G_ant"] = a.dim_g_ant;
  out["dim_D"] = a.dim_d;
  out["dim_Aff"] = a.dim_aff;
  out["X(G_aff)"] = to_json(a.characters);
  out["X(G)"] = to_json(a.ker_gamma);
  out["im_gamma"] = to_json(a.im_gamma);
  out["X(D)"] = to_json(a.xd);
  out["X(D)/ker_sigma"] = to_json(a.xd_mod_sigma);
  out["Pic(G_aff)"] = to_json(a.pic_gaff);
  out["D"] = a.d_verdict;
  out["u_surjective"] = a.u_surjective;
  return out;
}

Json to_json(const PicardReport& r) {
  Json out = Json::object();
  out["ns"] = to_json(r.ns);
  out["pic0"] = to_json(r.pic0);
  Json pres = Json::object();
  pres["X(G)"] = to_json(r.x_g);
  pres["X(G_aff)"] = to_json(r.x_gaff);
  pres["gamma"] = to_json(r.gamma);
  pres["NS(A)"] = to_json(r.ns_a);
  pres["Pic(G_aff)"] = to_json(r.pic_gaff);
  out["presentation"] = std::move(pres);
  return out;
}

Json to_json(const GradedPresentation& p, const WeylGroup* weyl) {
  Json out = Json::object();
  out["mode"] = p.rational ? "rational" : "integral";
  out["g"] = p.g;
  out["max_degree"] = p.max_degree;
  out["abelian_factor"] = p.abelian_factor();
  Json dims = Json::array();
  for (auto d : p.concrete_dims) dims.push_back(d);
  out["dims"] = std::move(dims);
  if (!p.concrete_groups.empty()) {
    Json groups = Json::array();
    for (const auto& g : p.concrete_groups) groups.push_back(to_json(g));
    out["groups"] = std::move(groups);
  }
  Json sdims = Json::array();
  for (auto d : p.schubert_dims) sdims.push_back(d);
  out["schubert_dims"] = std::move(sdims);
  Json ideal = Json::array();
  for (const auto& gen : p.ideal_degree1) {
    Json e = Json::object();
    e["character"] = to_json(gen.character);
    e["formal"] = to_json(gen.formal_class);
    e["formal_zero"] = gen.formal_zero;
    if (!gen.concrete_restricted.empty()) {
      e["restricted"] = to_json(gen.concrete_restricted);
    } else {
      e["concrete"] = expansion_json(gen.concrete, weyl);
    }
    ideal.push_back(std::move(e));
  }
  out["ideal_degree1"] = std::move(ideal);
  out["J_generators"] = vectors(p.j_generators);
  out["J_rank"] = p.j_rank;
  if (p.degree_bound) {
    out["degree_bound"] = *p.degree_bound;
  } else {
    out["degree_bound"] = nullptr;
  }
  if (!p.rational) {
    Json d1 = Json::object();
    d1["concrete"] = to_json(p.degree1_concrete);
    d1["formal_quotient"] = to_json(p.degree1_formal_quotient);
    d1["consistent"] = p.degree1_consistent;
    out["degree1"] = std::move(d1);
  }
  out["notes"] = strings(p.notes);
  return out;
}

Json to_json(const HomogeneousPicardReport& r) {
  Json out = Json::object();
  out["mode"] = r.integral ? "integral" : "rational";
  out["rank"] = r.ns_rank;
  out["rank_X(H)"] = r.x_h_rank;
  out["rank_r"] = r.rank_r;
  out["ns"] = to_json(r.ns_image);
  out["x_part"] = to_json(r.x_part);
  out["pic0"] = to_json(r.pic0);
  out["pic0_sequence"] = to_json(r.pic0_sequence);
  out["X(G/H)"] = to_json(r.kernel);
  out["tail"] = to_json(r.tail);
  out["notes"] = strings(r.notes);
  return out;
}

Json to_json(const HomogeneousNS& r) {
  Json out = Json::object();
  out["rational_rank"] = r.rational_rank;
  if (r.integral) {
    out["integral"] = to_json(*r.integral);
  } else {
    out["integral"] = nullptr;
  }
  if (!r.integral_note.empty()) out["integral_note"] = r.integral_note;
  out["pic0"] = to_json(r.pic0);
  return out;
}

Json to_json(const Verdict& v) {
  Json out = Json::object();
  out["answer"] = to_string(v.answer);
  out["criterion"] = v.criterion;
  Json w = Json::object();
  for (const auto& [k, val] : v.witness) w[k] = val;
  out["witness"] = std::move(w);
  out["notes"] = strings(v.notes);
  return out;
}

Json to_json(const FibrationReport& r) {
  Json out = Json::object();
  out["torsor_free_rank"] = r.torsor_free_rank;
  out["torsor_unipotent_dim"] = r.torsor_unipotent_dim;
  out["torsor_dim"] = r.torsor_dim;
  out["X(D)_torsion"] = to_json(r.xd_torsion);
  out["translation_order"] = to_json(r.translation_order);
  out["finite_part_order"] = to_json(r.finite_part_order);
  out["finite_part_trivial"] = r.finite_part_trivial;
  out["dim_Aut_ant"] = r.dim_aut_ant;
  out["faithful_model"] = r.faithful_model;
  out["notes"] = strings(r.notes);
  return out;
}

std::string emit_report(const std::string& command, const std::string& descriptor_name, const Json& result,
                        Format format) {
  Json env = Json::object();
  env["schema"] = kSchemaVersion;
  env["command"] = command;
  env["descriptor"] = descriptor_name;
  env["result"] = result;
  if (format == Format::json) return env.dump(2) + "\n";
  std::ostringstream out;
  out << command << " (" << (descriptor_name.empty() ? "unnamed" : descriptor_name) << ")\n";
  render(result, 2, out);
  return out.str();
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace chevchow
