#include "chevchow/group_model.hpp"

#include <algorithm>
#include <set>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

IntMatrix relation_lattice(const AntiAffineGluing& gl) {
  const std::size_t m = gl.xd.ambient_rank;
  IntMatrix rel = gl.xd.relations.rows() ? gl.xd.relations : IntMatrix(0, m);
  if (gl.sigma_kernel.rows()) rel = rel.stack(gl.sigma_kernel);
  return rel;
}

// Whether image(matrix) + rowspan(relations) is all of Z^m.
bool surjective_onto(const IntMatrix& matrix, const IntMatrix& relations, std::size_t m) {
  if (m == 0) return true;
  IntMatrix gens(m, 0);
  if (matrix.cols()) gens = matrix;
  if (relations.rows()) gens = gens.augment(relations.transpose());
  if (gens.cols() == 0) return false;
  return cokernel_of_matrix(gens).is_trivial();
}

FGAbelianGroup quotient_group(std::size_t m, const IntMatrix& relations) {
  return Presentation{m, relations.rows() ? relations : IntMatrix(0, m)}.group();
}

std::string vector_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

}  // namespace

bool SubgroupDescriptor::has_translations() const {
  return std::any_of(component_group.begin(), component_group.end(),
                     [](const ComponentGenerator& c) { return c.translation; });
}

std::vector<IntMatrix> SubgroupDescriptor::component_actions() const {
  std::vector<IntMatrix> out;
  for (const auto& c : component_group) out.push_back(c.action);
  return out;
}

SubgroupDescriptor trivial_subgroup(const GroupDescriptor& gd) {
  SubgroupDescriptor hd;
  hd.q = IntMatrix(0, gd.rd.rank);
  return hd;
}

SubgroupDescriptor torus_subgroup(const GroupDescriptor& gd) {
  SubgroupDescriptor hd;
  hd.q = IntMatrix::identity(gd.rd.rank);
  // T contains (G_ant)_aff unless D has a unipotent part.
  hd.ant_contains_gantaff = gd.gluing.unipotent_dim == 0;
  return hd;
}

SubgroupDescriptor borel_subgroup(const GroupDescriptor& gd) {
  SubgroupDescriptor hd = torus_subgroup(gd);
  for (const auto& r : root_system(gd.rd).positive) hd.roots.push_back(r.vector);
  hd.extra_unipotent_dim = gd.rd.u_rad;
  return hd;
}

SubgroupDescriptor gaff_subgroup(const GroupDescriptor& gd) {
  SubgroupDescriptor hd = torus_subgroup(gd);
  hd.roots = root_system(gd.rd).all_roots();
  hd.extra_unipotent_dim = gd.rd.u_rad;
  return hd;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.clause + ": " + c.detail;
  return {};
}

void ValidationReport::add(std::string clause, bool passed, std::string detail) {
  checks.push_back({std::move(clause), passed, std::move(detail)});
}

ValidationReport validate_group(const GroupDescriptor& gd, const Limits& limits) {
  ValidationReport rep;
  bool datum_ok = true;
  try {
    const CartanType type = validate_root_datum(gd.rd);
    rep.add("root datum", true, type.name());
  } catch (const InvalidCartan& e) {
    rep.add("root datum", false, e.what());
    datum_ok = false;
  }
  (void)limits;

  const auto& av = gd.av;
  rep.add("abelian variety over a point", av.g > 0 || av.ns.is_trivial(),
          av.g > 0 || av.ns.is_trivial() ? "" : "g = 0 but NS(A) = " + av.ns.to_string());
  if (!av.ns.is_free()) rep.warnings.push_back("NS(A) has torsion " + av.ns.to_string());

  const auto& gl = gd.gluing;
  const std::size_t m = gl.xd.ambient_rank;
  const std::size_t n = gd.rd.rank;
  bool shapes = true;
  std::string shape_detail;
  if (gl.xd.relations.rows() && gl.xd.relations.cols() != m) {
    shapes = false;
    shape_detail = "X(D) relations have " + std::to_string(gl.xd.relations.cols()) + " columns, expected " +
                   std::to_string(m);
  } else if (gl.v.rows() != m || gl.v.cols() != n) {
    shapes = false;
    shape_detail = "v is " + std::to_string(gl.v.rows()) + "x" + std::to_string(gl.v.cols()) +
                   ", expected " + std::to_string(m) + "x" + std::to_string(n);
  } else if (gl.sigma_kernel.rows() && gl.sigma_kernel.cols() != m) {
    shapes = false;
    shape_detail = "ker sigma_A generators have " + std::to_string(gl.sigma_kernel.cols()) +
                   " entries, expected " + std::to_string(m);
  }
  rep.add("gluing shapes", shapes, shape_detail);

  const unsigned long p = gl.characteristic;
  bool prime = p == 0 || p >= 2;
  for (unsigned long d = 2; prime && p > 0 && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  rep.add("characteristic", prime, prime ? "" : std::to_string(p) + " is neither 0 nor a prime");

  if (shapes) {
    const bool surj = surjective_onto(gl.v, gl.xd.relations, m);
    rep.add("v-surjectivity", surj, surj ? "" : "v: X(T) -> X(D) is not surjective");

    if (datum_ok) {
      std::string bad;
      for (std::size_t i = 0; i < gd.rd.semisimple_rank() && bad.empty(); ++i) {
        const IntVector image = gl.v * gd.rd.simple_roots[i];
        const bool zero = is_zero(image) ||
                          (gl.xd.relations.rows() && in_row_lattice(gl.xd.relations, image));
        if (!zero) bad = "v(alpha_" + std::to_string(i + 1) + ") = " + vector_string(image) + " is nonzero in X(D)";
      }
      rep.add("centrality of D", bad.empty(), bad);
    }

    const FGAbelianGroup xd = gl.xd.group();
    const bool point_ok = av.g > 0 || (xd.is_trivial() && gl.unipotent_dim == 0);
    rep.add("anti-affine part over a point", point_ok,
            point_ok ? "" : "g = 0 requires X(D) = 0 and no unipotent part");

    const FGAbelianGroup xs = quotient_group(m, relation_lattice(gl));
    if (p == 0) {
      if (xs.torsion().size() > 2 * av.g)
        rep.warnings.push_back("torsion of X(D)/ker sigma_A (" + xs.to_string() +
                               ") needs more than 2g invariant factors");
    } else {
      std::size_t divisible = 0;
      for (const auto& t : xs.torsion())
        if (t % p == 0) ++divisible;
      if (divisible > av.g)
        rep.warnings.push_back("p-torsion of X(D)/ker sigma_A (" + xs.to_string() +
                               ") needs more than g invariant factors divisible by " + std::to_string(p));
    }
  }

  if (p == 0) {
    rep.add("unipotent bound", gl.unipotent_dim <= av.g,
            gl.unipotent_dim <= av.g ? "" : "unipotent part of dimension " + std::to_string(gl.unipotent_dim) +
                                                " exceeds g = " + std::to_string(av.g));
  } else {
    rep.add("unipotent bound", gl.unipotent_dim == 0,
            gl.unipotent_dim == 0 ? "" : "anti-affine groups in positive characteristic have no unipotent part");
  }
  return rep;
}

IntMatrix ker_gamma_by_intersection(const GroupDescriptor& gd) {
  const auto& gl = gd.gluing;
  const std::size_t n = gd.rd.rank;
  const IntMatrix preimage =
      kernel_lattice(GroupHom{Presentation::free(n), Presentation{gl.xd.ambient_rank, relation_lattice(gl)}, gl.v});
  return intersect_lattices(characters_of_group(gd.rd), preimage);
}

IntMatrix ker_gamma_by_composite(const GroupDescriptor& gd) {
  const auto& gl = gd.gluing;
  const std::size_t n = gd.rd.rank;
  const IntMatrix chars = characters_of_group(gd.rd);
  if (chars.rows() == 0) return IntMatrix(0, n);
  const IntMatrix composite = gl.v * chars.transpose();
  const IntMatrix k = kernel_lattice(
      GroupHom{Presentation::free(chars.rows()), Presentation{gl.xd.ambient_rank, relation_lattice(gl)}, composite});
  if (k.rows() == 0) return IntMatrix(0, n);
  return hermite_normal_form(k * chars);
}

GroupAttributes derived_attributes(const GroupDescriptor& gd) {
  GroupAttributes a;
  const CartanType type = validate_root_datum(gd.rd);
  const auto& gl = gd.gluing;
  const std::size_t n = gd.rd.rank;
  const std::size_t m = gl.xd.ambient_rank;

  a.dim_g_aff = n + 2 * type.positive_root_count() + gd.rd.u_rad;
  a.dim_g = a.dim_g_aff + gd.av.g;
  a.xd = gl.xd.group();
  a.dim_d = a.xd.free_rank() + gl.unipotent_dim;
  a.dim_g_ant = gd.av.g + a.dim_d;
  a.dim_aff = a.dim_g_aff - a.dim_d;
  a.characters = characters_of_group(gd.rd);
  a.ker_gamma = ker_gamma_by_intersection(gd);
  a.xd_mod_sigma = quotient_group(m, relation_lattice(gl));
  a.pic_gaff = flag_pic_map(gd.rd).pic_gaff;

  const std::size_t k = a.characters.rows();
  if (k == 0) {
    a.im_gamma = FGAbelianGroup::trivial();
  } else if (a.ker_gamma.rows() == 0) {
    a.im_gamma = FGAbelianGroup::free(k);
  } else {
    // Coordinates of ker gamma_A on the X(G_aff) basis.
    IntMatrix coords(a.ker_gamma.rows(), k);
    for (std::size_t r = 0; r < a.ker_gamma.rows(); ++r) {
      auto x = solve_integer(a.characters.transpose(), a.ker_gamma.row(r));
      if (!x) throw Error("ker gamma_A is not inside X(G_aff)");
      for (std::size_t j = 0; j < k; ++j) coords(r, j) = (*x)[j];
    }
    a.im_gamma = cokernel_of_matrix(coords.transpose());
  }
  a.rank_im_gamma = a.im_gamma.free_rank();

  a.u_surjective = surjective_onto(k ? gl.v * a.characters.transpose() : IntMatrix(m, 0), gl.xd.relations, m);

  if (a.xd.is_free()) {
    a.d_smooth_connected = true;
    a.d_verdict = "smooth and connected";
  } else {
    a.d_smooth_connected = false;
    bool p_torsion = false;
    if (gl.characteristic > 0)
      for (const auto& t : a.xd.torsion())
        if (t % gl.characteristic == 0) p_torsion = true;
    a.d_verdict = std::string("not smooth-connected: X(D) has torsion") +
                  (p_torsion ? " divisible by the characteristic (non-reduced)" : " (disconnected)");
  }
  return a;
}

SubgroupTorusData subgroup_torus_data(const GroupDescriptor& gd, const SubgroupDescriptor& hd) {
  SubgroupTorusData out;
  const RootSystem rs = root_system(gd.rd);
  const std::set<IntVector> roots(hd.roots.begin(), hd.roots.end());
  const IntMatrix qt = hd.q.transpose();
  for (const auto& beta : rs.positive) {
    IntVector neg = beta.vector;
    for (auto& x : neg) x = -x;
    if (!roots.count(beta.vector) || !roots.count(neg)) continue;
    auto descended = solve_integer(qt, beta.coroot);
    if (!descended)
      throw InvalidArgument("coroot " + vector_string(beta.coroot) + " does not descend to T_H");
    const IntVector restricted = hd.q * beta.vector;
    out.symmetric_roots.push_back(beta.vector);
    out.symmetric_roots.push_back(neg);
    out.restricted_roots.push_back(restricted);
    out.descended_coroots.push_back(*descended);
    out.reflections.push_back(reflection_matrix(restricted, *descended));
  }
  return out;
}

ValidationReport validate_subgroup(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                   const Limits& limits) {
  ValidationReport rep;
  const ValidationReport group = validate_group(gd, limits);
  rep.add("group descriptor", group.ok(), group.first_failure());
  if (!group.ok()) return rep;

  const std::size_t n = gd.rd.rank;
  const std::size_t r = hd.q.rows();
  const bool shape = hd.q.cols() == n;
  rep.add("q shape", shape,
          shape ? "" : "q has " + std::to_string(hd.q.cols()) + " columns, expected rank X(T) = " + std::to_string(n));
  if (!shape) return rep;
  const bool surj = r == 0 || cokernel_of_matrix(hd.q).is_trivial();
  rep.add("q surjectivity", surj, surj ? "" : "q: X(T) -> X(T_H) is not surjective");

  const RootSystem rs = root_system(gd.rd);
  const auto all = rs.all_roots();
  const std::set<IntVector> phi(all.begin(), all.end());
  std::string missing;
  for (const auto& a : hd.roots)
    if (!phi.count(a)) {
      missing = vector_string(a) + " is not a root";
      break;
    }
  rep.add("root membership", missing.empty(), missing);

  if (surj && missing.empty()) {
    std::string bad;
    try {
      subgroup_torus_data(gd, hd);
    } catch (const InvalidArgument& e) {
      bad = e.what();
    }
    rep.add("coroot descent", bad.empty(), bad);
  }

  std::string gamma_bad;
  for (std::size_t i = 0; i < hd.component_group.size() && gamma_bad.empty(); ++i) {
    const auto& a = hd.component_group[i].action;
    if (a.rows() != r || a.cols() != r)
      gamma_bad = "generator " + std::to_string(i + 1) + " is not " + std::to_string(r) + "x" + std::to_string(r);
  }
  if (gamma_bad.empty()) {
    try {
      enumerate_group(hd.component_actions(), r, limits.group_cap);
    } catch (const Error& e) {
      gamma_bad = e.what();
    }
  }
  rep.add("component group finiteness", gamma_bad.empty(), gamma_bad);

  if (gamma_bad.empty()) {
    std::string moved;
    const IntMatrix chars = characters_of_group(gd.rd);
    for (std::size_t i = 0; i < hd.component_group.size() && moved.empty(); ++i)
      for (std::size_t c = 0; c < chars.rows(); ++c) {
        const IntVector restricted = hd.q * chars.row(c);
        if (hd.component_group[i].action * restricted != restricted) {
          moved = "generator " + std::to_string(i + 1) + " moves the restriction of a character of G_aff";
          break;
        }
      }
    rep.add("component group fixes characters of G_aff", moved.empty(), moved);
  }

  const bool trans_ok = !hd.has_translations() || gd.av.g > 0;
  rep.add("translation flags", trans_ok, trans_ok ? "" : "translations of A require g > 0");
  const bool flags_ok = !hd.contains_G_ant || hd.ant_contains_gantaff;
  rep.add("anti-affine flags", flags_ok, flags_ok ? "" : "H containing G_ant must contain (G_ant)_aff");

  const std::size_t unip_max = 2 * rs.positive.size() + gd.rd.u_rad;
  const bool unip_ok = hd.roots.size() + hd.extra_unipotent_dim <= unip_max;
  rep.add("unipotent dimension", unip_ok,
          unip_ok ? "" : "root subgroups plus extra unipotent part exceed dim of the unipotent directions (" +
                             std::to_string(unip_max) + ")");
  return rep;
}

}  // namespace chevchow
