#include "chevchow/structure_checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

bool anti_affine_trivial(const GroupDescriptor& gd) { return gd.av.g == 0; }

// Rows of U spanning the free quotient of Z^m / rowspan(relations).
IntMatrix free_projection(const Presentation& xd) {
  const std::size_t m = xd.ambient_rank;
  if (xd.is_free_ambient()) return IntMatrix::identity(m);
  const SmithForm snf = smith_normal_form(xd.relations.transpose());
  IntMatrix p(m - snf.rank, m);
  for (std::size_t i = snf.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) p(i - snf.rank, j) = snf.U(i, j);
  return p;
}

std::string join_word(const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return "{" + s + "}";
}

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    default: return "unknown";
  }
}

Verdict albanese_split_test(const GroupDescriptor& gd) {
  const GroupAttributes a = derived_attributes(gd);
  Verdict v;
  v.criterion = "G = A x G_aff iff D = G_aff cap G_ant is trivial";
  const bool split = a.xd.is_trivial() && gd.gluing.unipotent_dim == 0;
  v.answer = split ? Answer::yes : Answer::no;
  if (split) {
    v.witness.emplace_back("abelian_factor", "A_" + std::to_string(gd.av.g));
    v.witness.emplace_back("affine_factor", "G_aff");
  } else {
    v.witness.emplace_back("X(D)", a.xd.to_string());
    v.witness.emplace_back("unipotent_dim", std::to_string(gd.gluing.unipotent_dim));
  }
  v.notes.push_back("the Albanese map G -> A is always locally trivial for the Zariski topology");
  return v;
}

AffinizationVerdicts affinization_test(const GroupDescriptor& gd) {
  const GroupAttributes a = derived_attributes(gd);
  AffinizationVerdicts out;
  out.locally_trivial.criterion = "phi_G is locally trivial iff D is smooth and connected";
  out.locally_trivial.answer = a.d_smooth_connected ? Answer::yes : Answer::no;
  out.locally_trivial.witness.emplace_back("X(D)", a.xd.to_string());
  out.locally_trivial.witness.emplace_back("D", a.d_verdict);

  out.trivial.criterion = "phi_G is trivial iff additionally every character of D extends to G_aff";
  const bool trivial = a.d_smooth_connected && a.u_surjective;
  out.trivial.answer = trivial ? Answer::yes : Answer::no;
  out.trivial.witness.emplace_back("u_surjective", a.u_surjective ? "true" : "false");
  return out;
}

GroupDescriptor construct_cover(const GroupDescriptor& gd) {
  const GroupAttributes a = derived_attributes(gd);
  if (a.pic_gaff.is_trivial() && gd.gluing.xd.is_free_ambient() && a.u_surjective) return gd;

  const FactorialCover cover = factorial_cover(gd.rd);
  const IntMatrix proj = free_projection(gd.gluing.xd);
  const std::size_t f = proj.rows();
  const std::size_t n = gd.rd.rank;

  // v' on the new basis b_k = basis_k / denominator, composed with the free projection.
  const IntMatrix pv = proj * gd.gluing.v;
  IntMatrix v_new(f, n);
  for (std::size_t k = 0; k < n; ++k) {
    const IntVector img = pv * cover.basis.row(k);
    for (std::size_t i = 0; i < f; ++i) {
      if (img[i] % cover.denominator != 0)
        throw Error("construct_cover: v does not extend integrally to the enlarged lattice");
      v_new(i, k) = img[i] / cover.denominator;
    }
  }

  GroupDescriptor out = gd;
  out.rd = cover.datum;
  out.gluing.xd = Presentation::free(f);
  out.gluing.v = v_new;
  IntMatrix sk(0, f);
  for (std::size_t r = 0; r < gd.gluing.sigma_kernel.rows(); ++r) {
    const IntVector img = proj * gd.gluing.sigma_kernel.row(r);
    if (!is_zero(img)) sk = sk.stack(IntMatrix::from_rows({img}, f));
  }
  out.gluing.sigma_kernel = sk.rows() ? hermite_normal_form(sk) : IntMatrix(0, f);
  return out;
}

FibrationReport fibration_report(const GroupDescriptor& gd, const SubgroupDescriptor& hd, const Limits& limits) {
  const GroupAttributes a = derived_attributes(gd);
  FibrationReport rep;
  rep.faithful_model = !hd.contains_G_ant;
  rep.torsor_free_rank = a.xd.free_rank();
  rep.torsor_unipotent_dim = gd.gluing.unipotent_dim;
  rep.torsor_dim = rep.torsor_free_rank + rep.torsor_unipotent_dim;
  rep.xd_torsion = FGAbelianGroup::from_cyclic_orders(0, a.xd.torsion());
  rep.dim_aut_ant = a.dim_g_ant;

  if (hd.has_translations()) {
    const std::size_t r = hd.torus_rank();
    const auto elements = enumerate_group(hd.component_actions(), r, limits.group_cap);
    std::map<IntMatrix, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
    const IntMatrix id = IntMatrix::identity(r);
    auto inverse = [&](const IntMatrix& g) {
      for (const auto& h : elements)
        if (g * h == id) return h;
      throw Error("component group element without inverse");
    };
    // Kernel of Gamma -> A: normal closure of the non-translating generators
    // and of the commutators.
    std::vector<IntMatrix> kernel_gens;
    for (const auto& c : hd.component_group)
      if (!c.translation)
        for (const auto& g : elements) kernel_gens.push_back(g * c.action * inverse(g));
    for (const auto& x : hd.component_group)
      for (const auto& y : hd.component_group) {
        const IntMatrix comm = x.action * y.action * inverse(x.action) * inverse(y.action);
        for (const auto& g : elements) kernel_gens.push_back(g * comm * inverse(g));
      }
    const std::size_t kernel_order =
        kernel_gens.empty() ? 1 : enumerate_group(kernel_gens, r, limits.group_cap).size();
    rep.translation_order = BigInt(elements.size() / kernel_order);
    rep.notes.push_back("translation part measured through the action of H / H^0 on X(T_H)");
  }
  rep.finite_part_order = a.xd.torsion_order() * rep.translation_order;
  rep.finite_part_trivial = rep.finite_part_order == 1;
  if (!rep.faithful_model) rep.notes.push_back("G_ant is contained in H: the action on G/H is not faithful");
  return rep;
}

Verdict phi_local_triviality_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd) {
  Verdict v;
  v.criterion = "phi_X is locally trivial iff D = (G_ant)_aff and H is contained in G_aff";
  if (hd.contains_G_ant) {
    v.answer = Answer::no;
    v.notes.push_back("hypothesis: the faithful model fails since G_ant is contained in H");
    v.witness.emplace_back("hypothesis", "failed");
    return v;
  }
  const GroupAttributes a = derived_attributes(gd);
  const bool yes = a.xd.is_free() && !hd.has_translations();
  v.answer = yes ? Answer::yes : Answer::no;
  v.witness.emplace_back("X(D)", a.xd.to_string());
  v.witness.emplace_back("translations", hd.has_translations() ? "true" : "false");
  if (yes) v.notes.push_back("pi_X is locally trivial as well");
  return v;
}

Verdict completeness_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd, const Limits& limits) {
  Verdict v;
  v.criterion = "G/H is complete iff H cap G_aff contains a Borel subgroup of G_aff and H contains (G_ant)_aff";
  const WeylGroup weyl = weyl_group(gd.rd, limits.group_cap);
  const bool unipotent_ok = hd.extra_unipotent_dim >= gd.rd.u_rad;
  const auto w = unipotent_ok ? borel_witness(gd.rd, weyl, hd.roots, hd.q_is_identity()) : std::nullopt;
  const bool ant_ok = hd.ant_contains_gantaff || anti_affine_trivial(gd);
  if (!w) {
    v.answer = Answer::no;
    v.witness.emplace_back("borel", "no conjugate of B inside H cap G_aff");
    return v;
  }
  if (!ant_ok) {
    v.answer = Answer::no;
    v.witness.emplace_back("borel", weyl.word_string(*w));
    v.witness.emplace_back("ant", "H does not contain (G_ant)_aff");
    return v;
  }
  v.answer = Answer::yes;
  const RootSystem rs = root_system(gd.rd);
  const std::set<IntVector> roots(hd.roots.begin(), hd.roots.end());
  std::vector<std::size_t> levi;
  for (std::size_t i = 0; i < gd.rd.semisimple_rank(); ++i) {
    IntVector neg = weyl.elements[*w] * gd.rd.simple_roots[i];
    for (auto& x : neg) x = -x;
    if (roots.count(neg)) levi.push_back(i);
  }
  const std::size_t dim_h_aff = hd.torus_rank() + hd.roots.size() + hd.extra_unipotent_dim;
  const GroupAttributes a = derived_attributes(gd);
  v.witness.emplace_back("weyl_element", weyl.word_string(*w));
  v.witness.emplace_back("abelian_factor", "A_" + std::to_string(gd.av.g) + " (dim " + std::to_string(gd.av.g) + ")");
  v.witness.emplace_back("flag_factor", "G_aff/P_" + join_word(levi) + " (dim " +
                                            std::to_string(a.dim_g_aff - dim_h_aff) + ")");
  v.witness.emplace_back("flag_type", validate_root_datum(gd.rd).name());
  v.witness.emplace_back("parabolic_type", join_word(levi));
  return v;
}

AffineVerdicts affine_test(const GroupDescriptor& gd, const SubgroupDescriptor& hd) {
  AffineVerdicts out;
  out.affine.criterion = "G/H is affine iff H contains G_ant and G_aff/(H cap G_aff) is affine (reductive H cap G_aff)";
  out.quasi_affine.criterion = "G/H is quasi-affine iff H contains G_ant and G_aff/(H cap G_aff) is quasi-affine";
  const bool contains = hd.contains_G_ant || anti_affine_trivial(gd);

  std::set<IntVector> roots(hd.roots.begin(), hd.roots.end());
  bool symmetric = true;
  for (const auto& r : hd.roots) {
    IntVector neg = r;
    for (auto& x : neg) x = -x;
    if (!roots.count(neg)) symmetric = false;
  }
  const bool reductive = symmetric && hd.extra_unipotent_dim == 0;

  if (!contains) {
    out.affine.answer = Answer::no;
    out.affine.witness.emplace_back("contains_G_ant", "false");
    out.quasi_affine.answer = Answer::no;
    out.quasi_affine.witness.emplace_back("contains_G_ant", "false");
    return out;
  }
  if (reductive) {
    out.affine.answer = Answer::yes;
    out.affine.witness.emplace_back("H cap G_aff", "reductive");
    out.quasi_affine.answer = Answer::yes;
    out.quasi_affine.notes.push_back("affine implies quasi-affine");
  } else if (gd.rd.u_rad > 0) {
    out.affine.answer = Answer::unknown;
    out.affine.notes.push_back("G_aff is not reductive; the reductive-isotropy criterion only gives sufficiency");
    out.quasi_affine.answer = Answer::unknown;
  } else {
    out.affine.answer = Answer::no;
    out.affine.witness.emplace_back("H cap G_aff", symmetric ? "has a unipotent part" : "asymmetric root set");
    out.quasi_affine.answer = Answer::unknown;
  }
  out.affine.notes.push_back("reductive isotropy criterion, characteristic 0");
  return out;
}

}  // namespace chevchow
