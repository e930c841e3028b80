#include "chevchow/chow_picard.hpp"

#include <algorithm>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

void require_valid(const GroupDescriptor& gd, const Limits& limits) {
  const ValidationReport rep = validate_group(gd, limits);
  if (!rep.ok()) throw InvalidArgument("invalid group descriptor: " + rep.first_failure());
}

void require_valid(const GroupDescriptor& gd, const SubgroupDescriptor& hd, const Limits& limits) {
  const ValidationReport rep = validate_subgroup(gd, hd, limits);
  if (!rep.ok()) throw InvalidArgument("invalid subgroup descriptor: " + rep.first_failure());
}

IntMatrix relation_lattice(const AntiAffineGluing& gl) {
  const std::size_t m = gl.xd.ambient_rank;
  IntMatrix rel = gl.xd.relations.rows() ? gl.xd.relations : IntMatrix(0, m);
  if (gl.sigma_kernel.rows()) rel = rel.stack(gl.sigma_kernel);
  return rel;
}

bool formal_class_zero(const AntiAffineGluing& gl, const IntVector& cls) {
  if (is_zero(cls)) return true;
  const IntMatrix rel = relation_lattice(gl);
  return rel.rows() > 0 && in_row_lattice(rel, cls);
}

std::size_t lattice_rank(const IntMatrix& rows) { return rows.rows() == 0 ? 0 : rank(rows); }

// Lattice sum as an HNF row basis.
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  return hermite_normal_form(a.stack(b));
}

std::vector<IdealGenerator> degree_one_generators(const GroupDescriptor& gd, const FlagChow* fc) {
  std::vector<IdealGenerator> out;
  for (std::size_t k = 0; k < gd.rd.rank; ++k) {
    IdealGenerator gen;
    gen.character.assign(gd.rd.rank, 0);
    gen.character[k] = 1;
    gen.formal_class = gd.gluing.v * gen.character;
    gen.formal_zero = gd.av.g == 0 || formal_class_zero(gd.gluing, gen.formal_class);
    if (fc) gen.concrete = fc->chevalley_multiply(gen.character, 0);
    out.push_back(std::move(gen));
  }
  return out;
}

std::vector<IntVector> j_generators_of(const GroupDescriptor& gd, const IntMatrix& chars) {
  std::vector<IntVector> out;
  if (gd.av.g == 0) return out;
  for (std::size_t r = 0; r < chars.rows(); ++r) {
    const IntVector cls = gd.gluing.v * chars.row(r);
    if (!formal_class_zero(gd.gluing, cls)) out.push_back(cls);
  }
  return out;
}

// Image of the lattice `rows` (in X(T)) inside X(D) / ker sigma_A.
FGAbelianGroup formal_image(const GroupDescriptor& gd, const IntMatrix& rows) {
  if (rows.rows() == 0 || gd.av.g == 0) return FGAbelianGroup::trivial();
  const std::size_t r = rows.rows();
  const IntMatrix composite = gd.gluing.v * rows.transpose();
  const IntMatrix k = kernel_lattice(GroupHom{
      Presentation::free(r), Presentation{gd.gluing.xd.ambient_rank, relation_lattice(gd.gluing)}, composite});
  return lattice_quotient(IntMatrix::identity(r), k);
}

}  // namespace

std::string FormalPicardZero::to_string() const {
  if (g == 0) return "0";
  const std::string base = "Pic0(A_" + std::to_string(g) + ")";
  if (quotient_by.is_trivial()) return base;
  return base + " / <" + quotient_by.to_string() + ">";
}

std::string GradedPresentation::abelian_factor() const {
  if (g == 0) return rational ? "Q" : "Z";
  std::string s = "A*(A_" + std::to_string(g) + ")";
  if (rational) s += "_Q";
  if (j_rank > 0) s += " / J";
  return s;
}

FGAbelianGroup lattice_quotient(const IntMatrix& super, const IntMatrix& sub) {
  const std::size_t k = super.rows();
  if (k == 0) return FGAbelianGroup::trivial();
  if (sub.rows() == 0) return FGAbelianGroup::free(k);
  IntMatrix coords(sub.rows(), k);
  const IntMatrix st = super.transpose();
  for (std::size_t r = 0; r < sub.rows(); ++r) {
    auto x = solve_integer(st, sub.row(r));
    if (!x) throw InvalidArgument("lattice_quotient: sublattice not contained in the lattice");
    for (std::size_t j = 0; j < k; ++j) coords(r, j) = (*x)[j];
  }
  return cokernel_of_matrix(coords.transpose());
}

PicardReport picard_group(const GroupDescriptor& gd) {
  require_valid(gd, {});
  const GroupAttributes a = derived_attributes(gd);
  PicardReport rep;
  rep.ns_a = gd.av.ns;
  rep.pic_gaff = a.pic_gaff;
  rep.ns = gd.av.ns.direct_sum(a.pic_gaff);
  rep.pic0 = {gd.av.g, gd.av.g == 0 ? FGAbelianGroup::trivial() : a.im_gamma};
  rep.x_g = a.ker_gamma;
  rep.x_gaff = a.characters;
  rep.gamma = a.characters.rows() ? gd.gluing.v * a.characters.transpose()
                                  : IntMatrix(gd.gluing.xd.ambient_rank, 0);
  return rep;
}

GradedPresentation chow_presentation(const GroupDescriptor& gd, std::optional<std::size_t> max_degree,
                                     const Limits& limits) {
  require_valid(gd, limits);
  const FlagChow fc(gd.rd, limits, false);
  const GroupAttributes a = derived_attributes(gd);
  const std::size_t top = fc.dimension();
  GradedPresentation p;
  p.g = gd.av.g;
  p.max_degree = max_degree.value_or(top + gd.av.g + 2);
  if (p.max_degree > limits.degree_budget)
    throw DegreeTooLarge("max degree " + std::to_string(p.max_degree) + " exceeds the degree budget of " +
                         std::to_string(limits.degree_budget));
  for (std::size_t d = 0; d <= top; ++d) p.schubert_dims.push_back(fc.classes_of_codegree(d).size());

  for (std::size_t d = 0; d <= p.max_degree; ++d) {
    FGAbelianGroup grp;
    if (d == 0) grp = FGAbelianGroup::free(1);
    else if (d <= top) grp = cokernel_of_matrix(fc.chevalley_matrix(d - 1));
    p.concrete_dims.push_back(grp.free_rank());
    p.concrete_groups.push_back(grp);
  }
  p.ideal_degree1 = degree_one_generators(gd, &fc);
  p.j_generators = j_generators_of(gd, a.characters);
  p.j_rank = gd.av.g == 0 ? 0 : a.rank_im_gamma;

  // Degree one: the Schubert side gives Pic(G_aff), the formal side c_A(ker c_B).
  p.degree1_concrete = top >= 1 ? p.concrete_groups.at(1) : FGAbelianGroup::trivial();
  const IntMatrix c0 = fc.chevalley_matrix(0);
  const IntMatrix ker_cb = c0.rows() ? integer_kernel(c0) : IntMatrix::identity(gd.rd.rank);
  p.degree1_formal_quotient = formal_image(gd, ker_cb);
  const FGAbelianGroup expected_formal = gd.av.g == 0 ? FGAbelianGroup::trivial() : a.im_gamma;
  p.degree1_consistent = p.degree1_concrete == a.pic_gaff && p.degree1_formal_quotient == expected_formal;
  p.notes.push_back("A*(A) is kept formal; the ideal is recorded through its degree-1 components "
                    "(Pic0(A), Pic(B))");
  return p;
}

GradedPresentation rational_chow(const GroupDescriptor& gd, std::optional<std::size_t> max_degree,
                                 const Limits& limits) {
  require_valid(gd, limits);
  const FlagChow fc(gd.rd, limits, false);
  const GroupAttributes a = derived_attributes(gd);
  const std::size_t top = fc.dimension();
  GradedPresentation p;
  p.rational = true;
  p.g = gd.av.g;
  p.max_degree = max_degree.value_or(top + gd.av.g + 2);
  if (p.max_degree > limits.degree_budget)
    throw DegreeTooLarge("max degree " + std::to_string(p.max_degree) + " exceeds the degree budget of " +
                         std::to_string(limits.degree_budget));
  for (std::size_t d = 0; d <= top; ++d) p.schubert_dims.push_back(fc.classes_of_codegree(d).size());
  for (std::size_t d = 0; d <= p.max_degree; ++d) {
    std::size_t dim = 0;
    if (d == 0) {
      dim = 1;
    } else if (d <= top) {
      const IntMatrix m = fc.chevalley_matrix(d - 1);
      dim = m.rows() - (m.cols() ? rank(m) : 0);
    }
    p.concrete_dims.push_back(dim);
  }
  p.ideal_degree1 = degree_one_generators(gd, &fc);
  p.j_generators = j_generators_of(gd, a.characters);
  p.j_rank = gd.av.g == 0 ? 0 : a.rank_im_gamma;
  p.degree_bound = gd.av.g;
  p.degree1_formal_quotient = gd.av.g == 0 ? FGAbelianGroup::trivial() : a.im_gamma;
  p.notes.push_back("A^i(G)_Q = 0 for i > " + std::to_string(gd.av.g));
  return p;
}

RestrictionData restriction_data(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                 const Limits& limits) {
  RestrictionData out;
  const std::size_t r = hd.torus_rank();
  const SubgroupTorusData td = subgroup_torus_data(gd, hd);
  if (td.descended_coroots.empty()) out.x_h0 = IntMatrix::identity(r);
  else out.x_h0 = integer_kernel(IntMatrix::from_rows(td.descended_coroots, r));
  if (hd.component_group.empty()) {
    out.x_h = out.x_h0;
  } else {
    const IntMatrix fixed = fixed_sublattice(hd.component_actions(), r, limits.group_cap);
    out.x_h = intersect_lattices(out.x_h0, fixed);
  }
  const IntMatrix chars = characters_of_group(gd.rd);
  const IntMatrix ker_q = r == 0 ? IntMatrix::identity(gd.rd.rank) : integer_kernel(hd.q);
  out.ker_r = intersect_lattices(chars, ker_q);
  out.rank_r = chars.rows() - out.ker_r.rows();
  return out;
}

GradedPresentation homogeneous_rational_chow(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                             std::optional<std::size_t> max_degree, const Limits& limits) {
  require_valid(gd, hd, limits);
  if (hd.contains_G_ant)
    throw ModeUnsupported("homogeneous Chow ring requires an affine subgroup (G_ant not contained in H)");
  const GroupAttributes a = derived_attributes(gd);
  const SubgroupTorusData td = subgroup_torus_data(gd, hd);
  const RestrictionData rd = restriction_data(gd, hd, limits);
  const std::size_t r = hd.torus_rank();

  GradedPresentation p;
  p.rational = true;
  p.g = gd.av.g;
  p.max_degree = max_degree.value_or(default_max_degree(gd.rd, gd.av.g));
  if (p.max_degree > limits.degree_budget)
    throw DegreeTooLarge("max degree " + std::to_string(p.max_degree) + " exceeds the degree budget of " +
                         std::to_string(limits.degree_budget));

  std::vector<IntMatrix> group = td.reflections;
  for (const auto& g : hd.component_actions()) group.push_back(g);
  const GradedAmbient ambient = GradedAmbient::invariants(group, r, limits);
  std::vector<Poly> gens;
  const auto w_gens =
      invariant_ideal_generators(GradedAmbient::full(gd.rd.rank, limits), weyl_generators(gd.rd), p.max_degree);
  for (const auto& f : w_gens) {
    Poly restricted = restrict_symmetric(hd.q, f);
    if (!restricted.is_zero()) gens.push_back(std::move(restricted));
  }
  const TruncatedQuotient quotient = truncated_quotient(ambient, gens, p.max_degree);
  p.concrete_dims = quotient.dims();

  for (std::size_t c = 0; c < a.characters.rows(); ++c) {
    IdealGenerator gen;
    gen.character = a.characters.row(c);
    gen.formal_class = gd.gluing.v * gen.character;
    gen.formal_zero = gd.av.g == 0 || formal_class_zero(gd.gluing, gen.formal_class);
    gen.concrete_restricted = hd.q * gen.character;
    p.ideal_degree1.push_back(std::move(gen));
  }
  p.j_generators = j_generators_of(gd, rd.ker_r);
  if (gd.av.g > 0) {
    const IntMatrix sum = lattice_sum(rd.ker_r, a.ker_gamma);
    p.j_rank = lattice_rank(sum) - lattice_rank(a.ker_gamma);
  }
  p.degree1_formal_quotient = gd.av.g == 0 ? FGAbelianGroup::trivial() : formal_image(gd, rd.ker_r);
  if (hd.has_translations())
    p.notes.push_back("Gamma acts on A by translations, trivially on A*(A)_Q; abelian factor kept whole");
  if (!quotient.vanishes_at_top())
    p.notes.push_back("concrete factor is nonzero at the truncation degree " + std::to_string(p.max_degree));
  return p;
}

HomogeneousPicardReport homogeneous_picard(const GroupDescriptor& gd, const SubgroupDescriptor& hd,
                                           bool integral, const Limits& limits) {
  require_valid(gd, hd, limits);
  if (hd.contains_G_ant)
    throw ModeUnsupported("homogeneous Picard group requires an affine subgroup (G_ant not contained in H)");
  if (integral && hd.has_translations())
    throw ModeUnsupported("integral mode requires H inside G_aff (no translation flags)");
  const GroupAttributes a = derived_attributes(gd);
  const RestrictionData rd = restriction_data(gd, hd, limits);

  HomogeneousPicardReport rep;
  rep.integral = integral;
  rep.x_h_rank = rd.x_h.rows();
  rep.rank_r = rd.rank_r;
  rep.ns_rank = gd.av.ns.free_rank() + rep.x_h_rank - rep.rank_r;
  rep.tail = a.pic_gaff;
  rep.pic0 = {gd.av.g, gd.av.g == 0 ? FGAbelianGroup::trivial() : a.im_gamma};
  FGAbelianGroup seq;
  if (gd.av.g > 0 && rd.ker_r.rows() > 0)
    seq = lattice_quotient(rd.ker_r, intersect_lattices(rd.ker_r, a.ker_gamma));
  rep.pic0_sequence = {gd.av.g, seq};
  rep.kernel = intersect_lattices(a.ker_gamma, rd.ker_r);

  IntMatrix images(a.characters.rows(), hd.torus_rank());
  for (std::size_t c = 0; c < a.characters.rows(); ++c) {
    const IntVector img = hd.q * a.characters.row(c);
    for (std::size_t j = 0; j < img.size(); ++j) images(c, j) = img[j];
  }
  if (integral) {
    rep.x_part = lattice_quotient(rd.x_h, images);
    rep.ns_image = gd.av.ns.direct_sum(rep.x_part);
    rep.notes.push_back("exact only up to the tail Pic(G_aff) = " + a.pic_gaff.to_string());
    rep.notes.push_back("X(H) computed as the Gamma-fixed characters of H^0");
  } else {
    rep.x_part = FGAbelianGroup::free(rep.x_h_rank - rep.rank_r);
    rep.ns_image = FGAbelianGroup::free(rep.ns_rank);
    if (hd.has_translations())
      rep.notes.push_back("NS(A/H)_Q has the rank of NS(A)_Q (Gamma acts on A by translations)");
  }
  return rep;
}

HomogeneousNS homogeneous_ns(const GroupDescriptor& gd, const SubgroupDescriptor& hd, const Limits& limits) {
  const HomogeneousPicardReport rat = homogeneous_picard(gd, hd, false, limits);
  HomogeneousNS out;
  out.rational_rank = rat.ns_rank;
  out.pic0 = rat.pic0;
  if (hd.has_translations()) {
    out.integral_note = "H is not contained in G_aff";
  } else if (!rat.tail.is_trivial()) {
    out.integral_note = "G_aff is not factorial (Pic(G_aff) = " + rat.tail.to_string() + ")";
  } else {
    out.integral = homogeneous_picard(gd, hd, true, limits).ns_image;
  }
  return out;
}

}  // namespace chevchow
