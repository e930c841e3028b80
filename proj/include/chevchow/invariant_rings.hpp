#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chevchow/int_matrix.hpp"
#include "chevchow/limits.hpp"
#include "chevchow/polynomial.hpp"
#include "chevchow/rational_linalg.hpp"
#include "chevchow/root_datum.hpp"

namespace chevchow {

/// Per-degree Q-bases of a graded subspace of Sym, degrees 0..max_degree.
struct GradedVectorBasis {
  std::size_t nvars = 0;
  std::vector<std::vector<Poly>> degrees;

  std::vector<std::size_t> dims() const;
};

/// Exponents of the monomial basis of Sym^d of a rank-n lattice, in graded
/// lexicographic order. Throws DegreeTooLarge when d exceeds the budget.
std::vector<Exponent> sym_basis(std::size_t lattice_rank, std::size_t d,
                                std::size_t degree_budget = kDefaultDegreeBudget);

/// Basis of (Sym^d)^Gamma in reduced echelon form on the monomial basis.
/// Throws GroupTooLarge if the generators do not close up under the cap.
std::vector<Poly> invariant_slice(const std::vector<IntMatrix>& generators, std::size_t lattice_rank,
                                  std::size_t d, const Limits& limits = {});

/// Ring map Sym X(T) -> Sym X(T_H) induced by q (rank X(T_H) x rank X(T)).
Poly restrict_symmetric(const IntMatrix& q, const Poly& f);

/// A graded subalgebra R of Sym: all of Sym, or the invariants of a finite
/// group acting on the lattice.
class GradedAmbient {
 public:
  static GradedAmbient full(std::size_t nvars, const Limits& limits = {});
  /// Throws GroupTooLarge if the generated group exceeds the cap.
  static GradedAmbient invariants(std::vector<IntMatrix> generators, std::size_t nvars,
                                  const Limits& limits = {});

  std::size_t nvars() const { return nvars_; }
  bool is_full() const { return generators_.empty(); }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  const Limits& limits() const { return limits_; }

  /// Basis of R_d, reduced echelon on monomials.
  std::vector<Poly> slice(std::size_t d) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<IntMatrix> generators_;  // empty or non-trivial acting group
  Limits limits_;
};

/// Basis of the degree-d piece of the ideal of R generated by homogeneous
/// elements of R of positive degree, in reduced echelon form.
std::vector<Poly> ideal_slice(const GradedAmbient& ambient, const std::vector<Poly>& generators,
                              std::size_t d);

/// R / I truncated at max_degree, with chosen coset representatives in each
/// degree.
class TruncatedQuotient {
 public:
  std::size_t nvars() const { return nvars_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<std::vector<Poly>>& representatives() const { return reps_; }
  const std::vector<std::vector<Poly>>& ideal() const { return ideal_; }
  const std::vector<std::size_t>& ambient_dims() const { return ambient_dims_; }

  std::vector<std::size_t> dims() const;
  std::size_t total_dimension() const;
  /// Whether the top computed degree is zero, i.e. the quotient looks finite.
  bool vanishes_at_top() const;

  /// Coordinates on the degree-d representatives of the class of f, an
  /// element of R_d. Throws InvalidArgument if f is not in R_d or d is beyond
  /// the truncation.
  RatVector reduce(const Poly& f, std::size_t d) const;
  /// The representative combination congruent to f.
  Poly normal_form(const Poly& f, std::size_t d) const;

 private:
  friend TruncatedQuotient truncated_quotient(const GradedAmbient&, const std::vector<Poly>&,
                                              std::size_t,
                                              const std::vector<std::vector<Poly>>*);
  std::size_t nvars_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::size_t> ambient_dims_;
  std::vector<std::vector<Poly>> reps_;
  std::vector<std::vector<Poly>> ideal_;
  std::vector<DegreeCoordinates> coords_;
  std::vector<RowSpaceSolver> solvers_;  // rows: ideal basis, then representatives
};

/// Builds R / (generators) through max_degree. Representatives are chosen
/// greedily from the echelon basis of R_d unless supplied (one list per
/// degree, which must complement the ideal).
TruncatedQuotient truncated_quotient(const GradedAmbient& ambient,
                                     const std::vector<Poly>& generators, std::size_t max_degree,
                                     const std::vector<std::vector<Poly>>* representatives = nullptr);

/// Generators of the ideal of R spanned by the positive-degree invariants of
/// `group` (a subgroup acting on the same lattice), keeping only those not
/// already in the ideal generated by lower degrees.
std::vector<Poly> invariant_ideal_generators(const GradedAmbient& ambient,
                                             const std::vector<IntMatrix>& group,
                                             std::size_t max_degree);

/// |Phi+| + g + 2
std::size_t default_max_degree(const RootDatum& rd, std::size_t abelian_dim = 0);

/// Sym X(T)_Q modulo the positive-degree Weyl invariants.
TruncatedQuotient coinvariant_quotient(const RootDatum& rd,
                                       std::optional<std::size_t> max_degree = std::nullopt,
                                       const Limits& limits = {});

/// Weyl group generators (simple reflections) as lattice matrices.
std::vector<IntMatrix> weyl_generators(const RootDatum& rd);

}  // namespace chevchow
