#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevchow/int_matrix.hpp"
#include "chevchow/limits.hpp"
#include "chevchow/numeric.hpp"

namespace chevchow {

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k in invariant
/// factor form: every d_i >= 2 and d_1 | d_2 | ... | d_k.
///
/// The representation is unique, so equality is structural.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Canonicalizes an arbitrary list of cyclic orders: zeros count as free
  /// summands, units are dropped, the rest is rewritten into invariant
  /// factors.
  static FGAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                           const std::vector<BigInt>& orders);
  static FGAbelianGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static FGAbelianGroup trivial() { return {}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Product of the torsion invariants (1 for torsion-free groups).
  BigInt torsion_order() const;

  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

  bool operator==(const FGAbelianGroup&) const = default;

  /// "0", "Z^2", "Z/2 + Z/6", "Z + Z/3", ...
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// An abelian group given as Z^ambient_rank modulo the row span of `relations`.
struct Presentation {
  std::size_t ambient_rank = 0;
  IntMatrix relations;  // k x ambient_rank, one relation per row

  static Presentation free(std::size_t rank) { return {rank, IntMatrix(0, rank)}; }

  FGAbelianGroup group() const;
  bool is_free_ambient() const { return relations.rows() == 0 || relations.is_zero(); }
};

/// Homomorphism between presented groups; `matrix` is codomain x domain and
/// acts on ambient generators.
struct GroupHom {
  Presentation domain;
  Presentation codomain;
  IntMatrix matrix;

  /// Throws IllFormedHom unless relations map into codomain relations.
  void check_well_defined() const;
};

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix S;  // diagonal with divisibility chain, non-negative
  IntMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;
};

/// U * m * V = S. Deterministic for a fixed input.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors of the cokernel of an m x n integer matrix (as a map
/// Z^n -> Z^m).
FGAbelianGroup cokernel_of_matrix(const IntMatrix& m);

/// Canonical form of codomain / image(f).
FGAbelianGroup cokernel_presentation(const GroupHom& f);

/// Exact integer kernel of a homomorphism out of a free domain, as a row
/// basis in Hermite normal form. Throws TorsionDomain if the domain has
/// non-trivial relations.
IntMatrix kernel_lattice(const GroupHom& f);

/// Exact integer kernel of the matrix (map Z^cols -> Z^rows); HNF row basis.
IntMatrix integer_kernel(const IntMatrix& m);

/// Saturation (Q-span intersected with Z^n) of a row lattice; HNF row basis.
IntMatrix saturate(const IntMatrix& basis);

/// Row-style Hermite normal form with zero rows removed: pivots positive,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// An integer solution x of a * x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Whether v lies in the Z-span of the rows of `basis`.
bool in_row_lattice(const IntMatrix& basis, const IntVector& v);

/// Intersection of two row lattices in Z^n; HNF row basis.
IntMatrix intersect_lattices(const IntMatrix& a, const IntMatrix& b);

/// Closure of a set of invertible square integer matrices under
/// multiplication, identity first and in breadth-first order. Throws
/// GroupTooLarge when more than `cap` elements appear and InvalidArgument for
/// non-unimodular generators.
std::vector<IntMatrix> enumerate_group(const std::vector<IntMatrix>& generators,
                                       std::size_t dimension,
                                       std::size_t cap = kDefaultGroupCap);

/// Basis (rows, HNF) of {x : g x = x for every generator g}.
IntMatrix fixed_sublattice(const std::vector<IntMatrix>& generators,
                           std::size_t lattice_rank,
                           std::size_t cap = kDefaultGroupCap);

}  // namespace chevchow
