#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevchow/int_matrix.hpp"
#include "chevchow/lattice.hpp"
#include "chevchow/limits.hpp"
#include "chevchow/numeric.hpp"

namespace chevchow {

/// Reductive root datum in fixed coordinates: X(T) = Z^rank, Y(T) its dual,
/// pairing given by the dot product. The simple roots fix the Borel subgroup.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<IntVector> simple_roots;
  std::vector<IntVector> simple_coroots;
  std::size_t u_rad = 0;  // dimension of the unipotent radical, bookkeeping only

  std::size_t semisimple_rank() const { return simple_roots.size(); }
  bool operator==(const RootDatum&) const = default;
};

struct CartanComponent {
  char letter = 'A';
  std::size_t rank = 0;
  std::vector<std::size_t> nodes;  // indices into the simple roots

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  /// Degrees of the fundamental invariants of the Weyl group.
  std::vector<int> degrees() const;
};

struct CartanType {
  std::vector<CartanComponent> components;
  std::size_t central_rank = 0;  // rank of X(T) minus semisimple rank
  IntMatrix cartan_matrix;       // (i, j) = <alpha_i, alpha_j^vee>

  BigInt weyl_order() const;
  /// Invariant degrees of all components, sorted ascending.
  std::vector<int> degrees() const;
  std::size_t positive_root_count() const;
  /// e.g. "A2", "A1 + A1 + T1", "T2"
  std::string name() const;
};

/// Classifies the datum into irreducible finite Cartan types. Throws
/// InvalidCartan naming the violated condition.
CartanType validate_root_datum(const RootDatum& rd);

struct Root {
  IntVector simple_coords;  // coefficients on the simple roots
  IntVector vector;         // in X(T)
  IntVector coroot;         // in Y(T)
  int height = 0;
};

/// Positive roots in canonical order: height ascending, then simple-root
/// coordinates lexicographically descending. Simple root i has index i.
struct RootSystem {
  std::vector<Root> positive;

  std::optional<std::size_t> find_positive(const IntVector& vec) const;
  /// The root with the given (positive index, sign) as a vector in X(T).
  IntVector signed_root(std::size_t index, int sign) const;
  /// All roots, positives first then their negatives.
  std::vector<IntVector> all_roots() const;
};

RootSystem root_system(const RootDatum& rd);

/// s(x) = x - <x, coroot> root, as a matrix on column vectors of X(T).
IntMatrix reflection_matrix(const IntVector& root, const IntVector& coroot);
IntMatrix simple_reflection(const RootDatum& rd, std::size_t i);

/// Weyl group as matrices on X(T), enumerated breadth-first by right
/// multiplication with simple reflections. Element 0 is the identity and each
/// element carries its lexicographically least reduced word.
struct WeylGroup {
  std::vector<IntMatrix> elements;
  std::vector<std::size_t> lengths;
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> generators;               // element index of s_i
  std::vector<std::vector<std::size_t>> right_mult;  // [w][i] = index of w s_i

  std::size_t size() const { return elements.size(); }
  std::size_t longest() const;
  std::optional<std::size_t> index_of(const IntMatrix& m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::string word_string(std::size_t w) const;  // "s1 s2", "e" for identity

 private:
  friend WeylGroup weyl_group(const RootDatum&, std::size_t);
  std::map<IntMatrix, std::size_t> index_;
};

WeylGroup weyl_group(const RootDatum& rd, std::size_t cap = kDefaultGroupCap);

/// Coroot pairing matrix (semisimple rank x rank), row i = alpha_i^vee.
IntMatrix pairing_matrix(const RootDatum& rd);

/// Basis (rows, HNF) of X(G_aff) = {chi : <chi, alpha^vee> = 0 for all alpha}.
IntMatrix characters_of_group(const RootDatum& rd);

/// chi -> (<chi, alpha_1^vee>, ...); the flag-variety Picard map into the
/// weight lattice of the semisimple quotient.
struct WeightLatticeMap {
  IntMatrix matrix;
  std::size_t target_rank() const { return matrix.rows(); }
};

struct FlagPicard {
  WeightLatticeMap map;
  FGAbelianGroup pic_gaff;  // cokernel of the map
};

FlagPicard flag_pic_map(const RootDatum& rd);

/// Enlargement X' = X(T) + P_Phi inside X(T) (x) Q. `basis` rows, divided by
/// `denominator`, are the new basis in old coordinates. Unchanged (identical
/// datum) when P_Phi already lies in X(T).
struct FactorialCover {
  RootDatum datum;
  IntMatrix basis;
  BigInt denominator = 1;
  BigInt index = 1;  // [X' : X(T)]
  bool unchanged = true;
};

FactorialCover factorial_cover(const RootDatum& rd);
inline RootDatum factorial_cover_datum(const RootDatum& rd) { return factorial_cover(rd).datum; }

/// Index of some w in W with w(Phi+) contained in root_subset, when q is
/// the identity; nullopt otherwise.
std::optional<std::size_t> borel_witness(const RootDatum& rd, const WeylGroup& weyl,
                                         const std::vector<IntVector>& root_subset,
                                         bool q_is_identity);

bool contains_borel(const RootDatum& rd, const std::vector<IntVector>& root_subset,
                    bool q_is_identity, std::size_t cap = kDefaultGroupCap);

}  // namespace chevchow
