#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chevchow/invariant_rings.hpp"
#include "chevchow/lattice.hpp"
#include "chevchow/limits.hpp"
#include "chevchow/polynomial.hpp"
#include "chevchow/root_datum.hpp"

namespace chevchow {

/// Schubert class sigma_w of the flag variety, indexed by the Weyl element.
struct SchubertClass {
  std::size_t element = 0;
  std::size_t codegree = 0;
  bool operator==(const SchubertClass&) const = default;
};

/// Integer combination of Schubert classes of a single codegree.
struct SchubertExpansion {
  std::size_t codegree = 0;
  std::map<std::size_t, BigInt> terms;  // Weyl element index -> coefficient, no zeros

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SchubertExpansion&) const = default;
  std::string to_string(const WeylGroup& weyl) const;  // "s1 s2 + 2 [s2 s1]" style
};

/// Chow ring of the flag variety G_aff / B of a root datum: Schubert basis,
/// BGG representatives in the coinvariant algebra, products.
class FlagChow {
 public:
  /// Without representatives only the Weyl group and the Chevalley formula
  /// are available; the coinvariant algebra is skipped.
  explicit FlagChow(const RootDatum& rd, const Limits& limits = {}, bool with_representatives = true);

  const RootDatum& datum() const { return rd_; }
  const RootSystem& roots() const { return roots_; }
  const WeylGroup& weyl() const { return weyl_; }
  std::size_t dimension() const { return roots_.positive.size(); }

  /// Classes grouped by codegree 0..dim.
  std::vector<std::vector<SchubertClass>> schubert_basis() const;
  /// Elements of codegree d in enumeration order.
  const std::vector<std::size_t>& classes_of_codegree(std::size_t d) const { return by_codegree_.at(d); }

  /// Representative of sigma_w in Sym X(T)_Q.
  const Poly& representative(std::size_t w) const;
  const std::vector<Poly>& representatives() const;
  bool has_representatives() const { return !reps_.empty(); }
  /// Sym X(T)_Q / (S^W_+) through the top degree, with the Schubert
  /// representatives as coset basis.
  const TruncatedQuotient& coinvariants() const;

  /// c(lambda) . sigma_w by the Chevalley formula.
  SchubertExpansion chevalley_multiply(const IntVector& lambda, std::size_t w) const;

  /// Expansion of a homogeneous element of degree d of Sym X(T)_Q; throws
  /// NonIntegralStructureConstant if a coefficient is not an integer.
  SchubertExpansion expand(const Poly& f, std::size_t d) const;

  /// sigma_u . sigma_v by reduction in the coinvariant algebra; every
  /// coefficient is checked to be a nonnegative integer.
  SchubertExpansion product(std::size_t u, std::size_t v) const;
  /// Same product, coefficient of sigma_w read off as the constant
  /// d_w(rep_u rep_v) with BGG operators.
  SchubertExpansion product_by_divided_differences(std::size_t u, std::size_t v) const;

  /// d_i f = (f - s_i f) / alpha_i
  Poly divided_difference(std::size_t i, const Poly& f) const;

  /// Matrix of (e_k, sigma_w) -> c(e_k) sigma_w from codegree d to d + 1, with
  /// one column per pair (k major, then classes of codegree d) and one row per
  /// class of codegree d + 1.
  IntMatrix chevalley_matrix(std::size_t d) const;

 private:
  RootDatum rd_;
  RootSystem roots_;
  WeylGroup weyl_;
  std::vector<std::vector<std::size_t>> by_codegree_;
  std::vector<std::size_t> position_;  // index of w within its codegree
  std::vector<Poly> reps_;
  TruncatedQuotient quotient_;
};

std::vector<std::vector<SchubertClass>> schubert_basis(const RootDatum& rd, const Limits& limits = {});
SchubertExpansion chevalley_multiply(const RootDatum& rd, const IntVector& lambda, std::size_t w);
/// Representatives of all classes of codegree <= max_degree, indexed by element.
std::vector<Poly> schubert_representatives(const RootDatum& rd, std::size_t max_degree);
SchubertExpansion schubert_product(const RootDatum& rd, std::size_t u, std::size_t v);

}  // namespace chevchow
