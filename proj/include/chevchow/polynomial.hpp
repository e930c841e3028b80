#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chevchow/int_matrix.hpp"
#include "chevchow/numeric.hpp"

namespace chevchow {

using Exponent = std::vector<int>;

/// Sparse polynomial over Q in a fixed number of variables x_1..x_n, where
/// x_k stands for the k-th basis character of the lattice.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, std::greater<Exponent>>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t k);
  static Poly monomial(const Exponent& e, const Rational& c = 1);
  /// sum_k v_k x_k
  static Poly linear(const IntVector& v);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  bool operator==(const Poly&) const = default;

  /// Graded lexicographic, highest terms first; "0" for zero. Variables are
  /// named x1, x2, ... unless names are given.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Ring map sending x_k to sum_i m(i, k) y_i; m is (target vars) x nvars.
/// With m a lattice automorphism this is the induced action on Sym.
Poly substitute(const Poly& f, const IntMatrix& m);

/// Exact division of f by a nonzero linear form; throws InvalidArgument if
/// the division leaves a remainder.
Poly divide_by_linear(const Poly& f, const IntVector& linear_form);

/// Monomials of total degree d in n variables, lexicographically descending
/// (x^2, xy, y^2 for n = 2, d = 2).
std::vector<Exponent> monomials(std::size_t n, std::size_t d);

/// Coordinates of homogeneous polynomials of one degree in the monomial basis.
class DegreeCoordinates {
 public:
  DegreeCoordinates(std::size_t nvars, std::size_t degree);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Exponent>& basis() const { return basis_; }
  /// Throws InvalidArgument on terms of a different degree.
  RatVector to_vector(const Poly& f) const;
  Poly from_vector(const RatVector& v) const;

 private:
  std::size_t nvars_;
  std::size_t degree_;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> index_;
};

}  // namespace chevchow
