#include "chevchow/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_vars(std::size_t a, std::size_t b) {
  if (a != b) throw InvalidArgument("polynomials over different numbers of variables");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k) {
  Exponent e(nvars, 0);
  e.at(k) = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::linear(const IntVector& v) {
  Poly p(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    Exponent e(v.size(), 0);
    e[k] = 1;
    p.add_term(e, Rational(v[k]));
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  check_vars(e.size(), nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_vars(nvars_, rhs.nvars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_vars(nvars_, rhs.nvars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  out += rhs;
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  out -= rhs;
  return out;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Poly& rhs) const {
  check_vars(nvars_, rhs.nvars_);
  Poly out(nvars_);
  Exponent e(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = a[k] + b[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out << chevchow::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << chevchow::to_string(mag) << "*" << mono;
    }
  }
  return out.str();
}

Poly substitute(const Poly& f, const IntMatrix& m) {
  if (m.cols() != f.nvars()) throw InvalidArgument("substitution matrix has wrong column count");
  const std::size_t target = m.rows();
  std::vector<std::vector<Poly>> powers(f.nvars());
  for (std::size_t k = 0; k < f.nvars(); ++k) powers[k].push_back(Poly::constant(target, 1));
  Poly out(target);
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      auto& pk = powers[k];
      while (static_cast<int>(pk.size()) <= e[k]) pk.push_back(pk.back() * Poly::linear(m.col(k)));
      if (e[k] > 0) term = term * pk[e[k]];
    }
    out += term;
  }
  return out;
}

Poly divide_by_linear(const Poly& f, const IntVector& linear_form) {
  check_vars(f.nvars(), linear_form.size());
  std::size_t k = 0;
  while (k < linear_form.size() && linear_form[k] == 0) ++k;
  if (k == linear_form.size()) throw InvalidArgument("division by the zero linear form");
  const Poly ell = Poly::linear(linear_form);
  const Rational lead = Rational(linear_form[k]);
  Poly q(f.nvars()), r = f;
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms().begin();
    if (e[k] == 0) throw InvalidArgument("polynomial is not divisible by the linear form");
    Exponent qe = e;
    --qe[k];
    const Poly t = Poly::monomial(qe, c / lead);
    q += t;
    r -= t * ell;
  }
  return q;
}

std::vector<Exponent> monomials(std::size_t n, std::size_t d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  // Recursive fill: first variable takes the largest share first.
  std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      fill(k + 1, left - a);
    }
  };
  fill(0, static_cast<int>(d));
  return out;
}

DegreeCoordinates::DegreeCoordinates(std::size_t nvars, std::size_t degree)
    : nvars_(nvars), degree_(degree), basis_(monomials(nvars, degree)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

RatVector DegreeCoordinates::to_vector(const Poly& f) const {
  check_vars(f.nvars(), nvars_);
  RatVector v(basis_.size());
  for (const auto& [e, c] : f.terms()) {
    auto it = index_.find(e);
    if (it == index_.end())
      throw InvalidArgument("term of degree " + std::to_string(total_degree(e)) +
                            " in a degree " + std::to_string(degree_) + " slice");
    v[it->second] = c;
  }
  return v;
}

Poly DegreeCoordinates::from_vector(const RatVector& v) const {
  Poly p(nvars_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v[i] != 0) p.add_term(basis_[i], v[i]);
  return p;
}

}  // namespace chevchow
