#include "chevchow/flag_chow.hpp"

#include <algorithm>

#include "chevchow/errors.hpp"

namespace chevchow {

std::string SchubertExpansion::to_string(const WeylGroup& weyl) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1) out += mag.str() + " ";
    out += "[" + weyl.word_string(w) + "]";
  }
  return out;
}

FlagChow::FlagChow(const RootDatum& rd, const Limits& limits, bool with_representatives)
    : rd_(rd), roots_(root_system(rd)), weyl_(weyl_group(rd, limits.group_cap)) {
  const std::size_t top = dimension();
  if (top > limits.degree_budget)
    throw DegreeTooLarge("flag variety of dimension " + std::to_string(top) +
                         " exceeds the degree budget of " + std::to_string(limits.degree_budget));
  by_codegree_.assign(top + 1, {});
  position_.assign(weyl_.size(), 0);
  for (std::size_t w = 0; w < weyl_.size(); ++w) {
    position_[w] = by_codegree_[weyl_.lengths[w]].size();
    by_codegree_[weyl_.lengths[w]].push_back(w);
  }
  if (!with_representatives) return;

  // Top class prod(alpha > 0) / |W|, then top-down by divided differences.
  const std::size_t n = rd.rank;
  Poly topclass = Poly::constant(n, Rational(1, 1) / Rational(BigInt(weyl_.size())));
  for (const auto& beta : roots_.positive) topclass = topclass * Poly::linear(beta.vector);
  reps_.assign(weyl_.size(), Poly(n));
  for (std::size_t len = top + 1; len-- > 0;) {
    for (std::size_t w : by_codegree_[len]) {
      if (len == top) {
        reps_[w] = topclass;
        continue;
      }
      std::size_t i = 0;
      while (weyl_.lengths[weyl_.right_mult[w][i]] != len + 1) ++i;
      reps_[w] = divided_difference(i, reps_[weyl_.right_mult[w][i]]);
    }
  }

  std::vector<std::vector<Poly>> supplied(top + 1);
  for (std::size_t d = 0; d <= top; ++d)
    for (std::size_t w : by_codegree_[d]) supplied[d].push_back(reps_[w]);
  const GradedAmbient ambient = GradedAmbient::full(n, limits);
  const auto gens = invariant_ideal_generators(ambient, weyl_generators(rd), top);
  quotient_ = truncated_quotient(ambient, gens, top, &supplied);
}

const Poly& FlagChow::representative(std::size_t w) const { return representatives().at(w); }

const std::vector<Poly>& FlagChow::representatives() const {
  if (reps_.empty()) throw InvalidArgument("flag Chow data built without representatives");
  return reps_;
}

const TruncatedQuotient& FlagChow::coinvariants() const {
  if (reps_.empty()) throw InvalidArgument("flag Chow data built without representatives");
  return quotient_;
}

std::vector<std::vector<SchubertClass>> FlagChow::schubert_basis() const {
  std::vector<std::vector<SchubertClass>> out;
  for (std::size_t d = 0; d < by_codegree_.size(); ++d) {
    out.emplace_back();
    for (std::size_t w : by_codegree_[d]) out.back().push_back({w, d});
  }
  return out;
}

Poly FlagChow::divided_difference(std::size_t i, const Poly& f) const {
  const Poly diff = f - substitute(f, simple_reflection(rd_, i));
  if (diff.is_zero()) return Poly(rd_.rank);
  return divide_by_linear(diff, rd_.simple_roots.at(i));
}

SchubertExpansion FlagChow::chevalley_multiply(const IntVector& lambda, std::size_t w) const {
  if (lambda.size() != rd_.rank) throw InvalidArgument("character has the wrong length");
  SchubertExpansion out;
  out.codegree = weyl_.lengths.at(w) + 1;
  for (const auto& beta : roots_.positive) {
    const BigInt pairing = dot(lambda, beta.coroot);
    if (pairing == 0) continue;
    const auto ws = weyl_.index_of(weyl_.elements[w] * reflection_matrix(beta.vector, beta.coroot));
    if (!ws || weyl_.lengths[*ws] != out.codegree) continue;
    out.terms[*ws] += pairing;
  }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

SchubertExpansion FlagChow::expand(const Poly& f, std::size_t d) const {
  SchubertExpansion out;
  out.codegree = d;
  if (d > dimension()) return out;
  const RatVector c = coinvariants().reduce(f, d);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (boost::multiprecision::denominator(c[k]) != 1)
      throw NonIntegralStructureConstant("coefficient " + chevchow::to_string(c[k]) + " of [" +
                                         weyl_.word_string(by_codegree_[d][k]) + "] is not an integer");
    out.terms[by_codegree_[d][k]] = boost::multiprecision::numerator(c[k]);
  }
  return out;
}

SchubertExpansion FlagChow::product(std::size_t u, std::size_t v) const {
  const std::size_t d = weyl_.lengths.at(u) + weyl_.lengths.at(v);
  const SchubertExpansion out = expand(representative(u) * representative(v), d);
  for (const auto& [w, c] : out.terms)
    if (c < 0)
      throw NonIntegralStructureConstant("negative structure constant " + c.str() + " at [" +
                                         weyl_.word_string(w) + "]");
  return out;
}

SchubertExpansion FlagChow::product_by_divided_differences(std::size_t u, std::size_t v) const {
  SchubertExpansion out;
  out.codegree = weyl_.lengths.at(u) + weyl_.lengths.at(v);
  if (out.codegree > dimension()) return out;
  const Poly f = representative(u) * representative(v);
  for (std::size_t w : by_codegree_[out.codegree]) {
    Poly g = f;
    const auto& word = weyl_.words[w];
    for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = divided_difference(*it, g);
    const Rational c = g.coefficient(Exponent(rd_.rank, 0));
    if (c == 0) continue;
    if (boost::multiprecision::denominator(c) != 1)
      throw NonIntegralStructureConstant("coefficient " + chevchow::to_string(c) + " of [" +
                                         weyl_.word_string(w) + "] is not an integer");
    out.terms[w] = boost::multiprecision::numerator(c);
  }
  return out;
}

IntMatrix FlagChow::chevalley_matrix(std::size_t d) const {
  const std::size_t rows = d + 1 < by_codegree_.size() ? by_codegree_[d + 1].size() : 0;
  const std::size_t src = d < by_codegree_.size() ? by_codegree_[d].size() : 0;
  IntMatrix m(rows, rd_.rank * src);
  if (rows == 0) return m;
  for (std::size_t k = 0; k < rd_.rank; ++k) {
    IntVector e(rd_.rank);
    e[k] = 1;
    for (std::size_t j = 0; j < src; ++j) {
      const auto exp = chevalley_multiply(e, by_codegree_[d][j]);
      for (const auto& [w, c] : exp.terms) m(position_[w], k * src + j) = c;
    }
  }
  return m;
}

std::vector<std::vector<SchubertClass>> schubert_basis(const RootDatum& rd, const Limits& limits) {
  validate_root_datum(rd);
  const WeylGroup weyl = weyl_group(rd, limits.group_cap);
  std::size_t top = 0;
  for (auto l : weyl.lengths) top = std::max(top, l);
  std::vector<std::vector<SchubertClass>> out(top + 1);
  for (std::size_t w = 0; w < weyl.size(); ++w) out[weyl.lengths[w]].push_back({w, weyl.lengths[w]});
  return out;
}

SchubertExpansion chevalley_multiply(const RootDatum& rd, const IntVector& lambda, std::size_t w) {
  return FlagChow(rd, {}, false).chevalley_multiply(lambda, w);
}

std::vector<Poly> schubert_representatives(const RootDatum& rd, std::size_t max_degree) {
  const FlagChow fc(rd);
  std::vector<Poly> out;
  for (std::size_t w = 0; w < fc.weyl().size(); ++w)
    if (fc.weyl().lengths[w] <= max_degree) out.push_back(fc.representative(w));
  return out;
}

SchubertExpansion schubert_product(const RootDatum& rd, std::size_t u, std::size_t v) {
  return FlagChow(rd).product(u, v);
}

}  // namespace chevchow
