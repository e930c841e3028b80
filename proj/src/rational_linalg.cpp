#include "chevchow/rational_linalg.hpp"

#include <algorithm>
#include <utility>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

// Row reduces `rows` in place, applying the same operations to `companion`.
std::vector<std::size_t> eliminate(std::vector<RatVector>& rows, std::vector<RatVector>* companion,
                                   std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    if (companion) std::swap((*companion)[p], (*companion)[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    if (companion)
      for (auto& x : (*companion)[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      if (companion)
        for (std::size_t j = 0; j < (*companion)[r].size(); ++j)
          if ((*companion)[r][j] != 0) (*companion)[i][j] -= f * (*companion)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

EchelonForm reduced_echelon(std::vector<RatVector> rows, std::size_t ncols) {
  EchelonForm out;
  out.pivots = eliminate(rows, nullptr, ncols);
  rows.resize(out.pivots.size());
  out.rows = std::move(rows);
  return out;
}

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t ncols) {
  return reduced_echelon(rows, ncols).pivots.size();
}

std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t ncols) {
  const EchelonForm e = reduced_echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return reduced_echelon(std::move(basis), ncols).rows;
}

RatVector IncrementalSpan::reduce(RatVector v) const {
  if (v.size() != ncols_) throw InvalidArgument("vector length does not match the span");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool IncrementalSpan::contains(const RatVector& v) const {
  const RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool IncrementalSpan::add(const RatVector& v) {
  RatVector r = reduce(v);
  std::size_t p = 0;
  while (p < ncols_ && r[p] == 0) ++p;
  if (p == ncols_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

RowSpaceSolver::RowSpaceSolver(const std::vector<RatVector>& rows, std::size_t ncols)
    : ncols_(ncols), echelon_(rows) {
  const std::size_t k = rows.size();
  transform_.assign(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i) transform_[i][i] = 1;
  pivots_ = eliminate(echelon_, &transform_, ncols);
  if (pivots_.size() != k) throw InvalidArgument("row space solver: rows are linearly dependent");
}

std::optional<RatVector> RowSpaceSolver::solve(const RatVector& f) const {
  const std::size_t k = pivots_.size();
  RatVector y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = f[pivots_[i]];
  RatVector check(ncols_);
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (echelon_[i][j] != 0) check[j] += y[i] * echelon_[i][j];
  }
  if (check != f) return std::nullopt;
  RatVector x(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (transform_[i][j] != 0) x[j] += y[i] * transform_[i][j];
  }
  return x;
}

}  // namespace chevchow
