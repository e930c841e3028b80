#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chevchow/numeric.hpp"

namespace chevchow {

/// Reduced row echelon form over Q; zero rows dropped.
struct EchelonForm {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};

EchelonForm reduced_echelon(std::vector<RatVector> rows, std::size_t ncols);

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t ncols);

/// Basis of {x : r . x = 0 for every row r}, in reduced echelon form.
std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t ncols);

/// Growing list of independent vectors with a membership test.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ncols) : ncols_(ncols) {}

  std::size_t dimension() const { return rows_.size(); }
  bool contains(const RatVector& v) const;
  /// Adds v if it is independent of the span so far; returns whether it was.
  bool add(const RatVector& v);

 private:
  RatVector reduce(RatVector v) const;

  std::size_t ncols_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves x . A = f for a fixed list of linearly independent rows A.
class RowSpaceSolver {
 public:
  RowSpaceSolver() = default;
  /// Throws InvalidArgument if the rows are dependent.
  RowSpaceSolver(const std::vector<RatVector>& rows, std::size_t ncols);

  std::size_t size() const { return transform_.size(); }
  /// Coefficients on the rows, or nullopt if f is outside their span.
  std::optional<RatVector> solve(const RatVector& f) const;

 private:
  std::size_t ncols_ = 0;
  std::vector<RatVector> echelon_;    // transform_ * A
  std::vector<RatVector> transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace chevchow
