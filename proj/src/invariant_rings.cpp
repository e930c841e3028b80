#include "chevchow/invariant_rings.hpp"

#include <algorithm>
#include <numeric>

#include "chevchow/errors.hpp"
#include "chevchow/lattice.hpp"

namespace chevchow {

namespace {

void check_budget(std::size_t d, std::size_t budget) {
  if (d > budget)
    throw DegreeTooLarge("degree " + std::to_string(d) + " exceeds the degree budget of " +
                         std::to_string(budget));
}

std::vector<Poly> echelon_polys(const DegreeCoordinates& coords, std::vector<RatVector> rows) {
  const EchelonForm e = reduced_echelon(std::move(rows), coords.dimension());
  std::vector<Poly> out;
  out.reserve(e.rows.size());
  for (const auto& r : e.rows) out.push_back(coords.from_vector(r));
  return out;
}

// Basis of the subspace of Sym^d fixed by every generator.
std::vector<Poly> fixed_space(const std::vector<IntMatrix>& generators, std::size_t n, std::size_t d) {
  const DegreeCoordinates coords(n, d);
  const std::size_t dim = coords.dimension();
  if (generators.empty()) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      RatVector v(dim);
      v[i] = 1;
      rows.push_back(std::move(v));
    }
    return echelon_polys(coords, std::move(rows));
  }
  std::vector<RatVector> constraints;
  for (const auto& g : generators) {
    std::vector<RatVector> cols;
    cols.reserve(dim);
    for (const auto& e : coords.basis()) cols.push_back(coords.to_vector(substitute(Poly::monomial(e), g)));
    for (std::size_t i = 0; i < dim; ++i) {
      RatVector row(dim);
      bool nonzero = false;
      for (std::size_t j = 0; j < dim; ++j) {
        row[j] = cols[j][i] - (i == j ? 1 : 0);
        nonzero = nonzero || row[j] != 0;
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  std::vector<Poly> out;
  for (const auto& v : rational_kernel(constraints, dim)) out.push_back(coords.from_vector(v));
  return out;
}

void check_generator(const Poly& g, std::size_t nvars) {
  if (g.nvars() != nvars) throw InvalidArgument("ideal generator over the wrong number of variables");
  if (g.is_zero()) return;
  if (!g.is_homogeneous()) throw InvalidArgument("ideal generators must be homogeneous");
  if (g.degree() < 1) throw InvalidArgument("ideal generators must have positive degree");
}

// Degree-d ideal piece from cached ambient slices.
std::vector<Poly> ideal_piece(const std::vector<std::vector<Poly>>& slices,
                              const std::vector<Poly>& generators, std::size_t nvars, std::size_t d) {
  const DegreeCoordinates coords(nvars, d);
  std::vector<RatVector> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const auto e = static_cast<std::size_t>(g.degree());
    if (e > d) continue;
    for (const auto& b : slices[d - e]) rows.push_back(coords.to_vector(g * b));
  }
  return echelon_polys(coords, std::move(rows));
}

}  // namespace

std::vector<std::size_t> GradedVectorBasis::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.size());
  return out;
}

std::vector<Exponent> sym_basis(std::size_t lattice_rank, std::size_t d, std::size_t degree_budget) {
  check_budget(d, degree_budget);
  return monomials(lattice_rank, d);
}

std::vector<Poly> invariant_slice(const std::vector<IntMatrix>& generators, std::size_t lattice_rank,
                                  std::size_t d, const Limits& limits) {
  check_budget(d, limits.degree_budget);
  enumerate_group(generators, lattice_rank, limits.group_cap);
  return fixed_space(generators, lattice_rank, d);
}

Poly restrict_symmetric(const IntMatrix& q, const Poly& f) { return substitute(f, q); }

GradedAmbient GradedAmbient::full(std::size_t nvars, const Limits& limits) {
  GradedAmbient a;
  a.nvars_ = nvars;
  a.limits_ = limits;
  return a;
}

GradedAmbient GradedAmbient::invariants(std::vector<IntMatrix> generators, std::size_t nvars,
                                        const Limits& limits) {
  enumerate_group(generators, nvars, limits.group_cap);
  GradedAmbient a;
  a.nvars_ = nvars;
  a.limits_ = limits;
  for (auto& g : generators)
    if (!g.is_identity()) a.generators_.push_back(std::move(g));
  return a;
}

std::vector<Poly> GradedAmbient::slice(std::size_t d) const {
  check_budget(d, limits_.degree_budget);
  return fixed_space(generators_, nvars_, d);
}

std::vector<Poly> ideal_slice(const GradedAmbient& ambient, const std::vector<Poly>& generators,
                              std::size_t d) {
  std::vector<std::vector<Poly>> slices;
  for (const auto& g : generators) check_generator(g, ambient.nvars());
  for (std::size_t k = 0; k <= d; ++k) slices.push_back(ambient.slice(k));
  return ideal_piece(slices, generators, ambient.nvars(), d);
}

std::vector<std::size_t> TruncatedQuotient::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : reps_) out.push_back(r.size());
  return out;
}

std::size_t TruncatedQuotient::total_dimension() const {
  std::size_t n = 0;
  for (const auto& r : reps_) n += r.size();
  return n;
}

bool TruncatedQuotient::vanishes_at_top() const { return reps_.empty() || reps_.back().empty(); }

RatVector TruncatedQuotient::reduce(const Poly& f, std::size_t d) const {
  if (d > max_degree_)
    throw InvalidArgument("degree " + std::to_string(d) + " beyond the truncation at " +
                          std::to_string(max_degree_));
  auto x = solvers_[d].solve(coords_[d].to_vector(f));
  if (!x) throw InvalidArgument("element does not lie in the ambient algebra");
  const std::size_t skip = ideal_[d].size();
  return RatVector(x->begin() + static_cast<std::ptrdiff_t>(skip), x->end());
}

Poly TruncatedQuotient::normal_form(const Poly& f, std::size_t d) const {
  const RatVector c = reduce(f, d);
  Poly out(nvars_);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out += reps_[d][i] * c[i];
  return out;
}

TruncatedQuotient truncated_quotient(const GradedAmbient& ambient,
                                     const std::vector<Poly>& generators, std::size_t max_degree,
                                     const std::vector<std::vector<Poly>>* representatives) {
  check_budget(max_degree, ambient.limits().degree_budget);
  const std::size_t n = ambient.nvars();
  for (const auto& g : generators) check_generator(g, n);

  TruncatedQuotient q;
  q.nvars_ = n;
  q.max_degree_ = max_degree;
  std::vector<std::vector<Poly>> slices;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    slices.push_back(ambient.slice(d));
    const DegreeCoordinates coords(n, d);
    const auto& slice = slices.back();

    IncrementalSpan ambient_span(coords.dimension());
    for (const auto& b : slice) ambient_span.add(coords.to_vector(b));
    for (const auto& g : generators)
      if (!g.is_zero() && static_cast<std::size_t>(g.degree()) == d &&
          !ambient_span.contains(coords.to_vector(g)))
        throw InvalidArgument("ideal generator " + g.to_string() + " is not in the ambient algebra");

    std::vector<Poly> ideal;
    if (ambient.is_full() && d >= 1) {
      // I_d = S_1 I_{d-1} + (generators of degree d)
      std::vector<RatVector> rows;
      for (const auto& m : slices[1])
        for (const auto& b : q.ideal_[d - 1]) rows.push_back(coords.to_vector(m * b));
      for (const auto& g : generators)
        if (!g.is_zero() && static_cast<std::size_t>(g.degree()) == d) rows.push_back(coords.to_vector(g));
      ideal = echelon_polys(coords, std::move(rows));
    } else {
      ideal = ideal_piece(slices, generators, n, d);
    }

    IncrementalSpan span(coords.dimension());
    std::vector<RatVector> solver_rows;
    for (const auto& b : ideal) {
      span.add(coords.to_vector(b));
      solver_rows.push_back(coords.to_vector(b));
    }
    std::vector<Poly> reps;
    if (representatives) {
      if (d < representatives->size())
        for (const auto& r : (*representatives)[d]) {
          const RatVector v = coords.to_vector(r);
          if (!ambient_span.contains(v))
            throw InvalidArgument("supplied representative " + r.to_string() + " is not in the ambient algebra");
          if (!span.add(v))
            throw InvalidArgument("supplied representatives in degree " + std::to_string(d) +
                                  " are dependent modulo the ideal");
          reps.push_back(r);
          solver_rows.push_back(v);
        }
      if (span.dimension() != slice.size())
        throw InvalidArgument("supplied representatives in degree " + std::to_string(d) +
                              " do not span the quotient");
    } else {
      for (const auto& b : slice) {
        const RatVector v = coords.to_vector(b);
        if (span.add(v)) {
          reps.push_back(b);
          solver_rows.push_back(v);
        }
      }
    }
    q.ambient_dims_.push_back(slice.size());
    q.solvers_.emplace_back(solver_rows, coords.dimension());
    q.coords_.push_back(coords);
    q.ideal_.push_back(std::move(ideal));
    q.reps_.push_back(std::move(reps));
  }
  return q;
}

std::vector<Poly> invariant_ideal_generators(const GradedAmbient& ambient,
                                             const std::vector<IntMatrix>& group,
                                             std::size_t max_degree) {
  const std::size_t n = ambient.nvars();
  const GradedAmbient invariants = GradedAmbient::invariants(group, n, ambient.limits());
  std::vector<Poly> gens;
  std::vector<std::vector<Poly>> slices{ambient.slice(0)};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    slices.push_back(ambient.slice(d));
    const DegreeCoordinates coords(n, d);
    IncrementalSpan span(coords.dimension());
    for (const auto& b : ideal_piece(slices, gens, n, d)) span.add(coords.to_vector(b));
    for (const auto& f : invariants.slice(d))
      if (span.add(coords.to_vector(f))) gens.push_back(f);
  }
  return gens;
}

std::size_t default_max_degree(const RootDatum& rd, std::size_t abelian_dim) {
  return validate_root_datum(rd).positive_root_count() + abelian_dim + 2;
}

std::vector<IntMatrix> weyl_generators(const RootDatum& rd) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) gens.push_back(simple_reflection(rd, i));
  return gens;
}

TruncatedQuotient coinvariant_quotient(const RootDatum& rd, std::optional<std::size_t> max_degree,
                                       const Limits& limits) {
  validate_root_datum(rd);
  const std::size_t top = max_degree.value_or(default_max_degree(rd));
  check_budget(top, limits.degree_budget);
  const GradedAmbient ambient = GradedAmbient::full(rd.rank, limits);
  const auto gens = invariant_ideal_generators(ambient, weyl_generators(rd), top);
  return truncated_quotient(ambient, gens, top);
}

}  // namespace chevchow
