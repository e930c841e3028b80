#include "chevchow/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Quotient rounded to the nearest integer, so |a - q b| <= |b| / 2.
BigInt nearest_div(const BigInt& a, const BigInt& b) {
  BigInt q = floor_div(a, b);
  const BigInt r = a - q * b;
  if (2 * abs_value(r) > abs_value(b)) ++q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// FGAbelianGroup

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                                  const std::vector<BigInt>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  const SmithForm snf = smith_normal_form(diag);
  FGAbelianGroup g;
  g.free_rank_ = free_rank;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const BigInt& d = snf.S(i, i);
    if (d == 0)
      ++g.free_rank_;
    else if (d > 1)
      g.torsion_.push_back(d);
  }
  return g;
}

BigInt FGAbelianGroup::torsion_order() const {
  BigInt p = 1;
  for (const auto& d : torsion_) p *= d;
  return p;
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
  std::vector<BigInt> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, orders);
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1)
    out = "Z";
  else if (free_rank_ > 1)
    out = "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations and homomorphisms

FGAbelianGroup Presentation::group() const {
  if (relations.rows() == 0) return FGAbelianGroup::free(ambient_rank);
  return cokernel_of_matrix(relations.transpose());
}

void GroupHom::check_well_defined() const {
  if (matrix.rows() != codomain.ambient_rank || matrix.cols() != domain.ambient_rank)
    throw IllFormedHom("matrix shape " + std::to_string(matrix.rows()) + "x" +
                       std::to_string(matrix.cols()) + " does not match " +
                       std::to_string(codomain.ambient_rank) + "x" +
                       std::to_string(domain.ambient_rank));
  if (domain.relations.rows() > 0 && domain.relations.cols() != domain.ambient_rank)
    throw IllFormedHom("domain relation width mismatch");
  if (codomain.relations.rows() > 0 && codomain.relations.cols() != codomain.ambient_rank)
    throw IllFormedHom("codomain relation width mismatch");
  for (std::size_t r = 0; r < domain.relations.rows(); ++r) {
    const IntVector image = matrix * domain.relations.row(r);
    if (is_zero(image)) continue;
    if (codomain.relations.rows() == 0 || !in_row_lattice(codomain.relations, image))
      throw IllFormedHom("domain relation " + std::to_string(r) +
                         " does not map into the codomain relations");
  }
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (S(i, j) == 0) continue;
        BigInt a = abs_value(S(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    S.swap_rows(t, pi);
    U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    V.swap_cols(t, pj);

    for (;;) {
      // Re-pivot on the smallest entry of row t and column t.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (S(i, t) != 0 && abs_value(S(i, t)) < abs_value(S(bi, bj))) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (S(t, j) != 0 && abs_value(S(t, j)) < abs_value(S(bi, bj))) {
          bi = t;
          bj = j;
        }
      if (bi != t) {
        S.swap_rows(t, bi);
        U.swap_rows(t, bi);
      }
      if (bj != t) {
        S.swap_cols(t, bj);
        V.swap_cols(t, bj);
      }

      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        const BigInt q = nearest_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        const BigInt q = nearest_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Row and column t are clear; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    ++out.rank;
  }
  return out;
}

FGAbelianGroup cokernel_of_matrix(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<BigInt> orders;
  for (std::size_t i = 0; i < snf.rank; ++i) orders.push_back(snf.S(i, i));
  return FGAbelianGroup::from_cyclic_orders(m.rows() - snf.rank, orders);
}

FGAbelianGroup cokernel_presentation(const GroupHom& f) {
  f.check_well_defined();
  IntMatrix gens = f.matrix;
  if (f.codomain.relations.rows() > 0) gens = gens.augment(f.codomain.relations.transpose());
  if (gens.cols() == 0) return FGAbelianGroup::free(f.codomain.ambient_rank);
  return cokernel_of_matrix(gens);
}

// ---------------------------------------------------------------------------
// Kernels, Hermite form, solving

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t p = a.rows();
      BigInt best;
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        BigInt v = abs_value(a(i, c));
        if (p == a.rows() || v < best) {
          p = i;
          best = v;
        }
      }
      if (p == a.rows()) break;
      has_pivot = true;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (!has_pivot) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  const std::size_t n = m.cols();
  IntMatrix basis(n - snf.rank, n);
  for (std::size_t k = snf.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - snf.rank, i) = snf.V(i, k);
  return hermite_normal_form(basis);
}

IntMatrix kernel_lattice(const GroupHom& f) {
  f.check_well_defined();
  if (!f.domain.group().is_free())
    throw TorsionDomain("kernel_lattice requires a torsion-free domain");
  const std::size_t n = f.domain.ambient_rank;
  IntMatrix system = f.matrix;
  if (f.codomain.relations.rows() > 0)
    system = system.augment(f.codomain.relations.transpose());
  if (system.rows() == 0) return IntMatrix::identity(n);
  const IntMatrix joint = integer_kernel(system);
  IntMatrix projected(joint.rows(), n);
  for (std::size_t r = 0; r < joint.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) projected(r, c) = joint(r, c);
  return hermite_normal_form(projected);
}

IntMatrix saturate(const IntMatrix& basis) {
  const IntMatrix perp = integer_kernel(basis);
  if (perp.rows() == 0) return IntMatrix::identity(basis.cols());
  return integer_kernel(perp);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve_integer: shape mismatch");
  const SmithForm snf = smith_normal_form(a);
  const IntVector c = snf.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

bool in_row_lattice(const IntMatrix& basis, const IntVector& v) {
  if (is_zero(v)) return true;
  if (basis.rows() == 0) return false;
  return solve_integer(basis.transpose(), v).has_value();
}

IntMatrix intersect_lattices(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw InvalidArgument("intersect_lattices: width mismatch");
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return IntMatrix(0, n);
  IntMatrix neg_b = b;
  for (std::size_t r = 0; r < neg_b.rows(); ++r) neg_b.negate_row(r);
  const IntMatrix ker = integer_kernel(a.transpose().augment(neg_b.transpose()));
  IntMatrix coeffs(ker.rows(), a.rows());
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) coeffs(r, c) = ker(r, c);
  return hermite_normal_form(coeffs * a);
}

// ---------------------------------------------------------------------------
// Finite matrix groups

std::vector<IntMatrix> enumerate_group(const std::vector<IntMatrix>& generators,
                                       std::size_t dimension, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension)
      throw InvalidArgument("group generator is not " + std::to_string(dimension) + "x" +
                            std::to_string(dimension));
    const BigInt det = determinant(g);
    if (det != 1 && det != -1)
      throw InvalidArgument("group generator is not unimodular (det " + det.str() + ")");
  }
  std::vector<IntMatrix> elements{IntMatrix::identity(dimension)};
  std::map<IntMatrix, std::size_t> seen{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      IntMatrix h = elements[i] * g;
      if (seen.count(h)) continue;
      if (elements.size() >= cap) throw GroupTooLarge(cap);
      seen.emplace(h, elements.size());
      elements.push_back(std::move(h));
    }
  }
  return elements;
}

IntMatrix fixed_sublattice(const std::vector<IntMatrix>& generators, std::size_t lattice_rank,
                           std::size_t cap) {
  enumerate_group(generators, lattice_rank, cap);
  IntMatrix system(0, lattice_rank);
  const IntMatrix id = IntMatrix::identity(lattice_rank);
  for (const auto& g : generators) system = system.stack(g - id);
  return integer_kernel(system);
}

}  // namespace chevchow
