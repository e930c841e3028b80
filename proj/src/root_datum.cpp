#include "chevchow/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "chevchow/errors.hpp"

namespace chevchow {

namespace {

std::vector<int> range_degrees(int first, int last, int step) {
  std::vector<int> d;
  for (int x = first; x <= last; x += step) d.push_back(x);
  return d;
}

// Connected components of the Dynkin diagram, each sorted ascending.
std::vector<std::vector<std::size_t>> dynkin_components(const IntMatrix& cartan) {
  const std::size_t l = cartan.rows();
  std::vector<int> comp(l, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes;
    std::deque<std::size_t> queue{s};
    comp[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      nodes.push_back(v);
      for (std::size_t u = 0; u < l; ++u)
        if (u != v && cartan(v, u) != 0 && comp[u] < 0) {
          comp[u] = static_cast<int>(out.size());
          queue.push_back(u);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

CartanComponent classify_component(const IntMatrix& cartan, const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  CartanComponent comp;
  comp.nodes = nodes;
  comp.rank = k;
  if (k == 1) {
    comp.letter = 'A';
    return comp;
  }
  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0, doubles = 0, triples = 0;
  std::pair<std::size_t, std::size_t> double_edge{0, 0};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const BigInt m = cartan(nodes[a], nodes[b]) * cartan(nodes[b], nodes[a]);
      if (m == 0) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
      if (m == 2) {
        ++doubles;
        double_edge = {a, b};
      } else if (m == 3) {
        ++triples;
      }
    }
  if (edges != k - 1)
    throw InvalidCartan("Dynkin diagram component contains a cycle (not of finite type)");
  std::size_t max_degree = 0, branch = k;
  for (std::size_t a = 0; a < k; ++a) {
    max_degree = std::max(max_degree, adj[a].size());
    if (adj[a].size() == 3) branch = a;
  }
  if (max_degree > 3) throw InvalidCartan("Dynkin node of degree > 3 (not of finite type)");

  if (triples > 0) {
    if (k != 2) throw InvalidCartan("triple bond in a component of rank > 2 (not of finite type)");
    comp.letter = 'G';
    return comp;
  }
  if (doubles > 1) throw InvalidCartan("more than one double bond (not of finite type)");
  if (doubles == 1) {
    if (max_degree > 2) throw InvalidCartan("branched diagram with a double bond (not of finite type)");
    if (k == 2) {
      comp.letter = 'B';
      return comp;
    }
    auto [a, b] = double_edge;
    const bool a_end = adj[a].size() == 1;
    const bool b_end = adj[b].size() == 1;
    if (!a_end && !b_end) {
      if (k == 4) {
        comp.letter = 'F';
        return comp;
      }
      throw InvalidCartan("interior double bond in rank > 4 (not of finite type)");
    }
    const std::size_t end = a_end ? a : b;
    const std::size_t other = a_end ? b : a;
    // |alpha_end|^2 / |alpha_other|^2 = C(end, other) / C(other, end)
    const BigInt num = cartan(nodes[end], nodes[other]);
    const BigInt den = cartan(nodes[other], nodes[end]);
    comp.letter = (-num < -den) ? 'B' : 'C';
    return comp;
  }
  if (branch == k) {
    comp.letter = 'A';
    return comp;
  }
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (true) {
      if (adj[cur].size() > 2) throw InvalidCartan("two branch nodes (not of finite type)");
      std::size_t next = k;
      for (std::size_t x : adj[cur])
        if (x != prev) next = x;
      if (next == k) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    comp.letter = 'D';
    return comp;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    comp.letter = 'E';
    return comp;
  }
  throw InvalidCartan("simply laced branched diagram not of type D or E (not of finite type)");
}

}  // namespace

// ---------------------------------------------------------------------------
// Cartan types

std::vector<int> CartanComponent::degrees() const {
  const int n = static_cast<int>(rank);
  switch (letter) {
    case 'A':
      return range_degrees(2, n + 1, 1);
    case 'B':
    case 'C':
      return range_degrees(2, 2 * n, 2);
    case 'D': {
      auto d = range_degrees(2, 2 * n - 2, 2);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      return d;
    }
    case 'E':
      if (n == 6) return {2, 5, 6, 8, 9, 12};
      if (n == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    case 'F':
      return {2, 6, 8, 12};
    case 'G':
      return {2, 6};
    default:
      return {};
  }
}

BigInt CartanType::weyl_order() const {
  BigInt order = 1;
  for (int d : degrees()) order *= d;
  return order;
}

std::vector<int> CartanType::degrees() const {
  std::vector<int> all;
  for (const auto& c : components) {
    auto d = c.degrees();
    all.insert(all.end(), d.begin(), d.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t CartanType::positive_root_count() const {
  std::size_t n = 0;
  for (int d : degrees()) n += static_cast<std::size_t>(d - 1);
  return n;
}

std::string CartanType::name() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " + ";
    out += c.name();
  }
  if (central_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "T" + std::to_string(central_rank);
  }
  return out.empty() ? "trivial" : out;
}

CartanType validate_root_datum(const RootDatum& rd) {
  const std::size_t l = rd.simple_roots.size();
  if (rd.simple_coroots.size() != l)
    throw InvalidCartan("number of simple roots (" + std::to_string(l) +
                        ") differs from number of simple coroots (" +
                        std::to_string(rd.simple_coroots.size()) + ")");
  for (std::size_t i = 0; i < l; ++i) {
    if (rd.simple_roots[i].size() != rd.rank)
      throw InvalidCartan("simple root " + std::to_string(i) + " has length " +
                          std::to_string(rd.simple_roots[i].size()) + ", expected rank " +
                          std::to_string(rd.rank));
    if (rd.simple_coroots[i].size() != rd.rank)
      throw InvalidCartan("simple coroot " + std::to_string(i) + " has length " +
                          std::to_string(rd.simple_coroots[i].size()) + ", expected rank " +
                          std::to_string(rd.rank));
  }
  CartanType type;
  type.cartan_matrix = IntMatrix(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      type.cartan_matrix(i, j) = dot(rd.simple_roots[i], rd.simple_coroots[j]);
  const IntMatrix& C = type.cartan_matrix;
  for (std::size_t i = 0; i < l; ++i) {
    if (C(i, i) != 2)
      throw InvalidCartan("<alpha_" + std::to_string(i) + ", alpha_" + std::to_string(i) +
                          "^vee> = " + C(i, i).str() + " != 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (C(i, j) > 0)
        throw InvalidCartan("<alpha_" + std::to_string(i) + ", alpha_" + std::to_string(j) +
                            "^vee> = " + C(i, j).str() + " > 0");
      if ((C(i, j) == 0) != (C(j, i) == 0))
        throw InvalidCartan("<alpha_" + std::to_string(i) + ", alpha_" + std::to_string(j) +
                            "^vee> and its transpose entry are not both zero");
      const BigInt prod = C(i, j) * C(j, i);
      if (prod > 3)
        throw InvalidCartan("off-diagonal product for (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") is " + prod.str() + " > 3");
    }
  }
  if (l > 0) {
    const IntMatrix roots = IntMatrix::from_rows(rd.simple_roots, rd.rank);
    const IntMatrix coroots = IntMatrix::from_rows(rd.simple_coroots, rd.rank);
    if (rank(roots) != l) throw InvalidCartan("simple roots are linearly dependent");
    if (rank(coroots) != l) throw InvalidCartan("simple coroots are linearly dependent");
  }
  for (const auto& nodes : dynkin_components(C)) type.components.push_back(classify_component(C, nodes));
  type.central_rank = rd.rank - l;
  return type;
}

// ---------------------------------------------------------------------------
// Roots

std::optional<std::size_t> RootSystem::find_positive(const IntVector& vec) const {
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (positive[i].vector == vec) return i;
  return std::nullopt;
}

IntVector RootSystem::signed_root(std::size_t index, int sign) const {
  IntVector v = positive.at(index).vector;
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::vector<IntVector> RootSystem::all_roots() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < positive.size(); ++i) out.push_back(signed_root(i, +1));
  for (std::size_t i = 0; i < positive.size(); ++i) out.push_back(signed_root(i, -1));
  return out;
}

RootSystem root_system(const RootDatum& rd) {
  const CartanType type = validate_root_datum(rd);
  const IntMatrix& C = type.cartan_matrix;
  const std::size_t l = rd.semisimple_rank();

  // Closure of (root, coroot) pairs in simple coordinates under simple reflections.
  std::map<IntVector, IntVector> found;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector root = queue.front();
    queue.pop_front();
    const IntVector coroot = found.at(root);
    for (std::size_t i = 0; i < l; ++i) {
      BigInt pair_root = 0, pair_coroot = 0;
      for (std::size_t j = 0; j < l; ++j) {
        pair_root += root[j] * C(j, i);      // <root, alpha_i^vee>
        pair_coroot += coroot[j] * C(i, j);  // <alpha_i, coroot>
      }
      IntVector r2 = root, c2 = coroot;
      r2[i] -= pair_root;
      c2[i] -= pair_coroot;
      if (!found.count(r2)) {
        found.emplace(r2, c2);
        queue.push_back(r2);
      }
    }
  }

  RootSystem rs;
  for (const auto& [coords, co] : found) {
    bool positive = std::all_of(coords.begin(), coords.end(), [](const BigInt& x) { return x >= 0; });
    if (!positive) continue;
    Root r;
    r.simple_coords = coords;
    r.vector.assign(rd.rank, 0);
    r.coroot.assign(rd.rank, 0);
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t k = 0; k < rd.rank; ++k) {
        r.vector[k] += coords[j] * rd.simple_roots[j][k];
        r.coroot[k] += co[j] * rd.simple_coroots[j][k];
      }
      r.height += static_cast<int>(coords[j]);
    }
    rs.positive.push_back(std::move(r));
  }
  std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coords > b.simple_coords;
  });
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group

IntMatrix reflection_matrix(const IntVector& root, const IntVector& coroot) {
  const std::size_t n = root.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root[i] * coroot[j];
  return m;
}

IntMatrix simple_reflection(const RootDatum& rd, std::size_t i) {
  return reflection_matrix(rd.simple_roots.at(i), rd.simple_coroots.at(i));
}

std::size_t WeylGroup::longest() const {
  return static_cast<std::size_t>(
      std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
}

std::optional<std::size_t> WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  std::size_t cur = a;
  for (std::size_t i : words[b]) cur = right_mult[cur][i];
  return cur;
}

std::string WeylGroup::word_string(std::size_t w) const {
  if (words[w].empty()) return "e";
  std::string out;
  for (std::size_t i : words[w]) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(i + 1);
  }
  return out;
}

WeylGroup weyl_group(const RootDatum& rd, std::size_t cap) {
  validate_root_datum(rd);
  const std::size_t l = rd.semisimple_rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < l; ++i) gens.push_back(simple_reflection(rd, i));

  WeylGroup w;
  w.elements.push_back(IntMatrix::identity(rd.rank));
  w.lengths.push_back(0);
  w.words.emplace_back();
  w.index_.emplace(w.elements.front(), 0);
  // Breadth-first in order of lexicographically least reduced words.
  for (std::size_t idx = 0; idx < w.elements.size(); ++idx) {
    for (std::size_t i = 0; i < l; ++i) {
      IntMatrix next = w.elements[idx] * gens[i];
      if (w.index_.count(next)) continue;
      if (w.elements.size() >= cap) throw GroupTooLarge(cap);
      w.index_.emplace(next, w.elements.size());
      w.elements.push_back(std::move(next));
      w.lengths.push_back(w.lengths[idx] + 1);
      auto word = w.words[idx];
      word.push_back(i);
      w.words.push_back(std::move(word));
    }
  }
  w.right_mult.assign(w.elements.size(), std::vector<std::size_t>(l));
  for (std::size_t idx = 0; idx < w.elements.size(); ++idx)
    for (std::size_t i = 0; i < l; ++i) w.right_mult[idx][i] = w.index_.at(w.elements[idx] * gens[i]);
  for (std::size_t i = 0; i < l; ++i) w.generators.push_back(w.index_.at(gens[i]));
  return w;
}

// ---------------------------------------------------------------------------
// Characters and the flag Picard map

IntMatrix pairing_matrix(const RootDatum& rd) {
  return IntMatrix::from_rows(rd.simple_coroots, rd.rank);
}

IntMatrix characters_of_group(const RootDatum& rd) {
  validate_root_datum(rd);
  if (rd.semisimple_rank() == 0) return IntMatrix::identity(rd.rank);
  return integer_kernel(pairing_matrix(rd));
}

FlagPicard flag_pic_map(const RootDatum& rd) {
  validate_root_datum(rd);
  FlagPicard out;
  out.map.matrix = pairing_matrix(rd);
  out.pic_gaff = rd.semisimple_rank() == 0 ? FGAbelianGroup::trivial()
                                           : cokernel_of_matrix(out.map.matrix);
  return out;
}

// ---------------------------------------------------------------------------
// Factorial cover

namespace {

// Inverse of a non-singular integer matrix over Q.
std::vector<RatVector> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidArgument("singular Cartan matrix");
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

FactorialCover factorial_cover(const RootDatum& rd) {
  const CartanType type = validate_root_datum(rd);
  FactorialCover out;
  out.datum = rd;
  out.basis = IntMatrix::identity(rd.rank);
  const std::size_t l = rd.semisimple_rank();
  if (l == 0) return out;

  // Fundamental weights of the root lattice span: varpi_i = sum_j inv(i, j) alpha_j.
  const auto inv = rational_inverse(type.cartan_matrix);
  std::vector<RatVector> weights(l, RatVector(rd.rank));
  BigInt denom = 1;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < rd.rank; ++k) {
      for (std::size_t j = 0; j < l; ++j) weights[i][k] += inv[i][j] * Rational(rd.simple_roots[j][k]);
      denom = lcm(denom, boost::multiprecision::denominator(weights[i][k]));
    }
  if (denom == 1) return out;

  IntMatrix gens(rd.rank + l, rd.rank);
  for (std::size_t k = 0; k < rd.rank; ++k) gens(k, k) = denom;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < rd.rank; ++k) {
      const Rational scaled = weights[i][k] * Rational(denom);
      gens(rd.rank + i, k) = boost::multiprecision::numerator(scaled);
    }
  const IntMatrix hnf = hermite_normal_form(gens);
  const IntMatrix hnf_t = hnf.transpose();

  RootDatum cover;
  cover.rank = rd.rank;
  cover.u_rad = rd.u_rad;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector scaled_root = rd.simple_roots[i];
    for (auto& x : scaled_root) x *= denom;
    auto coords = solve_integer(hnf_t, scaled_root);
    if (!coords) throw Error("factorial cover: root not integral in enlarged lattice");
    cover.simple_roots.push_back(*coords);
    IntVector coroot(rd.rank);
    for (std::size_t k = 0; k < rd.rank; ++k) {
      const BigInt p = dot(hnf.row(k), rd.simple_coroots[i]);
      if (p % denom != 0) throw Error("factorial cover: coroot pairing not integral");
      coroot[k] = p / denom;
    }
    cover.simple_coroots.push_back(std::move(coroot));
  }
  BigInt full = 1;
  for (std::size_t k = 0; k < rd.rank; ++k) full *= denom;
  BigInt det = determinant(hnf);
  if (det < 0) det = -det;
  out.datum = std::move(cover);
  out.basis = hnf;
  out.denominator = denom;
  out.index = full / det;
  out.unchanged = false;
  return out;
}

// ---------------------------------------------------------------------------
// Borel containment

std::optional<std::size_t> borel_witness(const RootDatum& rd, const WeylGroup& weyl,
                                         const std::vector<IntVector>& root_subset,
                                         bool q_is_identity) {
  if (!q_is_identity) return std::nullopt;
  const RootSystem rs = root_system(rd);
  const std::set<IntVector> subset(root_subset.begin(), root_subset.end());
  for (std::size_t w = 0; w < weyl.size(); ++w) {
    bool ok = true;
    for (const auto& beta : rs.positive)
      if (!subset.count(weyl.elements[w] * beta.vector)) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  return std::nullopt;
}

bool contains_borel(const RootDatum& rd, const std::vector<IntVector>& root_subset,
                    bool q_is_identity, std::size_t cap) {
  const WeylGroup weyl = weyl_group(rd, cap);
  return borel_witness(rd, weyl, root_subset, q_is_identity).has_value();
}

}  // namespace chevchow
