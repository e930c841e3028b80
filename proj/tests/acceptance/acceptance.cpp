// Runs the ten acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chevchow/chow_picard.hpp"
#include "chevchow/flag_chow.hpp"
#include "chevchow/invariant_rings.hpp"
#include "chevchow/io.hpp"
#include "chevchow/structure_checks.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace chevchow;
using testing_support::all_fixtures;
using testing_support::fixture;
using testing_support::simply_connected;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: untimed
  std::function<Outcome()> run;
};

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j));
  return out;
}

bool same(const FGAbelianGroup& a, const oracle::AbelianGroup& b) {
  return a.free_rank() == b.free_rank && a.torsion() == b.torsion;
}

RootDatum pgl2() { return {1, {{1}}, {{2}}, 0}; }
RootDatum gl2() { return {2, {{1, -1}}, {{1, -1}}, 0}; }
RootDatum pgl3() { return {2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}, 0}; }

Outcome pic_table() {
  Outcome o;
  struct Row {
    const char* name;
    RootDatum rd;
    const char* expected;
  };
  const std::vector<Row> rows{{"SL2", simply_connected({{2}}), "0"},
                              {"GL2", gl2(), "0"},
                              {"Sp4", simply_connected({{2, -1}, {-2, 2}}), "0"},
                              {"PGL2", pgl2(), "Z/2"},
                              {"PGL3", pgl3(), "Z/3"}};
  for (const auto& r : rows) {
    FlagPicard fp = flag_pic_map(r.rd);
    o.check(fp.pic_gaff.to_string() == r.expected, std::string(r.name) + " gave " + fp.pic_gaff.to_string());
    IntMatrix coroots = IntMatrix::from_rows(r.rd.simple_coroots, r.rd.rank);
    o.check(same(fp.pic_gaff, oracle::cokernel_by_minors(to_mat(coroots))), std::string(r.name) + " disagrees with minors");
  }
  return o;
}

Outcome coinvariant_dims() {
  Outcome o;
  o.check(oracle::coinvariant_dims({{{-1}}}, 1, 2) == std::vector<std::size_t>{1, 1, 0}, "oracle fails on A1");
  const std::vector<std::pair<std::string, std::vector<std::vector<long long>>>> cases{
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"G2", {{2, -1}, {-3, 2}}}};
  for (const auto& [type, cartan] : cases) {
    RootDatum rd = simply_connected(cartan);
    TruncatedQuotient q = coinvariant_quotient(rd);
    std::vector<std::size_t> dims = q.dims();
    std::vector<std::size_t> poincare = oracle::poincare_product(oracle::weyl_degrees(type));
    poincare.resize(dims.size(), 0);
    std::vector<oracle::Mat> gens;
    for (const auto& g : weyl_generators(rd)) gens.push_back(to_mat(g));
    o.check(dims == poincare, type + ": Poincare polynomial mismatch");
    o.check(dims == oracle::coinvariant_dims(gens, rd.rank, dims.size() - 1), type + ": brute-force rank mismatch");
    o.check(q.total_dimension() == oracle::group_order(gens), type + ": total dimension differs from |W|");
  }
  return o;
}

Outcome chevalley_agreement() {
  Outcome o;
  const std::vector<RootDatum> data{simply_connected({{2}}), pgl2(), gl2(), simply_connected({{2, 0}, {0, 2}}),
                                    simply_connected({{2, -1}, {-1, 2}}), pgl3(),
                                    simply_connected({{2, -1}, {-2, 2}}), simply_connected({{2, -1}, {-3, 2}}),
                                    RootDatum{2, {{1, 0}, {0, 1}}, {{2, -1}, {-2, 2}}, 0}};
  for (const auto& rd : data) {
    FlagChow fc(rd);
    for (std::size_t k = 0; k < rd.rank; ++k) {
      IntVector lambda(rd.rank, 0);
      lambda[k] = 1;
      for (std::size_t w = 0; w < fc.weyl().size(); ++w) {
        const std::size_t d = fc.weyl().lengths[w] + 1;
        SchubertExpansion chev = fc.chevalley_multiply(lambda, w);
        SchubertExpansion direct;
        direct.codegree = d;
        if (d <= fc.dimension()) direct = fc.expand(Poly::linear(lambda) * fc.representative(w), d);
        o.check(chev.terms == direct.terms, validate_root_datum(rd).name() + ": Chevalley and coinvariant products differ");
      }
    }
  }
  FlagChow a2(simply_connected({{2, -1}, {-1, 2}}));
  const WeylGroup& w = a2.weyl();
  for (std::size_t u = 0; u < w.size(); ++u)
    for (std::size_t v = 0; v < w.size(); ++v) {
      SchubertExpansion p = a2.product(u, v);
      for (const auto& [x, c] : p.terms) o.check(c > 0, "A2: non-positive structure constant");
      o.check(p == a2.product_by_divided_differences(u, v), "A2: divided-difference product differs");
    }
  o.check(a2.product(w.generators[0], w.generators[1]).to_string(w) == "[s1 s2] + [s2 s1]",
          "A2: s1 * s2 is " + a2.product(w.generators[0], w.generators[1]).to_string(w));
  return o;
}

Outcome ex_nlt() {
  Outcome o;
  DescriptorDocument doc = fixture("ex_nlt");
  const SubgroupDescriptor& hd = *doc.find_subgroup("H");
  o.check(doc.group.av.g == 1 && doc.group.av.ns.to_string() == "Z", "fixture inputs are not g = 1, ns = Z");
  HomogeneousPicardReport pic = homogeneous_picard(doc.group, hd);
  o.check(pic.ns_rank == 1, "rational Pic rank " + std::to_string(pic.ns_rank));
  o.check(pic.x_part.is_trivial(), "X-part " + pic.x_part.to_string());
  GradedPresentation chow = homogeneous_rational_chow(doc.group, hd);
  std::ostringstream dims;
  for (auto d : chow.concrete_dims) dims << d << " ";
  o.check(chow.concrete_dims.size() >= 2 && chow.concrete_dims[0] == 1 && chow.concrete_dims[1] == 0,
          "concrete dims " + dims.str());
  for (std::size_t d = 2; d < chow.concrete_dims.size(); ++d) o.check(chow.concrete_dims[d] == 0, "concrete dims " + dims.str());
  return o;
}

Outcome ns_rank_law() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    GroupDescriptor gd = fixture(name).group;
    PicardReport r = picard_group(gd);
    GroupAttributes a = derived_attributes(gd);
    o.check(r.ns == gd.av.ns.direct_sum(r.pic_gaff), name + ": NS(G) is not NS(A) + Pic(G_aff)");
    o.check(r.pic_gaff == flag_pic_map(gd.rd).pic_gaff, name + ": Pic(G_aff) mismatch");
    o.check(r.x_g.rows() == r.x_gaff.rows() - a.rank_im_gamma, name + ": rank X(G) law fails");
  }
  return o;
}

Outcome degree_bound() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    GroupDescriptor gd = fixture(name).group;
    GradedPresentation p = rational_chow(gd);
    o.check(p.rational && p.degree_bound && *p.degree_bound == gd.av.g, name + ": degree bound is not g");
    o.check(!p.concrete_dims.empty() && p.concrete_dims[0] == 1, name + ": degree 0 is not Q");
    for (std::size_t d = 1; d < p.concrete_dims.size(); ++d)
      o.check(p.concrete_dims[d] == 0, name + ": concrete class in degree " + std::to_string(d));
  }
  return o;
}

Outcome cover_laws() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    GroupDescriptor gd = fixture(name).group;
    GroupDescriptor cover = construct_cover(gd);
    o.check(validate_group(cover).ok(), name + ": cover is invalid");
    o.check(construct_cover(cover) == cover, name + ": cover is not idempotent");
    o.check(affinization_test(cover).trivial.answer == Answer::yes, name + ": cover torsor not trivial");
    o.check(flag_pic_map(cover.rd).pic_gaff.is_trivial(), name + ": cover G_aff not factorial");
  }
  return o;
}

std::string witness(const Verdict& v, const std::string& key) {
  for (const auto& [k, val] : v.witness)
    if (k == key) return val;
  return {};
}

Outcome completeness() {
  Outcome o;
  DescriptorDocument doc = fixture("sl3_semiabelian");
  const GroupDescriptor& gd = doc.group;
  Verdict b = completeness_test(gd, *doc.find_subgroup("B"));
  o.check(b.answer == Answer::yes, "B with ant flag is not complete");
  o.check(witness(b, "abelian_factor") == "A_" + std::to_string(gd.av.g) + " (dim " + std::to_string(gd.av.g) + ")",
          "abelian factor " + witness(b, "abelian_factor"));
  o.check(witness(b, "flag_type") == validate_root_datum(gd.rd).name(), "flag type " + witness(b, "flag_type"));
  o.check(completeness_test(gd, *doc.find_subgroup("T")).answer == Answer::no, "T is complete");
  o.check(completeness_test(gd, *doc.find_subgroup("P1")).answer == Answer::no, "parabolic without ant flag is complete");
  o.check(completeness_test(gd, *doc.find_subgroup("P1_ant")).answer == Answer::yes, "parabolic with ant flag is not complete");
  return o;
}

Outcome borel_decomposition() {
  Outcome o;
  for (const auto& name : all_fixtures()) {
    GroupDescriptor gd = fixture(name).group;
    GradedPresentation p = homogeneous_rational_chow(gd, borel_subgroup(gd));
    std::vector<std::size_t> co = coinvariant_quotient(gd.rd, p.max_degree).dims();
    o.check(p.concrete_dims == co, name + ": concrete factor differs from coinvariants of the flag variety");
    o.check(p.j_rank == 0, name + ": J meets the concrete factor");
  }
  return o;
}

std::string mutate(const std::string& s, std::mt19937& rng) {
  static const std::string alphabet = "{}[]\",:0123456789-.eE \n\ttruefalsnl\\xyz";
  std::string t = s;
  const int ops = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < ops; ++k) {
    const std::size_t n = t.size();
    const std::size_t pos = n ? rng() % n : 0;
    switch (rng() % 7) {
      case 0:
        if (n) t[pos] = alphabet[rng() % alphabet.size()];
        break;
      case 1:
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), alphabet[rng() % alphabet.size()]);
        break;
      case 2:
        if (n) t.erase(pos, 1 + rng() % std::min<std::size_t>(n - pos, 16));
        break;
      case 3:
        if (n) t.insert(pos, t.substr(rng() % n, 1 + rng() % 24));
        break;
      case 4:
        if (n) t[pos] = static_cast<char>(rng() % 256);
        break;
      case 5: {
        auto digit = t.find_first_of("0123456789", pos);
        if (digit != std::string::npos) t.insert(digit, std::to_string(rng()));
        break;
      }
      default:
        t = t.substr(0, pos);
        break;
    }
  }
  return t;
}

Outcome infrastructure() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-12, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    o.check(s.U * m * s.V == s.S, "SNF round trip fails");
    o.check(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "SNF transforms not unimodular");
    std::vector<std::size_t> rows(r), cols(c);
    for (std::size_t i = 0; i < r; ++i) rows[i] = i;
    for (std::size_t j = 0; j < c; ++j) cols[j] = j;
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    IntMatrix p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p(i, j) = m(rows[i], cols[j]);
    o.check(cokernel_of_matrix(p) == cokernel_of_matrix(m), "cokernel depends on generator order");
  }

  std::vector<std::string> seeds;
  for (const auto& name : all_fixtures()) {
    std::ifstream in(testing_support::fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    seeds.push_back(ss.str());
  }
  std::size_t parsed = 0, syntax = 0, schema = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::string input = mutate(seeds[rng() % seeds.size()], rng);
    const auto t0 = std::chrono::steady_clock::now();
    struct Slow {
      const std::string& in;
      std::chrono::steady_clock::time_point t0;
      ~Slow() {
        if (std::getenv("FUZZ_TRACE") &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > 0.05)
          std::cerr << "slow input:\n" << in << "\n";
      }
    } slow{input, t0};
    try {
      DescriptorDocument doc = parse_descriptor(input);
      ++parsed;
      o.check(parse_descriptor(emit_descriptor(doc)) == doc, "accepted input does not round-trip");
      if (validate_group(doc.group).ok()) {
        try {
          picard_group(doc.group);
          for (const auto& [name, hd] : doc.subgroups) validate_subgroup(doc.group, hd);
        } catch (const Error&) {
        }
      }
    } catch (const SyntaxError& e) {
      ++syntax;
      o.check(e.line() >= 1 && e.column() >= 1, "syntax error without position");
    } catch (const SchemaError& e) {
      ++schema;
      o.check(!e.path().empty(), "schema error without path: " + std::string(e.what()));
    } catch (const std::exception& e) {
      o.check(false, std::string("unlocated error: ") + e.what());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(parsed) + " parsed, " + std::to_string(syntax) + " syntax, " + std::to_string(schema) +
               " schema";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Pic(G_aff) table (SL2, GL2, Sp4, PGL2, PGL3)", 1.0, pic_table},
      {2, "coinvariant dimensions (A1, A2, B2, A3, G2)", 10.0, coinvariant_dims},
      {3, "Chevalley formula agrees with coinvariant products", 10.0, chevalley_agreement},
      {4, "non-locally-trivial example: Pic and Chow of G/H", 0.0, ex_nlt},
      {5, "NS(G) = NS(A) + Pic(G_aff) and rank X(G) law", 0.0, ns_rank_law},
      {6, "rational Chow ring degree bound", 0.0, degree_bound},
      {7, "cover laws", 0.0, cover_laws},
      {8, "completeness criterion", 0.0, completeness},
      {9, "G/B decomposition", 0.0, borel_decomposition},
      {10, "SNF, cokernel canonicality, parser fuzz", 60.0, infrastructure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    if (!in_time && o.pass) o.detail = "too slow";
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  #" << c.id << "  " << c.title << "  [exact; " << timing << "]";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
  return failures ? 1 : 0;
}
