// Acceptance harness: one pass/fail line per shipped guarantee, each with a
// wall-clock budget.  Run as
//
//   acceptance <path-to-cli-binary> <path-to-data-dir>
//
// The command-line binary is only used by the cache-transparency block; all
// other checks run in-process against the core library.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gpcalc/bbw.hpp"
#include "gpcalc/charring.hpp"
#include "gpcalc/clifford.hpp"
#include "gpcalc/collection_io.hpp"
#include "gpcalc/engine.hpp"
#include "gpcalc/k0.hpp"
#include "gpcalc/rootdata.hpp"

using namespace gpc;

namespace {

std::string g_cli;   // command-line binary under test
std::string g_data;  // directory with the shipped collection files

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
};

void note(Outcome& o, std::string s) { o.notes.push_back(std::move(s)); }

void check(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.notes.push_back("failed: " + what);
  }
}

// One engine per space, shared across criteria so later checks reuse the
// warmed-up memo tables.  The on-disk cache stays out of the picture here;
// it is exercised separately through the command-line binary.
Engine& engine(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Engine>> pool;
  auto it = pool.find(name);
  if (it == pool.end())
    it = pool.emplace(name, std::make_unique<Engine>(MarkedSpace::parse(name))).first;
  return *it->second;
}

Collection block_of(Engine& eng, const std::vector<std::string>& names) {
  Collection c;
  for (const auto& n : names) c.push_back(NamedObject{n, 0, named_class(eng, n)});
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// 1. Sheaf cohomology goldens: line bundles, anchor groups, vanishing windows.
// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto& d6 = MarkedSpace::parse("D6/P6");
  long checked = 0;

  auto expect_h = [&](const MarkedSpace& sp, const Weight& lam, int degree,
                      const Weight& rep, const mpz_class& dim) {
    Cohomology c = bbw_cohomology_raw(sp, lam);
    check(o, !c.vanishes && c.degree == degree && c.rep == rep && c.dim == dim,
          "cohomology of " + weight_str(lam) + " on " + sp.name());
    ++checked;
  };
  auto expect_zero = [&](const MarkedSpace& sp, const Weight& lam) {
    check(o, bbw_cohomology_raw(sp, lam).vanishes,
          "expected no cohomology for " + weight_str(lam) + " on " + sp.name());
    ++checked;
  };

  const Weight z6(6, 0);
  // line bundles: sections, the dead window, and the canonical twist
  expect_h(d6, z6, 0, z6, 1);
  expect_h(d6, {0, 0, 0, 0, 0, 1}, 0, {0, 0, 0, 0, 0, 1}, 32);
  for (int t = 1; t <= 9; ++t) expect_zero(d6, {0, 0, 0, 0, 0, -t});
  expect_h(d6, {0, 0, 0, 0, 0, -10}, 15, z6, 1);

  // anchor groups in positive degree
  expect_h(d6, {0, 0, 0, 1, 0, -2}, 1, z6, 1);
  expect_h(d6, {0, 0, 1, 0, 1, -3}, 2, z6, 1);
  expect_h(d6, {0, 1, 0, 0, 0, 0}, 0, {0, 1, 0, 0, 0, 0}, 66);
  expect_h(d6, {2, 0, 0, 0, 0, 0}, 0, {2, 0, 0, 0, 0, 0}, 77);
  expect_h(d6, {0, 1, 0, 1, 0, -2}, 1, {0, 1, 0, 0, 0, 0}, 66);
  expect_h(d6, {2, 0, 0, 1, 0, -2}, 1, {2, 0, 0, 0, 0, 0}, 77);
  expect_h(d6, {1, 0, 0, 0, 0, 0}, 0, {1, 0, 0, 0, 0, 0}, 12);
  expect_h(d6, {0, 1, 0, 0, 0, -10}, 14, z6, 1);

  // vanishing windows used by the orthogonality arguments
  for (int t = 1; t <= 11; ++t) expect_zero(d6, {1, 0, 0, 0, 1, -t});
  for (int t = 1; t <= 10; ++t) expect_zero(d6, {1, 0, 0, 0, 0, -t});
  for (int t = 1; t <= 10; ++t) expect_zero(d6, {1, 1, 0, 0, 0, -t});
  for (int t = 1; t <= 9; ++t) {
    expect_zero(d6, {0, 0, 0, 0, 1, -1 - t});
    expect_zero(d6, {0, 1, 0, 0, 1, -1 - t});
    expect_zero(d6, {0, 1, 0, 0, 0, -t});
    expect_zero(d6, {0, 0, 0, 1, 0, -2 - t});
    if (t != 2) expect_zero(d6, {0, 1, 0, 1, 0, -t});  // t = 2 carries the 66
  }
  expect_zero(d6, {0, 0, 0, 0, 2, -2});
  expect_zero(d6, {1, 0, 0, 1, 1, -3});
  expect_zero(d6, {0, 1, 0, 0, 2, -2});
  expect_zero(d6, {1, 1, 0, 1, 1, -3});
  expect_zero(d6, {2, 0, 0, 0, 2, -2});
  expect_zero(d6, {1, 1, 0, 0, 1, -1});

  // companion spaces: line bundle windows and spinor / minuscule sections
  const auto& d5 = MarkedSpace::parse("D5/P5");
  const Weight z5(5, 0);
  expect_h(d5, z5, 0, z5, 1);
  expect_h(d5, {0, 0, 0, 0, 1}, 0, {0, 0, 0, 0, 1}, 16);
  for (int t = 1; t <= 7; ++t) expect_zero(d5, {0, 0, 0, 0, -t});
  expect_h(d5, {0, 0, 0, 0, -8}, 10, z5, 1);

  const auto& e7 = MarkedSpace::parse("E7/P7");
  const Weight z7(7, 0);
  expect_h(e7, z7, 0, z7, 1);
  expect_h(e7, {0, 0, 0, 0, 0, 0, 1}, 0, {0, 0, 0, 0, 0, 0, 1}, 56);
  expect_h(e7, {1, 0, 0, 0, 0, 0, 0}, 0, {1, 0, 0, 0, 0, 0, 0}, 133);
  for (int t = 1; t <= 17; ++t) expect_zero(e7, {0, 0, 0, 0, 0, 0, -t});
  expect_h(e7, {0, 0, 0, 0, 0, 0, -18}, 27, z7, 1);

  note(o, std::to_string(checked) + " cohomology goldens checked");
  return o;
}

// ---------------------------------------------------------------------------
// 2. Tensor product displays on the 15-fold, as exact decompositions.
// ---------------------------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  Engine& eng = engine("D6/P6");
  auto w = [](std::initializer_list<int> l) { return Weight(l); };
  using S = IrrepSum;
  long checked = 0;

  auto expect = [&](const Weight& a, const Weight& b, const S& want) {
    check(o, eng.tensor(a, b) == want,
          "product " + weight_str(a) + " (x) " + weight_str(b));
    ++checked;
  };

  expect(w({0, 0, 0, 0, 1, 0}), w({1, 0, 0, 0, 0, 0}),
         S{{w({0, 0, 0, 0, 0, 1}), 1}, {w({1, 0, 0, 0, 1, 0}), 1}});

  expect(w({0, 0, 0, 0, 1, 0}), w({0, 1, 0, 0, 0, 0}),
         S{{w({1, 0, 0, 0, 0, 1}), 1}, {w({0, 1, 0, 0, 1, 0}), 1}});

  expect(w({0, 1, 0, 0, 0, 0}), w({0, 0, 0, 1, 0, 0}),
         S{{w({0, 0, 0, 0, 0, 2}), 1},
           {w({1, 0, 0, 0, 1, 1}), 1},
           {w({0, 1, 0, 1, 0, 0}), 1}});

  expect(w({0, 0, 0, 1, 0, 0}), w({1, 0, 0, 0, 0, 0}),
         S{{w({0, 0, 0, 0, 1, 1}), 1}, {w({1, 0, 0, 1, 0, 0}), 1}});

  expect(w({0, 0, 0, 1, 0, 0}), w({1, 1, 0, 0, 0, 0}),
         S{{w({1, 0, 0, 0, 0, 2}), 1},
           {w({0, 1, 0, 0, 1, 1}), 1},
           {w({1, 1, 0, 1, 0, 0}), 1},
           {w({2, 0, 0, 0, 1, 1}), 1}});

  expect(w({0, 0, 0, 1, 1, 0}), w({1, 0, 0, 0, 0, 0}),
         S{{w({0, 0, 0, 0, 2, 1}), 1},
           {w({0, 0, 0, 1, 0, 1}), 1},
           {w({1, 0, 0, 1, 1, 0}), 1}});

  expect(w({1, 1, 0, 0, 0, 0}), w({0, 0, 0, 0, 1, 0}),
         S{{w({0, 1, 0, 0, 0, 1}), 1},
           {w({2, 0, 0, 0, 0, 1}), 1},
           {w({1, 1, 0, 0, 1, 0}), 1}});

  // seven-summand display; the multiplicity-two term is the whole point
  const S seven = eng.tensor(w({1, 1, 0, 0, 0, 0}), w({0, 0, 0, 1, 1, 0}));
  check(o, seven == S{{w({0, 0, 0, 0, 0, 3}), 1},
                      {w({0, 1, 0, 0, 2, 1}), 1},
                      {w({0, 1, 0, 1, 0, 1}), 1},
                      {w({1, 0, 0, 0, 1, 2}), 2},
                      {w({1, 1, 0, 1, 1, 0}), 1},
                      {w({2, 0, 0, 0, 2, 1}), 1},
                      {w({2, 0, 0, 1, 0, 1}), 1}},
        "seven-summand product with a doubled summand");
  ++checked;
  auto doubled = seven.find(w({1, 0, 0, 0, 1, 2}));
  check(o, doubled != seven.end() && doubled->second == 2,
        "doubled summand appears with multiplicity exactly 2");

  note(o, std::to_string(checked) + " product displays matched exactly");
  return o;
}

// ---------------------------------------------------------------------------
// 3. The 32-object staircase on the 15-fold.
// ---------------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  CollectionFile cf = load_collection(g_data + "/og6_12.json");
  Engine& eng = engine(cf.space->name());
  const MarkedSpace& sp = *cf.space;

  GramReport rep = verify_numerical_exceptional(eng, cf.objects);
  check(o, rep.pass, "Gram matrix is unit upper triangular");
  check(o, rep.length == 32, "collection has 32 objects");
  check(o, rep.expected_rank == 32, "lattice rank is 32");
  check(o, rep.violations.empty(), "no triangularity violations");

  K0Class P = named_class(eng, "P");
  K0Class Q = named_class(eng, "Q");
  K0Class Qp = named_class(eng, "Qprime");
  check(o, chi_classes(eng, P, Q) == 12, "chi(P, Q) == 12");
  check(o, completely_orthogonal(eng, Q, k0_twist(sp, Qp, 1)),
        "Q and Q'(1) are completely orthogonal");

  note(o, "32 objects, unit upper triangular Gram, length == lattice rank");
  return o;
}

// ---------------------------------------------------------------------------
// 4. The 56-object first family on the 27-fold, with the residual projection
//    ledger compared term by term against the reference display.  Divergences
//    are reported, never silently repaired.
// ---------------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  CollectionFile cf = load_collection(g_data + "/e7_first.json");
  Engine& eng = engine(cf.space->name());
  const MarkedSpace& sp = *cf.space;

  GramReport rep = verify_numerical_exceptional(eng, cf.objects);
  check(o, rep.pass && rep.length == 56 && rep.expected_rank == 56,
        "56-object collection passes with length == lattice rank");

  K0Class Qp = named_class(eng, "Qprime");
  check(o, chi_classes(eng, Qp, Qp) == 1, "chi(Q', Q') == 1");
  check(o, chi_classes(eng, k0_twist(sp, Qp, 1), Qp) == 0, "chi(Q'(1), Q') == 0");
  check(o, chi_classes(eng, k0_twist(sp, Qp, 2), Qp) == -1, "chi(Q'(2), Q') == -1");

  // Recompute the defining projection and line its correction ledger up
  // against the reference display (seed coefficient plus 16 corrections).
  Collection ladder = block_range(sp, block_of(eng, {"O_X", "O", "Pprime"}), 0, 17);
  Projection pr = project_orthogonal(eng, irreducible_class({1, 0, 1, 0, 0, 0, -5}),
                                     ladder, sp.iota());
  check(o, k0_equal_against_basis(eng, pr.result, Qp, cf.objects),
        "projection result equals the residual class of the shipped collection");

  struct Row {
    const char* label;
    int twist;
    long displayed;
  };
  const std::vector<Row> display = {
      {"Pprime", -7, -1},     {"O", -6, 1},         {"Pprime", -6, 56},
      {"O_X", -5, -1673},     {"O", -5, -3137},     {"Pprime", -5, 1},
      {"O_X", -4, -94656},    {"Pprime", -4, -56},  {"O_X", -3, -54342},
      {"O", -3, 3271},        {"Pprime", -3, -1},   {"O_X", -2, -58576},
      {"O", -2, -968},        {"Pprime", -2, 56},   {"O_X", -1, 54342},
      {"O", -1, -3137},
  };

  check(o, pr.steps.size() == display.size(),
        "ledger has the displayed number of correction terms");
  std::vector<std::string> divergences;
  long agreeing = 0;
  if (pr.steps.size() == display.size()) {
    for (size_t i = 0; i < display.size(); ++i) {
      const ProjStep& s = pr.steps[i];
      const Row& d = display[i];
      check(o, s.label == d.label && s.twist == d.twist,
            "ledger row " + std::to_string(i) + " targets " + std::string(d.label) +
                "(" + std::to_string(d.twist) + ")");
      if (s.coeff == d.displayed) {
        ++agreeing;
      } else {
        divergences.push_back(std::string(d.label) + "(" + std::to_string(d.twist) +
                              "): display reads " + std::to_string(d.displayed) +
                              ", exact recomputation gives " + s.coeff.get_str());
      }
    }
  }

  note(o, "correction ledger: " + std::to_string(agreeing) + "/" +
              std::to_string(display.size()) +
              " coefficients agree with the reference display");
  for (const auto& d : divergences)
    note(o, "reported divergence: " + d +
                " (left-orthogonality postcondition holds for the recomputed value)");

  // Exactly these two divergences are expected; anything else is a failure.
  check(o, divergences.size() == 2, "exactly two coefficients diverge");
  bool known =
      divergences.size() == 2 &&
      divergences[0].rfind("O(-6): display reads 1, exact recomputation gives 56", 0) == 0 &&
      divergences[1].rfind("O_X(-4): display reads -94656, exact recomputation gives 94656",
                           0) == 0;
  check(o, known, "divergences are the two known display issues");

  return o;
}

// ---------------------------------------------------------------------------
// 5. The second 56-object family on the 27-fold and its mutated residual pair.
// ---------------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  Engine& eng = engine("E7/P7");
  const MarkedSpace& sp = eng.space();

  K0Class P = named_class(eng, "P");
  K0Class Q = named_class(eng, "Q");
  check(o, chi_classes(eng, P, P) == 1, "chi(P, P) == 1");
  check(o, chi_classes(eng, Q, Q) == 1, "chi(Q, Q) == 1");
  check(o, chi_classes(eng, k0_twist(sp, Q, 1), Q) == 0, "chi(Q(1), Q) == 0");

  Collection B = block_of(eng, {"O_X", "O", "P"});
  Collection A = B;
  A.push_back(NamedObject{"Q", 0, Q});
  GramReport rep = verify_numerical_exceptional(eng, staircase_layout(sp, A, B, 17));
  check(o, rep.pass && rep.length == 56 && rep.expected_rank == 56,
        "56-object staircase passes with length == lattice rank");

  K0Class LQ1 = named_class(eng, "LQ1");
  check(o, completely_orthogonal(eng, Q, LQ1),
        "Q and the mutated twisted residual are completely orthogonal");
  check(o, chi_classes(eng, Q, LQ1) == 0 && chi_classes(eng, LQ1, Q) == 0,
        "both pairings of the residual pair vanish");

  note(o, "residual pair is numerically completely orthogonal");
  return o;
}

// ---------------------------------------------------------------------------
// 6. The 16-object two-block ladder on the 10-fold.
// ---------------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  CollectionFile cf = load_collection(g_data + "/og5_10.json");
  Engine& eng = engine(cf.space->name());
  GramReport rep = verify_numerical_exceptional(eng, cf.objects);
  check(o, rep.pass, "Gram matrix is unit upper triangular");
  check(o, rep.length == 16 && rep.expected_rank == 16,
        "16 objects, lattice rank 16");
  note(o, "16 objects, unit upper triangular Gram");
  return o;
}

// ---------------------------------------------------------------------------
// 7. Fiber-complex certificates for the quadratic spinor relations.
// ---------------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;

  cliff::Ledger five = cliff::verify(5);
  check(o, five.pass, "n = 5 certificate chain passes");
  check(o, five.term_dims == std::vector<long>{45, 80, 45, 10}, "n = 5 term dims");
  check(o, five.alternating_sum == 0, "n = 5 alternating sum vanishes");
  check(o, five.rank_action == 35, "n = 5 action rank 35");
  check(o, five.kernel_cols == 10, "n = 5 kernel dimension 10");
  check(o, five.zero_columns == 10,
        "n = 5 kernel is spanned by the annihilated decomposable columns");
  check(o, five.rank_collapse == 10, "n = 5 collapse rank 10");
  auto kw5 = cliff::kernel_weight_multiset(5);
  mpz_class tot5 = 0;
  for (const auto& [w, m] : kw5) tot5 += m;
  check(o, kw5.size() == 35 && tot5 == 45, "n = 5 kernel weights: 35 distinct, total 45");

  cliff::Ledger six = cliff::verify(6);
  check(o, six.pass, "n = 6 certificate chain passes");
  check(o, six.term_dims == std::vector<long>{76, 192, 220, 174, 70}, "n = 6 term dims");
  check(o, six.alternating_sum == 0, "n = 6 alternating sum vanishes");
  check(o, six.rank_action == 116, "n = 6 action rank 116");
  check(o, six.kernel_cols == 104, "n = 6 kernel dimension 104");
  check(o, six.zero_columns == 80, "n = 6 annihilated decomposable columns 80");
  check(o, six.rank_collapse == 104, "n = 6 collapse rank 104");
  auto kw6 = cliff::kernel_weight_multiset(6);
  mpz_class tot6 = 0;
  for (const auto& [w, m] : kw6) tot6 += m;
  check(o, kw6.size() == 56 && tot6 == 76, "n = 6 kernel weights: 56 distinct, total 76");

  check(o, five.compose_zero && five.middle_exact && five.graded,
        "n = 5 composition, exactness, and grading certificates");
  check(o, six.compose_zero && six.middle_exact && six.graded,
        "n = 6 composition, exactness, and grading certificates");

  note(o, "kernel dimensions 10 and 104 certified with graded exactness");
  return o;
}

// ---------------------------------------------------------------------------
// 8. Property suites: duality symmetry, rank conservation, dominantization
//    path independence, and byte-identical output with and without the cache.
// ---------------------------------------------------------------------------

Weight random_L_dominant(const MarkedSpace& sp, std::mt19937& rng, int max_units,
                         int twist_span) {
  const int n = sp.group().rank();
  Weight w(n, 0);
  std::vector<int> levi;
  for (int i = 0; i < n; ++i)
    if (i != sp.crossed0()) levi.push_back(i);
  const int units = static_cast<int>(rng() % (max_units + 1));
  for (int u = 0; u < units; ++u) w[levi[rng() % levi.size()]] += 1;
  w[sp.crossed0()] = static_cast<int>(rng() % (2 * twist_span + 1)) - twist_span;
  return w;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(20260822u);

  // (a) duality symmetry chi(a, b) == (-1)^dim chi(b, a(-iota)) on random pairs,
  //     after pinning each space's (iota, dim).
  struct SpacePin {
    const char* name;
    int iota, dim, max_units, twist_span;
  };
  const std::vector<SpacePin> pins = {{"D6/P6", 10, 15, 3, 3},
                                      {"D5/P5", 8, 10, 3, 3},
                                      {"E7/P7", 18, 27, 2, 2}};
  long serre_pairs = 0;
  for (const auto& p : pins) {
    Engine& eng = engine(p.name);
    const MarkedSpace& sp = eng.space();
    check(o, sp.iota() == p.iota && sp.dim() == p.dim,
          std::string(p.name) + " has index " + std::to_string(p.iota) +
              " and dimension " + std::to_string(p.dim));
    const long sign = sp.dim() % 2 ? -1 : 1;
    for (int i = 0; i < 25; ++i) {
      Weight a = random_L_dominant(sp, rng, p.max_units, p.twist_span);
      Weight b = random_L_dominant(sp, rng, p.max_units, p.twist_span);
      if (eng.chi_irr(a, b) != sign * eng.chi_irr(b, sp.twist(a, -sp.iota()))) {
        check(o, false,
              "duality symmetry for " + weight_str(a) + ", " + weight_str(b) +
                  " on " + p.name);
        break;
      }
      ++serre_pairs;
    }
  }
  note(o, std::to_string(serre_pairs) + " duality-symmetry pairs verified");

  // (b) tensor rank conservation on at least 50 random pairs per space.
  long conserved = 0;
  for (const auto& p : pins) {
    Engine& eng = engine(p.name);
    const MarkedSpace& sp = eng.space();
    for (int i = 0; i < 50; ++i) {
      Weight a, b;
      mpz_class ra, rb;
      for (int tries = 0;; ++tries) {
        a = random_L_dominant(sp, rng, p.max_units, p.twist_span);
        b = random_L_dominant(sp, rng, p.max_units, p.twist_span);
        ra = sp.levi_rank(a);
        rb = sp.levi_rank(b);
        if (ra * rb <= 5000000 || tries > 32) break;
      }
      mpz_class total = 0;
      for (const auto& [w, c] : eng.tensor(a, b)) total += c * sp.levi_rank(w);
      if (total != ra * rb) {
        check(o, false,
              "rank conservation for " + weight_str(a) + " (x) " + weight_str(b) +
                  " on " + p.name);
        break;
      }
      ++conserved;
    }
  }
  note(o, std::to_string(conserved) + " tensor rank-conservation pairs verified");

  // (c) dominantization is path independent: a randomized reflection order
  //     reaches the same representative with the same reflection count, and
  //     the count matches its closed form over the positive roots.
  struct Sys {
    Family fam;
    int rank;
  };
  const std::vector<Sys> systems = {{Family::D, 6}, {Family::E, 7}, {Family::A, 5},
                                    {Family::E, 6}, {Family::D, 5}};
  long dom_checked = 0;
  for (const auto& sys : systems) {
    const RootSystem& rs = RootSystem::simple(sys.fam, sys.rank);
    for (int i = 0; i < 20; ++i) {
      Weight w(rs.rank());
      for (int j = 0; j < rs.rank(); ++j)
        w[j] = static_cast<int>(rng() % 9) - 4;

      DomResult core = dominantize(rs, w);

      // independent oracle: reflect at a randomly chosen negative coordinate
      Weight v = w;
      int len = 0;
      bool stuck = false;
      for (;;) {
        std::vector<int> neg;
        for (int j = 0; j < rs.rank(); ++j)
          if (v[j] < 0) neg.push_back(j);
        if (neg.empty()) break;
        if (len > 100000) {
          stuck = true;
          break;
        }
        v = rs.reflect(v, neg[rng() % neg.size()]);
        ++len;
      }
      check(o, !stuck, "random-order dominantization terminates");

      bool singular = false;
      for (int x : v)
        if (x == 0) singular = true;

      long neg_roots = 0;
      for (const auto& r : rs.positives())
        if (rs.pairing(w, r) < 0) ++neg_roots;

      if (core.weight != v || core.length != len || core.singular != singular ||
          core.length != neg_roots) {
        check(o, false,
              "path independence for " + weight_str(w) + " in " +
                  std::string(1, static_cast<char>(sys.fam)) +
                  std::to_string(sys.rank));
        break;
      }
      ++dom_checked;
    }
  }
  note(o, std::to_string(dom_checked) + " dominantization weights verified");

  // (d) the command-line binary produces byte-identical output with a cold
  //     cache, a warm cache, and the cache disabled.
  namespace fs = std::filesystem;
  std::string tmpl = (fs::temp_directory_path() / "gpc-accept-XXXXXX").string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) {
    check(o, false, "temporary directory for the cache probe");
    return o;
  }
  const std::string dir(buf.data());
  const std::string cache = dir + "/cache";

  auto run = [&](const std::string& args, const std::string& out,
                 bool with_cache) -> bool {
    std::string cmd = "GPCALC_CACHE_DIR='" + cache + "' '" + g_cli + "' " + args +
                      (with_cache ? "" : " --no-cache") + " > '" + out + "' 2>&1";
    return std::system(cmd.c_str()) == 0;
  };

  const std::vector<std::string> probes = {
      "tensor D6/P6 w2 w4 --json",
      "bbw D6/P6 w1+w5 --twists -6..0 --json",
      "chi D6/P6 P Q --json",
  };
  bool cache_ok = true;
  for (size_t i = 0; i < probes.size(); ++i) {
    const std::string base = dir + "/p" + std::to_string(i);
    bool ran = run(probes[i], base + ".cold", true) &&
               run(probes[i], base + ".warm", true) &&
               run(probes[i], base + ".off", false);
    check(o, ran, "cache probe command succeeds: " + probes[i]);
    if (!ran) {
      cache_ok = false;
      continue;
    }
    const std::string cold = read_file(base + ".cold");
    if (cold.empty() || cold != read_file(base + ".warm") ||
        cold != read_file(base + ".off")) {
      check(o, false, "byte-identical output for: " + probes[i]);
      cache_ok = false;
    }
  }
  bool populated = fs::exists(cache) && !fs::is_empty(cache);
  check(o, populated, "cold runs populate the cache directory");
  if (cache_ok && populated)
    note(o, "cache transparency: cold, warm, and disabled runs byte-identical");
  std::error_code ec;
  fs::remove_all(dir, ec);

  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <cli-binary> <data-dir>\n");
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  struct Criterion {
    int id;
    const char* what;
    double budget;  // seconds; < 0 means no budget is pinned
    Outcome (*fn)();
  };
  const std::vector<Criterion> criteria = {
      {1, "sheaf cohomology goldens and vanishing windows", 1.0, criterion1},
      {2, "tensor product displays on the 15-fold", 10.0, criterion2},
      {3, "32-object staircase on the 15-fold", 30.0, criterion3},
      {4, "56-object first family and its residual projection ledger", 600.0, criterion4},
      {5, "56-object second family and its mutated residual pair", 900.0, criterion5},
      {6, "16-object ladder on the 10-fold", 5.0, criterion6},
      {7, "spinor fiber-complex certificates", 5.0, criterion7},
      {8, "property suites and cache transparency", -1.0, criterion8},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool within = c.budget < 0 || dt <= c.budget;
    const bool pass = out.pass && within;
    if (pass) ++passed;

    char timing[64];
    if (c.budget < 0)
      std::snprintf(timing, sizeof timing, "%.2fs", dt);
    else
      std::snprintf(timing, sizeof timing, "%.2fs, budget %.0fs", dt, c.budget);
    std::printf("criterion %d: %s  (%s)  %s\n", c.id, pass ? "PASS" : "FAIL", timing,
                c.what);
    if (!within)
      std::printf("    failed: wall clock %.2fs exceeded the %.0fs budget\n", dt,
                  c.budget);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }

  std::printf("acceptance: %d/8 criteria passed\n", passed);
  return passed == 8 ? 0 : 1;
}
