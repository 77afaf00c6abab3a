#include "doctest.h"

#include "grpf/sections.hpp"

using namespace grpf;

namespace {

void check_diamond_consistency(const GrassSectionHodge& g) {
  const auto& h = g.diamond;
  const int d = h.dim();
  CHECK(h.integral());
  CHECK(h(0, 0) == 1);
  BigInt alternating = 0;
  for (int p = 0; p <= d; ++p) {
    CHECK(h.chi_p(p) == g.chi[static_cast<std::size_t>(p)]);
    CHECK(g.chi[static_cast<std::size_t>(p)] == restricted_euler(g.params, omega_p_class(g.params, p)));
    alternating += (p % 2 == 0) ? g.chi[static_cast<std::size_t>(p)] : BigInt(-g.chi[static_cast<std::size_t>(p)]);
  }
  CHECK(h.topological_euler() == alternating);
  const auto poincare = grassmannian_poincare(g.params.n);
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) {
      if (p + q >= d) continue;
      CHECK(h(p, q) == (p == q ? poincare[p] : BigInt(0)));
    }
}

}  // namespace

TEST_CASE("restricted Euler characteristics") {
  CHECK(restricted_euler(ModelParams::make(10, 5), KClass::trivial(10)) == 1);
  CHECK(restricted_euler(ModelParams::make(7, 7), KClass::trivial(7)) == 0);
  const auto omega = cauchy_exterior_cotangent(6, 2);
  CHECK(restricted_euler(ModelParams::make(6, 0), omega) == euler_characteristic(omega, 0));
  // chi(O_Y(1)) = h^0 = 45 - 5 on the Fano elevenfold.
  CHECK(restricted_euler(ModelParams::make(10, 5), KClass::line_bundle(10, 1)) == 40);
}

TEST_CASE("omega_p_class ranks") {
  const auto p = ModelParams::make(10, 5);
  CHECK(omega_p_class(p, 0) == KClass::trivial(10));
  for (int deg = 0; deg <= 11; ++deg) CHECK(omega_p_class(p, deg).virtual_rank() == binomial(11, deg));
  for (int n = 4; n <= 8; ++n)
    for (int k = 0; k <= 2 * (n - 2); ++k) {
      const auto q = ModelParams::make(n, k);
      for (int deg = 0; deg <= 2 * (n - 2) - k; ++deg)
        CHECK(omega_p_class(q, deg).virtual_rank() == binomial(2 * (n - 2) - k, deg));
    }
}

TEST_CASE("Hodge diamond of the elevenfold") {
  const auto g = hodge_diamond_y1(ModelParams::make(10, 5));
  CHECK_FALSE(g.heuristic);
  CHECK(g.lefschetz_applicable);
  REQUIRE(g.diamond.dim() == 11);
  const std::vector<BigInt> want{0, 0, 0, 0, 1, 101, 101, 1, 0, 0, 0, 0};
  CHECK(g.diamond.middle_row() == want);
  CHECK(g.diamond(7, 4) == 1);
  CHECK(g.diamond(6, 5) == 101);
  CHECK(g.diamond(1, 1) == 1);
  check_diamond_consistency(g);
}

TEST_CASE("Hodge diamond of the Pfaffian-Grassmannian threefold") {
  const auto g = hodge_diamond_y1(ModelParams::make(7, 7));
  REQUIRE(g.diamond.dim() == 3);
  CHECK(g.diamond.middle_row() == std::vector<BigInt>{1, 50, 50, 1});
  CHECK(g.diamond.topological_euler() == -98);
  check_diamond_consistency(g);
}

TEST_CASE("diamond invariants across the grid") {
  for (int n = 4; n <= 9; ++n)
    for (int k = 0; k < 2 * (n - 2); ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto p = ModelParams::make(n, k);
      const auto g = hodge_diamond_y1(p);
      CHECK(g.heuristic == !classify(p).theorem_applies);
      check_diamond_consistency(g);
    }
}

TEST_CASE("sections of O(1) restricted to Y1") {
  const auto r = restricted_cohomology(ModelParams::make(10, 5), KClass::line_bundle(10, 1));
  CHECK(r.mode == ResultMode::Exact);
  CHECK(r.degrees.size() == 1);
  CHECK(r.lower(0) == 40);
  CHECK(r.upper(0) == 40);
  CHECK_THROWS_AS(restricted_cohomology(ModelParams::make(6, 2), KClass::trivial(6) - KClass::line_bundle(6, 1)),
                  Error);
}

TEST_CASE("first-order deformations of Y1") {
  const auto a = h1_tangent_y1(ModelParams::make(10, 5));
  CHECK(a.mode == ResultMode::ExactGeneric);
  CHECK(a.lower == 101);
  CHECK(a.upper == 101);
  CHECK_FALSE(a.assumptions.empty());

  const auto b = h1_tangent_y1(ModelParams::make(7, 7));
  CHECK(b.mode == ResultMode::ExactGeneric);
  CHECK(b.lower == 50);
  CHECK(b.upper == 50);
  CHECK(b.lower == hodge_diamond_y1(ModelParams::make(7, 7)).diamond(2, 1));

  for (int n = 3; n <= 10; ++n) {
    const auto c = h1_tangent_y1(ModelParams::make(n, 0));
    CHECK(c.lower == 0);
    CHECK(c.upper == 0);
    const auto t = bwb_cohomology(tangent_class(n).terms()[0].weight());
    REQUIRE_FALSE(t.vanishes());
    CHECK(t.cohomology->degree == 0);
    CHECK(t.cohomology->dimension == n * n - 1);
  }
}

TEST_CASE("strong exceptionality of S") {
  for (int n : {4, 5, 6, 7, 8, 10}) {
    CAPTURE(n);
    const auto set = window_set_S(n);
    const auto rep = verify_strong_exceptional(n, set);
    CHECK(rep.passed());
    CHECK(rep.pairs_checked == set.size() * set.size());
    REQUIRE(rep.order.size() == set.size());
    for (std::size_t i = 0; i < rep.order.size(); ++i) {
      CHECK(rep.hom[i][i] == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(rep.hom[i][j] == 0);
    }
  }
  const auto rep = verify_strong_exceptional(10, window_set_S(10));
  CHECK(rep.order.front() == WindowLabel{3, 9});
  CHECK(rep.order.back() == WindowLabel{0, 0});
}

TEST_CASE("a pair with higher Ext fails the collection check") {
  const auto rep = verify_strong_exceptional(6, WindowSet{{0, 0}, {0, 6}});
  CHECK_FALSE(rep.passed());
  bool saw_top_degree = false;
  for (const auto& f : rep.failures) saw_top_degree = saw_top_degree || f.degree == 8;
  CHECK(saw_top_degree);
}

TEST_CASE("self-Ext of a window bundle") {
  for (const auto& l : window_set_S(10)) {
    const auto t = rhom(10, l, l);
    CHECK(t.entries == std::map<int, BigInt>{{0, 1}});
  }
}

TEST_CASE("higher Ext vanishes for all twists on S") {
  for (int n : {4, 6, 8, 10, 12}) {
    CAPTURE(n);
    const auto rep = lemma_vanishing_all_t(n);
    CHECK(rep.vanishes_for_all_t());
    const auto size = window_set_S(n).size();
    CHECK(rep.pairs == size * size);
    CHECK(rep.case_top_row + rep.case_lower_rows == rep.pairs);
  }
  try {
    lemma_vanishing_all_t(7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parity);
  }
  CHECK_THROWS_AS(lemma_vanishing_all_t(2), Error);
}

TEST_CASE("symbolic all-t decision agrees with direct enumeration of twists") {
  const int n = 8;
  const auto set = window_set_S(n);
  for (const auto& e : set)
    for (const auto& f : set) {
      const auto v = higher_vanishing_all_t(n, e, f);
      CHECK(v.vanishes_for_all_t);
      for (int t = 0; t <= 3 * n; ++t) {
        const auto table = rhom(n, e, f, t);
        for (const auto& [deg, d] : table.entries) CHECK(deg == 0);
      }
    }
}

TEST_CASE("an out-of-window target yields a counterexample twist") {
  const int n = 10;
  const WindowLabel source{4, 0}, target{window_L(n), n - 1};
  const auto v = higher_vanishing_all_t(n, source, target);
  REQUIRE_FALSE(v.vanishes_for_all_t);
  REQUIRE(v.counterexample_t.has_value());
  REQUIRE(v.counterexample_degree.has_value());
  CHECK(*v.counterexample_t >= 0);
  CHECK(*v.counterexample_degree > 0);
  const auto table = rhom(n, source, target, *v.counterexample_t);
  CHECK(table.at(*v.counterexample_degree) > 0);

  // The enumerative search finds a failing twist as well.
  int first = -1;
  for (int t = 0; t <= 4 * n && first < 0; ++t)
    for (const auto& [deg, d] : rhom(n, source, target, t).entries)
      if (deg > 0) first = t;
  CHECK(first >= 0);
}

TEST_CASE("collection check over twists 0..k matches the all-t verdict") {
  const auto p = ModelParams::make(10, 5);
  const auto set = window_set_S(p.n);
  for (const auto& e : set)
    for (const auto& f : set)
      for (int t = 0; t <= p.k; ++t)
        for (const auto& [deg, d] : rhom(p.n, e, f, t).entries) CHECK(deg == 0);
}
