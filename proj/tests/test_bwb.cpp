#include "doctest.h"

#include <random>

#include "grpf/bwb.hpp"

using namespace grpf;

namespace {

GLWeight random_weight(std::mt19937_64& rng, int n) {
  auto draw = [&] { return static_cast<int>(rng() % 21) - 10; };
  std::array<int, 2> s{draw(), draw()};
  std::sort(s.begin(), s.end(), std::greater<>());
  std::vector<int> q(static_cast<std::size_t>(n - 2));
  for (auto& x : q) x = draw();
  std::sort(q.begin(), q.end(), std::greater<>());
  return GLWeight(s, q);
}

GLWeight line(int n, int t) { return GLWeight({t, t}, std::vector<int>(static_cast<std::size_t>(n - 2), 0)); }

// h^0(Gr(2,n), O(t)) for t >= 0: Hilbert function of the Plucker embedding.
BigInt plucker_hilbert(int n, int t) { return binomial(n + t - 1, t) * binomial(n + t - 2, t) / (t + 1); }

}  // namespace

TEST_CASE("BWB examples") {
  for (int n = 3; n <= 12; ++n) {
    const auto r = bwb_cohomology(GLWeight::trivial(n));
    REQUIRE_FALSE(r.vanishes());
    CHECK(r.cohomology->degree == 0);
    CHECK(r.cohomology->dimension == 1);
    CHECK(r.cohomology->representation == Weight(static_cast<std::size_t>(n), 0));
  }
  const auto o1 = bwb_cohomology(line(10, 1));
  REQUIRE_FALSE(o1.vanishes());
  CHECK(o1.cohomology->degree == 0);
  CHECK(o1.cohomology->dimension == 45);
  CHECK(o1.cohomology->representation == Weight{1, 1, 0, 0, 0, 0, 0, 0, 0, 0});

  CHECK(bwb_cohomology(GLWeight({0, -1}, std::vector<int>(8, 0))).vanishes());
  for (int a2 = 2 - 10; a2 <= -1; ++a2) CHECK(bwb_cohomology(GLWeight({3, a2}, std::vector<int>(8, 0))).vanishes());

  const auto canonical = bwb_cohomology(line(10, -10));
  REQUIRE_FALSE(canonical.vanishes());
  CHECK(canonical.cohomology->degree == 16);
  CHECK(canonical.cohomology->dimension == 1);
}

TEST_CASE("BWB matches the Plucker Hilbert function") {
  for (int n = 3; n <= 12; ++n)
    for (int t = 0; t <= 6; ++t) {
      const auto r = bwb_cohomology(line(n, t));
      REQUIRE_FALSE(r.vanishes());
      CHECK(r.cohomology->degree == 0);
      CHECK(r.cohomology->dimension == plucker_hilbert(n, t));
    }
}

TEST_CASE("BWB dichotomy on random weights") {
  std::mt19937_64 rng(2024);
  std::size_t nonvanishing = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const auto w = random_weight(rng, n);
    const auto r = bwb_cohomology(w);
    if (r.vanishes()) continue;
    ++nonvanishing;
    const auto& h = *r.cohomology;
    CHECK(h.degree >= 0);
    CHECK(h.degree <= 2 * (n - 2));
    CHECK(is_dominant(h.representation));
    CHECK(h.dimension > 0);
    CHECK(h.dimension == weyl_dimension(h.representation));
  }
  CHECK(nonvanishing > 1000);
}

TEST_CASE("Serre duality on random weights") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto w = random_weight(rng, n);
    const auto r = bwb_cohomology(w);
    const auto d = bwb_cohomology(serre_dual_weight(w));
    REQUIRE(r.vanishes() == d.vanishes());
    if (r.vanishes()) continue;
    CHECK(r.cohomology->degree + d.cohomology->degree == 2 * (n - 2));
    CHECK(r.cohomology->dimension == d.cohomology->dimension);
  }
}

TEST_CASE("a perturbed rho breaks Serre duality") {
  std::mt19937_64 rng(42);
  auto shift = rho(8);
  shift[0] += 1;
  const auto engine = BwbEngine::with_rho(shift);
  std::size_t broken = 0;
  for (int i = 0; i < 200; ++i) {
    const auto w = random_weight(rng, 8);
    try {
      const auto r = engine.compute(w);
      const auto d = engine.compute(serre_dual_weight(w));
      if (r.vanishes() != d.vanishes() ||
          (!r.vanishes() && (r.cohomology->degree + d.cohomology->degree != 12 ||
                             r.cohomology->dimension != d.cohomology->dimension)))
        ++broken;
    } catch (const Error&) {
      ++broken;
    }
  }
  CHECK(broken > 0);
}

TEST_CASE("engine rejects a mismatched rank") {
  try {
    BwbEngine(6).compute(GLWeight::trivial(5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankMismatch);
  }
}

TEST_CASE("cohomology of classes") {
  const auto triv = cohomology_of_kclass(KClass::trivial(6), 0);
  CHECK(triv.positive.entries == std::map<int, BigInt>{{0, 1}});
  CHECK(triv.negative.empty());
  for (int n = 3; n <= 12; ++n) {
    const auto omega = cohomology_of_kclass(cauchy_exterior_cotangent(n, 1), 0);
    CHECK(omega.positive.entries == std::map<int, BigInt>{{1, 1}});
  }
  const auto virt = cohomology_of_kclass(KClass::trivial(5) - KClass::line_bundle(5, 1), 0);
  CHECK(virt.positive.at(0) == 1);
  CHECK(virt.negative.at(0) == 10);
  CHECK(virt.euler_characteristic() == -9);
  CHECK(virt.provenance.size() == 2);
}

TEST_CASE("Hodge numbers of Gr(2,n) from exterior powers of the cotangent bundle") {
  for (int n = 3; n <= 12; ++n) {
    const auto poincare = grassmannian_poincare(n);
    for (int p = 0; p <= 2 * (n - 2); ++p) {
      const auto c = cohomology_of_kclass(cauchy_exterior_cotangent(n, p), 0);
      CHECK(c.negative.empty());
      CHECK(c.positive.entries == std::map<int, BigInt>{{p, poincare[p]}});
    }
  }
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_characteristic(KClass::trivial(9), 0) == 1);
  CHECK(euler_characteristic(KClass::trivial(10), 1) == 45);
  CHECK(euler_characteristic(KClass::line_bundle(10, 1), 0) == 45);
  for (int n = 3; n <= 12; ++n) {
    CHECK(euler_characteristic(KClass::trivial(n), -1) == 0);
    // chi(O(t)) = (-1)^dim chi(O(-n-t)) and agrees with the Hilbert function for t >= 0.
    for (int t = 0; t <= 4; ++t) {
      CHECK(euler_characteristic(KClass::trivial(n), t) == plucker_hilbert(n, t));
      CHECK(euler_characteristic(KClass::trivial(n), -n - t) == plucker_hilbert(n, t));
    }
  }
  const auto a = cauchy_exterior_cotangent(7, 2);
  const auto b = cauchy_exterior_cotangent(7, 3);
  for (int t = -4; t <= 4; ++t)
    CHECK(euler_characteristic(a + b, t) == euler_characteristic(a, t) + euler_characteristic(b, t));
}

TEST_CASE("serre_dual_weight") {
  const GLWeight w({3, 1}, {2, 0, -1});
  CHECK(serre_dual_weight(w) == GLWeight({-6, -8}, {1, 0, -2}));
  CHECK(serre_dual_weight(serre_dual_weight(w)) == w);
}
