#include "doctest.h"

#include <functional>
#include <random>

#include "grpf/weights.hpp"

using namespace grpf;

namespace {

// Semistandard tableaux of shape w with entries in 1..n.
long long count_ssyt(const std::vector<int>& shape, int n) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  long long count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      ++count;
      return;
    }
    if (c == t[r].size()) return fill(r + 1, 0);
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return count;
}

}  // namespace

TEST_CASE("partitions normalize trailing zeros and reject bad parts") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({3, 1}).length() == 2);
  CHECK(Partition({3, 1}).size() == 4);
  CHECK(Partition({3, 1})[5] == 0);
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
}

TEST_CASE("partitions_in_box counts") {
  CHECK(partitions_in_box(5, 5, 5).size() == 7);
  CHECK(partitions_in_box(4, 2, 4).size() == 3);  // 4, 31, 22
  CHECK(partitions_in_box(0, 3, 3).size() == 1);
  CHECK(partitions_in_box(4, 2, 2).size() == 1);
}

TEST_CASE("rho") {
  CHECK(rho(4) == Weight{4, 3, 2, 1});
  CHECK(rho(3) == Weight{3, 2, 1});
  CHECK(rho(10) == Weight{10, 9, 8, 7, 6, 5, 4, 3, 2, 1});
  for (int n = 3; n <= 20; ++n) {
    const auto r = rho(n);
    CHECK(r.front() == n);
    CHECK(r.back() == 1);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i] == r[i + 1] + 1);
  }
  try {
    rho(2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRank);
  }
}

TEST_CASE("weyl_dimension examples") {
  CHECK(weyl_dimension(Weight(10, 0)) == 1);
  Weight w(10, 0);
  w[0] = 1;
  CHECK(weyl_dimension(w) == 10);
  w[1] = 1;
  CHECK(weyl_dimension(w) == binomial(10, 2));
  try {
    weyl_dimension(Weight{0, 1, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dominance);
  }
}

TEST_CASE("weyl_dimension agrees with counting semistandard tableaux") {
  for (int n = 1; n <= 5; ++n)
    for (int size = 0; size <= 6; ++size)
      for (const auto& lambda : partitions_in_box(size, n, size)) {
        Weight w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < lambda.length(); ++i) w[static_cast<std::size_t>(i)] = lambda[i];
        CAPTURE(lambda.str());
        CHECK(weyl_dimension(w) == count_ssyt(lambda.parts(), n));
      }
}

TEST_CASE("weyl_dimension is invariant under determinant twists") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Weight w(static_cast<std::size_t>(n));
    for (auto& x : w) x = static_cast<int>(rng() % 17) - 8;
    std::sort(w.begin(), w.end(), std::greater<>());
    const int c = static_cast<int>(rng() % 21) - 10;
    Weight shifted = w;
    for (auto& x : shifted) x += c;
    CHECK(weyl_dimension(w) == weyl_dimension(shifted));
  }
}

TEST_CASE("weyl_dimension exceeds 64 bits without overflow") {
  Weight w{200, 150, 100, 60, 30, 10, 0, -10, -30, -60, -100, -150};
  const auto d = weyl_dimension(w);
  CHECK(d > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("GLWeight enforces Levi dominance") {
  CHECK_NOTHROW(GLWeight({2, -1}, {3, 3, 0}));
  CHECK_THROWS_AS(GLWeight({-1, 2}, {0}), Error);
  CHECK_THROWS_AS(GLWeight({0, 0}, {0, 1}), Error);
  CHECK_THROWS_AS(GLWeight({0, 0}, {}), Error);
  const GLWeight w({1, 1}, {0, 0, 0});
  CHECK(w.n() == 5);
  CHECK(w.flat() == Weight{1, 1, 0, 0, 0});
  const Weight flat{2, 1, 0, -1};
  CHECK(GLWeight::from_flat(flat) == GLWeight({2, 1}, {0, -1}));
  CHECK(GLWeight::trivial(4).flat() == Weight{0, 0, 0, 0});
}

TEST_CASE("Gaussian binomials and Grassmannian Poincare polynomials") {
  CHECK(gaussian_binomial(4, 2).coefficients == std::vector<BigInt>{1, 1, 2, 1, 1});
  CHECK(grassmannian_poincare(4).coefficients == std::vector<BigInt>{1, 1, 2, 1, 1});
  CHECK(grassmannian_poincare(3).coefficients == std::vector<BigInt>{1, 1, 1});
  for (int n = 3; n <= 20; ++n) {
    const auto p = grassmannian_poincare(n);
    CHECK(p.palindromic());
    CHECK(p.sum() == binomial(n, 2));
    CHECK(p.degree() == 2 * (n - 2));
    // Schubert cells of Gr(2,n): pairs n-2 >= a >= b >= 0 with a + b = degree.
    for (int d = 0; d <= p.degree(); ++d) {
      long long cells = 0;
      for (int a = 0; a <= n - 2; ++a)
        for (int b = 0; b <= a; ++b) cells += (a + b == d) ? 1 : 0;
      CHECK(p[d] == cells);
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(10, 2) == 45);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}
