#include "grpf/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "grpf/bwb.hpp"
#include "grpf/geometry.hpp"
#include "grpf/oracles.hpp"
#include "grpf/pfaffian.hpp"
#include "grpf/schur.hpp"
#include "grpf/sections.hpp"

namespace grpf {

bool VerifyReport::passed() const {
  for (const auto& item : items)
    if (!item.skipped && !item.passed) return false;
  return true;
}

namespace {

constexpr std::uint64_t kPrime = 10007;
constexpr std::uint64_t kSeed = 42;

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome quintic_threefold() {
  const auto h = hypersurface_hodge(4, 5);
  const std::vector<BigInt> want{1, 101, 101, 1};
  return {h.middle_row() == want && h.integral(), "middle row " + join(h.middle_row())};
}

Outcome elevenfold_middle_row() {
  const auto r = hodge_diamond_y1(ModelParams::make(10, 5));
  const auto& h = r.diamond;
  bool ok = h.dim() == 11 && h.integral();
  for (int p = 0; p <= 11; ++p) {
    BigInt want = 0;
    if (p == 7 || p == 4) want = 1;
    if (p == 6 || p == 5) want = 101;
    ok = ok && h(p, 11 - p) == want;
  }
  return {ok, "h^{p,11-p}, p=11..0: " + join(h.middle_row())};
}

Outcome deformations() {
  const auto t = h1_tangent_y1(ModelParams::make(10, 5));
  return {t.mode == ResultMode::ExactGeneric && t.lower == 101 && t.upper == 101,
          std::string("h1(T) in [") + t.lower.str() + ", " + t.upper.str() + "], mode " + to_string(t.mode)};
}

Outcome strong_exceptional(const std::vector<int>& ns) {
  std::ostringstream d;
  bool ok = true;
  for (int n : ns) {
    const auto set = window_set_S(n);
    const auto rep = verify_strong_exceptional(n, set);
    const bool all_pairs = rep.pairs_checked == set.size() * set.size();
    ok = ok && rep.passed() && all_pairs;
    d << "n=" << n << ": " << rep.pairs_checked << " pairs, " << rep.failures.size() << " failures; ";
  }
  return {ok, d.str()};
}

Outcome lemma_all_t() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {8, 10, 12}) {
    const auto rep = lemma_vanishing_all_t(n);
    const auto size = window_set_S(n).size();
    ok = ok && rep.vanishes_for_all_t() && rep.pairs == size * size;
    d << "n=" << n << ": " << rep.pairs << " pairs, " << rep.intervals << " intervals, "
      << rep.failures.size() << " failures; ";
  }
  return {ok, d.str()};
}

Outcome window_inclusion() {
  std::size_t cases = 0, included = 0;
  for (int n = 3; n <= 14; ++n)
    for (int k = 1; k <= n * (n - 1) / 2; ++k) {
      const auto p = ModelParams::make(n, k);
      const auto sets = window_sets(p);  // throws Integrity on disagreement
      if (sets.inclusion != window_inclusion_closed_form(p)) return {false, "disagreement"};
      ++cases;
      included += sets.inclusion ? 1 : 0;
    }
  return {true, std::to_string(cases) + " (n,k) pairs, " + std::to_string(included) + " with inclusion"};
}

Outcome rectangle() {
  const auto r = orthogonal_rectangle(ModelParams::make(10, 5));
  WindowSet want;
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 4; ++m) want.insert({l, m});
  return {r == want, std::to_string(r.size()) + " labels"};
}

Outcome pfaffian_sampling() {
  std::ostringstream d;
  bool ok = true;
  for (auto [n, k] : {std::pair{10, 5}, std::pair{7, 7}, std::pair{8, 4}}) {
    const auto a = random_amap(n, k, kPrime, kSeed);
    const auto rep = sample_y2(a, kPrime, 100, kSeed);
    const int want_kernel = n % 2 == 0 ? 2 : 3;
    bool kernels = true;
    for (const auto& pt : rep.points) {
      if (pt.rank + pt.kernel_dim != n || pt.rank % 2 != 0) kernels = false;
      if (pt.smooth_at && pt.kernel_dim != want_kernel) kernels = false;
    }
    const auto found = rep.points.size();
    const auto smooth = rep.smooth_count();
    const bool case_ok = found >= 100 && kernels && smooth * 100 >= found * 95;
    ok = ok && case_ok;
    d << "(" << n << "," << k << "): " << found << " points, " << smooth << " smooth; ";
  }
  return {ok, d.str()};
}

Outcome pfaffian_degree() {
  const auto a = random_amap(10, 5, kPrime, kSeed);
  const PrimeField f(kPrime);
  const auto pf = pfaffian_polynomial(build_skew_matrix(f, a));
  return {pf.total_degree() == 5 && pf.is_homogeneous(), "degree " + std::to_string(pf.total_degree())};
}

bool serre_duality_holds(const BwbEngine& engine, const GLWeight& w) {
  try {
    const auto r = engine.compute(w);
    const auto d = engine.compute(serre_dual_weight(w));
    if (r.vanishes() || d.vanishes()) return r.vanishes() == d.vanishes();
    return r.cohomology->degree + d.cohomology->degree == 2 * (w.n() - 2) &&
           r.cohomology->dimension == d.cohomology->dimension;
  } catch (const Error&) {
    return false;
  }
}

Outcome properties(bool inject_rho_fault) {
  std::ostringstream d;
  bool ok = true;
  std::mt19937_64 rng(kSeed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::size_t serre_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = uniform(3, 12);
    std::array<int, 2> s{uniform(-8, 8), uniform(-8, 8)};
    std::sort(s.begin(), s.end(), std::greater<>());
    std::vector<int> q(static_cast<std::size_t>(n - 2));
    for (auto& x : q) x = uniform(-8, 8);
    std::sort(q.begin(), q.end(), std::greater<>());
    Weight shift = rho(n);
    if (inject_rho_fault) shift[0] += 1;
    if (!serre_duality_holds(BwbEngine::with_rho(shift), GLWeight(s, q))) ++serre_bad;
  }
  ok = ok && serre_bad == 0;
  d << "Serre duality " << 1000 - serre_bad << "/1000; ";

  std::size_t pf_bad = 0;
  const PrimeField f(kPrime);
  for (int n : {8, 10, 12})
    for (int i = 0; i < 1000; ++i) {
      Matrix<PrimeField> m(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
          const auto x = rng() % kPrime;
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
          m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = f.neg(x);
        }
      const auto pf = pfaffian(f, m);
      if (f.mul(pf, pf) != determinant(f, m)) ++pf_bad;
    }
  ok = ok && pf_bad == 0;
  d << "Pf^2=det " << 3000 - pf_bad << "/3000; ";

  std::size_t cauchy_bad = 0, cauchy_cases = 0;
  for (int n = 3; n <= 12; ++n) {
    const int dim = 2 * (n - 2);
    for (int m = 0; m <= dim; ++m, ++cauchy_cases)
      if (cauchy_exterior_cotangent(n, m).virtual_rank() != binomial(dim, m)) ++cauchy_bad;
  }
  ok = ok && cauchy_bad == 0;
  d << "Cauchy rank " << cauchy_cases - cauchy_bad << "/" << cauchy_cases << "; ";

  std::size_t diamonds = 0, diamond_bad = 0;
  for (int n = 4; n <= 9; ++n)
    for (int k = 1; k < 2 * (n - 2); ++k) {
      ++diamonds;
      try {
        if (!hodge_diamond_y1(ModelParams::make(n, k)).diamond.integral()) ++diamond_bad;
      } catch (const Error&) {
        ++diamond_bad;
      }
    }
  for (int N = 2; N <= 6; ++N)
    for (int deg = 1; deg <= 6; ++deg, ++diamonds)
      if (!hypersurface_hodge(N, deg).integral()) ++diamond_bad;
  ok = ok && diamond_bad == 0;
  d << "diamond integrity " << diamonds - diamond_bad << "/" << diamonds << "; ";

  std::size_t lr_cases = 0, lr_bad = 0;
  constexpr int rows = 4;
  for (int total = 0; total <= 12; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& lambda : partitions_in_box(a, rows, a))
        for (const auto& mu : partitions_in_box(total - a, rows, total - a)) {
          ++lr_cases;
          std::map<Partition, BigInt> got;
          for (const auto& [nu, c] : littlewood_richardson(lambda, mu, rows)) got[nu] = c;
          if (got != oracle::schur_product(lambda, mu, rows)) ++lr_bad;
        }
  ok = ok && lr_bad == 0;
  d << "LR oracle " << lr_cases - lr_bad << "/" << lr_cases;
  return {ok, d.str()};
}

struct Check {
  std::string id;
  std::string description;
  bool slow;
  std::function<Outcome(const VerifyOptions&)> run;
};

std::vector<Check> checks() {
  return {
      {"1", "quintic threefold middle Hodge row (1,101,101,1)", false,
       [](const VerifyOptions&) { return quintic_threefold(); }},
      {"2", "Y1(10,5) middle row: h^{7,4}=1, h^{6,5}=101, rest 0", false,
       [](const VerifyOptions&) { return elevenfold_middle_row(); }},
      {"3", "h^1(T_Y1) = 101 for (10,5), Exact-generic", false,
       [](const VerifyOptions&) { return deformations(); }},
      {"4a", "S strong exceptional, n=7", false,
       [](const VerifyOptions&) { return strong_exceptional({7}); }},
      {"4b", "S strong exceptional, n=10 (45x45 pairs)", true,
       [](const VerifyOptions&) { return strong_exceptional({10}); }},
      {"5", "higher Ext vanishing for all t >= 0, n=8,10,12", false,
       [](const VerifyOptions&) { return lemma_all_t(); }},
      {"6", "window inclusion agrees with closed form, 3<=n<=14", false,
       [](const VerifyOptions&) { return window_inclusion(); }},
      {"7", "orthogonal rectangle (10,5) is 0<=l<=3, 0<=m<=4", false,
       [](const VerifyOptions&) { return rectangle(); }},
      {"8", "Y2 sampling over F_10007, seed 42: (10,5), (7,7), (8,4)", true,
       [](const VerifyOptions&) { return pfaffian_sampling(); }},
      {"9", "n=10 Pfaffian has degree 5", false, [](const VerifyOptions&) { return pfaffian_degree(); }},
      {"10", "property suites: Serre duality, Pf^2=det, Cauchy rank, diamonds, LR oracle", false,
       [](const VerifyOptions& o) { return properties(o.inject_rho_fault); }},
  };
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options, const std::function<void(const VerifyItem&)>& on_item) {
  VerifyReport report;
  for (const auto& c : checks()) {
    VerifyItem item{c.id, c.description, c.slow, false, false, 0, {}};
    if (c.slow && options.profile == VerifyProfile::Fast) {
      item.skipped = true;
      item.detail = "slow; run with the full profile";
    } else {
      const auto start = std::chrono::steady_clock::now();
      try {
        const auto out = c.run(options);
        item.passed = out.passed;
        item.detail = out.detail;
      } catch (const std::exception& e) {
        item.passed = false;
        item.detail = std::string("error: ") + e.what();
      }
      item.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (on_item) on_item(item);
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace grpf
