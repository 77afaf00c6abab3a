#include "grpf/pfaffian.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace grpf {

void AMap::validate_shape() const {
  if (n < 2) throw Error(ErrorKind::InvalidRank, "AMap needs n >= 2");
  const long cols = static_cast<long>(n) * (n - 1) / 2;
  if (k < 1 || k > cols)
    throw Error(ErrorKind::InvalidRank, "AMap needs 1 <= k <= (n choose 2) = " + std::to_string(cols));
  if (matrix.size() != static_cast<std::size_t>(k))
    throw Error(ErrorKind::Dimension, "AMap matrix must have k = " + std::to_string(k) + " rows");
  for (const auto& row : matrix)
    if (row.size() != static_cast<std::size_t>(cols))
      throw Error(ErrorKind::Dimension, "AMap rows must have C(n,2) = " + std::to_string(cols) + " entries");
  if (const auto* ps = std::get_if<PrimeScalars>(&field)) PrimeField{ps->p};
}

std::size_t pair_index(int n, int i, int j) {
  // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) pairs
  const long before = static_cast<long>(i) * (2L * n - i - 1) / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

namespace {

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t p) { return rng() % p; }

std::vector<std::uint64_t> random_vector(std::mt19937_64& rng, const PrimeField& f, std::size_t len) {
  std::vector<std::uint64_t> v(len);
  for (auto& x : v) x = draw(rng, f.modulus());
  return v;
}

bool normalize_projective(const PrimeField& f, std::vector<std::uint64_t>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
  if (it == v.end()) return false;
  const auto inv = f.inv(*it);
  for (auto& x : v) x = f.mul(x, inv);
  return true;
}

}  // namespace

AMap random_amap(int n, int k, std::uint64_t p, std::uint64_t seed) {
  const PrimeField f(p);
  const auto cols = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto rng = stream(seed, 0x414D4150ULL + attempt);
    AMap a{n, k, PrimeScalars{p}, {}};
    for (int r = 0; r < k; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < cols; ++c) row.emplace_back(draw(rng, p));
      a.matrix.push_back(std::move(row));
    }
    a.validate_shape();
    if (amap_rank(f, a) == k) return a;
  }
}

Y2Equations y2_equations(const AMap& a, std::uint64_t p) {
  const PrimeField f(p);
  Y2Equations eq{build_skew_matrix(f, a), {}, {}, a.n % 2 == 0 ? 1 : 3};
  if (a.n % 2 == 0)
    eq.equations.push_back(pfaffian_polynomial(eq.matrix));
  else
    eq.equations = submaximal_pfaffians(eq.matrix);
  for (const auto& e : eq.equations) {
    std::vector<Polynomial<PrimeField>> g;
    for (int r = 0; r < a.k; ++r) g.push_back(e.derivative(r));
    eq.gradients.push_back(std::move(g));
  }
  return eq;
}

bool on_y2(const Y2Equations& eq, std::span<const std::uint64_t> u) {
  const int rank = matrix_rank(eq.matrix.field, eq.matrix.evaluate(u));
  return eq.matrix.n % 2 == 0 ? rank < eq.matrix.n : rank <= eq.matrix.n - 3;
}

SamplePoint analyze_point(const Y2Equations& eq, std::span<const std::uint64_t> u) {
  const auto& f = eq.matrix.field;
  SamplePoint pt;
  pt.coordinates.assign(u.begin(), u.end());
  normalize_projective(f, pt.coordinates);
  pt.rank = matrix_rank(f, eq.matrix.evaluate(u));
  pt.kernel_dim = eq.matrix.n - pt.rank;
  for (const auto& e : eq.equations)
    if (!f.is_zero(e.evaluate(u)))
      throw Error(ErrorKind::Integrity, "analyze_point: point does not satisfy the Y2 equations");
  Matrix<PrimeField> jac;
  for (const auto& g : eq.gradients) {
    std::vector<std::uint64_t> row;
    for (const auto& d : g) row.push_back(d.evaluate(u));
    jac.push_back(std::move(row));
  }
  pt.jacobian_rank = matrix_rank(f, std::move(jac));
  pt.smooth_at = pt.jacobian_rank == eq.codimension;
  return pt;
}

std::size_t SampleReport::smooth_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const SamplePoint& s) { return s.smooth_at; }));
}

namespace {

// Coefficients (constant first) of the polynomial of degree < xs.size() through the points.
std::vector<std::uint64_t> interpolate(const PrimeField& f, const std::vector<std::uint64_t>& xs,
                                       const std::vector<std::uint64_t>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::uint64_t> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint64_t> basis{1};
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<std::uint64_t> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] = f.add(next[d + 1], basis[d]);
        next[d] = f.sub(next[d], f.mul(xs[j], basis[d]));
      }
      basis = std::move(next);
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    const auto scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t d = 0; d < m; ++d) out[d] = f.add(out[d], f.mul(scale, basis[d]));
  }
  return out;
}

struct Sampler {
  const Y2Equations& eq;
  const PrimeField& f;
  SampleReport& rep;
  std::size_t count;
  std::set<std::vector<std::uint64_t>> seen;

  bool full() const { return rep.points.size() >= count; }

  void record(std::vector<std::uint64_t> u) {
    if (full() || !normalize_projective(f, u)) return;
    if (!seen.insert(u).second) return;
    rep.points.push_back(analyze_point(eq, u));
  }

  // n even: the Pfaffian restricted to a random line of P(U), roots by exhaustion.
  void line_in_pu(std::mt19937_64& rng) {
    const auto k = static_cast<std::size_t>(eq.matrix.k);
    const auto a = random_vector(rng, f, k);
    const auto b = random_vector(rng, f, k);
    const auto coeffs = eq.equations.front().restrict_to_line(a, b);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c == 0; })) return;
    for (std::uint64_t s = 0; s < f.modulus() && !full(); ++s) {
      std::uint64_t v = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = f.add(f.mul(v, s), *it);
      if (v != 0) continue;
      std::vector<std::uint64_t> u(k);
      for (std::size_t r = 0; r < k; ++r) u[r] = f.add(a[r], f.mul(s, b[r]));
      record(std::move(u));
    }
  }

  // B(v): column r is A(e_r) v, so B(v) u = A(u) v.
  Matrix<PrimeField> kernel_incidence(const std::vector<Matrix<PrimeField>>& basis_forms,
                                      const std::vector<std::uint64_t>& v) const {
    const auto n = v.size(), k = basis_forms.size();
    Matrix<PrimeField> b(n, std::vector<std::uint64_t>(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(basis_forms[r][i][j], v[j]));
        b[i][r] = acc;
      }
    return b;
  }

  // Signed (n-1)-minors of a square matrix along row i: a kernel vector when the rank is n-1.
  std::vector<std::uint64_t> cofactor_row(const Matrix<PrimeField>& m, std::size_t i) const {
    const std::size_t n = m.size();
    std::vector<std::uint64_t> out(n);
    for (std::size_t c = 0; c < n; ++c) {
      Matrix<PrimeField> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<std::uint64_t> row;
        for (std::size_t cc = 0; cc < n; ++cc)
          if (cc != c) row.push_back(m[r][cc]);
        minor.push_back(std::move(row));
      }
      const auto d = determinant(f, minor);
      out[c] = (i + c) % 2 == 0 ? d : f.neg(d);
    }
    return out;
  }

  // n odd, k >= n: every v in V is killed by some A(u); Y2 is found on a random
  // line of P(V) (k = n) or on a random line of the u-family killing v (k > n).
  void kernel_search(std::mt19937_64& rng, const std::vector<Matrix<PrimeField>>& basis_forms) {
    const auto n = static_cast<std::size_t>(eq.matrix.n), k = static_cast<std::size_t>(eq.matrix.k);
    if (k == n) {
      const auto v0 = random_vector(rng, f, n), v1 = random_vector(rng, f, n);
      std::vector<std::uint64_t> v(n);
      auto at = [&](std::uint64_t s) {
        for (std::size_t i = 0; i < n; ++i) v[i] = f.add(v0[i], f.mul(s, v1[i]));
        return kernel_incidence(basis_forms, v);
      };
      // u(s) = cofactors of row 0 of B(v0 + s v1) spans ker B wherever it is nonzero,
      // so one submaximal Pfaffian of A(u(s)) is a polynomial of degree <= (n-1)^2/2
      // whose roots contain every point of Y2 on the line.
      const std::size_t degree = (n - 1) * (n - 1) / 2;
      std::vector<std::uint64_t> coeffs;
      if (f.modulus() > degree) {
        std::vector<std::uint64_t> xs, ys;
        for (std::uint64_t s = 0; s <= degree; ++s) {
          xs.push_back(s);
          ys.push_back(eq.equations.front().evaluate(cofactor_row(at(s), 0)));
        }
        coeffs = interpolate(f, xs, ys);
      }
      const bool filter = std::any_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c != 0; });
      for (std::uint64_t s = 0; s < f.modulus() && !full(); ++s) {
        if (filter) {
          std::uint64_t d = 0;
          for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) d = f.add(f.mul(d, s), *it);
          if (d != 0) continue;
        }
        const auto ker = null_space(f, at(s), k);
        if (ker.size() != 1) continue;
        if (on_y2(eq, ker.front())) record(ker.front());
      }
      return;
    }
    const auto v = random_vector(rng, f, n);
    const auto ker = null_space(f, kernel_incidence(basis_forms, v), k);
    if (ker.size() < 2) return;
    std::vector<std::uint64_t> c0(k, 0), c1(k, 0);
    for (const auto& basis_vec : ker) {
      const auto x = draw(rng, f.modulus()), y = draw(rng, f.modulus());
      for (std::size_t r = 0; r < k; ++r) {
        c0[r] = f.add(c0[r], f.mul(x, basis_vec[r]));
        c1[r] = f.add(c1[r], f.mul(y, basis_vec[r]));
      }
    }
    std::vector<std::uint64_t> u(k);
    for (std::uint64_t s = 0; s < f.modulus() && !full(); ++s) {
      for (std::size_t r = 0; r < k; ++r) u[r] = f.add(c0[r], f.mul(s, c1[r]));
      if (std::all_of(u.begin(), u.end(), [](std::uint64_t x) { return x == 0; })) continue;
      if (on_y2(eq, u)) record(u);
    }
  }

  // Every point of P^{k-1}(F_p), in lexicographic order of normalized coordinates.
  void exhaustive() {
    const auto k = static_cast<std::size_t>(eq.matrix.k);
    const auto p = f.modulus();
    for (std::size_t lead = 0; lead < k && !full(); ++lead) {
      std::vector<std::uint64_t> u(k, 0);
      u[lead] = 1;
      const std::size_t free = k - lead - 1;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < free; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total && !full(); ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < free; ++i) {
          u[lead + 1 + i] = x % p;
          x /= p;
        }
        ++rep.attempts;
        if (on_y2(eq, u)) record(u);
      }
    }
  }
};

}  // namespace

SampleReport sample_y2(const AMap& a, std::uint64_t p, std::size_t count, std::uint64_t seed,
                       std::size_t max_attempts) {
  if (const auto* ps = std::get_if<PrimeScalars>(&a.field); ps && ps->p != p)
    throw Error(ErrorKind::InvalidRank, "AMap is defined over F_" + std::to_string(ps->p) +
                                            " but sampling was requested over F_" + std::to_string(p));
  if (count == 0) throw Error(ErrorKind::Dimension, "sample count must be at least 1");
  const auto eq = y2_equations(a, p);
  const auto& f = eq.matrix.field;
  SampleReport rep{a.n, a.k, p, seed, {}, {}, 0, false, {}};
  Sampler sampler{eq, f, rep, count, {}};
  if (max_attempts == 0) max_attempts = 50 * count + 100;

  // size of P^{k-1}(F_p)
  long double proj_points = 0;
  for (int i = 0; i < a.k; ++i) proj_points = proj_points * static_cast<long double>(p) + 1;

  if (a.n % 2 == 0 && a.k >= 2) {
    rep.strategy = "random lines in P(U), univariate Pfaffian roots";
    for (; rep.attempts < max_attempts && !sampler.full(); ++rep.attempts) {
      auto rng = stream(seed, rep.attempts);
      sampler.line_in_pu(rng);
    }
  } else if (a.n % 2 == 1 && a.k >= a.n) {
    rep.strategy = a.k == a.n ? "random lines in P(V) through the kernel incidence"
                              : "random lines in the kernel family of a random vector";
    std::vector<Matrix<PrimeField>> basis_forms;
    for (int r = 0; r < a.k; ++r) {
      std::vector<std::uint64_t> e(static_cast<std::size_t>(a.k), 0);
      e[static_cast<std::size_t>(r)] = 1;
      basis_forms.push_back(eq.matrix.evaluate(e));
    }
    for (; rep.attempts < max_attempts && !sampler.full(); ++rep.attempts) {
      auto rng = stream(seed, rep.attempts);
      sampler.kernel_search(rng, basis_forms);
    }
  } else if (proj_points <= 5.0e6L) {
    rep.strategy = "exhaustive enumeration of P(U)(F_p)";
    sampler.exhaustive();
  } else {
    rep.strategy = "none";
    rep.note = "no search strategy for this (n, k) at this prime; use a smaller prime for exhaustive enumeration";
  }
  rep.exhausted = rep.points.size() < count;
  if (rep.exhausted && rep.note.empty())
    rep.note = "found " + std::to_string(rep.points.size()) + " of " + std::to_string(count) +
               " requested points within the attempt budget";
  return rep;
}

double skew_rank_census(int n, int r, std::uint64_t p, std::size_t samples, std::uint64_t seed) {
  const PrimeField f(p);
  auto rng = stream(seed, 0x43454E53ULL);
  std::size_t hits = 0;
  const auto sz = static_cast<std::size_t>(n);
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix<PrimeField> m(sz, std::vector<std::uint64_t>(sz, 0));
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        m[i][j] = draw(rng, p);
        m[j][i] = f.neg(m[i][j]);
      }
    if (matrix_rank(f, std::move(m)) <= r) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

BigInt jacobian_ring_dimension(int ambient_dim, int degree, int m) {
  if (m < 0) return 0;
  const int vars = ambient_dim + 1;
  const int gen = degree - 1;
  if (gen == 0) return 0;
  BigInt dim = 0;
  for (int j = 0; j <= vars && j * gen <= m; ++j) {
    const BigInt term = binomial(vars, j) * binomial(m - j * gen + ambient_dim, ambient_dim);
    dim += (j % 2 == 0) ? term : BigInt(-term);
  }
  return dim;
}

HodgeDiamond hypersurface_hodge(int ambient_dim, int degree) {
  if (ambient_dim < 2 || degree < 1)
    throw Error(ErrorKind::Dimension, "hypersurface_hodge needs ambient_dim >= 2 and degree >= 1");
  const int dim = ambient_dim - 1;
  HodgeDiamond h(dim);
  for (int p = 0; p <= dim; ++p)
    if (2 * p != dim) h.set(p, p, 1);
  for (int q = 0; q <= dim; ++q) {
    const int p = dim - q;
    BigInt prim = jacobian_ring_dimension(ambient_dim, degree, (q + 1) * degree - ambient_dim - 1);
    if (p == q) prim += 1;
    h.set(p, q, prim);
  }
  return h;
}

std::vector<ExtRank> lg_ext_profile(int dim_x, int dim_a, int dim_b, int dim_ab) {
  if (dim_ab > std::min(dim_a, dim_b) || dim_a > dim_x || dim_b > dim_x || dim_ab < 0)
    throw Error(ErrorKind::Dimension, "lg_ext_profile: dimensions are not those of a clean intersection");
  const int a = dim_x - dim_a;
  const int r = dim_x - dim_a - dim_b + dim_ab;
  if (r < 0) throw Error(ErrorKind::Dimension, "lg_ext_profile: negative excess rank " + std::to_string(r));
  std::vector<ExtRank> out;
  for (int i = a - r; i <= a; ++i) out.push_back({i, binomial(r, a - i)});
  return out;
}

int lg_hom_shift(int dim_ab, int dim_b) { return dim_ab - dim_b; }

KnorrerShiftCheck knorrer_shift_check(int rk_s, int rk_v) {
  if (rk_s <= 0 || rk_v <= 0 || rk_s % 2 || rk_v % 2)
    throw Error(ErrorKind::Parity, "symplectic ranks must be positive and even");
  const int half_s = rk_s / 2;
  const int lgr = half_s * (half_s + 1) / 2;
  KnorrerShiftCheck c{};
  c.dim_x = lgr + rk_s * rk_v;                 // LGr(S) x Hom(S,V)
  c.dim_a = lgr + rk_s * (rk_v / 2);           // LGr(S) x Hom(S,L)
  c.dim_b = lgr + half_s * rk_v;               // Hom(S/Lambda, V)
  c.dim_ab = lgr + half_s * (rk_v / 2);        // Hom(S/Lambda, L)
  c.shift = lg_hom_shift(c.dim_ab, c.dim_b);
  const auto profile = lg_ext_profile(c.dim_x, c.dim_a, c.dim_b, c.dim_ab);
  c.surviving_degree = profile.front().degree;
  c.expected = -(rk_s * rk_v) / 4;
  c.consistent = c.shift == c.expected && c.surviving_degree == -c.shift;
  return c;
}

}  // namespace grpf
