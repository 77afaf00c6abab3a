#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "grpf/field.hpp"
#include "grpf/hodge.hpp"
#include "grpf/linalg.hpp"
#include "grpf/polynomial.hpp"

namespace grpf {

// ---------------------------------------------------------------------------
// The family of 2-forms A^dual : U -> wedge^2 V^dual
// ---------------------------------------------------------------------------

struct RationalScalars {
  bool operator==(const RationalScalars&) const = default;
};
struct PrimeScalars {
  std::uint64_t p;
  bool operator==(const PrimeScalars&) const = default;
};
using FieldSpec = std::variant<RationalScalars, PrimeScalars>;

/// k x C(n,2) integer matrix; row r is the skew form A^dual(u_r) in
/// lexicographic (i<j) coordinates.
struct AMap {
  int n;
  int k;
  FieldSpec field;
  std::vector<std::vector<BigInt>> matrix;

  /// Shape checks only; full rank is checked by build_skew_matrix.
  void validate_shape() const;
};

/// Column of the pair (i, j), 0-based, i < j, in lexicographic order.
std::size_t pair_index(int n, int i, int j);

/// Uniform random AMap over F_p of full rank k, reproducible from seed.
AMap random_amap(int n, int k, std::uint64_t p, std::uint64_t seed);

/// n x n skew matrix of linear forms in u_1..u_k.
template <class Field>
struct SkewLinearMatrix {
  Field field;
  int n;
  int k;
  std::vector<std::vector<Polynomial<Field>>> entries;

  /// Numeric matrix at the point u.
  Matrix<Field> evaluate(std::span<const typename Field::value_type> u) const {
    Matrix<Field> m(static_cast<std::size_t>(n),
                    std::vector<typename Field::value_type>(static_cast<std::size_t>(n), field.zero()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = entries[i][j].evaluate(u);
    return m;
  }
};

/// Rank of the AMap coefficient matrix over the given field.
template <class Field>
int amap_rank(const Field& f, const AMap& a) {
  Matrix<Field> m;
  for (const auto& row : a.matrix) {
    std::vector<typename Field::value_type> r;
    for (const auto& x : row) r.push_back(f.from_int(x));
    m.push_back(std::move(r));
  }
  return matrix_rank(f, std::move(m));
}

/// Entry (i,j), i<j, is sum_r matrix[r][(i,j)] u_r; skew-extended.
/// Throws DegenerateFamily when the rows are dependent over the field.
template <class Field>
SkewLinearMatrix<Field> build_skew_matrix(const Field& f, const AMap& a) {
  a.validate_shape();
  if (amap_rank(f, a) < a.k)
    throw Error(ErrorKind::DegenerateFamily, "AMap matrix has rank below k = " + std::to_string(a.k));
  SkewLinearMatrix<Field> s{f, a.n, a.k, {}};
  s.entries.assign(static_cast<std::size_t>(a.n),
                   std::vector<Polynomial<Field>>(static_cast<std::size_t>(a.n), Polynomial<Field>(f, a.k)));
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      const auto col = pair_index(a.n, i, j);
      Polynomial<Field> e(f, a.k);
      for (int r = 0; r < a.k; ++r) {
        const auto c = f.from_int(a.matrix[static_cast<std::size_t>(r)][col]);
        if (!f.is_zero(c)) e += Polynomial<Field>::variable(f, a.k, r).scaled(c);
      }
      s.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e.scaled(f.neg(f.one()));
      s.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
    }
  return s;
}

namespace detail {

// Pfaffian of the principal submatrix on `mask` by expansion along its first
// index, memoized on index subsets. Division-free, so it works over any ring.
template <class T, class Entry, class Add, class Sub, class Mul>
T pfaffian_expand(std::uint64_t full_mask, Entry entry, const T& zero, const T& one, Add add, Sub sub,
                  Mul mul) {
  std::unordered_map<std::uint64_t, T> memo;
  std::function<T(std::uint64_t)> rec = [&](std::uint64_t mask) -> T {
    if (mask == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int i = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    T acc = zero;
    bool plus = true;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      T term = mul(entry(i, j), rec(rest & ~(std::uint64_t{1} << j)));
      acc = plus ? add(acc, term) : sub(acc, term);
      plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(full_mask);
}

inline std::uint64_t mask_without(int n, int skip) {
  std::uint64_t m = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  if (skip >= 0) m &= ~(std::uint64_t{1} << skip);
  return m;
}

}  // namespace detail

/// Pfaffian of a numeric skew matrix (n even).
template <class Field>
typename Field::value_type pfaffian(const Field& f, const Matrix<Field>& m) {
  const int n = static_cast<int>(m.size());
  if (n % 2 != 0) throw Error(ErrorKind::Parity, "Pfaffian of an odd-size matrix; use submaximal Pfaffians");
  using S = typename Field::value_type;
  return detail::pfaffian_expand<S>(
      detail::mask_without(n, -1), [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; },
      f.zero(), f.one(), [&](const S& a, const S& b) { return f.add(a, b); },
      [&](const S& a, const S& b) { return f.sub(a, b); }, [&](const S& a, const S& b) { return f.mul(a, b); });
}

template <class Field>
Polynomial<Field> pfaffian_of_principal(const SkewLinearMatrix<Field>& s, std::uint64_t mask) {
  using P = Polynomial<Field>;
  return detail::pfaffian_expand<P>(
      mask, [&](int i, int j) { return s.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; },
      P(s.field, s.k), P::constant(s.field, s.k, s.field.one()), [](const P& a, const P& b) { return a + b; },
      [](const P& a, const P& b) { return a - b; }, [](const P& a, const P& b) { return a * b; });
}

/// Pfaffian of the family (n even): a form of degree n/2 in u.
template <class Field>
Polynomial<Field> pfaffian_polynomial(const SkewLinearMatrix<Field>& s) {
  if (s.n % 2 != 0) throw Error(ErrorKind::Parity, "Pfaffian of an odd-size matrix; use submaximal Pfaffians");
  return pfaffian_of_principal(s, detail::mask_without(s.n, -1));
}

/// The n principal (n-1)-Pfaffians, deleting row/column i (n odd).
template <class Field>
std::vector<Polynomial<Field>> submaximal_pfaffians(const SkewLinearMatrix<Field>& s) {
  if (s.n % 2 == 0) throw Error(ErrorKind::Parity, "submaximal Pfaffians are for odd n");
  std::vector<Polynomial<Field>> out;
  for (int i = 0; i < s.n; ++i) out.push_back(pfaffian_of_principal(s, detail::mask_without(s.n, i)));
  return out;
}

// ---------------------------------------------------------------------------
// Y2 over F_p
// ---------------------------------------------------------------------------

/// Defining equations of Y2 over F_p with their gradients.
struct Y2Equations {
  SkewLinearMatrix<PrimeField> matrix;
  std::vector<Polynomial<PrimeField>> equations;
  std::vector<std::vector<Polynomial<PrimeField>>> gradients;  // [equation][variable]
  int codimension;  // 1 for n even, 3 for n odd
};

Y2Equations y2_equations(const AMap& a, std::uint64_t p);

struct SamplePoint {
  std::vector<std::uint64_t> coordinates;  // normalized: first nonzero entry is 1
  int rank;
  int kernel_dim;
  int jacobian_rank;
  bool smooth_at;
};

/// Rank, kernel and Jacobian data at u; u must lie on Y2.
SamplePoint analyze_point(const Y2Equations& eq, std::span<const std::uint64_t> u);

/// True when A(u) has rank below n-1 (n even: < n; n odd: <= n-3).
bool on_y2(const Y2Equations& eq, std::span<const std::uint64_t> u);

struct SampleReport {
  int n;
  int k;
  std::uint64_t p;
  std::uint64_t seed;
  std::string strategy;
  std::vector<SamplePoint> points;
  std::size_t attempts = 0;
  bool exhausted = false;
  std::string note;

  std::size_t smooth_count() const;
};

/// Randomized search for points of Y2(F_p). Deterministic in (a, p, count, seed).
SampleReport sample_y2(const AMap& a, std::uint64_t p, std::size_t count, std::uint64_t seed,
                       std::size_t max_attempts = 0);

/// Fraction of uniformly random n x n skew matrices over F_p with rank <= r.
double skew_rank_census(int n, int r, std::uint64_t p, std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hypersurface Hodge numbers and Landau-Ginzburg bookkeeping
// ---------------------------------------------------------------------------

/// Dimension of the degree-m piece of the Jacobian ring of a smooth degree-d
/// hypersurface in P^N: coefficient of t^m in ((1 - t^{d-1}) / (1 - t))^{N+1}.
BigInt jacobian_ring_dimension(int ambient_dim, int degree, int m);

/// Hodge diamond of a smooth degree-d hypersurface in P^N.
HodgeDiamond hypersurface_hodge(int ambient_dim, int degree);

struct ExtRank {
  int degree;
  BigInt rank;
};

/// Ranks of ext^i(O_A, O_B) for clean intersections: C(r, a-i) for a-r <= i <= a,
/// a = codim A, r = excess rank.
std::vector<ExtRank> lg_ext_profile(int dim_x, int dim_a, int dim_b, int dim_ab);

/// Homological shift dim(A cap B) - dim B of the surviving morphism sheaf.
int lg_hom_shift(int dim_ab, int dim_b);

struct KnorrerShiftCheck {
  int dim_x, dim_a, dim_b, dim_ab;
  int shift;           // lg_hom_shift
  int surviving_degree; // a - r from lg_ext_profile
  int expected;        // -(1/4) rk S * rk V
  bool consistent;
};

/// The Lagrangian setting LGr(S) x Hom(S,V) with A = LGr(S) x Hom(S,L) and
/// B = Hom(S/Lambda, V); rk S and rk V even.
KnorrerShiftCheck knorrer_shift_check(int rk_s, int rk_v);

}  // namespace grpf
