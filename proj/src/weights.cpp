#include "grpf/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grpf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::Dominance: return "dominance";
    case ErrorKind::RankMismatch: return "rank-mismatch";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::DegenerateFamily: return "degenerate-family";
    case ErrorKind::Integrity: return "integrity";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::Dominance, "partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::Dominance, "partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(length() ? parts_[0] : 0), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

void fill_partitions(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    fill_partitions(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int m, int max_rows, int max_cols) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> cur;
  fill_partitions(m, max_cols, max_rows, cur, out);
  return out;
}

bool is_dominant(std::span<const int> w) {
  return std::is_sorted(w.begin(), w.end(), std::greater<>());
}

GLWeight::GLWeight(std::array<int, 2> s_block, std::vector<int> q_block)
    : s_(s_block), q_(std::move(q_block)) {
  if (q_.empty()) throw Error(ErrorKind::InvalidRank, "GLWeight needs n >= 3");
  if (s_[0] < s_[1] || !is_dominant(q_))
    throw Error(ErrorKind::Dominance, "weight is not dominant for the (2, n-2) Levi");
}

GLWeight GLWeight::from_flat(std::span<const int> w) {
  if (w.size() < 3) throw Error(ErrorKind::InvalidRank, "GLWeight needs n >= 3");
  return GLWeight({w[0], w[1]}, std::vector<int>(w.begin() + 2, w.end()));
}

GLWeight GLWeight::trivial(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "GLWeight needs n >= 3");
  return GLWeight({0, 0}, std::vector<int>(static_cast<std::size_t>(n - 2), 0));
}

Weight GLWeight::flat() const {
  Weight w{s_[0], s_[1]};
  w.insert(w.end(), q_.begin(), q_.end());
  return w;
}

Weight rho(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "rho requires n >= 3, got " + std::to_string(n));
  Weight r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - i;
  return r;
}

BigInt weyl_dimension(std::span<const int> w) {
  if (!is_dominant(w)) throw Error(ErrorKind::Dominance, "weyl_dimension: weight is not dominant");
  BigInt num = 1, den = 1;
  const long n = static_cast<long>(w.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      num *= static_cast<long>(w[static_cast<std::size_t>(i)]) - w[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

bool PoincarePolynomial::palindromic() const {
  const auto d = coefficients.size();
  for (std::size_t i = 0; i < d; ++i)
    if (coefficients[i] != coefficients[d - 1 - i]) return false;
  return true;
}

BigInt PoincarePolynomial::sum() const {
  BigInt s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

PoincarePolynomial gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return {{0}};
  // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j]
  std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(k + 1));
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      const auto& prev_left = row[static_cast<std::size_t>(j - 1)];
      const auto& prev_same = row[static_cast<std::size_t>(j)];
      std::vector<BigInt> next(static_cast<std::size_t>(j * (m - j) + 1), 0);
      for (std::size_t e = 0; e < prev_left.size(); ++e) next[e] += prev_left[e];
      if (j <= m - 1)
        for (std::size_t e = 0; e < prev_same.size(); ++e) next[e + static_cast<std::size_t>(j)] += prev_same[e];
      row[static_cast<std::size_t>(j)] = std::move(next);
    }
  }
  return {row[static_cast<std::size_t>(k)]};
}

PoincarePolynomial grassmannian_poincare(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "Gr(2,n) requires n >= 3");
  return gaussian_binomial(n, 2);
}

}  // namespace grpf
