#include "grpf/schur.hpp"

#include <algorithm>

namespace grpf {

BigInt SchurTerm::bundle_rank() const {
  return weyl_dimension(s_weight) * weyl_dimension(q_weight);
}

std::array<int, 2> sym_det_weight(int l, int m) { return {-m, -l - m}; }

KClass::KClass(int n) : n_(n) {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "KClass requires n >= 3");
}

KClass KClass::trivial(int n) { return irreducible(GLWeight::trivial(n)); }

KClass KClass::irreducible(const GLWeight& w, BigInt multiplicity) {
  KClass c(w.n());
  c.add(w, multiplicity);
  return c;
}

KClass KClass::line_bundle(int n, int t) {
  return irreducible(GLWeight({t, t}, std::vector<int>(static_cast<std::size_t>(n - 2), 0)));
}

std::vector<SchurTerm> KClass::terms() const {
  std::vector<SchurTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, mult] : terms_) out.push_back({key.first, key.second, mult});
  return out;
}

void KClass::add(const GLWeight& w, const BigInt& multiplicity) {
  if (w.n() != n_) throw Error(ErrorKind::RankMismatch, "KClass term has the wrong n");
  if (multiplicity == 0) return;
  Key key{w.s_block(), w.q_block()};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), multiplicity);
    return;
  }
  it->second += multiplicity;
  if (it->second == 0) terms_.erase(it);
}

void KClass::check_same_n(const KClass& other) const {
  if (other.n_ != n_)
    throw Error(ErrorKind::RankMismatch, "KClass arithmetic with n = " + std::to_string(n_) +
                                             " and n = " + std::to_string(other.n_));
}

KClass& KClass::operator+=(const KClass& other) {
  check_same_n(other);
  for (const auto& [key, mult] : other.terms_) add(GLWeight(key.first, key.second), mult);
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  check_same_n(other);
  for (const auto& [key, mult] : other.terms_) add(GLWeight(key.first, key.second), -mult);
  return *this;
}

KClass KClass::operator+(const KClass& other) const {
  KClass r = *this;
  r += other;
  return r;
}

KClass KClass::operator-(const KClass& other) const {
  KClass r = *this;
  r -= other;
  return r;
}

KClass KClass::scaled(const BigInt& factor) const {
  KClass r(n_);
  if (factor == 0) return r;
  for (const auto& [key, mult] : terms_) r.terms_.emplace(key, mult * factor);
  return r;
}

KClass KClass::tensor_by_line(int t) const {
  KClass r(n_);
  for (const auto& [key, mult] : terms_)
    r.terms_.emplace(Key{{key.first[0] + t, key.first[1] + t}, key.second}, mult);
  return r;
}

KClass KClass::dual() const {
  KClass r(n_);
  for (const auto& [key, mult] : terms_) {
    std::vector<int> q(key.second.rbegin(), key.second.rend());
    for (int& x : q) x = -x;
    r.terms_.emplace(Key{{-key.first[1], -key.first[0]}, std::move(q)}, mult);
  }
  return r;
}

BigInt KClass::virtual_rank() const {
  BigInt r = 0;
  for (const auto& t : terms()) r += t.multiplicity * t.bundle_rank();
  return r;
}

std::vector<CGSummand> clebsch_gordan_rank2(int l, int lp) {
  std::vector<CGSummand> out;
  if (l < 0 || lp < 0) return out;
  for (int i = 0; i <= std::min(l, lp); ++i) out.push_back({l + lp - 2 * i, i});
  return out;
}

namespace {

// Adds the boxes labelled `label` (a horizontal strip of mu[label-1] boxes) to
// `shape`, row by row, subject to the lattice-word condition
//   #label in rows <= r  <=  #(label-1) in rows <= r-1.
// counts[j][r] holds the number of entries j+1 placed in row r.
struct LrSearch {
  const Partition& mu;
  int max_rows;
  std::map<Partition, BigInt> result;

  void place_label(int label, std::vector<int>& shape, std::vector<std::vector<int>>& counts) {
    if (label > mu.length()) {
      result[Partition(shape)] += 1;
      return;
    }
    std::vector<int> row_counts(static_cast<std::size_t>(max_rows), 0);
    fill_row(label, 0, mu[label - 1], shape, counts, row_counts, 0);
  }

  void fill_row(int label, int row, int remaining, std::vector<int>& shape,
                std::vector<std::vector<int>>& counts, std::vector<int>& row_counts,
                int cumulative) {
    if (remaining == 0) {
      counts.push_back(row_counts);
      std::vector<int> saved = shape;
      for (int r = 0; r < max_rows; ++r) shape[static_cast<std::size_t>(r)] += row_counts[static_cast<std::size_t>(r)];
      place_label(label + 1, shape, counts);
      shape = std::move(saved);
      counts.pop_back();
      return;
    }
    if (row >= max_rows) return;
    const auto r = static_cast<std::size_t>(row);
    // horizontal strip: new row length may not exceed the old length of the row above
    int cap = remaining;
    if (row > 0) cap = std::min(cap, shape[r - 1] - shape[r]);
    // lattice condition against the previous label
    if (label > 1) {
      int prev_upto = 0;
      for (int rr = 0; rr < row; ++rr) prev_upto += counts[static_cast<std::size_t>(label - 2)][static_cast<std::size_t>(rr)];
      cap = std::min(cap, prev_upto - cumulative);
    }
    for (int a = std::max(cap, 0); a >= 0; --a) {
      row_counts[r] = a;
      fill_row(label, row + 1, remaining - a, shape, counts, row_counts, cumulative + a);
    }
    row_counts[r] = 0;
  }
};

}  // namespace

std::vector<std::pair<Partition, BigInt>> littlewood_richardson(const Partition& lambda,
                                                                const Partition& mu,
                                                                int max_rows) {
  std::vector<std::pair<Partition, BigInt>> out;
  if (max_rows < lambda.length()) return out;
  LrSearch search{mu, max_rows, {}};
  std::vector<int> shape(static_cast<std::size_t>(max_rows), 0);
  for (int i = 0; i < lambda.length(); ++i) shape[static_cast<std::size_t>(i)] = lambda[i];
  std::vector<std::vector<int>> counts;
  search.place_label(1, shape, counts);
  for (auto& [nu, c] : search.result) out.emplace_back(nu, c);
  return out;
}

KClass cauchy_exterior_cotangent(int n, int m) {
  KClass c(n);
  const int q_len = n - 2;
  for (const auto& lambda : partitions_in_box(m, 2, q_len)) {
    // Sigma^lambda S has S^dual-weight (-lambda_2, -lambda_1)
    std::vector<int> q(static_cast<std::size_t>(q_len), 0);
    const auto conj = lambda.conjugate();
    for (int i = 0; i < conj.length(); ++i) q[static_cast<std::size_t>(i)] = conj[i];
    c.add(GLWeight({-lambda[1], -lambda[0]}, std::move(q)), 1);
  }
  return c;
}

}  // namespace grpf
