#include "grpf/oracles.hpp"

#include <algorithm>
#include <functional>

namespace grpf::oracle {

BigInt kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) total += c;
  if (total != lambda.size()) return 0;
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> left = content;
  const int max_val = static_cast<int>(content.size());
  BigInt count = 0;

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    const auto rr = static_cast<std::size_t>(r), cc = static_cast<std::size_t>(c);
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[rr][cc - 1]);
    if (r > 0) lo = std::max(lo, t[rr - 1][cc] + 1);
    for (int v = lo; v <= max_val; ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      --left[static_cast<std::size_t>(v - 1)];
      t[rr][cc] = v;
      fill(r, c + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    t[rr][cc] = 0;
  };
  fill(0, 0);
  return count;
}

namespace {

using Monomials = std::map<std::vector<int>, long long>;

// s_lambda in nvars variables, one monomial per SSYT content.
const Monomials& schur_polynomial(const Partition& lambda, int nvars) {
  static std::map<std::pair<Partition, int>, Monomials> cache;
  const auto key = std::make_pair(lambda, nvars);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Monomials poly;
  const int rows = lambda.length();
  if (rows <= nvars) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> fill = [&](int r, int c) {
      if (r == rows) {
        ++poly[exps];
        return;
      }
      if (c == lambda[r]) {
        fill(r + 1, 0);
        return;
      }
      const auto rr = static_cast<std::size_t>(r), cc = static_cast<std::size_t>(c);
      int lo = 1;
      if (c > 0) lo = std::max(lo, t[rr][cc - 1]);
      if (r > 0) lo = std::max(lo, t[rr - 1][cc] + 1);
      for (int v = lo; v <= nvars; ++v) {
        t[rr][cc] = v;
        ++exps[static_cast<std::size_t>(v - 1)];
        fill(r, c + 1);
        --exps[static_cast<std::size_t>(v - 1)];
      }
    };
    fill(0, 0);
  }
  return cache.emplace(key, std::move(poly)).first->second;
}

long long coefficient(const Monomials& m, const std::vector<int>& e) {
  auto it = m.find(e);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::map<Partition, BigInt> schur_product(const Partition& lambda, const Partition& mu, int nvars) {
  const auto& a = schur_polynomial(lambda, nvars);
  const auto& b = schur_polynomial(mu, nvars);
  // Only dominant monomials are needed to peel off Schur functions.
  Monomials product;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (is_dominant(e)) product[e] += ca * cb;
    }

  const int total = lambda.size() + mu.size();
  std::map<Partition, BigInt> out;
  std::vector<std::pair<Partition, long long>> found;
  // partitions_in_box lists partitions in decreasing lexicographic order, and
  // K_{rho,nu} != 0 forces rho >= nu in that order.
  for (const auto& nu : partitions_in_box(total, nvars, total)) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int i = 0; i < nu.length(); ++i) e[static_cast<std::size_t>(i)] = nu[i];
    long long c = coefficient(product, e);
    for (const auto& [rho, crho] : found) c -= crho * coefficient(schur_polynomial(rho, nvars), e);
    if (c != 0) {
      found.emplace_back(nu, c);
      out[nu] = c;
    }
  }
  return out;
}

}  // namespace grpf::oracle
