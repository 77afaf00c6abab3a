#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "grpf/weights.hpp"

namespace grpf {

/// Irreducible homogeneous bundle on Gr(2,n) with a multiplicity:
/// Sigma^{s_weight} S^dual (x) Sigma^{q_weight} Q^dual.
struct SchurTerm {
  std::array<int, 2> s_weight;
  std::vector<int> q_weight;
  BigInt multiplicity;

  GLWeight weight() const { return GLWeight(s_weight, q_weight); }
  /// Rank of the bundle itself (multiplicity ignored).
  BigInt bundle_rank() const;
};

/// s_weight of Sym^l S (x) (det S)^m, the bundle the window sets label (l, m).
std::array<int, 2> sym_det_weight(int l, int m);

/// Formal integer combination of irreducible homogeneous bundles on Gr(2,n).
/// Always normalized: like terms merged, zero multiplicities dropped.
class KClass {
 public:
  explicit KClass(int n);
  static KClass trivial(int n);
  static KClass irreducible(const GLWeight& w, BigInt multiplicity = 1);
  /// O(t) = (det S^dual)^t.
  static KClass line_bundle(int n, int t);

  int n() const noexcept { return n_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<SchurTerm> terms() const;

  void add(const GLWeight& w, const BigInt& multiplicity);

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  KClass operator+(const KClass& other) const;
  KClass operator-(const KClass& other) const;
  KClass scaled(const BigInt& factor) const;

  /// Twist by O(t): adds t to both entries of every s_weight.
  KClass tensor_by_line(int t) const;
  /// Negate and reverse both blocks.
  KClass dual() const;

  /// Sum of multiplicity times bundle rank.
  BigInt virtual_rank() const;

  bool operator==(const KClass&) const = default;

 private:
  using Key = std::pair<std::array<int, 2>, std::vector<int>>;
  void check_same_n(const KClass& other) const;

  int n_;
  std::map<Key, BigInt> terms_;
};

struct CGSummand {
  int sym_power;
  int det_power;
  auto operator<=>(const CGSummand&) const = default;
};

/// Sym^l (x) Sym^lp = sum_{i=0}^{min(l,lp)} Sym^{l+lp-2i} (x) det^i for a rank-2 bundle.
std::vector<CGSummand> clebsch_gordan_rank2(int l, int lp);

/// Littlewood-Richardson product s_lambda * s_mu restricted to partitions with
/// at most max_rows rows, by enumerating LR tableaux of shape nu/lambda and content mu.
std::vector<std::pair<Partition, BigInt>> littlewood_richardson(const Partition& lambda,
                                                                const Partition& mu,
                                                                int max_rows);

/// Exterior power of the cotangent bundle S (x) Q^dual of Gr(2,n) via Cauchy:
/// sum over lambda |- m with at most 2 rows and lambda_1 <= n-2 of
/// Sigma^lambda S (x) Sigma^{lambda'} Q^dual. Empty class when m is out of range.
KClass cauchy_exterior_cotangent(int n, int m);

}  // namespace grpf
