#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "grpf/common.hpp"

namespace grpf {

/// Plain GL(n) weight, entries may be negative.
using Weight = std::vector<int>;

/// Weakly decreasing list of non-negative integers; trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  /// Part i (0-based); zero past the end.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  Partition conjugate() const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of m with at most max_rows rows and first part at most max_cols.
std::vector<Partition> partitions_in_box(int m, int max_rows, int max_cols);

/// Weight of GL(n) split along the (2, n-2) Levi: entries are weights
/// with respect to S^dual and Q^dual respectively.
class GLWeight {
 public:
  GLWeight(std::array<int, 2> s_block, std::vector<int> q_block);
  static GLWeight from_flat(std::span<const int> w);
  /// Zero weight on Gr(2,n).
  static GLWeight trivial(int n);

  int n() const noexcept { return static_cast<int>(q_.size()) + 2; }
  const std::array<int, 2>& s_block() const noexcept { return s_; }
  const std::vector<int>& q_block() const noexcept { return q_; }
  Weight flat() const;

  auto operator<=>(const GLWeight&) const = default;

 private:
  std::array<int, 2> s_;
  std::vector<int> q_;
};

bool is_dominant(std::span<const int> w);

/// (n, n-1, ..., 1).
Weight rho(int n);

/// Dimension of the irreducible GL(w.size()) representation of highest weight w.
BigInt weyl_dimension(std::span<const int> w);

struct PoincarePolynomial {
  std::vector<BigInt> coefficients;  // coefficient of q^i

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const BigInt& operator[](int i) const { return coefficients.at(static_cast<std::size_t>(i)); }
  bool palindromic() const;
  BigInt sum() const;
};

/// Gaussian binomial [n choose k]_q.
PoincarePolynomial gaussian_binomial(int n, int k);

/// Poincare polynomial of Gr(2,n) in q = t^2; coefficient of q^p is h^{p,p}.
PoincarePolynomial grassmannian_poincare(int n);

}  // namespace grpf
