#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grpf/common.hpp"

namespace grpf {

/// h^{p,q} table of a smooth projective variety of dimension `dim`.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int dim);

  int dim() const noexcept { return dim_; }
  /// Zero outside 0 <= p, q <= dim and for unset entries.
  BigInt operator()(int p, int q) const;
  void set(int p, int q, BigInt value);

  /// h^{p, dim-p} for p = dim..0, i.e. (h^{dim,0}, ..., h^{0,dim}).
  std::vector<BigInt> middle_row() const;
  /// Sum over q of (-1)^q h^{p,q}.
  BigInt chi_p(int p) const;
  /// Sum of (-1)^{p+q} h^{p,q}.
  BigInt topological_euler() const;

  struct Violation {
    std::string invariant;
    int p;
    int q;
  };
  /// Hodge symmetry, Serre duality, h^{0,0} = 1, non-negativity.
  std::vector<Violation> integrity_violations() const;
  bool integral() const { return integrity_violations().empty(); }

  std::string str() const;

 private:
  int dim_;
  std::map<std::pair<int, int>, BigInt> h_;
};

}  // namespace grpf
