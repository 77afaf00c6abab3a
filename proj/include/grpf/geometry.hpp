#pragma once

#include <compare>
#include <set>
#include <string>

#include "grpf/weights.hpp"

namespace grpf {

/// n = dim V, k = dim U. k = 0 is accepted as the degenerate "no section" case.
struct ModelParams {
  int n;
  int k;

  /// Throws InvalidRank naming the violated bound.
  static ModelParams make(int n, int k);
  void validate() const;
  bool n_even() const noexcept { return n % 2 == 0; }
};

enum class VarietyType { Fano, CalabiYau, GeneralType };
const char* to_string(VarietyType t);

struct Classification {
  int dim_y1;
  int dim_y2;
  VarietyType y1_type;
  VarietyType y2_type;
  bool y1_empty;         // dim_y1 < 0
  bool y2_empty;         // dim_y2 < 0
  bool y2_smoothable;    // generic Y2 avoids the singular locus of Pf
  bool theorem_applies;  // k <= min(n,10) (n odd) or k <= min(n/2,6) (n even)
  bool window_inclusion; // T is contained in S
};

Classification classify(const ModelParams& p);

/// Codimension C(n-r, 2) of {rank <= r} among skew forms on an n-dimensional space.
int pfaffian_stratum_codim(int n, int r);

/// Bundle Sym^l S (x) (det S)^m.
struct WindowLabel {
  int l;
  int m;
  auto operator<=>(const WindowLabel&) const = default;
};

using WindowSet = std::set<WindowLabel>;

/// L = (n-1)/2 for n odd, n/2 for n even.
int window_L(int n);

WindowSet window_set_S(int n);
WindowSet window_set_T(int n, int k);

struct WindowSets {
  WindowSet S;
  WindowSet T;
  bool inclusion;  // literal subset test, cross-checked with the closed form
};

/// Closed-form test: k <= n for n odd, k <= n/2 for n even.
bool window_inclusion_closed_form(const ModelParams& p);

WindowSets window_sets(const ModelParams& p);

/// Labels (l, m) with (l, m + t) in S for every t in [0, k].
WindowSet orthogonal_rectangle(const ModelParams& p);

/// Bundle weight (w.r.t. S^dual, Q^dual) of Sym^l S (x) (det S)^m on Gr(2,n).
GLWeight label_weight(int n, const WindowLabel& label);

std::string to_string(const WindowLabel& label);

}  // namespace grpf
