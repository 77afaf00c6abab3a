#include "grpf/geometry.hpp"

#include <algorithm>

#include "grpf/schur.hpp"

namespace grpf {

ModelParams ModelParams::make(int n, int k) {
  ModelParams p{n, k};
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "bound violated: n >= 3 (got n = " + std::to_string(n) + ")");
  const long max_k = static_cast<long>(n) * (n - 1) / 2;
  if (k < 0) throw Error(ErrorKind::InvalidRank, "bound violated: k >= 0 (got k = " + std::to_string(k) + ")");
  if (k > max_k)
    throw Error(ErrorKind::InvalidRank, "bound violated: k <= (n choose 2) = " + std::to_string(max_k) +
                                            " (got k = " + std::to_string(k) + ")");
}

const char* to_string(VarietyType t) {
  switch (t) {
    case VarietyType::Fano: return "Fano";
    case VarietyType::CalabiYau: return "CalabiYau";
    case VarietyType::GeneralType: return "GeneralType";
  }
  return "?";
}

namespace {

VarietyType trichotomy(int k, int threshold, bool fano_below) {
  if (k == threshold) return VarietyType::CalabiYau;
  const bool below = k < threshold;
  return below == fano_below ? VarietyType::Fano : VarietyType::GeneralType;
}

}  // namespace

Classification classify(const ModelParams& p) {
  p.validate();
  const int n = p.n, k = p.k;
  Classification c{};
  c.dim_y1 = 2 * (n - 2) - k;
  // rank drops n -> n-2 (codim 1) or n-1 -> n-3 (codim 3)
  c.dim_y2 = k - 1 - (p.n_even() ? 1 : 3);
  c.y1_empty = c.dim_y1 < 0;
  c.y2_empty = c.dim_y2 < 0;
  // K_{Y1} = O(k - n)
  c.y1_type = trichotomy(k, n, /*fano_below=*/true);
  c.y2_type = p.n_even() ? trichotomy(k, n / 2, /*fano_below=*/false)
                         : trichotomy(k, n, /*fano_below=*/false);
  // ambient codimension of Sing(Pf): C(4,2) = 6 for n even, C(5,2) = 10 for n odd
  c.y2_smoothable = p.n_even() ? k <= 6 : k <= 10;
  c.theorem_applies = p.n_even() ? k <= std::min(n / 2, 6) : k <= std::min(n, 10);
  c.window_inclusion = window_inclusion_closed_form(p);
  return c;
}

int pfaffian_stratum_codim(int n, int r) {
  if (r % 2 != 0) throw Error(ErrorKind::Parity, "skew forms have even rank; got r = " + std::to_string(r));
  if (r < 0 || r > n - 1)
    throw Error(ErrorKind::Dimension, "target rank must lie in [0, n-1]; got r = " + std::to_string(r));
  return (n - r) * (n - r - 1) / 2;
}

int window_L(int n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

WindowSet window_set_S(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidRank, "window sets need n >= 3");
  const int L = window_L(n);
  WindowSet s;
  if (n % 2 == 1) {
    for (int l = 0; l < L; ++l)
      for (int m = 0; m < n; ++m) s.insert({l, m});
  } else {
    for (int l = 0; l <= L - 2; ++l)
      for (int m = 0; m < n; ++m) s.insert({l, m});
    for (int m = 0; m < n / 2; ++m) s.insert({L - 1, m});
  }
  return s;
}

WindowSet window_set_T(int n, int k) {
  const int L = window_L(n);
  WindowSet t;
  for (int l = 0; l < L; ++l)
    for (int m = 0; m < k; ++m) t.insert({l, m});
  return t;
}

bool window_inclusion_closed_form(const ModelParams& p) {
  return p.n_even() ? p.k <= p.n / 2 : p.k <= p.n;
}

WindowSets window_sets(const ModelParams& p) {
  p.validate();
  WindowSets w{window_set_S(p.n), window_set_T(p.n, p.k), false};
  w.inclusion = std::includes(w.S.begin(), w.S.end(), w.T.begin(), w.T.end());
  if (w.inclusion != window_inclusion_closed_form(p))
    throw Error(ErrorKind::Integrity, "window inclusion: subset test disagrees with the closed form at n = " +
                                          std::to_string(p.n) + ", k = " + std::to_string(p.k));
  return w;
}

WindowSet orthogonal_rectangle(const ModelParams& p) {
  p.validate();
  const auto S = window_set_S(p.n);
  WindowSet out;
  for (const auto& label : S) {
    bool ok = true;
    for (int t = 0; t <= p.k && ok; ++t) ok = S.contains({label.l, label.m + t});
    if (ok) out.insert(label);
  }
  return out;
}

GLWeight label_weight(int n, const WindowLabel& label) {
  return GLWeight(sym_det_weight(label.l, label.m), std::vector<int>(static_cast<std::size_t>(n - 2), 0));
}

std::string to_string(const WindowLabel& label) {
  return "(" + std::to_string(label.l) + "," + std::to_string(label.m) + ")";
}

}  // namespace grpf
