#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grpf/bwb.hpp"
#include "grpf/geometry.hpp"
#include "grpf/hodge.hpp"
#include "grpf/schur.hpp"

namespace grpf {

// ---------------------------------------------------------------------------
// Koszul calculus on Y1 = zero locus of a section of O(1) (x) U^dual on Gr(2,n)
// ---------------------------------------------------------------------------

/// chi(Y1, c|Y1) = sum_a (-1)^a C(k,a) chi(Gr, c(-a)).
BigInt restricted_euler(const ModelParams& p, const KClass& c);

/// K-theory class of Omega^deg_{Y1} on Gr: lambda^deg(Omega_Gr - O(-1)^k)
/// = sum_i (-1)^i C(k+i-1, i) Lambda^{deg-i} Omega_Gr (x) O(-i).
KClass omega_p_class(const ModelParams& p, int deg);

enum class ResultMode { Exact, ExactGeneric, Bounds };
const char* to_string(ResultMode mode);

struct DegreeBounds {
  BigInt lower;
  BigInt upper;
  bool exact() const { return lower == upper; }
};

/// Page-one entry H^b(Gr, F(-a))^{C(k,a)}, contributing to total degree b - a.
struct KoszulEntry {
  int a;
  int b;
  BigInt dimension;
  int total_degree() const { return b - a; }
};

struct CohomologyResult {
  ResultMode mode;
  std::map<int, DegreeBounds> degrees;  // only degrees with upper > 0
  std::vector<KoszulEntry> page;
  std::string reasoning;

  BigInt lower(int degree) const;
  BigInt upper(int degree) const;
};

/// H^*(Y1, F|Y1) for an honest (non-virtual) bundle class F via the Koszul
/// spectral sequence. Exact when degeneration is forced by position, or when
/// only one non-negative total degree carries page-one classes.
CohomologyResult restricted_cohomology(const ModelParams& p, const KClass& f);

/// Tangent bundle S^dual (x) Q of Gr(2,n).
KClass tangent_class(int n);

struct TangentResult {
  ResultMode mode;
  BigInt lower;
  BigInt upper;
  CohomologyResult ambient_tangent;  // H^*(Y1, T_Gr|Y1)
  CohomologyResult normal;           // H^*(Y1, O(1)^k|Y1)
  std::vector<std::string> assumptions;

  bool exact() const { return lower == upper; }
};

/// h^1(T_{Y1}) from 0 -> T_Y1 -> T_Gr|Y1 -> O(1)^k|Y1 -> 0.
TangentResult h1_tangent_y1(const ModelParams& p);

struct GrassSectionHodge {
  ModelParams params;
  HodgeDiamond diamond;
  std::vector<BigInt> chi;   // chi(Y1, Omega^p) for p = 0..dim
  bool heuristic;            // outside the theorem's (n, k) range
  bool lefschetz_applicable; // Y1 is a complete intersection of ample divisors
};

/// Off-middle entries from the Grassmannian by Lefschetz, middle row solved
/// from chi(Omega^p_{Y1}). Throws Integrity on an inconsistent system.
GrassSectionHodge hodge_diamond_y1(const ModelParams& p);

// ---------------------------------------------------------------------------
// Exceptional collection and Ext-vanishing checks
// ---------------------------------------------------------------------------

/// E^dual (x) F (x) O(t) for E = Sym^l S(-m), F = Sym^l' S(-m'), decomposed by Clebsch-Gordan.
KClass rhom_class(int n, const WindowLabel& source, const WindowLabel& target, int t = 0);

/// Ext^*(E, F(t)) on Gr(2,n).
CohomologyTable rhom(int n, const WindowLabel& source, const WindowLabel& target, int t = 0);

struct CollectionFailure {
  WindowLabel source;
  WindowLabel target;
  int degree;
  Weight weight;
  std::string reason;
};

struct CollectionReport {
  int n;
  std::vector<WindowLabel> order;          // m descending, then l descending
  std::vector<std::vector<BigInt>> hom;    // hom[i][j] = dim Hom(order[i], order[j])
  std::size_t pairs_checked = 0;
  std::vector<CollectionFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Ext^{>0} = 0 for every ordered pair, RHom(E_j, E_i) = 0 for j after i,
/// and End(E) = C for every member.
CollectionReport verify_strong_exceptional(int n, const WindowSet& set);

struct PairVerdict {
  bool vanishes_for_all_t = true;
  std::optional<int> counterexample_t;
  std::optional<int> counterexample_degree;
  std::size_t summands = 0;
  std::size_t intervals = 0;  // t-intervals decided across all summands
};

/// Decides Ext^{>0}(E, F(t)) = 0 for all t >= 0. Entries of the BWB weight are
/// affine in t; the ordering pattern of weight + rho only changes at finitely
/// many critical t, so one representative per interval decides the question.
PairVerdict higher_vanishing_all_t(int n, const WindowLabel& source, const WindowLabel& target);

struct LemmaFailure {
  WindowLabel source;
  WindowLabel target;
  int t;
  int degree;
};

struct LemmaReport {
  int n;
  std::size_t pairs = 0;
  std::size_t summands = 0;
  std::size_t intervals = 0;
  std::size_t case_top_row = 0;    // l' = n/2 - 1
  std::size_t case_lower_rows = 0; // l' <= n/2 - 2
  std::vector<LemmaFailure> failures;

  bool vanishes_for_all_t() const { return failures.empty(); }
};

/// Runs higher_vanishing_all_t over every ordered pair of S (n even).
LemmaReport lemma_vanishing_all_t(int n);

}  // namespace grpf
