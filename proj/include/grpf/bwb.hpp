#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grpf/schur.hpp"
#include "grpf/weights.hpp"

namespace grpf {

/// Single nonzero cohomology group of an irreducible homogeneous bundle.
struct BwbCohomology {
  int degree;
  Weight representation;  // dominant GL(n) weight of H^degree
  BigInt dimension;
};

struct BwbResult {
  std::optional<BwbCohomology> cohomology;  // nullopt: all cohomology vanishes

  bool vanishes() const noexcept { return !cohomology.has_value(); }
};

/// Borel-Weil-Bott on Gr(2,n): add rho, vanish on a repeated entry, otherwise
/// sort (counting inversions) and subtract rho.
class BwbEngine {
 public:
  explicit BwbEngine(int n);
  /// Engine with an arbitrary shift vector. Only the fault-injection path uses this.
  static BwbEngine with_rho(Weight shift);

  int n() const noexcept { return static_cast<int>(rho_.size()); }
  const Weight& shift() const noexcept { return rho_; }
  BwbResult compute(const GLWeight& w) const;

 private:
  BwbEngine() = default;
  Weight rho_;
};

BwbResult bwb_cohomology(const GLWeight& w);

/// Degree -> dimension, zero entries omitted.
struct CohomologyTable {
  std::map<int, BigInt> entries;

  void add(int degree, const BigInt& dim);
  BigInt at(int degree) const;
  bool empty() const noexcept { return entries.empty(); }
  bool operator==(const CohomologyTable&) const = default;
};

struct TermCohomology {
  SchurTerm term;  // already twisted
  BwbResult result;
};

/// Cohomology of a virtual class: positive and negative parts kept apart.
struct KClassCohomology {
  CohomologyTable positive;
  CohomologyTable negative;
  std::vector<TermCohomology> provenance;

  BigInt euler_characteristic() const;
};

KClassCohomology cohomology_of_kclass(const KClass& c, int twist);
KClassCohomology cohomology_of_kclass(const BwbEngine& engine, const KClass& c, int twist);

BigInt euler_characteristic(const KClass& c, int twist);

/// Weight of E^dual (x) K_Gr for the bundle E of weight w.
GLWeight serre_dual_weight(const GLWeight& w);

}  // namespace grpf
