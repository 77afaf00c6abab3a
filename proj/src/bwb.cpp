#include "grpf/bwb.hpp"

#include <algorithm>

namespace grpf {

BwbEngine::BwbEngine(int n) : rho_(rho(n)) {}

BwbEngine BwbEngine::with_rho(Weight shift) {
  if (shift.size() < 3) throw Error(ErrorKind::InvalidRank, "BWB shift must have length >= 3");
  BwbEngine e;
  e.rho_ = std::move(shift);
  return e;
}

BwbResult BwbEngine::compute(const GLWeight& w) const {
  if (w.n() != n())
    throw Error(ErrorKind::RankMismatch, "BWB engine for n = " + std::to_string(n()) +
                                             " given a weight of length " + std::to_string(w.n()));
  Weight v = w.flat();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += rho_[i];

  // Stable insertion sort into decreasing order; each swap is one inversion.
  int inversions = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] <= v[j]; --j) {
      if (v[j - 1] == v[j]) return {};
      std::swap(v[j - 1], v[j]);
      ++inversions;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rho_[i];
  auto dim = weyl_dimension(v);
  return {BwbCohomology{inversions, std::move(v), std::move(dim)}};
}

BwbResult bwb_cohomology(const GLWeight& w) { return BwbEngine(w.n()).compute(w); }

void CohomologyTable::add(int degree, const BigInt& dim) {
  if (dim == 0) return;
  auto& e = entries[degree];
  e += dim;
  if (e == 0) entries.erase(degree);
}

BigInt CohomologyTable::at(int degree) const {
  auto it = entries.find(degree);
  return it == entries.end() ? BigInt(0) : it->second;
}

BigInt KClassCohomology::euler_characteristic() const {
  BigInt chi = 0;
  for (const auto& [j, d] : positive.entries) chi += (j % 2 == 0) ? d : BigInt(-d);
  for (const auto& [j, d] : negative.entries) chi -= (j % 2 == 0) ? d : BigInt(-d);
  return chi;
}

KClassCohomology cohomology_of_kclass(const BwbEngine& engine, const KClass& c, int twist) {
  KClassCohomology out;
  for (auto& term : c.tensor_by_line(twist).terms()) {
    auto result = engine.compute(term.weight());
    if (result.cohomology) {
      const auto& h = *result.cohomology;
      if (term.multiplicity > 0)
        out.positive.add(h.degree, term.multiplicity * h.dimension);
      else
        out.negative.add(h.degree, -term.multiplicity * h.dimension);
    }
    out.provenance.push_back({std::move(term), std::move(result)});
  }
  return out;
}

KClassCohomology cohomology_of_kclass(const KClass& c, int twist) {
  return cohomology_of_kclass(BwbEngine(c.n()), c, twist);
}

BigInt euler_characteristic(const KClass& c, int twist) {
  return cohomology_of_kclass(c, twist).euler_characteristic();
}

GLWeight serre_dual_weight(const GLWeight& w) {
  const int n = w.n();
  const auto& s = w.s_block();
  std::vector<int> q(w.q_block().rbegin(), w.q_block().rend());
  for (int& x : q) x = -x;
  return GLWeight({-s[1] - n, -s[0] - n}, std::move(q));
}

}  // namespace grpf
