#include "grpf/sections.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grpf {

BigInt restricted_euler(const ModelParams& p, const KClass& c) {
  BigInt chi = 0;
  for (int a = 0; a <= p.k; ++a) {
    BigInt term = binomial(p.k, a) * euler_characteristic(c, -a);
    chi += (a % 2 == 0) ? term : BigInt(-term);
  }
  return chi;
}

KClass omega_p_class(const ModelParams& p, int deg) {
  KClass out(p.n);
  for (int i = 0; i <= deg; ++i) {
    const BigInt coeff = (i == 0 ? BigInt(1) : binomial(p.k + i - 1, i)) * ((i % 2 == 0) ? 1 : -1);
    if (coeff == 0) continue;
    out += cauchy_exterior_cotangent(p.n, deg - i).tensor_by_line(-i).scaled(coeff);
  }
  return out;
}

const char* to_string(ResultMode mode) {
  switch (mode) {
    case ResultMode::Exact: return "Exact";
    case ResultMode::ExactGeneric: return "Exact-generic";
    case ResultMode::Bounds: return "Bounds";
  }
  return "?";
}

BigInt CohomologyResult::lower(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? BigInt(0) : it->second.lower;
}

BigInt CohomologyResult::upper(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? BigInt(0) : it->second.upper;
}

CohomologyResult restricted_cohomology(const ModelParams& p, const KClass& f) {
  for (const auto& t : f.terms())
    if (t.multiplicity < 0)
      throw Error(ErrorKind::Dimension, "restricted_cohomology needs an honest bundle, not a virtual class");

  std::map<std::pair<int, int>, BigInt> cells;
  for (int a = 0; a <= p.k; ++a) {
    const auto h = cohomology_of_kclass(f, -a);
    for (const auto& [b, d] : h.positive.entries) cells[{a, b}] += binomial(p.k, a) * d;
  }

  CohomologyResult r{ResultMode::Exact, {}, {}, {}};
  std::map<int, BigInt> totals;
  for (const auto& [ab, d] : cells) {
    r.page.push_back({ab.first, ab.second, d});
    totals[ab.second - ab.first] += d;
  }

  // d_r : E^{-a,b} -> E^{-a+r, b-r+1}
  bool positional = true;
  for (const auto& [src, ds] : cells)
    for (const auto& [dst, dd] : cells) {
      const int r_len = src.first - dst.first;
      if (r_len >= 1 && dst.second == src.second - r_len + 1) positional = false;
    }

  if (positional) {
    for (const auto& [j, d] : totals) {
      if (j < 0)
        throw Error(ErrorKind::Integrity, "Koszul page has a surviving class in negative degree");
      r.degrees[j] = {d, d};
    }
    r.reasoning = "positional degeneration at page one";
    return r;
  }

  std::set<int> nonneg;
  BigInt chi = 0;
  for (const auto& [j, d] : totals) {
    if (j >= 0) nonneg.insert(j);
    chi += (j % 2 == 0) ? d : BigInt(-d);
  }
  if (nonneg.size() <= 1) {
    if (nonneg.empty()) {
      if (chi != 0) throw Error(ErrorKind::Integrity, "Koszul Euler characteristic inconsistent with vanishing");
    } else {
      const int j0 = *nonneg.begin();
      const BigInt h = (j0 % 2 == 0) ? chi : BigInt(-chi);
      if (h < 0) throw Error(ErrorKind::Integrity, "negative cohomology from the Koszul Euler characteristic");
      if (h > 0) r.degrees[j0] = {h, h};
    }
    r.reasoning = "negative total degrees must cancel; single non-negative degree fixed by Euler characteristic";
    return r;
  }

  r.mode = ResultMode::Bounds;
  r.reasoning = "differentials between non-negative degrees are not forced; bounds from page one";
  for (int j : nonneg) {
    const BigInt tj = totals[j];
    const BigInt below = totals.contains(j - 1) ? totals[j - 1] : BigInt(0);
    const BigInt above = totals.contains(j + 1) ? totals[j + 1] : BigInt(0);
    BigInt lo = tj - below - above;
    if (lo < 0) lo = 0;
    r.degrees[j] = {lo, tj};
  }
  return r;
}

KClass tangent_class(int n) {
  std::vector<int> q(static_cast<std::size_t>(n - 2), 0);
  q.back() = -1;
  return KClass::irreducible(GLWeight({1, 0}, std::move(q)));
}

TangentResult h1_tangent_y1(const ModelParams& p) {
  p.validate();
  TangentResult out{ResultMode::Exact, 0, 0,
                    restricted_cohomology(p, tangent_class(p.n)),
                    restricted_cohomology(p, KClass::line_bundle(p.n, 1).scaled(p.k)),
                    {}};
  const auto& t = out.ambient_tangent;
  const auto& nb = out.normal;
  if (t.mode == ResultMode::Bounds || nb.mode == ResultMode::Bounds) {
    out.mode = ResultMode::Bounds;
    out.assumptions.push_back("Koszul spectral sequence not degenerate by position");
  }

  // H^0(T_Gr|Y) -> H^0(N) -> H^1(T_Y) -> H^1(T_Gr|Y) -> H^1(N)
  const BigInt h0t_lo = t.lower(0), h0t_hi = t.upper(0);
  const BigInt h0n_lo = nb.lower(0), h0n_hi = nb.upper(0);
  const BigInt h1t_lo = t.lower(1), h1t_hi = t.upper(1);
  const BigInt h1n_lo = nb.lower(1);

  BigInt coker_lo, coker_hi;
  if (h0n_hi == 0) {
    coker_lo = coker_hi = 0;
  } else {
    coker_lo = std::max<BigInt>(0, h0n_lo - h0t_hi);
    coker_hi = std::max<BigInt>(0, h0n_hi - h0t_lo);
    if (out.mode != ResultMode::Bounds) {
      out.mode = ResultMode::ExactGeneric;
      out.assumptions.push_back("H^0(T_Gr|Y1) -> H^0(O(1)^k|Y1) has maximal rank (generic A)");
    }
  }

  BigInt ker_lo, ker_hi;
  if (h1t_hi == 0) {
    ker_lo = ker_hi = 0;
  } else if (nb.upper(1) == 0) {
    ker_lo = h1t_lo;
    ker_hi = h1t_hi;
  } else {
    ker_lo = std::max<BigInt>(0, h1t_lo - nb.upper(1));
    ker_hi = h1t_hi;
    (void)h1n_lo;
    out.mode = ResultMode::Bounds;
    out.assumptions.push_back("map H^1(T_Gr|Y1) -> H^1(O(1)^k|Y1) undetermined");
  }

  out.lower = coker_lo + ker_lo;
  out.upper = coker_hi + ker_hi;
  if (out.lower != out.upper) out.mode = ResultMode::Bounds;
  return out;
}

GrassSectionHodge hodge_diamond_y1(const ModelParams& p) {
  const auto cls = classify(p);
  if (cls.y1_empty)
    throw Error(ErrorKind::Dimension, "Y1 is empty for n = " + std::to_string(p.n) + ", k = " + std::to_string(p.k));
  const int d = cls.dim_y1;
  const auto gr = grassmannian_poincare(p.n);

  GrassSectionHodge out{p, HodgeDiamond(d), {}, !cls.theorem_applies, true};
  auto& hd = out.diamond;

  // Lefschetz: below the middle the cohomology is that of Gr(2,n)
  for (int q = 0; 2 * q < d; ++q) {
    hd.set(q, q, gr[q]);
    hd.set(d - q, d - q, gr[q]);
  }

  for (int pp = 0; pp <= d; ++pp) {
    const BigInt chi = restricted_euler(p, omega_p_class(p, pp));
    out.chi.push_back(chi);
    BigInt known = 0;
    for (int q = 0; q <= d; ++q)
      if (q != d - pp) known += (q % 2 == 0) ? hd(pp, q) : BigInt(-hd(pp, q));
    BigInt middle = chi - known;
    if ((d - pp) % 2 != 0) middle = -middle;
    if (middle < 0)
      throw Error(ErrorKind::Integrity, "negative middle Hodge number h^{" + std::to_string(pp) + "," +
                                            std::to_string(d - pp) + "}");
    hd.set(pp, d - pp, middle);
  }

  if (const auto v = hd.integrity_violations(); !v.empty())
    throw Error(ErrorKind::Integrity, "Hodge diamond of Y1 violates " + v.front().invariant + " at (" +
                                          std::to_string(v.front().p) + "," + std::to_string(v.front().q) + ")");
  return out;
}

KClass rhom_class(int n, const WindowLabel& source, const WindowLabel& target, int t) {
  // Sym^l S^dual (x) Sym^l' S^dual (m - m' - l' + t)
  const int c = source.m - target.m - target.l + t;
  KClass out(n);
  const std::vector<int> q(static_cast<std::size_t>(n - 2), 0);
  for (const auto& s : clebsch_gordan_rank2(source.l, target.l))
    out.add(GLWeight({s.sym_power + s.det_power + c, s.det_power + c}, q), 1);
  return out;
}

CohomologyTable rhom(int n, const WindowLabel& source, const WindowLabel& target, int t) {
  return cohomology_of_kclass(rhom_class(n, source, target, t), 0).positive;
}

CollectionReport verify_strong_exceptional(int n, const WindowSet& set) {
  CollectionReport rep{n, {set.begin(), set.end()}, {}, 0, {}};
  std::sort(rep.order.begin(), rep.order.end(), [](const WindowLabel& a, const WindowLabel& b) {
    return a.m != b.m ? a.m > b.m : a.l > b.l;
  });
  const std::size_t N = rep.order.size();
  rep.hom.assign(N, std::vector<BigInt>(N, 0));
  const BwbEngine engine(n);

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const auto& e = rep.order[i];
      const auto& f = rep.order[j];
      const auto coh = cohomology_of_kclass(engine, rhom_class(n, e, f), 0);
      ++rep.pairs_checked;
      for (const auto& tc : coh.provenance) {
        if (!tc.result.cohomology) continue;
        const auto& h = *tc.result.cohomology;
        if (h.degree > 0)
          rep.failures.push_back({e, f, h.degree, tc.term.weight().flat(), "nonzero higher Ext"});
        else if (j < i)
          rep.failures.push_back({e, f, 0, tc.term.weight().flat(), "nonzero Hom against the collection order"});
      }
      rep.hom[i][j] = coh.positive.at(0);
      if (i == j && rep.hom[i][j] != 1)
        rep.failures.push_back({e, f, 0, {}, "End(E) is not one-dimensional"});
    }
  return rep;
}

namespace {

// Sample points in t >= 0 covering every interval on which the ordering
// pattern of (w + t(1,1,0,...,0)) + rho is constant.
std::vector<int> critical_samples(const GLWeight& w) {
  const auto r = rho(w.n());
  const auto flat = w.flat();
  std::set<int> crit;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < flat.size(); ++j) crit.insert(flat[j] + r[j] - flat[i] - r[i]);
  std::set<int> samples{0};
  for (int c : crit) {
    for (int t : {c - 1, c, c + 1})
      if (t >= 0) samples.insert(t);
  }
  if (!crit.empty()) samples.insert(std::max(0, *crit.rbegin() + 1));
  return {samples.begin(), samples.end()};
}

}  // namespace

PairVerdict higher_vanishing_all_t(int n, const WindowLabel& source, const WindowLabel& target) {
  PairVerdict v;
  const BwbEngine engine(n);
  for (const auto& term : rhom_class(n, source, target, 0).terms()) {
    ++v.summands;
    const auto w0 = term.weight();
    const auto samples = critical_samples(w0);
    v.intervals += samples.size();
    for (int t : samples) {
      const GLWeight wt({w0.s_block()[0] + t, w0.s_block()[1] + t}, w0.q_block());
      const auto res = engine.compute(wt);
      if (res.cohomology && res.cohomology->degree > 0) {
        if (!v.counterexample_t || t < *v.counterexample_t) {
          v.counterexample_t = t;
          v.counterexample_degree = res.cohomology->degree;
        }
        v.vanishes_for_all_t = false;
        break;
      }
    }
  }
  return v;
}

LemmaReport lemma_vanishing_all_t(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::Parity, "the all-t vanishing check is stated for even n");
  if (n < 4) throw Error(ErrorKind::InvalidRank, "the all-t vanishing check needs n >= 4");
  LemmaReport rep;
  rep.n = n;
  const auto S = window_set_S(n);
  for (const auto& e : S)
    for (const auto& f : S) {
      ++rep.pairs;
      if (f.l == n / 2 - 1)
        ++rep.case_top_row;
      else
        ++rep.case_lower_rows;
      const auto v = higher_vanishing_all_t(n, e, f);
      rep.summands += v.summands;
      rep.intervals += v.intervals;
      if (!v.vanishes_for_all_t) rep.failures.push_back({e, f, *v.counterexample_t, *v.counterexample_degree});
    }
  return rep;
}

}  // namespace grpf
