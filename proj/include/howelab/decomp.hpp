#pragma once

#include "howelab/howe.hpp"

namespace howelab {

// One term of the restricted oscillator decomposition: the distinguished
// irreducible of the oriented side (Sp for eta, O for zeta) and the resolved
// coefficient list on the other side.
struct DecompositionTerm {
  IrrepData top;
  std::vector<IrrepData> coeff;
  int level = 0;
  IrrepData source;
};

struct DecompositionReport {
  DualPairSpec pair;
  bool eta_oriented = true;
  std::vector<DecompositionTerm> terms;
  Int total = 0;   // sum over terms of dim(top) * sum(dim(coeff))
  Int target = 0;  // q^{N dim W}
};

inline DecompositionReport decompose(const DualPairSpec& pair) {
  const long long q = pair.q;
  DecompositionReport rep;
  rep.pair = pair;
  rep.eta_oriented = eta_side(pair);
  if (rep.eta_oriented) {
    for (int k = 0; k <= pair.witt_index(); ++k) {
      DualPairSpec sub = pair.sub_W(k);
      for (const IrrepData& pi : enumerate_irreps(sub.o_group(), q)) {
        VirtualIrrep v = eta(sub, pi);
        if (v.coef != 1) continue;
        DecompositionTerm t;
        t.top = *v.payload;
        t.coeff = coefficient_A(pair, pi, k, n_prime(pi, sub));
        t.level = k;
        t.source = pi;
        rep.terms.push_back(std::move(t));
      }
    }
  } else {
    for (int k = 0; k <= pair.N; ++k) {
      DualPairSpec sub = pair.sub_V(k);
      for (const IrrepData& rho : enumerate_irreps(sub.sp_group(), q)) {
        VirtualIrrep v = zeta(sub, rho);
        if (v.coef != 1) continue;
        DecompositionTerm t;
        t.top = *v.payload;
        t.coeff = coefficient_A(pair, rho, k, m_prime(rho, sub));
        t.level = k;
        t.source = rho;
        rep.terms.push_back(std::move(t));
      }
    }
  }
  std::sort(rep.terms.begin(), rep.terms.end(), [](const DecompositionTerm& x,
                                                   const DecompositionTerm& y) {
    return std::tuple(x.level, x.top.key()) < std::tuple(y.level, y.top.key());
  });
  rep.total = 0;
  for (const DecompositionTerm& t : rep.terms) {
    Int cdim = 0;
    for (const IrrepData& c : t.coeff) cdim += dim_irrep(c, q);
    rep.total += dim_irrep(t.top, q) * cdim;
  }
  rep.target = ipow(Int(q), 1LL * pair.N * pair.dimW);
  return rep;
}

struct ChecksumResult {
  bool ok = false;
  Int total = 0, target = 0;
};

inline ChecksumResult checksum(const DecompositionReport& rep) {
  const long long q = rep.pair.q;
  ChecksumResult r;
  r.target = ipow(Int(q), 1LL * rep.pair.N * rep.pair.dimW);
  r.total = 0;
  for (const DecompositionTerm& t : rep.terms) {
    Int cdim = 0;
    for (const IrrepData& c : t.coeff) cdim += dim_irrep(c, q);
    r.total += dim_irrep(t.top, q) * cdim;
  }
  r.ok = r.total == r.target;
  return r;
}

// Top-side irreducibles must be pairwise distinct across all levels.
inline bool disjointness_audit(const DecompositionReport& rep) {
  std::set<IrrepData> seen;
  for (const DecompositionTerm& t : rep.terms)
    if (!seen.insert(t.top).second) return false;
  return true;
}

namespace detail {
inline bool is_unipotent(const IrrepData& r) {
  return r.ss.ell == 0 && r.ss.generic.empty() &&
         (r.group.fam == GF::Sp || r.group.fam == GF::OevenPlus ||
          r.group.fam == GF::OevenMinus);
}
// Ordered rendering of the even-orthogonal side of a unipotent pair, matching
// Pan's labelling: the eta-side coefficient keeps its stored orientation in
// the split case and swaps in the non-split case; the zeta-side top always
// swaps its stored (construction) orientation.
inline OrderedSymbol pan_render_o(const IrrepData& o_irrep, bool split, bool eta_oriented) {
  OrderedSymbol s = oriented_block(o_irrep.plus_block, o_irrep.plus_orient);
  if (!eta_oriented) return s.swapped();
  return split ? s : s.swapped();
}
}  // namespace detail

// The set of ordered-symbol pairs named by the engine's unipotent terms
// equals the set cut out by Pan's occurrence conditions.
inline bool pan_check(const DecompositionReport& rep) {
  if (rep.pair.odd()) throw WrongParity("pan_check applies to even-dimensional W");
  const bool split = rep.pair.form > 0;
  std::set<std::pair<OrderedSymbol, OrderedSymbol>> engine;
  for (const DecompositionTerm& t : rep.terms) {
    if (!detail::is_unipotent(t.source)) continue;
    if (rep.eta_oriented) {
      OrderedSymbol sp = to_pan(t.top.plus_block);
      for (const IrrepData& c : t.coeff)
        engine.emplace(sp, detail::pan_render_o(c, split, true));
    } else {
      OrderedSymbol o = detail::pan_render_o(t.top, split, false);
      for (const IrrepData& c : t.coeff) engine.emplace(to_pan(c.plus_block), o);
    }
  }
  std::set<std::pair<OrderedSymbol, OrderedSymbol>> expected;
  Family ofam = split ? Family::D : Family::TwoD;
  for (const LusztigSymbol& sp : enumerate_symbols(Family::BC, rep.pair.N)) {
    OrderedSymbol spo = to_pan(sp);
    for (const LusztigSymbol& ob : enumerate_symbols(ofam, rep.pair.m())) {
      std::vector<OrderedSymbol> orientations;
      orientations.push_back(orientation_canonical(ob));
      if (!is_degenerate(ob)) orientations.push_back(orientation_canonical(ob).swapped());
      for (const OrderedSymbol& oo : orientations)
        if (pan_conditions(spo, oo, split)) expected.emplace(spo, oo);
    }
  }
  return engine == expected;
}

// The decomposition rewritten through the virtual correspondences: every
// level-k input contributes its (sign-twisted per the parity of dim W)
// parabolic induction tensored with its virtual eta/zeta image.  After
// cancellation this must match decompose exactly.
inline std::map<std::pair<IrrepData, IrrepData>, long long> virtual_form(const DualPairSpec& pair) {
  const long long q = pair.q;
  std::map<std::pair<IrrepData, IrrepData>, long long> acc;
  const int twist_sign = pair.odd() ? -1 : +1;
  if (eta_side(pair)) {
    for (int k = 0; k <= pair.witt_index(); ++k) {
      DualPairSpec sub = pair.sub_W(k);
      for (const IrrepData& pi : enumerate_irreps(sub.o_group(), q)) {
        VirtualIrrep v = eta_virtual(sub, pi);
        if (v.coef == 0) continue;
        for (const IrrepData& c : parabolic_induct_irrep(pi, k, twist_sign, q)) {
          auto key = std::make_pair(*v.payload, c);
          acc[key] += v.coef;
          if (acc[key] == 0) acc.erase(key);
        }
      }
    }
  } else {
    for (int k = 0; k <= pair.N; ++k) {
      DualPairSpec sub = pair.sub_V(k);
      for (const IrrepData& rho : enumerate_irreps(sub.sp_group(), q)) {
        VirtualIrrep v = zeta_virtual(sub, rho);
        if (v.coef == 0) continue;
        for (const IrrepData& c : parabolic_induct_irrep(rho, k, twist_sign, q)) {
          auto key = std::make_pair(*v.payload, c);
          acc[key] += v.coef;
          if (acc[key] == 0) acc.erase(key);
        }
      }
    }
  }
  return acc;
}

inline bool virtual_form_matches(const DualPairSpec& pair, const DecompositionReport& rep) {
  auto virt = virtual_form(pair);
  std::map<std::pair<IrrepData, IrrepData>, long long> direct;
  for (const DecompositionTerm& t : rep.terms)
    for (const IrrepData& c : t.coeff) direct[{t.top, c}] += 1;
  return virt == direct;
}

}  // namespace howelab
