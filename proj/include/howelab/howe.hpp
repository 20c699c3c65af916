#pragma once

#include "howelab/irrep.hpp"

namespace howelab {

// A dual pair (Sp_2N, O(W,B)).  For odd dim W the form is its discriminant
// (+1 square, -1 non-square); for even dim W the form is the split/non-split
// sign.  dim W = 0 uses form +1.
struct DualPairSpec {
  int N = 0;
  int dimW = 0;
  int form = +1;
  long long q = 3;

  int m() const { return dimW / 2; }
  bool odd() const { return dimW % 2 == 1; }
  int witt_index() const {
    if (odd()) return m();
    return form > 0 ? m() : (m() > 0 ? m() - 1 : 0);
  }
  GroupSpec o_group() const {
    if (odd()) return {GF::Oodd, m(), 1};
    return {form > 0 ? GF::OevenPlus : GF::OevenMinus, m(), 1};
  }
  GroupSpec sp_group() const { return {GF::Sp, N, 1}; }
  // W[-k]: remove k hyperbolic planes.  The split type is preserved; the
  // discriminant of an odd form picks up eps(-1) per plane.
  DualPairSpec sub_W(int k) const {
    DualPairSpec p = *this;
    p.dimW -= 2 * k;
    if (odd() && k % 2 == 1) p.form *= eps_minus_one(q);
    return p;
  }
  DualPairSpec sub_V(int k) const {
    DualPairSpec p = *this;
    p.N -= k;
    return p;
  }
};

enum class RangeClass { SympStable, SympMeta, OrthoStable, OrthoMeta };

inline const char* range_name(RangeClass r) {
  switch (r) {
    case RangeClass::SympStable: return "symplectic_stable";
    case RangeClass::SympMeta: return "symplectic_metastable";
    case RangeClass::OrthoStable: return "orthogonal_stable";
    case RangeClass::OrthoMeta: return "orthogonal_metastable";
  }
  return "?";
}

// Exactly one class per pair.  For odd dim W the eta side requires N > m (the
// boundary N = m belongs to the orthogonal metastable range).
inline RangeClass classify_range(const DualPairSpec& p) {
  const int N = p.N, m = p.m();
  if (p.odd()) {
    if (N >= 2 * m + 1) return RangeClass::SympStable;
    if (N > m) return RangeClass::SympMeta;
    if (2 * N <= m) return RangeClass::OrthoStable;
    return RangeClass::OrthoMeta;
  }
  if (N >= 2 * m) return RangeClass::SympStable;
  if (N >= m) return RangeClass::SympMeta;
  if (2 * N <= p.witt_index()) return RangeClass::OrthoStable;
  return RangeClass::OrthoMeta;
}

inline bool eta_side(const DualPairSpec& p) {
  RangeClass r = classify_range(p);
  return r == RangeClass::SympStable || r == RangeClass::SympMeta;
}

struct VirtualIrrep {
  int coef = 0;
  std::optional<IrrepData> payload;
};

namespace detail {
// Inserts c into a strictly increasing row.  coef +1 with c appended at the
// end (the constructible case), 0 on collision, otherwise the sign of the
// sort permutation (-1)^{row length - #entries below c}.
struct InsertResult {
  int coef = 0;
  std::vector<int> row;
};
inline InsertResult insert_coordinate(std::vector<int> row, int c) {
  InsertResult r;
  if (row.empty() || c > row.back()) {
    row.push_back(c);
    r.coef = 1;
    r.row = std::move(row);
    return r;
  }
  std::size_t below = 0;
  for (int x : row) {
    if (x == c) return r;  // coef 0
    if (x < c) ++below;
  }
  int sign = (row.size() - below) % 2 == 0 ? 1 : -1;
  row.insert(row.begin() + below, c);
  r.coef = sign;
  r.row = std::move(row);
  return r;
}
}  // namespace detail

// The coordinate appended to the alterable block by the eta correspondence.
inline int n_prime(const IrrepData& rho, const DualPairSpec& pair) {
  if (!eta_side(pair)) throw WrongRange("n_prime is defined on the eta side");
  if (rho.group != pair.o_group()) throw std::domain_error("input group does not match the pair");
  int entries = pair.odd() ? rho.minus_block.entries() : rho.plus_block.entries();
  if (pair.odd()) return pair.N - pair.m() + (entries - 1) / 2;
  return pair.N - pair.m() + entries / 2;
}

// The coordinate appended by the zeta correspondence.
inline int m_prime(const IrrepData& rho, const DualPairSpec& pair) {
  if (eta_side(pair)) throw WrongRange("m_prime is defined on the zeta side");
  if (rho.group != pair.sp_group()) throw std::domain_error("input group does not match the pair");
  int entries = pair.odd() ? rho.minus_block.entries() : rho.plus_block.entries();
  if (pair.odd()) return pair.m() - pair.N + entries / 2;
  return pair.m() - pair.N + (entries - 1) / 2;
}

// Eta correspondence, with the virtual extension when allow_virtual is set.
inline VirtualIrrep eta_impl(const DualPairSpec& pair, const IrrepData& rho, bool allow_virtual) {
  if (!eta_side(pair)) throw WrongRange("pair is not in the symplectic stable/metastable range");
  if (rho.group != pair.o_group()) throw std::domain_error("input group does not match the pair");
  const long long q = pair.q;
  const int N = pair.N, m = pair.m();
  VirtualIrrep out;

  IrrepData res;
  res.group = {GF::Sp, N, 1};
  res.ss.generic = rho.ss.generic;
  res.parts = rho.parts;

  if (pair.odd()) {
    // alter the minus block; the O_{2m+1} extension sign picks the append row
    OrderedSymbol theta = to_pan(rho.minus_block);  // defect 1 mod 4
    int nprime = N - m + (theta.unordered().entries() - 1) / 2;
    bool append_bottom = rho.ext_sign > 0;
    auto ins = detail::insert_coordinate(append_bottom ? theta.bottom : theta.top, nprime);
    if (ins.coef == 0 || (!allow_virtual && ins.coef != 1)) return out;
    LusztigSymbol newblock = append_bottom ? LusztigSymbol(theta.top, ins.row)
                                           : LusztigSymbol(ins.row, theta.bottom);
    res.ss.p = rho.ss.p;
    res.ss.ell = rho.ss.ell + (N - m);
    res.ss.minus_sign = newblock.family == Family::TwoD ? -1 : +1;
    res.plus_block = rho.plus_block;
    res.minus_block = newblock;
    int sign_label = epsilon_semisimple(rho.ss, q) * pair.form;
    res.minus_orient = is_degenerate(newblock) ? 0 : sign_label;
    out.coef = ins.coef;
    out.payload = res;
  } else {
    // alter the plus block; the extension sign is its orientation
    OrderedSymbol theta = oriented_block(rho.plus_block, rho.plus_orient);
    int nprime = N - m + theta.unordered().entries() / 2;
    auto ins = detail::insert_coordinate(theta.bottom, nprime);
    if (ins.coef == 0 || (!allow_virtual && ins.coef != 1)) return out;
    res.ss.p = rho.ss.p + (N - m);
    res.ss.ell = rho.ss.ell;
    res.ss.minus_sign = rho.ss.minus_sign;
    res.plus_block = LusztigSymbol(theta.top, ins.row);
    res.minus_block = rho.minus_block;
    res.minus_orient = rho.minus_orient;
    out.coef = ins.coef;
    out.payload = res;
  }
  auto v = validate_irrep(*out.payload, q);
  if (!v.ok) throw std::logic_error("eta produced invalid data: " + v.diagnostic);
  return out;
}

inline VirtualIrrep eta(const DualPairSpec& pair, const IrrepData& rho) {
  return eta_impl(pair, rho, false);
}
inline VirtualIrrep eta_virtual(const DualPairSpec& pair, const IrrepData& rho) {
  return eta_impl(pair, rho, true);
}

// Zeta correspondence, mirror of eta.
inline VirtualIrrep zeta_impl(const DualPairSpec& pair, const IrrepData& rho, bool allow_virtual) {
  if (eta_side(pair)) throw WrongRange("pair is not in the orthogonal stable/metastable range");
  if (rho.group != pair.sp_group()) throw std::domain_error("input group does not match the pair");
  const long long q = pair.q;
  const int N = pair.N, m = pair.m();
  VirtualIrrep out;

  IrrepData res;
  res.group = pair.o_group();
  res.ss.generic = rho.ss.generic;
  res.parts = rho.parts;

  if (pair.odd()) {
    // alter the minus block (the central sign is its orientation); output is
    // an O_{2m+1} representation with extension sign eps(s) * disc(B)
    OrderedSymbol theta = oriented_block(rho.minus_block, rho.minus_orient);
    int mprime = m - N + theta.unordered().entries() / 2;
    auto ins = detail::insert_coordinate(theta.top, mprime);
    if (ins.coef == 0 || (!allow_virtual && ins.coef != 1)) return out;
    res.ss.p = rho.ss.p;
    res.ss.ell = rho.ss.ell + (m - N);
    res.plus_block = rho.plus_block;
    res.minus_block = LusztigSymbol(ins.row, theta.bottom);
    res.ext_sign = epsilon_semisimple(rho.ss, q) * pair.form;
    out.coef = ins.coef;
    out.payload = res;
  } else {
    // alter the plus block; the type sign of the new 1-eigenvalue block is
    // forced by the total form sign
    OrderedSymbol theta = to_pan(rho.plus_block);  // defect 1 mod 4
    int mprime = m - N + (theta.unordered().entries() - 1) / 2;
    int minus_type = rho.ss.ell > 0 ? rho.ss.minus_sign : +1;
    int sigma = pair.form * minus_type * generic_sign_product(rho.ss);
    bool append_bottom = sigma > 0;
    auto ins = detail::insert_coordinate(append_bottom ? theta.bottom : theta.top, mprime);
    if (ins.coef == 0 || (!allow_virtual && ins.coef != 1)) return out;
    OrderedSymbol grown = append_bottom ? OrderedSymbol(theta.top, ins.row)
                                        : OrderedSymbol(ins.row, theta.bottom);
    LusztigSymbol newblock = grown.unordered();
    res.ss.p = rho.ss.p + (m - N);
    res.ss.ell = rho.ss.ell;
    res.ss.plus_sign = res.ss.p > 0 ? sigma : 0;
    res.ss.minus_sign = rho.ss.minus_sign;
    res.plus_block = newblock;
    res.plus_orient = is_degenerate(newblock) || res.ss.p == 0 ? 0 : orientation_label(grown);
    res.minus_block = rho.minus_block;
    res.minus_orient = rho.minus_orient;
    out.coef = ins.coef;
    out.payload = res;
  }
  auto v = validate_irrep(*out.payload, q);
  if (!v.ok) throw std::logic_error("zeta produced invalid data: " + v.diagnostic);
  return out;
}

inline VirtualIrrep zeta(const DualPairSpec& pair, const IrrepData& rho) {
  return zeta_impl(pair, rho, false);
}
inline VirtualIrrep zeta_virtual(const DualPairSpec& pair, const IrrepData& rho) {
  return zeta_impl(pair, rho, true);
}

// The extension-sign of the even-W zeta output: the orientation label of the
// naturally oriented grown block.  For sigma = -1 the top row is strictly
// longer so the label is always +1; for sigma = +1 the label flips exactly
// when a = b+1 and the appended row wins the comparison from the last entry
// downward (the index-aligned tie-break through lambda_{i+1} vs mu_i once
// the appended coordinate ties with lambda_a).
inline int alpha_sigma(const OrderedSymbol& theta, int mprime, int sigma) {
  std::vector<int> lam = theta.top, mu = theta.bottom;
  OrderedSymbol grown = [&] {
    if (sigma > 0) {
      if (!mu.empty() && mprime <= mu.back()) throw BadRange("inconstructible append");
      mu.push_back(mprime);
      return OrderedSymbol(lam, mu);
    }
    if (!lam.empty() && mprime <= lam.back()) throw BadRange("inconstructible append");
    lam.push_back(mprime);
    return OrderedSymbol(lam, mu);
  }();
  if (is_degenerate(grown.unordered())) return 0;
  return orientation_label(grown);
}

// The coefficient representation attached to an eta/zeta term at level k: the
// alternating-sum resolution on the alterable block, lifted to classification
// data of the full group.  rho is an irreducible of the level-k group (the
// eta/zeta input), nprime the appended coordinate of the subpair.
inline std::vector<IrrepData> coefficient_A(const DualPairSpec& pair, const IrrepData& rho, int k,
                                            int nprime) {
  const long long q = pair.q;
  std::vector<IrrepData> out;
  const bool eta_case = eta_side(pair);
  IrrepData base;
  base.parts = rho.parts;
  base.group = eta_case ? pair.o_group() : pair.sp_group();
  base.ss.generic = rho.ss.generic;

  if (eta_case && pair.odd()) {
    // minus block, BC; designated row chosen by the extension sign
    OrderedSymbol theta = to_pan(rho.minus_block);
    OrderedSymbol designated = rho.ext_sign > 0 ? OrderedSymbol(theta.bottom, theta.top) : theta;
    base.ss.p = rho.ss.p;
    base.ss.ell = rho.ss.ell + k;
    base.ext_sign = rho.ext_sign;
    base.plus_block = rho.plus_block;
    for (const OrderedSymbol& child : altsum_resolve(designated, nprime, k)) {
      IrrepData r = base;
      r.minus_block = child.unordered();
      out.push_back(r);
    }
  } else if (eta_case) {
    // plus block, oriented; designated row is the oriented bottom
    OrderedSymbol theta = oriented_block(rho.plus_block, rho.plus_orient);
    OrderedSymbol designated(theta.bottom, theta.top);
    base.ss.p = rho.ss.p + k;
    base.ss.ell = rho.ss.ell;
    base.ss.minus_sign = rho.ss.minus_sign;
    base.minus_block = rho.minus_block;
    base.minus_orient = rho.minus_orient;
    for (const OrderedSymbol& child : altsum_resolve(designated, nprime, k)) {
      IrrepData r = base;
      OrderedSymbol grown(child.bottom, child.top);  // undo the designation flip
      r.plus_block = grown.unordered();
      r.ss.plus_sign = r.ss.p > 0 ? (r.plus_block.family == Family::TwoD ? -1 : +1) : 0;
      r.plus_orient = r.ss.p == 0 || is_degenerate(r.plus_block) ? 0 : orientation_label(grown);
      out.push_back(r);
    }
  } else if (pair.odd()) {
    // zeta side, minus block oriented; designated row is the oriented top
    OrderedSymbol theta = oriented_block(rho.minus_block, rho.minus_orient);
    base.ss.p = rho.ss.p;
    base.ss.ell = rho.ss.ell + k;
    base.plus_block = rho.plus_block;
    for (const OrderedSymbol& child : altsum_resolve(theta, nprime, k)) {
      IrrepData r = base;
      r.minus_block = child.unordered();
      r.ss.minus_sign = r.ss.ell > 0 ? (r.minus_block.family == Family::TwoD ? -1 : +1) : 0;
      r.minus_orient = r.ss.ell == 0 || is_degenerate(r.minus_block) ? 0 : orientation_label(child);
      out.push_back(r);
    }
  } else {
    // zeta side, plus block (BC); designated row chosen by sigma
    OrderedSymbol theta = to_pan(rho.plus_block);
    int minus_type = rho.ss.ell > 0 ? rho.ss.minus_sign : +1;
    int sigma = pair.form * minus_type * generic_sign_product(rho.ss);
    OrderedSymbol designated = sigma > 0 ? OrderedSymbol(theta.bottom, theta.top) : theta;
    base.ss.p = rho.ss.p + k;
    base.ss.ell = rho.ss.ell;
    base.ss.minus_sign = rho.ss.minus_sign;
    base.minus_block = rho.minus_block;
    base.minus_orient = rho.minus_orient;
    for (const OrderedSymbol& child : altsum_resolve(designated, nprime, k)) {
      IrrepData r = base;
      r.plus_block = child.unordered();
      out.push_back(r);
    }
  }
  for (auto& r : out) {
    auto v = validate_irrep(r, q);
    if (!v.ok) throw std::logic_error("coefficient lift produced invalid data: " + v.diagnostic);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All (dimW, form, pi) with eta((N, dimW, form, q), pi) == rho, found by
// removing one block coordinate and solving the N' equation; each candidate
// is confirmed by the forward map.
inline std::vector<std::tuple<int, int, IrrepData>> eta_preimage(const IrrepData& rho,
                                                                 long long q) {
  if (rho.group.fam != GF::Sp) throw std::domain_error("eta_preimage expects an Sp irrep");
  const int N = rho.group.rank;
  std::vector<std::tuple<int, int, IrrepData>> out;
  auto try_candidate = [&](const DualPairSpec& pair, const IrrepData& cand) {
    if (validate_irrep(cand, q).ok) {
      VirtualIrrep v = eta(pair, cand);
      if (v.coef == 1 && v.payload == rho) out.emplace_back(pair.dimW, pair.form, cand);
    }
  };

  // Odd W: the appended coordinate is the last entry of a minus-block row.
  {
    OrderedSymbol ob = oriented_block(rho.minus_block, rho.minus_orient == 0 ? +1 : rho.minus_orient);
    for (int side = 0; side < 2; ++side) {
      OrderedSymbol o = side == 0 ? ob : ob.swapped();
      if (o.top.empty()) continue;
      if (side == 1 && ob.top == ob.bottom) continue;
      int z = o.top.back();
      std::vector<int> rest(o.top.begin(), o.top.end() - 1);
      LusztigSymbol theta;
      try {
        theta = LusztigSymbol(rest, o.bottom);
      } catch (const InvalidSymbol&) {
        continue;
      }
      if (theta.family != Family::BC || !is_canonical(theta)) continue;
      int T = theta.entries();
      int m = N - z + (T - 1) / 2;
      if (m < 0 || 2 * m + 1 > 2 * N) continue;
      if (rho.ss.ell < N - m || rank(theta) != rho.ss.ell - (N - m)) continue;
      DualPairSpec pair{N, 2 * m + 1, +1, q};
      if (!eta_side(pair)) continue;
      IrrepData cand;
      cand.group = {GF::Oodd, m, 1};
      cand.ss.p = rho.ss.p;
      cand.ss.ell = rank(theta);
      cand.ss.generic = rho.ss.generic;
      cand.parts = rho.parts;
      cand.plus_block = rho.plus_block;
      cand.minus_block = theta;
      // the append row selects the extension sign: bottom append gives D
      cand.ext_sign = rho.ss.minus_sign > 0 ? +1 : -1;
      for (int disc : {+1, -1}) {
        if (rho.minus_orient != 0 && epsilon_semisimple(cand.ss, q) * disc != rho.minus_orient)
          continue;
        pair.form = disc;
        try_candidate(pair, cand);
      }
    }
  }

  // Even W: the appended coordinate is the last entry of a plus-block row
  // (the oriented bottom of the input orientation [top / bottom]).
  {
    OrderedSymbol pb = to_pan(rho.plus_block);
    for (int side = 0; side < 2; ++side) {
      OrderedSymbol o = side == 0 ? pb : pb.swapped();
      if (o.bottom.empty()) continue;
      int z = o.bottom.back();
      std::vector<int> rest(o.bottom.begin(), o.bottom.end() - 1);
      LusztigSymbol theta;
      try {
        theta = LusztigSymbol(o.top, rest);
      } catch (const InvalidSymbol&) {
        continue;
      }
      if (theta.family == Family::BC || !is_canonical(theta)) continue;
      int T = theta.entries();
      if (T % 2 != 0) continue;
      int m = N - z + T / 2;
      if (m < 0 || m > N) continue;
      if (rho.ss.p < N - m || rank(theta) != rho.ss.p - (N - m)) continue;
      int plus_type = theta.family == Family::TwoD ? -1 : +1;
      int minus_type = rho.ss.ell > 0 ? rho.ss.minus_sign : +1;
      int alpha = plus_type * minus_type * generic_sign_product(rho.ss);
      if (m == 0 && alpha < 0) continue;
      DualPairSpec pair{N, 2 * m, alpha, q};
      if (!eta_side(pair)) continue;
      IrrepData cand;
      cand.group = pair.o_group();
      cand.ss.p = rank(theta);
      cand.ss.ell = rho.ss.ell;
      cand.ss.plus_sign = cand.ss.p > 0 ? plus_type : 0;
      cand.ss.minus_sign = rho.ss.minus_sign;
      cand.ss.generic = rho.ss.generic;
      cand.parts = rho.parts;
      cand.plus_block = theta;
      OrderedSymbol orient_in(o.top, rest);
      cand.plus_orient =
          cand.ss.p == 0 || is_degenerate(theta) ? 0 : orientation_label(orient_in);
      cand.minus_block = rho.minus_block;
      cand.minus_orient = rho.minus_orient;
      try_candidate(pair, cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All (N, disc, rho) with zeta((N, dimW, form, q), rho) == pi.
inline std::vector<std::tuple<int, int, IrrepData>> zeta_preimage(const IrrepData& pi,
                                                                  long long q) {
  std::vector<std::tuple<int, int, IrrepData>> out;
  auto try_candidate = [&](const DualPairSpec& pair, const IrrepData& cand) {
    if (validate_irrep(cand, q).ok) {
      VirtualIrrep v = zeta(pair, cand);
      if (v.coef == 1 && v.payload == pi) out.emplace_back(pair.N, pair.form, cand);
    }
  };
  if (pi.group.fam == GF::Oodd) {
    const int m = pi.group.rank;
    OrderedSymbol mb = to_pan(pi.minus_block);
    for (int side = 0; side < 2; ++side) {
      OrderedSymbol o = side == 0 ? mb : mb.swapped();
      if (o.top.empty()) continue;
      int z = o.top.back();
      std::vector<int> rest(o.top.begin(), o.top.end() - 1);
      LusztigSymbol theta;
      try {
        theta = LusztigSymbol(rest, o.bottom);
      } catch (const InvalidSymbol&) {
        continue;
      }
      if (theta.family == Family::BC || !is_canonical(theta)) continue;
      int T = theta.entries();
      if (T % 2 != 0) continue;
      int Ncand = m - z + T / 2;
      if (Ncand < 0) continue;
      if (pi.ss.ell < m - Ncand || rank(theta) != pi.ss.ell - (m - Ncand)) continue;
      IrrepData cand;
      cand.group = {GF::Sp, Ncand, 1};
      cand.ss.p = pi.ss.p;
      cand.ss.ell = rank(theta);
      cand.ss.minus_sign = cand.ss.ell > 0 ? (theta.family == Family::TwoD ? -1 : +1) : 0;
      cand.ss.generic = pi.ss.generic;
      cand.parts = pi.parts;
      cand.plus_block = pi.plus_block;
      cand.minus_block = theta;
      OrderedSymbol orient_in(rest, o.bottom);
      cand.minus_orient =
          cand.ss.ell == 0 || is_degenerate(theta) ? 0 : orientation_label(orient_in);
      int disc = pi.ext_sign * epsilon_semisimple(cand.ss, q);
      DualPairSpec pair{Ncand, 2 * m + 1, disc, q};
      if (eta_side(pair)) continue;
      try_candidate(pair, cand);
    }
  } else if (pi.group.fam == GF::OevenPlus || pi.group.fam == GF::OevenMinus) {
    const int m = pi.group.rank;
    const int alpha = pi.group.fam == GF::OevenPlus ? +1 : -1;
    // The forward map stores the natural output orientation, so the appended
    // coordinate is the last entry of the oriented bottom (sigma = +1, D
    // family) or the oriented top (sigma = -1, 2D family).
    OrderedSymbol o = oriented_block(pi.plus_block, pi.plus_orient);
    int sigma = pi.plus_block.family == Family::TwoD ? -1 : +1;
    int minus_type = pi.ss.ell > 0 ? pi.ss.minus_sign : +1;
    if (sigma == alpha * minus_type * generic_sign_product(pi.ss)) {
      const std::vector<int>& removed_row = sigma > 0 ? o.bottom : o.top;
      if (!removed_row.empty()) {
        int z = removed_row.back();
        std::vector<int> rest(removed_row.begin(), removed_row.end() - 1);
        bool ok = true;
        LusztigSymbol theta;
        try {
          theta = sigma > 0 ? LusztigSymbol(o.top, rest) : LusztigSymbol(rest, o.bottom);
        } catch (const InvalidSymbol&) {
          ok = false;
        }
        if (ok && theta.family == Family::BC && is_canonical(theta)) {
          int T = theta.entries();
          int Ncand = m - z + (T - 1) / 2;
          if (Ncand >= 0 && pi.ss.p >= m - Ncand && rank(theta) == pi.ss.p - (m - Ncand)) {
            IrrepData cand;
            cand.group = {GF::Sp, Ncand, 1};
            cand.ss.p = rank(theta);
            cand.ss.ell = pi.ss.ell;
            cand.ss.minus_sign = pi.ss.minus_sign;
            cand.ss.generic = pi.ss.generic;
            cand.parts = pi.parts;
            cand.plus_block = theta;
            cand.minus_block = pi.minus_block;
            cand.minus_orient = pi.minus_orient;
            DualPairSpec pair{Ncand, 2 * m, alpha, q};
            if (!eta_side(pair)) try_candidate(pair, cand);
          }
        }
      }
    }
  } else {
    throw std::domain_error("zeta_preimage expects an orthogonal-group irrep");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Minimal dim W over eta preimages; the layers partition the irreducible
// representations of Sp_2N.
inline int tensor_rank(const IrrepData& rho, long long q) {
  auto pre = eta_preimage(rho, q);
  if (pre.empty()) throw std::logic_error("irrep has no eta preimage");
  int best = std::get<0>(pre.front());
  for (auto& t : pre) best = std::min(best, std::get<0>(t));
  return best;
}

// Prop. relating eta images over nested symplectic spaces: eta^U(pi) is a
// constituent of the (sign-twisted per the parity of dim W) parabolic
// induction of eta^V(pi).
inline bool ind_eta_check(const IrrepData& pi, const DualPairSpec& pairV,
                          const DualPairSpec& pairU) {
  if (pairV.dimW != pairU.dimW || pairV.form != pairU.form || pairV.q != pairU.q)
    throw std::domain_error("pairs must share the orthogonal space");
  if (pairU.N < pairV.N) throw std::domain_error("dim U must be at least dim V");
  VirtualIrrep low = eta(pairV, pi);
  if (low.coef != 1) throw std::domain_error("eta^V(pi) must be non-zero");
  VirtualIrrep high = eta(pairU, pi);
  if (high.coef != 1) return false;
  int sign = pairV.odd() ? -1 : +1;
  auto ind = parabolic_induct_irrep(*low.payload, pairU.N - pairV.N, sign, pairV.q);
  return std::binary_search(ind.begin(), ind.end(), *high.payload);
}

struct ChainStep {
  enum class Kind { Eta, Zeta, Twist } kind;
  DualPairSpec pair;   // the pair used (unused for twists)
  IrrepData source;    // the representation the step is applied to
};

namespace detail {
// Depth-first search over preimage choices: a lexicographically early eta
// preimage can be a dead end (an even-orthogonal irrep with no 1-eigenvalues
// is never a zeta image), so the chain backtracks across candidates.
inline bool chain_dfs(const IrrepData& cur, long long q, int depth,
                      std::vector<ChainStep>& steps) {
  if (is_terminal(cur)) return true;
  if (depth > 4 * (cur.group.rank + 4)) return false;
  if (cur.group.fam == GF::Sp) {
    for (auto& [dimW, form, pi] : eta_preimage(cur, q)) {
      ChainStep s;
      s.kind = ChainStep::Kind::Eta;
      s.pair = DualPairSpec{cur.group.rank, dimW, form, q};
      s.source = pi;
      steps.push_back(s);
      if (chain_dfs(pi, q, depth + 1, steps)) return true;
      steps.pop_back();
    }
    return false;
  }
  int dimw = cur.group.rank * 2 + (cur.group.fam == GF::Oodd ? 1 : 0);
  for (int twist_first = 0; twist_first <= 1; ++twist_first) {
    IrrepData target = twist_first ? twisted(cur) : cur;
    for (auto& [N, form, sp] : zeta_preimage(target, q)) {
      std::size_t mark = steps.size();
      if (twist_first) {
        ChainStep t;
        t.kind = ChainStep::Kind::Twist;
        t.pair = DualPairSpec{0, dimw, +1, q};
        t.source = target;
        steps.push_back(t);
      }
      ChainStep s;
      s.kind = ChainStep::Kind::Zeta;
      s.pair = DualPairSpec{N, dimw, form, q};
      s.source = sp;
      steps.push_back(s);
      if (chain_dfs(sp, q, depth + 1, steps)) return true;
      steps.resize(mark);
    }
  }
  return false;
}
}  // namespace detail

// Expresses rho as a chain of eta and zeta correspondences (with sign twists
// on the orthogonal side) applied to a terminal representation.  Steps are
// returned in application order, starting from the terminal representation.
inline std::vector<ChainStep> build_chain(const IrrepData& rho, long long q) {
  std::vector<ChainStep> steps;
  if (!detail::chain_dfs(rho, q, 0, steps))
    throw std::logic_error("no eta/zeta chain to a terminal representation");
  std::reverse(steps.begin(), steps.end());
  return steps;
}

namespace detail {
// gamma' is obtained from gamma by adding one horizontal strip (of any size).
inline bool strip_extends(const Diagram& gamma, const Diagram& gamma_p) {
  if (gamma_p.size() > gamma.size() + 1) return false;
  if (gamma_p.size() < gamma.size()) return false;
  for (std::size_t i = 0; i < gamma_p.size(); ++i) {
    int base = i < gamma.size() ? gamma[i] : 0;
    if (gamma_p[i] < base) return false;
    if (i > 0 && gamma_p[i] > gamma[i - 1]) return false;
  }
  return true;
}
}  // namespace detail

// Pan's occurrence conditions for a tensor product of ordered symbols, split
// and non-split even case.  sp_block must have defect 1 mod 4.
inline bool pan_conditions(const OrderedSymbol& sp_block, const OrderedSymbol& o_block,
                           bool split) {
  if (((sp_block.signed_defect() % 4) + 4) % 4 != 1)
    throw InvalidSymbol("Sp-side ordered symbol must have defect 1 mod 4");
  Diagram sp_top = row_diagram(sp_block.top), sp_bot = row_diagram(sp_block.bottom);
  Diagram o_top = row_diagram(o_block.top), o_bot = row_diagram(o_block.bottom);
  if (split) {
    return detail::strip_extends(sp_bot, o_top) && detail::strip_extends(o_bot, sp_top) &&
           o_block.signed_defect() == -sp_block.signed_defect() + 1;
  }
  return detail::strip_extends(sp_top, o_bot) && detail::strip_extends(o_top, sp_bot) &&
         o_block.signed_defect() == -sp_block.signed_defect() - 1;
}

}  // namespace howelab
