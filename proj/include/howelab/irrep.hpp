#pragma once

#include "howelab/altsum.hpp"

namespace howelab {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline bool partition_valid(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace detail {
inline std::vector<int> hook_lengths(const Partition& lam) {
  std::vector<int> hooks;
  int rows = static_cast<int>(lam.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      int arm = lam[i] - j - 1;
      int leg = 0;
      for (int r = i + 1; r < rows; ++r)
        if (lam[r] > j) ++leg;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}
inline long long n_stat(const Partition& lam) {
  long long s = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) s += static_cast<long long>(i) * lam[i];
  return s;
}
}  // namespace detail

// Unipotent character degree of GL_j(q) for a partition of j (q-analog hook
// formula): q^{n(lam)} prod (q^i - 1) / prod (q^{hook} - 1).
inline Int generic_degree_gl(const Partition& lam, const Int& q) {
  int j = partition_size(lam);
  Rat v = Rat(ipow(q, detail::n_stat(lam)));
  for (int i = 1; i <= j; ++i) v *= Rat(ipow(q, i) - 1);
  for (int h : detail::hook_lengths(lam)) v /= Rat(ipow(q, h) - 1);
  if (denominator(v) != 1 || numerator(v) <= 0)
    throw NonIntegralDimension("GL generic degree is not a positive integer");
  return numerator(v);
}

// Unitary case via the q -> -q substitution, in absolute value.
inline Int generic_degree_u(const Partition& lam, const Int& q) {
  int j = partition_size(lam);
  Rat v = Rat(ipow(-q, detail::n_stat(lam)));
  for (int i = 1; i <= j; ++i) v *= Rat(ipow(-q, i) - 1);
  for (int h : detail::hook_lengths(lam)) v /= Rat(ipow(-q, h) - 1);
  if (denominator(v) != 1 || numerator(v) == 0)
    throw NonIntegralDimension("U generic degree is not an integer");
  Int n = numerator(v);
  return n < 0 ? Int(-n) : n;
}

// Full classification datum of an irreducible representation of Sp_2N,
// O_{2m+1} or O^{+-}_{2m}.
//
// The semisimple part lives in the dual bookkeeping (SO_{2N+1} classes for
// Sp_2N, Sp_2m classes for O_{2m+1}, O-conjugacy classes of SO^{+-}_{2m} for
// the even orthogonal groups).  The unipotent part is one partition per
// generic orbit plus the two eigenvalue-block symbols.  Sign data:
//   Sp:      minus_orient (+-1) = central sign; present iff ell > 0 and the
//            minus block is non-degenerate.
//   O_odd:   ext_sign (+-1), always present (the center splits).
//   O_even:  plus_orient / minus_orient, present per block iff the block is
//            non-empty and non-degenerate.
// Orientation labels refer to orientation_canonical(); label +1 is the
// canonical orientation of the block symbol.
struct IrrepData {
  GroupSpec group;
  SemisimpleData ss;
  std::vector<Partition> parts;  // aligned with ss.generic
  LusztigSymbol plus_block, minus_block;
  int plus_orient = 0;
  int minus_orient = 0;
  int ext_sign = 0;

  auto key() const {
    return std::tuple(group.key(), ss.key(), parts, plus_block.key(), minus_block.key(),
                      plus_orient, minus_orient, ext_sign);
  }
  bool operator==(const IrrepData& o) const { return key() == o.key(); }
  bool operator!=(const IrrepData& o) const { return !(*this == o); }
  bool operator<(const IrrepData& o) const { return key() < o.key(); }
};

inline DualAmbient dual_ambient_for(const GroupSpec& g) {
  switch (g.fam) {
    case GF::Sp: return DualAmbient::SOodd;
    case GF::Oodd: return DualAmbient::Sp;
    case GF::OevenPlus: return DualAmbient::SOevenPlus;
    case GF::OevenMinus: return DualAmbient::SOevenMinus;
    default: throw std::domain_error("classification data only for Sp and O groups");
  }
}

// Families of the +-1 eigenvalue block symbols in the dual centralizer.
inline Family plus_block_family(const IrrepData& r) {
  switch (r.group.fam) {
    case GF::Sp: return Family::BC;    // Sp_2p factor, dual SO_{2p+1}
    case GF::Oodd: return Family::BC;  // Sp_2p factor
    default: return r.ss.plus_sign < 0 ? Family::TwoD : Family::D;
  }
}
inline Family minus_block_family(const IrrepData& r) {
  switch (r.group.fam) {
    case GF::Oodd: return Family::BC;  // Sp_2ell factor
    default: return r.ss.minus_sign < 0 ? Family::TwoD : Family::D;
  }
}

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;
};

inline ValidationResult validate_irrep(const IrrepData& r, long long q) {
  auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
  if (r.group.fam != GF::Sp && r.group.fam != GF::Oodd && r.group.fam != GF::OevenPlus &&
      r.group.fam != GF::OevenMinus)
    return fail("group must be Sp, O_odd or O_even");
  const SemisimpleData& s = r.ss;
  if (s.p < 0 || s.ell < 0) return fail("negative block multiplicity");
  if (s.p + s.ell + generic_rank(s) != r.group.rank) return fail("rank bookkeeping failed");
  if (r.parts.size() != s.generic.size()) return fail("one partition per generic orbit required");
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    if (!partition_valid(r.parts[i])) return fail("invalid partition");
    if (partition_size(r.parts[i]) != s.generic[i].second)
      return fail("partition size must equal the orbit multiplicity");
    if (s.generic[i].second <= 0) return fail("orbit multiplicity must be positive");
    TorusOrbit t = s.generic[i].first;
    long long M = t.modulus(q);
    if (t.rep <= 0 || t.rep >= M || (2 * t.rep) % M == 0) return fail("orbit representative is +-1");
    bool found = false;
    for (auto& o : enumerate_torus_orbits(q, t.n))
      if (o == t) found = true;
    if (!found) return fail("orbit is not minimal-n canonical");
  }
  // block signs per ambient
  switch (r.group.fam) {
    case GF::Sp:
      if (s.plus_sign != 0) return fail("Sp classes carry no plus-block sign");
      if ((s.ell > 0) != (s.minus_sign != 0)) return fail("minus-block sign presence mismatch");
      break;
    case GF::Oodd:
      if (s.plus_sign != 0 || s.minus_sign != 0) return fail("Sp_2m classes carry no block signs");
      break;
    case GF::OevenPlus:
    case GF::OevenMinus: {
      if ((s.p > 0) != (s.plus_sign != 0)) return fail("plus-block sign presence mismatch");
      if ((s.ell > 0) != (s.minus_sign != 0)) return fail("minus-block sign presence mismatch");
      int total = r.group.fam == GF::OevenPlus ? +1 : -1;
      int prod = generic_sign_product(s);
      if (s.plus_sign != 0) prod *= s.plus_sign;
      if (s.minus_sign != 0) prod *= s.minus_sign;
      if (prod != total) return fail("block signs do not multiply to the group sign");
      break;
    }
    default: break;
  }
  // block symbols
  if (!is_canonical(r.plus_block) || !is_canonical(r.minus_block))
    return fail("block symbols must be canonical");
  if (r.plus_block.family != plus_block_family(r)) return fail("plus-block family mismatch");
  if (rank(r.plus_block) != s.p) return fail("plus-block rank mismatch");
  if (r.minus_block.family != minus_block_family(r)) return fail("minus-block family mismatch");
  if (rank(r.minus_block) != s.ell) return fail("minus-block rank mismatch");
  // sign data presence
  auto orient_ok = [](const LusztigSymbol& sym, int orient, bool slot) {
    if (!slot) return orient == 0;
    if (is_degenerate(sym)) return orient == 0;
    return orient == 1 || orient == -1;
  };
  switch (r.group.fam) {
    case GF::Sp:
      if (r.plus_orient != 0) return fail("Sp plus block carries no orientation");
      if (!orient_ok(r.minus_block, r.minus_orient, s.ell > 0))
        return fail("central sign presence rule violated");
      if (r.ext_sign != 0) return fail("Sp carries no extension sign");
      break;
    case GF::Oodd:
      if (r.plus_orient != 0 || r.minus_orient != 0) return fail("O_odd blocks carry no orientation");
      if (r.ext_sign != 1 && r.ext_sign != -1) return fail("O_odd extension sign required");
      break;
    case GF::OevenPlus:
    case GF::OevenMinus:
      if (!orient_ok(r.plus_block, r.plus_orient, s.p > 0))
        return fail("plus extension sign presence rule violated");
      if (!orient_ok(r.minus_block, r.minus_orient, s.ell > 0))
        return fail("minus extension sign presence rule violated");
      if (r.ext_sign != 0) return fail("O_even carries no split extension sign");
      break;
    default: break;
  }
  return {};
}

// dim = |G|_{q'} / |Z(s)^o|_{q'} * dim(u), halved once per present
// orientation datum; O_{2m+1} uses |SO_{2m+1}|_{q'} since its irreducibles
// restrict irreducibly to SO.
inline Int dim_irrep(const IrrepData& r, long long q) {
  GroupSpec base = r.group;
  if (base.fam == GF::Oodd) base.fam = GF::SOodd;
  Rat v = Rat(prime_to_q_part(group_order(base, q), q));
  v /= Rat(centralizer_order_qprime(r.ss, dual_ambient_for(r.group), q));
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    Int qn = ipow(Int(q), r.ss.generic[i].first.n);
    v *= Rat(r.ss.generic[i].first.self_dual ? generic_degree_u(r.parts[i], qn)
                                             : generic_degree_gl(r.parts[i], qn));
  }
  v *= Rat(dim_unipotent_constituent(r.plus_block, q));
  v *= Rat(dim_unipotent_constituent(r.minus_block, q));
  int halvings = (r.plus_orient != 0 ? 1 : 0) + (r.minus_orient != 0 ? 1 : 0);
  if (r.group.fam == GF::Oodd) halvings = 0;  // the split center does not halve
  v /= Rat(ipow(Int(2), halvings));
  if (denominator(v) != 1 || numerator(v) <= 0)
    throw NonIntegralDimension("irrep dimension is not a positive integer");
  return numerator(v);
}

inline std::vector<LusztigSymbol> enumerate_symbols(Family fam, int r) {
  std::vector<LusztigSymbol> out;
  for (int d = 0;; ++d) {
    if (family_for_defect(d) != fam) continue;
    int boxes = r - base_rank(fam, d);
    if (boxes < 0) {
      if (d > 2 * r + 4) break;
      continue;
    }
    for (int t = 0; t <= boxes; ++t) {
      for (const Partition& top : partitions_of(t)) {
        for (const Partition& bottom : partitions_of(boxes - t)) {
          if (d == 0 && bottom > top) continue;  // unordered rows
          out.push_back(diagrams_to_symbol(d, top, bottom, fam));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {
// Orientation labels available for a block symbol: {0} when the sign slot is
// absent (rank 0 handled by the caller passing slot=false) or the symbol is
// degenerate, otherwise {+1, -1}.
inline std::vector<int> orientation_labels(const LusztigSymbol& sym, bool slot) {
  if (!slot || is_degenerate(sym)) return {0};
  return {+1, -1};
}
}  // namespace detail

inline std::vector<IrrepData> enumerate_irreps(const GroupSpec& g, long long q) {
  std::vector<IrrepData> out;
  DualAmbient amb = dual_ambient_for(g);
  for (const SemisimpleData& s : enumerate_semisimple(amb, g.rank, q)) {
    IrrepData base;
    base.group = g;
    base.ss = s;
    Family pf = plus_block_family(base), mf = minus_block_family(base);
    std::vector<std::vector<Partition>> partchoices;
    {
      std::vector<Partition> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.generic.size()) {
          partchoices.push_back(cur);
          return;
        }
        for (const Partition& p : partitions_of(s.generic[i].second)) {
          cur.push_back(p);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
    }
    for (const LusztigSymbol& pb : enumerate_symbols(pf, s.p)) {
      for (const LusztigSymbol& mb : enumerate_symbols(mf, s.ell)) {
        bool plus_slot = false, minus_slot = false;
        switch (g.fam) {
          case GF::Sp: minus_slot = s.ell > 0; break;
          case GF::Oodd: break;
          default:
            plus_slot = s.p > 0;
            minus_slot = s.ell > 0;
            break;
        }
        for (int po : detail::orientation_labels(pb, plus_slot)) {
          for (int mo : detail::orientation_labels(mb, minus_slot)) {
            for (const auto& parts : partchoices) {
              IrrepData r = base;
              r.parts = parts;
              r.plus_block = pb;
              r.minus_block = mb;
              r.plus_orient = po;
              r.minus_orient = mo;
              if (g.fam == GF::Oodd) {
                for (int es : {+1, -1}) {
                  r.ext_sign = es;
                  out.push_back(r);
                }
              } else {
                out.push_back(r);
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Terminal: the semisimple datum has no +-1 eigenvalues beyond the forced one
// (Sp case), none at all for the orthogonal groups.
inline bool is_terminal(const IrrepData& r) { return r.ss.p == 0 && r.ss.ell == 0; }

// The oriented rows of a +-1 block, resolving the stored label.  Degenerate
// and label-free blocks are given in canonical orientation.
inline OrderedSymbol oriented_block(const LusztigSymbol& sym, int orientation) {
  return orient(sym, orientation == 0 ? +1 : orientation);
}

// Parabolic induction at the classification level: sign +1 adds 2k eigenvalues
// 1 and applies the Pieri rule to the plus block, sign -1 the mirror.  All
// other data (including sign labels) is preserved.  The defect of the grown
// block is preserved, so an even-orthogonal eigenvalue block keeps its type;
// a freshly created one is split (D family).
inline std::vector<IrrepData> parabolic_induct_irrep(const IrrepData& r, int k, int sign,
                                                     long long) {
  if (k < 0) throw std::domain_error("k must be non-negative");
  if (k == 0) return {r};
  const LusztigSymbol& block = sign > 0 ? r.plus_block : r.minus_block;
  const int orientation = sign > 0 ? r.plus_orient : r.minus_orient;
  // Does the grown block carry an orientation slot / an ss type sign?
  bool even_slot;
  switch (r.group.fam) {
    case GF::Sp: even_slot = sign < 0; break;
    case GF::Oodd: even_slot = false; break;
    default: even_slot = true; break;
  }
  IrrepData grown = r;
  grown.group.rank += k;
  (sign > 0 ? grown.ss.p : grown.ss.ell) += k;
  // For an unoriented parent (BC, degenerate or empty block) the ordered
  // Pieri rule on the canonical orientation already emits both orientations
  // of every non-degenerate child.
  OrderedSymbol base = oriented_block(block, orientation);
  std::vector<IrrepData> out;
  for (const OrderedSymbol& child : pieri_induct_ordered(base, k)) {
    IrrepData g2 = grown;
    LusztigSymbol u = child.unordered();
    int label = even_slot && !is_degenerate(u) ? orientation_label(child) : 0;
    int type_sign = u.family == Family::TwoD ? -1 : +1;
    if (sign > 0) {
      g2.plus_block = u;
      g2.plus_orient = label;
      if (even_slot) g2.ss.plus_sign = type_sign;
    } else {
      g2.minus_block = u;
      g2.minus_orient = label;
      if (even_slot) g2.ss.minus_sign = type_sign;
    }
    out.push_back(g2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Tensoring an orthogonal-group representation with eps(det): flips the
// extension data, fixes everything else.
inline IrrepData twisted(const IrrepData& r) {
  IrrepData t = r;
  switch (r.group.fam) {
    case GF::Oodd:
      t.ext_sign = -r.ext_sign;
      break;
    case GF::OevenPlus:
    case GF::OevenMinus:
      t.plus_orient = -r.plus_orient;
      t.minus_orient = -r.minus_orient;
      break;
    default: throw std::domain_error("twist applies to orthogonal groups only");
  }
  return t;
}

}  // namespace howelab
