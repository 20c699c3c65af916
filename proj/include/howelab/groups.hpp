#pragma once

#include "howelab/common.hpp"

#include <array>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

namespace howelab {

struct FieldSpec {
  long long q = 3;  // odd prime power
  long long p = 3;  // characteristic
  int e = 1;        // q = p^e
};

inline FieldSpec make_field(long long q) {
  if (q < 3 || q % 2 == 0) throw std::domain_error("q must be an odd prime power >= 3");
  long long p = 0;
  for (long long d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  FieldSpec f;
  f.q = q;
  f.p = p;
  f.e = 0;
  long long t = q;
  while (t > 1) {
    if (t % p != 0) throw std::domain_error("q is not a prime power");
    t /= p;
    f.e++;
  }
  return f;
}

// Quadratic character of F_q^x evaluated at -1.
inline int eps_minus_one(long long q) { return ((q - 1) / 2) % 2 == 0 ? 1 : -1; }

enum class GF { Sp, SOodd, SOevenPlus, SOevenMinus, Oodd, OevenPlus, OevenMinus, GL, U };

struct GroupSpec {
  GF fam = GF::Sp;
  int rank = 0;
  int n = 1;  // base-field degree over q, for GL/U factors

  auto key() const { return std::tuple(static_cast<int>(fam), rank, n); }
  bool operator==(const GroupSpec& o) const { return key() == o.key(); }
  bool operator<(const GroupSpec& o) const { return key() < o.key(); }
};

inline const char* group_family_name(GF f) {
  switch (f) {
    case GF::Sp: return "Sp";
    case GF::SOodd: return "SO_odd";
    case GF::SOevenPlus: return "SO_even_plus";
    case GF::SOevenMinus: return "SO_even_minus";
    case GF::Oodd: return "O_odd";
    case GF::OevenPlus: return "O_even_plus";
    case GF::OevenMinus: return "O_even_minus";
    case GF::GL: return "GL";
    case GF::U: return "U";
  }
  return "?";
}

inline Int group_order(const GroupSpec& g, long long q) {
  if (g.rank < 0) throw std::domain_error("negative rank");
  const Int Q = q;
  const int r = g.rank;
  auto sp_like = [&](int rr) {
    Int o = ipow(Q, 1LL * rr * rr);
    for (int i = 1; i <= rr; ++i) o *= ipow(Q, 2 * i) - 1;
    return o;
  };
  auto so_even = [&](int rr, int sign) {
    if (rr == 0) {
      if (sign < 0) throw std::domain_error("SO_0^- does not exist");
      return Int(1);
    }
    Int o = ipow(Q, 1LL * rr * (rr - 1)) * (ipow(Q, rr) - sign);
    for (int i = 1; i + 1 <= rr; ++i) o *= ipow(Q, 2 * i) - 1;
    return o;
  };
  switch (g.fam) {
    case GF::Sp:
    case GF::SOodd: return sp_like(r);
    case GF::SOevenPlus: return so_even(r, +1);
    case GF::SOevenMinus: return so_even(r, -1);
    case GF::Oodd: return 2 * sp_like(r);
    case GF::OevenPlus: return r == 0 ? Int(1) : 2 * so_even(r, +1);
    case GF::OevenMinus: return 2 * so_even(r, -1);
    case GF::GL: {
      Int qn = ipow(Q, g.n);
      Int o = ipow(qn, 1LL * r * (r - 1) / 2);
      for (int i = 1; i <= r; ++i) o *= ipow(qn, i) - 1;
      return o;
    }
    case GF::U: {
      Int qn = ipow(Q, g.n);
      Int o = ipow(qn, 1LL * r * (r - 1) / 2);
      for (int i = 1; i <= r; ++i) o *= ipow(qn, i) - (i % 2 == 0 ? 1 : -1);
      return o;
    }
  }
  throw std::logic_error("unreachable");
}

inline Int prime_to_q_part(Int x, long long q) {
  if (x <= 0) throw std::domain_error("prime_to_q_part needs a positive integer");
  long long p = make_field(q).p;
  while (x % p == 0) x /= p;
  return x;
}

// An eigenvalue orbit of a semisimple element: the orbit of a residue in
// Z/(q^n -+ 1) under multiplication by q and negation.  SelfDual orbits sit in
// mu_{q^n+1} (one SO_2^- factor per multiplicity unit), DualPair orbits in
// mu_{q^n-1} (one SO_2^+ factor).  +-1 residues are excluded.
struct TorusOrbit {
  int n = 1;
  bool self_dual = false;
  long long rep = 0;  // minimal residue of the orbit

  auto key() const { return std::tuple(n, !self_dual, rep); }
  bool operator==(const TorusOrbit& o) const { return key() == o.key(); }
  bool operator<(const TorusOrbit& o) const { return key() < o.key(); }

  long long modulus(long long q) const {
    long long m = 1;
    for (int i = 0; i < n; ++i) m *= q;
    return self_dual ? m + 1 : m - 1;
  }
  int factor_sign() const { return self_dual ? -1 : +1; }  // sign of the SO_2 factor
  // Quadratic character of the cyclic group at this coordinate.
  int eps() const { return rep % 2 == 0 ? 1 : -1; }
};

// Orbits of <multiplication by q, negation> on Z/M minus {0, M/2}, for both
// M = q^n - 1 and M = q^n + 1.  Minimal-n canonical: an orbit is kept only if
// its size is exactly 2n, which excludes coordinates realizable at smaller
// degree (those have strictly smaller combined orbits).
inline std::vector<TorusOrbit> enumerate_torus_orbits(long long q, int n) {
  if (n < 1) throw std::domain_error("n >= 1 required");
  std::vector<TorusOrbit> out;
  for (int sd = 0; sd <= 1; ++sd) {
    long long M = 1;
    for (int i = 0; i < n; ++i) M *= q;
    M += sd ? 1 : -1;
    std::vector<char> seen(M, 0);
    seen[0] = 1;
    if (M % 2 == 0) seen[M / 2] = 1;
    for (long long x = 1; x < M; ++x) {
      if (seen[x]) continue;
      // full orbit under multiplication-by-q and negation
      std::set<long long> orbit;
      std::vector<long long> stack{x};
      while (!stack.empty()) {
        long long y = stack.back();
        stack.pop_back();
        if (!orbit.insert(y).second) continue;
        stack.push_back((y * q) % M);
        stack.push_back((M - y) % M);
      }
      for (long long y : orbit) seen[y] = 1;
      if (static_cast<long long>(orbit.size()) != 2LL * n) continue;
      // Frobenius orbit of x alone
      std::set<long long> frob;
      long long y = x;
      while (frob.insert(y).second) y = (y * q) % M;
      bool self_dual = frob.count((M - x) % M) > 0;
      assert(self_dual == (sd == 1));
      TorusOrbit t;
      t.n = n;
      t.self_dual = self_dual;
      t.rep = *orbit.begin();
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Eigenvalue data of a semisimple conjugacy class, in the bookkeeping of the
// ambient (dual) group.  p and ell count rank units of the +1 / -1 eigenvalue
// blocks; actual multiplicities depend on the ambient family (2p+1 for the
// forced eigenvalue in SO_odd).  plus_sign/minus_sign are the +- types of the
// even-orthogonal eigenvalue blocks where the ambient family carries them
// (0 = slot absent).
struct SemisimpleData {
  int p = 0;
  int ell = 0;
  int plus_sign = 0;
  int minus_sign = 0;
  std::vector<std::pair<TorusOrbit, int>> generic;  // sorted, multiplicities >= 1

  auto key() const {
    std::vector<std::tuple<int, int, long long, int>> g;
    for (auto& [t, m] : generic) g.emplace_back(t.n, t.self_dual ? 1 : 0, t.rep, m);
    return std::tuple(p, ell, plus_sign, minus_sign, g);
  }
  bool operator==(const SemisimpleData& o) const { return key() == o.key(); }
  bool operator<(const SemisimpleData& o) const { return key() < o.key(); }
};

enum class DualAmbient { Sp, SOodd, SOevenPlus, SOevenMinus };

inline int generic_rank(const SemisimpleData& s) {
  int r = 0;
  for (auto& [t, m] : s.generic) r += t.n * m;
  return r;
}

inline int generic_sign_product(const SemisimpleData& s) {
  int sign = 1;
  for (auto& [t, m] : s.generic)
    if (m % 2 == 1) sign *= t.factor_sign();
  return sign;
}

namespace detail {
// All multisets of torus orbits with total rank exactly r.
inline void generic_multisets(const std::vector<TorusOrbit>& orbits, std::size_t idx, int remaining,
                              std::vector<std::pair<TorusOrbit, int>>& cur,
                              std::vector<std::vector<std::pair<TorusOrbit, int>>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (idx >= orbits.size()) return;
  generic_multisets(orbits, idx + 1, remaining, cur, out);
  const TorusOrbit& t = orbits[idx];
  for (int m = 1; m * t.n <= remaining; ++m) {
    cur.emplace_back(t, m);
    generic_multisets(orbits, idx + 1, remaining - m * t.n, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

inline std::vector<SemisimpleData> enumerate_semisimple(DualAmbient amb, int rank, long long q) {
  std::vector<TorusOrbit> orbits;
  for (int n = 1; n <= rank; ++n)
    for (auto& t : enumerate_torus_orbits(q, n)) orbits.push_back(t);
  std::vector<SemisimpleData> out;
  for (int p = 0; p <= rank; ++p) {
    for (int ell = 0; p + ell <= rank; ++ell) {
      int grank = rank - p - ell;
      std::vector<std::vector<std::pair<TorusOrbit, int>>> gsets;
      std::vector<std::pair<TorusOrbit, int>> cur;
      detail::generic_multisets(orbits, 0, grank, cur, gsets);
      for (auto& g : gsets) {
        SemisimpleData s;
        s.p = p;
        s.ell = ell;
        s.generic = g;
        std::sort(s.generic.begin(), s.generic.end());
        switch (amb) {
          case DualAmbient::Sp:
            out.push_back(s);
            break;
          case DualAmbient::SOodd:
            if (ell > 0) {
              for (int ms : {+1, -1}) {
                s.minus_sign = ms;
                out.push_back(s);
              }
            } else {
              out.push_back(s);
            }
            break;
          case DualAmbient::SOevenPlus:
          case DualAmbient::SOevenMinus: {
            int total = amb == DualAmbient::SOevenPlus ? +1 : -1;
            int need = total * generic_sign_product(s);  // plus_sign * minus_sign
            for (int ps : {+1, -1}) {
              for (int ms : {+1, -1}) {
                if (p == 0 && ps != +1) continue;
                if (ell == 0 && ms != +1) continue;
                if (ps * ms != need) continue;
                s.plus_sign = p > 0 ? ps : 0;
                s.minus_sign = ell > 0 ? ms : 0;
                out.push_back(s);
              }
            }
            break;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Identity-component factors of the centralizer of a class in the ambient
// group.  Generic orbits give GL_j(q^n) (DualPair) or U_j(q^n) (SelfDual);
// the +-1 blocks depend on the ambient family.
inline std::vector<GroupSpec> centralizer_factors(const SemisimpleData& s, DualAmbient amb) {
  std::vector<GroupSpec> out;
  for (auto& [t, m] : s.generic) out.push_back({t.self_dual ? GF::U : GF::GL, m, t.n});
  switch (amb) {
    case DualAmbient::Sp:
      out.push_back({GF::Sp, s.p, 1});
      out.push_back({GF::Sp, s.ell, 1});
      break;
    case DualAmbient::SOodd:
      out.push_back({GF::SOodd, s.p, 1});
      out.push_back({s.minus_sign < 0 ? GF::SOevenMinus : GF::SOevenPlus, s.ell, 1});
      break;
    case DualAmbient::SOevenPlus:
    case DualAmbient::SOevenMinus:
      out.push_back({s.plus_sign < 0 ? GF::SOevenMinus : GF::SOevenPlus, s.p, 1});
      out.push_back({s.minus_sign < 0 ? GF::SOevenMinus : GF::SOevenPlus, s.ell, 1});
      break;
  }
  return out;
}

inline Int centralizer_order_qprime(const SemisimpleData& s, DualAmbient amb, long long q) {
  Int o = 1;
  for (auto& g : centralizer_factors(s, amb)) o *= group_order(g, q);
  return prime_to_q_part(o, q);
}

// Product of the quadratic characters of the coordinates of the class.  A -1
// eigenvalue block of ell units contributes eps(-1)^ell times the block sign;
// when the ambient bookkeeping does not carry a minus-block sign (Sp classes)
// the split embedding (sign +1) is used.
inline int epsilon_semisimple(const SemisimpleData& s, long long q) {
  int sign = 1;
  for (auto& [t, m] : s.generic)
    if (m % 2 == 1) sign *= t.eps();
  if (s.ell % 2 == 1) sign *= eps_minus_one(q);
  if (s.ell > 0 && s.minus_sign != 0) sign *= s.minus_sign;
  return sign;
}

}  // namespace howelab
