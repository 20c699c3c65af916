#pragma once

#include "howelab/groups.hpp"

#include <optional>
#include <sstream>

namespace howelab {

enum class Family { BC, D, TwoD };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::TwoD: return "2D";
  }
  return "?";
}

inline Family family_for_defect(int absdef) {
  switch (((absdef % 4) + 4) % 4) {
    case 0: return Family::D;
    case 2: return Family::TwoD;
    default: return Family::BC;
  }
}

// Minimal rank of a symbol with the given family and absolute defect: the
// rank of the cuspidal symbol {0<1<...<d-1 | }.
inline int base_rank(Family fam, int absdef) {
  if (fam == Family::BC) return (absdef * absdef - 1) / 4;
  return absdef * absdef / 4;
}

namespace detail {
inline bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] >= v[i + 1]) return false;
  return v.empty() || v.front() >= 0;
}
inline long long row_sum(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s;
}
// Canonical storage order: the longer row first; equal lengths are decided by
// the comparison from the last entry downward.  This is also the canonical
// orientation used for the even-orthogonal extension data.
inline bool storage_ordered(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return true;
}
}  // namespace detail

// A Lusztig symbol with unordered rows.  Rows are stored in a fixed canonical
// order (lexicographically larger row first) so that value equality is
// row-order-insensitive.  Symbols need not be reduced; see canonicalize().
struct LusztigSymbol {
  std::vector<int> row_a, row_b;
  Family family = Family::BC;

  LusztigSymbol() : family(Family::D) {}
  LusztigSymbol(std::vector<int> a, std::vector<int> b) {
    if (!detail::strictly_increasing(a) || !detail::strictly_increasing(b))
      throw InvalidSymbol("symbol rows must be strictly increasing and non-negative");
    if (!detail::storage_ordered(a, b)) std::swap(a, b);
    row_a = std::move(a);
    row_b = std::move(b);
    family = family_for_defect(static_cast<int>(row_a.size()) - static_cast<int>(row_b.size()));
  }

  int a_len() const { return static_cast<int>(row_a.size()); }
  int b_len() const { return static_cast<int>(row_b.size()); }
  int entries() const { return a_len() + b_len(); }

  auto key() const { return std::tuple(row_a, row_b); }
  bool operator==(const LusztigSymbol& o) const { return key() == o.key(); }
  bool operator!=(const LusztigSymbol& o) const { return !(*this == o); }
  bool operator<(const LusztigSymbol& o) const { return key() < o.key(); }
};

inline int defect(const LusztigSymbol& s) { return std::abs(s.a_len() - s.b_len()); }

inline int rank(const LusztigSymbol& s) {
  long long total = detail::row_sum(s.row_a) + detail::row_sum(s.row_b);
  long long ab = s.a_len() + s.b_len();
  long long corr4;
  if (s.family == Family::BC)
    corr4 = (ab - 1) * (ab - 1);
  else
    corr4 = ab * (ab - 2);
  if (corr4 % 4 != 0) throw InvalidSymbol("rank correction is not integral");
  long long r = total - corr4 / 4;
  if (r < 0) throw InvalidSymbol("negative rank");
  return static_cast<int>(r);
}

inline bool is_canonical(const LusztigSymbol& s) {
  return !(s.a_len() > 0 && s.b_len() > 0 && s.row_a.front() == 0 && s.row_b.front() == 0);
}

// Repeatedly drops a leading 0 from both rows and decrements the remaining
// entries.  Rank and defect are preserved.
inline LusztigSymbol canonicalize(LusztigSymbol s) {
  while (!is_canonical(s)) {
    std::vector<int> a(s.row_a.begin() + 1, s.row_a.end());
    std::vector<int> b(s.row_b.begin() + 1, s.row_b.end());
    for (int& x : a) --x;
    for (int& x : b) --x;
    s = LusztigSymbol(std::move(a), std::move(b));
  }
  return s;
}

// Inverse of the reduction convention: prepends t fresh entries 0..t-1 to each
// row after adding t to the existing entries.
inline LusztigSymbol shift(const LusztigSymbol& s, int t) {
  if (t < 0) throw std::domain_error("shift amount must be non-negative");
  if (t == 0) return s;
  auto grow = [&](const std::vector<int>& row) {
    std::vector<int> out;
    for (int i = 0; i < t; ++i) out.push_back(i);
    for (int x : row) out.push_back(x + t);
    return out;
  };
  return LusztigSymbol(grow(s.row_a), grow(s.row_b));
}

inline bool is_degenerate(const LusztigSymbol& s) {
  return s.family == Family::D && s.row_a == s.row_b;
}

inline GroupSpec ambient_group(const LusztigSymbol& s) {
  switch (s.family) {
    case Family::BC: return {GF::Sp, rank(s), 1};
    case Family::D: return {GF::SOevenPlus, rank(s), 1};
    case Family::TwoD: return {GF::SOevenMinus, rank(s), 1};
  }
  throw std::logic_error("unreachable");
}

// Lusztig's dimension formula for the unipotent representation attached to a
// symbol.  For a degenerate symbol the value is the combined dimension of its
// two constituents.
inline Rat dim_unipotent_rat(const LusztigSymbol& s, long long q) {
  const Int Q = q;
  Rat num = 1;
  auto row_pairs = [&](const std::vector<int>& row) {
    Rat r = 1;
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j) r *= Rat(ipow(Q, row[j]) - ipow(Q, row[i]));
    return r;
  };
  num *= row_pairs(s.row_a);
  num *= row_pairs(s.row_b);
  for (int x : s.row_a)
    for (int y : s.row_b) num *= Rat(ipow(Q, x) + ipow(Q, y));
  num *= Rat(prime_to_q_part(group_order(ambient_group(s), q), q));

  long long ab = s.entries();
  Rat den = ipow(Int(2), std::max<long long>(0, (ab - 1) / 2));
  auto hook = [&](const std::vector<int>& row) {
    Rat r = 1;
    for (int x : row)
      for (int j = 1; j <= x; ++j) r *= Rat(ipow(Q, 2 * j) - 1);
    return r;
  };
  den *= hook(s.row_a);
  den *= hook(s.row_b);
  Int d = 0;
  for (long long i = 1; i <= ab / 2; ++i) d += binom2(ab - 2 * i);
  den *= Rat(ipow(Q, static_cast<long long>(d)));
  return num / den;
}

inline Int dim_unipotent(const LusztigSymbol& s, long long q) {
  Rat v = dim_unipotent_rat(s, q);
  if (denominator(v) != 1 || numerator(v) <= 0)
    throw NonIntegralDimension("unipotent dimension is not a positive integer");
  return numerator(v);
}

// Dimension of one irreducible constituent: the formula value, halved for a
// degenerate symbol of positive rank (which names two equidimensional
// representations; the empty symbol is the single trivial one).
inline Int dim_unipotent_constituent(const LusztigSymbol& s, long long q) {
  Int v = dim_unipotent(s, q);
  if (is_degenerate(s) && !s.row_a.empty()) {
    if (v % 2 != 0) throw NonIntegralDimension("degenerate symbol dimension is odd");
    return v / 2;
  }
  return v;
}

// A symbol with distinguished top and bottom rows (Pan's bracket notation and
// the internal carrier of even-orthogonal extension data).
struct OrderedSymbol {
  std::vector<int> top, bottom;
  Family family = Family::BC;

  OrderedSymbol() : family(Family::D) {}
  OrderedSymbol(std::vector<int> t, std::vector<int> b) : top(std::move(t)), bottom(std::move(b)) {
    if (!detail::strictly_increasing(top) || !detail::strictly_increasing(bottom))
      throw InvalidSymbol("ordered symbol rows must be strictly increasing and non-negative");
    family = family_for_defect(static_cast<int>(top.size()) - static_cast<int>(bottom.size()));
  }

  int signed_defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  LusztigSymbol unordered() const { return LusztigSymbol(top, bottom); }
  OrderedSymbol swapped() const { return OrderedSymbol(bottom, top); }

  auto key() const { return std::tuple(top, bottom); }
  bool operator==(const OrderedSymbol& o) const { return key() == o.key(); }
  bool operator<(const OrderedSymbol& o) const { return key() < o.key(); }
};

// Canonical orientation of an unordered even-family symbol: the storage
// order (longer row on top; ties from the last entry downward).  Degenerate
// symbols have a single orientation.
inline OrderedSymbol orientation_canonical(const LusztigSymbol& s) {
  return OrderedSymbol(s.row_a, s.row_b);
}

// Orientation referenced by a +-1 label; label +1 is the canonical
// orientation.  Used for the extension/central sign data of even-orthogonal
// blocks.
inline OrderedSymbol orient(const LusztigSymbol& s, int label) {
  OrderedSymbol c = orientation_canonical(s);
  return label >= 0 ? c : c.swapped();
}

inline int orientation_label(const OrderedSymbol& os) {
  return os == orientation_canonical(os.unordered()) ? +1 : -1;
}

enum class PanChoice { Canonical, Swapped };

// Pan's ordered-symbol notation.  BC symbols have a forced order (defect 1
// mod 4); for even families the caller picks the orientation.
inline OrderedSymbol to_pan(const LusztigSymbol& s, PanChoice choice = PanChoice::Canonical) {
  if (s.family == Family::BC) {
    OrderedSymbol o(s.row_a, s.row_b);
    if (((o.signed_defect() % 4) + 4) % 4 != 1) o = o.swapped();
    if (((o.signed_defect() % 4) + 4) % 4 != 1) throw InvalidSymbol("no defect-1 orientation");
    return o;
  }
  return orient(s, choice == PanChoice::Canonical ? +1 : -1);
}

inline std::pair<LusztigSymbol, PanChoice> from_pan(const OrderedSymbol& os) {
  LusztigSymbol s = os.unordered();
  if (s.family == Family::BC) return {s, PanChoice::Canonical};
  return {s, orientation_label(os) > 0 ? PanChoice::Canonical : PanChoice::Swapped};
}

// Text form "{a1<a2<...|b1<...}" with an empty side allowed.
inline std::string render(const LusztigSymbol& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.row_a.size(); ++i) os << (i ? "<" : "") << s.row_a[i];
  os << '|';
  for (std::size_t i = 0; i < s.row_b.size(); ++i) os << (i ? "<" : "") << s.row_b[i];
  os << '}';
  return os.str();
}

inline std::string render(const OrderedSymbol& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.top.size(); ++i) os << (i ? "<" : "") << s.top[i];
  os << '/';
  for (std::size_t i = 0; i < s.bottom.size(); ++i) os << (i ? "<" : "") << s.bottom[i];
  os << ']';
  return os.str();
}

inline LusztigSymbol parse_symbol(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) {
    throw InvalidSymbol("symbol parse error at position " + std::to_string(pos) + ": " + msg);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
  ++pos;
  auto read_row = [&](char terminator) {
    std::vector<int> row;
    skip_ws();
    while (pos < text.size() && text[pos] != terminator) {
      if (!row.empty()) {
        if (text[pos] != '<' && text[pos] != ',') fail("expected '<' between entries");
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a non-negative integer");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      row.push_back(v);
      skip_ws();
    }
    if (pos >= text.size()) fail(std::string("expected '") + terminator + "'");
    ++pos;
    return row;
  };
  std::vector<int> a = read_row('|');
  std::vector<int> b = read_row('}');
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  return LusztigSymbol(std::move(a), std::move(b));
}

inline LusztigSymbol trivial_bc_symbol(int r) {
  return LusztigSymbol({r}, {});
}
inline LusztigSymbol empty_d_symbol() { return LusztigSymbol({}, {}); }
inline LusztigSymbol steinberg_symbol(int m) {
  std::vector<int> a, b;
  for (int i = 0; i <= m; ++i) a.push_back(i);
  for (int i = 1; i <= m; ++i) b.push_back(i);
  return LusztigSymbol(std::move(a), std::move(b));
}

}  // namespace howelab
