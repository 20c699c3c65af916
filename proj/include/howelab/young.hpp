#pragma once

#include "howelab/symbol.hpp"

namespace howelab {

// Weakly decreasing positive row lengths; zero rows are never stored.
using Diagram = std::vector<int>;

inline bool diagram_valid(const Diagram& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) return false;
    if (i + 1 < d.size() && d[i] < d[i + 1]) return false;
  }
  return true;
}

inline int diagram_boxes(const Diagram& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

// Row i of a symbol row (lambda_1 < ... < lambda_a) has diagram length
// lambda_{a-i+1} - (a-i); zero rows are dropped.
inline Diagram row_diagram(const std::vector<int>& row) {
  Diagram d;
  int a = static_cast<int>(row.size());
  for (int i = 1; i <= a; ++i) {
    int len = row[a - i] - (a - i);
    if (len < 0) throw InvalidSymbol("row is not strictly increasing");
    if (len > 0) d.push_back(len);
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] < d[i + 1]) throw InvalidSymbol("diagram rows not weakly decreasing");
  return d;
}

// Inverse of row_diagram at a prescribed row count (>= the diagram's rows):
// missing rows are padded with zeros.
inline std::vector<int> diagram_to_row(const Diagram& d, int rows) {
  if (rows < static_cast<int>(d.size())) throw InconsistentDefect("too few rows for diagram");
  std::vector<int> row(rows);
  for (int j = 1; j <= rows; ++j) {
    int alpha = rows - j < static_cast<int>(d.size()) ? d[rows - j] : 0;
    row[j - 1] = alpha + (j - 1);
  }
  return row;
}

struct DiagramPair {
  int defect = 0;  // |a - b| of the source symbol
  Diagram top, bottom;
};

inline DiagramPair symbol_to_diagrams(const LusztigSymbol& s) {
  DiagramPair p;
  p.defect = defect(s);
  p.top = row_diagram(s.row_a);
  p.bottom = row_diagram(s.row_b);
  return p;
}

// Reconstructs the canonical symbol of the given family from a diagram pair.
// Row counts are the minimal ones realizing the defect, which also makes the
// result reduced; rank = boxes + base_rank(family, defect).
inline LusztigSymbol diagrams_to_symbol(int def, const Diagram& top, const Diagram& bottom,
                                        Family fam) {
  if (def < 0) throw InconsistentDefect("defect must be non-negative");
  if (family_for_defect(def) != fam) throw InconsistentDefect("defect does not match family");
  if (!diagram_valid(top) || !diagram_valid(bottom))
    throw std::domain_error("invalid Young diagram");
  int a = std::max<int>(static_cast<int>(top.size()), static_cast<int>(bottom.size()) + def);
  int b = a - def;
  return LusztigSymbol(diagram_to_row(top, a), diagram_to_row(bottom, b));
}

// Ordered variant: the signed defect (top count minus bottom count) is
// preserved exactly, keeping track of which row is which.
inline OrderedSymbol ordered_from_diagrams(int signed_def, const Diagram& top,
                                           const Diagram& bottom) {
  if (!diagram_valid(top) || !diagram_valid(bottom))
    throw std::domain_error("invalid Young diagram");
  int a = std::max<int>(static_cast<int>(top.size()),
                        static_cast<int>(bottom.size()) + signed_def);
  int b = a - signed_def;
  return OrderedSymbol(diagram_to_row(top, a), diagram_to_row(bottom, b));
}

// All diagrams with |d| + k boxes obtained by adding a horizontal strip of
// size k: each row grows without overlapping the row above
// (gamma'_{i+1} <= gamma_i), plus at most one new row.
inline std::vector<Diagram> add_horizontal_strip(const Diagram& d, int k) {
  if (k < 0) throw std::domain_error("strip size must be non-negative");
  std::vector<Diagram> out;
  std::size_t rows = d.size();
  Diagram cur(rows + 1, 0);
  // choose the new length of each row from top down
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == rows + 1) {
      if (left != 0) return;
      Diagram g;
      for (int x : cur)
        if (x > 0) g.push_back(x);
      out.push_back(g);
      return;
    }
    int base = i < rows ? d[i] : 0;
    int cap = i == 0 ? base + left : std::min(base + left, std::min(cur[i - 1], d[i - 1]));
    for (int len = base; len <= cap; ++len) {
      if (i > 0 && len > cur[i - 1]) break;
      cur[i] = len;
      rec(i + 1, left - (len - base));
    }
    cur[i] = base;
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// k-step Pieri rule on an ordered symbol: over all splits k1 + k2 = k, add a
// horizontal strip of k1 to the top diagram and k2 to the bottom diagram,
// reconstructing at the original signed defect.
inline std::vector<OrderedSymbol> pieri_induct_ordered(const OrderedSymbol& s, int k) {
  if (k < 0) throw std::domain_error("k must be non-negative");
  Diagram top = row_diagram(s.top), bottom = row_diagram(s.bottom);
  int sd = s.signed_defect();
  std::vector<OrderedSymbol> out;
  for (int k1 = 0; k1 <= k; ++k1) {
    for (const Diagram& t : add_horizontal_strip(top, k1))
      for (const Diagram& b : add_horizontal_strip(bottom, k - k1))
        out.push_back(ordered_from_diagrams(sd, t, b));
  }
  std::sort(out.begin(), out.end());
  auto last = std::unique(out.begin(), out.end());
  if (last != out.end()) throw std::logic_error("pieri induction produced a repeated symbol");
  return out;
}

// Unordered Pieri rule; the result is a multiplicity-free set of symbols of
// rank(s) + k with the same defect and family.
inline std::vector<LusztigSymbol> pieri_induct(const LusztigSymbol& s, int k) {
  OrderedSymbol base(s.row_a, s.row_b);
  std::vector<LusztigSymbol> out;
  for (const OrderedSymbol& o : pieri_induct_ordered(base, k)) out.push_back(o.unordered());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace howelab
