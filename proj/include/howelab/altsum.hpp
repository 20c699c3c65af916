#pragma once

#include "howelab/young.hpp"

#include <map>

namespace howelab {

// One induction term of an alternating sum A_k(theta, N').  The designated
// row of every symbol here is the TOP row of the OrderedSymbol.
struct AltsumTerm {
  int sign = 1;        // (-1)^{a+1-q}
  int step = 0;        // induction step k - (N' - lambda_q)
  OrderedSymbol sym;   // theta with lambda_q removed and N' appended (or theta itself)
};

// Terms of A_k(theta, N') where N' exceeds every coordinate of the designated
// (top) row.  For q = c..a the q-th coordinate is removed and N' appended;
// the q = a+1 term is theta itself with step k.  c is the minimal index with
// k >= N' - lambda_c.
inline std::vector<AltsumTerm> altsum_terms(const OrderedSymbol& theta, int n_prime, int k) {
  const std::vector<int>& lam = theta.top;
  const int a = static_cast<int>(lam.size());
  if (!lam.empty() && n_prime <= lam.back())
    throw BadRange("N' must exceed the largest designated-row coordinate");
  if (n_prime < 0 || k < 0) throw BadRange("N' and k must be non-negative");
  int c = a + 1;
  for (int i = 1; i <= a; ++i) {
    if (k >= n_prime - lam[i - 1]) {
      c = i;
      break;
    }
  }
  std::vector<AltsumTerm> out;
  for (int qidx = c; qidx <= a; ++qidx) {
    std::vector<int> row;
    for (int i = 0; i < a; ++i)
      if (i != qidx - 1) row.push_back(lam[i]);
    row.push_back(n_prime);
    AltsumTerm t;
    t.sign = (a + 1 - qidx) % 2 == 0 ? 1 : -1;
    t.step = k - (n_prime - lam[qidx - 1]);
    t.sym = OrderedSymbol(row, theta.bottom);
    out.push_back(t);
  }
  AltsumTerm last;
  last.sign = 1;
  last.step = k;
  last.sym = theta;
  out.push_back(last);
  return out;
}

// Closed-form resolution: the subset of the k-step Pieri induction of theta
// whose designated-row top coordinate lambda'_{a'} satisfies
// lambda'_{a'} < N' + (a' - a).
inline std::vector<OrderedSymbol> altsum_resolve(const OrderedSymbol& theta, int n_prime, int k) {
  const int a = static_cast<int>(theta.top.size());
  if (!theta.top.empty() && n_prime <= theta.top.back())
    throw BadRange("N' must exceed the largest designated-row coordinate");
  std::vector<OrderedSymbol> out;
  for (const OrderedSymbol& child : pieri_induct_ordered(theta, k)) {
    int ap = static_cast<int>(child.top.size());
    if (child.top.empty() || child.top.back() < n_prime + (ap - a)) out.push_back(child);
  }
  return out;
}

struct SignedSymbolSum {
  std::map<OrderedSymbol, long long> coeff;

  void add(const OrderedSymbol& s, long long c) {
    auto it = coeff.find(s);
    if (it == coeff.end()) {
      if (c != 0) coeff.emplace(s, c);
    } else {
      it->second += c;
      if (it->second == 0) coeff.erase(it);
    }
  }
};

// Expands the alternating sum through the Pieri rule, cancels, and compares
// with the closed form; also checks genuineness (coefficients in {0,1}).
inline bool altsum_verify(const OrderedSymbol& theta, int n_prime, int k) {
  SignedSymbolSum sum;
  for (const AltsumTerm& t : altsum_terms(theta, n_prime, k))
    for (const OrderedSymbol& child : pieri_induct_ordered(t.sym, t.step)) sum.add(child, t.sign);
  for (auto& [s, c] : sum.coeff)
    if (c != 0 && c != 1) return false;
  std::vector<OrderedSymbol> expanded;
  for (auto& [s, c] : sum.coeff)
    if (c == 1) expanded.push_back(s);
  std::vector<OrderedSymbol> resolved = altsum_resolve(theta, n_prime, k);
  std::sort(resolved.begin(), resolved.end());
  return expanded == resolved;
}

}  // namespace howelab
