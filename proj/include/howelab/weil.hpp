#pragma once

#include "howelab/groups.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <variant>

namespace howelab::detail {
inline constexpr double kTau = 6.283185307179586476925286766559;
}

namespace howelab {

// ---------------------------------------------------------------------------
// Prime-field matrices.  The oracle works over prime q only.

struct FqMatrix {
  int dim = 0;
  long long q = 3;
  std::vector<int> e;  // row-major

  FqMatrix() = default;
  FqMatrix(int d, long long qq) : dim(d), q(qq), e(d * d, 0) {}
  int& at(int r, int c) { return e[r * dim + c]; }
  int at(int r, int c) const { return e[r * dim + c]; }
  static FqMatrix identity(int d, long long q) {
    FqMatrix m(d, q);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }
  bool operator==(const FqMatrix& o) const { return dim == o.dim && e == o.e; }
  bool operator<(const FqMatrix& o) const { return e < o.e; }
};

inline FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix c(a.dim, a.q);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      int v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < a.dim; ++j)
        c.at(i, j) = static_cast<int>((c.at(i, j) + 1LL * v * b.at(k, j)) % a.q);
    }
  return c;
}

inline FqMatrix transpose(const FqMatrix& a) {
  FqMatrix t(a.dim, a.q);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

inline int fq_inv(long long x, long long q) {
  x %= q;
  if (x < 0) x += q;
  long long r = 1, b = x, e2 = q - 2;
  while (e2) {
    if (e2 & 1) r = r * b % q;
    b = b * b % q;
    e2 >>= 1;
  }
  return static_cast<int>(r);
}

// Gaussian elimination; returns (rank, det, inverse-if-square-invertible).
struct FqGauss {
  int rank = 0;
  int det = 0;
  bool invertible = false;
  FqMatrix inverse;
};

inline FqGauss fq_gauss(FqMatrix a) {
  const long long q = a.q;
  const int n = a.dim;
  FqGauss g;
  g.inverse = FqMatrix::identity(n, q);
  long long det = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != row) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.e[piv * n + j], a.e[row * n + j]);
        std::swap(g.inverse.e[piv * n + j], g.inverse.e[row * n + j]);
      }
      det = (q - det) % q;
    }
    long long inv = fq_inv(a.at(row, col), q);
    det = det * a.at(row, col) % q;
    for (int j = 0; j < n; ++j) {
      a.e[row * n + j] = static_cast<int>(a.e[row * n + j] * inv % q);
      g.inverse.e[row * n + j] = static_cast<int>(g.inverse.e[row * n + j] * inv % q);
    }
    for (int r = 0; r < n; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      long long f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.e[r * n + j] = static_cast<int>(((a.e[r * n + j] - f * a.e[row * n + j]) % q + q) % q);
        g.inverse.e[r * n + j] =
            static_cast<int>(((g.inverse.e[r * n + j] - f * g.inverse.e[row * n + j]) % q + q) % q);
      }
    }
    ++row;
  }
  g.rank = row;
  g.det = static_cast<int>(g.rank == n ? det : 0);
  g.invertible = g.rank == n;
  return g;
}

// Quadratic character of F_q^x; eps(0) = 0.
inline int eps_fq(long long x, long long q) {
  x %= q;
  if (x < 0) x += q;
  if (x == 0) return 0;
  long long r = 1, b = x, e2 = (q - 1) / 2;
  while (e2) {
    if (e2 & 1) r = r * b % q;
    b = b * b % q;
    e2 >>= 1;
  }
  return r == 1 ? 1 : -1;
}

inline int smallest_nonresidue(long long q) {
  for (int x = 2; x < q; ++x)
    if (eps_fq(x, q) == -1) return x;
  throw std::logic_error("no quadratic non-residue found");
}

// The standard symplectic form on basis (e_1..e_N, f_1..f_N).
inline FqMatrix symplectic_form(int N, long long q) {
  FqMatrix j(2 * N, q);
  for (int i = 0; i < N; ++i) {
    j.at(i, N + i) = 1;
    j.at(N + i, i) = static_cast<int>(q - 1);
  }
  return j;
}

inline bool is_symplectic(const FqMatrix& g, int N) {
  FqMatrix j = symplectic_form(N, g.q);
  return transpose(g) * j * g == j;
}

// A 2N x 2N matrix preserving the standard symplectic form.
struct SymplecticElement {
  FqMatrix mat;
  SymplecticElement() = default;
  explicit SymplecticElement(FqMatrix m) : mat(std::move(m)) {
    if (mat.dim % 2 != 0 || !is_symplectic(mat, mat.dim / 2))
      throw std::domain_error("matrix does not preserve the symplectic form");
  }
  int N() const { return mat.dim / 2; }
};

// ---------------------------------------------------------------------------
// Brute-force group enumeration (column DFS on the Gram constraints).

inline std::vector<FqMatrix> isometry_group_elements(const FqMatrix& gram) {
  const int d = gram.dim;
  const long long q = gram.q;
  std::vector<FqMatrix> out;
  std::vector<std::vector<int>> cols;
  std::vector<int> cur(d, 0);
  std::function<void(int)> rec = [&](int c) {
    if (c == d) {
      FqMatrix m(d, q);
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m.at(i, j) = cols[j][i];
      if (fq_gauss(m).invertible) out.push_back(m);
      return;
    }
    std::vector<int> v(d, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == d) {
        // check pairings with previous columns and itself
        for (int j = 0; j <= c; ++j) {
          const std::vector<int>& w = j == c ? v : cols[j];
          long long s = 0;
          for (int r = 0; r < d; ++r)
            for (int t = 0; t < d; ++t) s += 1LL * v[r] * gram.at(r, t) * w[t];
          long long want = gram.at(c, j);
          if (((s - want) % q + q) % q != 0) return;
        }
        cols.push_back(v);
        rec(c + 1);
        cols.pop_back();
        return;
      }
      for (int x = 0; x < q; ++x) {
        v[i] = x;
        fill(i + 1);
      }
      v[i] = 0;
    };
    fill(0);
  };
  (void)cur;
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<FqMatrix> symplectic_group_elements(int N, long long q) {
  return isometry_group_elements(symplectic_form(N, q));
}

// Diagonal Gram matrix of the requested type: odd dimension takes
// disc = eps(det) = form; even split is a sum of hyperbolic planes diag(1,-1);
// even non-split replaces one plane by an anisotropic diag(1,c).
inline FqMatrix pick_gram(int dimW, int form, long long q) {
  FqMatrix g(dimW, q);
  std::vector<int> diag;
  if (dimW % 2 == 1) {
    for (int i = 0; i + 1 < dimW; ++i) diag.push_back(i % 2 == 0 ? 1 : static_cast<int>(q - 1));
    diag.push_back(form > 0 ? 1 : smallest_nonresidue(q));
    // fix eps(det): the hyperbolic part contributes eps(-1)^{(dimW-1)/2}
    long long det = 1;
    for (int x : diag) det = det * x % q;
    if (eps_fq(det, q) != form) diag[dimW - 1] = diag[dimW - 1] == 1 ? smallest_nonresidue(q) : 1;
  } else if (form > 0) {
    for (int i = 0; i < dimW; ++i) diag.push_back(i % 2 == 0 ? 1 : static_cast<int>(q - 1));
  } else {
    int c = (q % 4 == 3) ? 1 : smallest_nonresidue(q);
    diag.push_back(1);
    diag.push_back(c);
    for (int i = 2; i < dimW; ++i) diag.push_back(i % 2 == 0 ? 1 : static_cast<int>(q - 1));
  }
  for (int i = 0; i < dimW; ++i) g.at(i, i) = diag[i];
  return g;
}

// Exhaustive conjugation-orbit computation.  conjugators must generate the
// group (the full element list always works).
struct ConjClass {
  FqMatrix rep;
  long long size = 0;
  std::size_t rep_index = 0;
};

inline std::vector<ConjClass> class_enumerate(const std::vector<FqMatrix>& elements,
                                              const std::vector<FqMatrix>& conjugators) {
  std::map<FqMatrix, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::pair<FqMatrix, FqMatrix>> conj;  // (g, g^{-1})
  for (const FqMatrix& g : conjugators) {
    auto gg = fq_gauss(g);
    if (!gg.invertible) throw std::domain_error("conjugator not invertible");
    conj.emplace_back(g, gg.inverse);
  }
  std::vector<char> seen(elements.size(), 0);
  std::vector<ConjClass> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    ConjClass cls;
    cls.rep = elements[i];
    cls.rep_index = i;
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      ++cls.size;
      for (auto& [g, gi] : conj) {
        FqMatrix x = gi * elements[j] * g;
        auto it = index.find(x);
        if (it == index.end()) throw std::logic_error("conjugation left the element list");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  long long total = 0;
  for (auto& c : classes) total += c.size;
  if (total != static_cast<long long>(elements.size()))
    throw std::logic_error("class sizes do not add up to the group order");
  return classes;
}

// ---------------------------------------------------------------------------
// Scalar backends: complex doubles and the exact field Q(zeta_3) for q = 3.

struct Zeta3 {  // a + b zeta_3
  Rat a = 0, b = 0;
  Zeta3() = default;
  Zeta3(Rat x) : a(std::move(x)) {}
  Zeta3(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}
  friend Zeta3 operator+(const Zeta3& x, const Zeta3& y) { return {x.a + y.a, x.b + y.b}; }
  friend Zeta3 operator-(const Zeta3& x, const Zeta3& y) { return {x.a - y.a, x.b - y.b}; }
  friend Zeta3 operator*(const Zeta3& x, const Zeta3& y) {
    // zeta^2 = -1 - zeta
    Rat bb = x.b * y.b;
    return {x.a * y.a - bb, x.a * y.b + x.b * y.a - bb};
  }
  Zeta3 conj() const { return {a - b, -b}; }  // zeta -> zeta^2
  Rat norm() const { return a * a - a * b + b * b; }
  Zeta3 inverse() const {
    Rat n = norm();
    if (n == 0) throw std::domain_error("division by zero in Q(zeta_3)");
    Zeta3 c = conj();
    return {c.a / n, c.b / n};
  }
  bool operator==(const Zeta3& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a == 0 && b == 0; }
};

struct ComplexScalar {
  using value = std::complex<double>;
  static value zero() { return {0.0, 0.0}; }
  static value one() { return {1.0, 0.0}; }
  static value from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static value psi(long long p, long long k) {
    k %= p;
    double t = detail::kTau * static_cast<double>(k) / static_cast<double>(p);
    return {std::cos(t), std::sin(t)};
  }
  static value mul(const value& x, const value& y) { return x * y; }
  static value add(const value& x, const value& y) { return x + y; }
  static value sub(const value& x, const value& y) { return x - y; }
  static value div(const value& x, const value& y) { return x / y; }
  static value conj(const value& x) { return std::conj(x); }
  static double abs2(const value& x) { return std::norm(x); }
};

struct Zeta3Scalar {
  using value = Zeta3;
  static value zero() { return {}; }
  static value one() { return {Rat(1)}; }
  static value from_int(long long v) { return {Rat(v)}; }
  static value psi(long long p, long long k) {
    if (p != 3) throw std::domain_error("exact cyclotomic backend supports q = 3 only");
    k %= 3;
    if (k < 0) k += 3;
    if (k == 0) return one();
    if (k == 1) return {Rat(0), Rat(1)};
    return {Rat(-1), Rat(-1)};  // zeta^2
  }
  static value mul(const value& x, const value& y) { return x * y; }
  static value add(const value& x, const value& y) { return x + y; }
  static value sub(const value& x, const value& y) { return x - y; }
  static value div(const value& x, const value& y) { return x * y.inverse(); }
  static value conj(const value& x) { return x.conj(); }
  static Rat abs2(const value& x) { return x.norm(); }
};

// Dense q^N x q^N operator on the Lagrangian function model.
template <class S>
struct ModelOperator {
  int dim = 0;
  std::vector<typename S::value> e;
  ModelOperator() = default;
  explicit ModelOperator(int d) : dim(d), e(1LL * d * d, S::zero()) {}
  typename S::value& at(int r, int c) { return e[1LL * r * dim + c]; }
  const typename S::value& at(int r, int c) const { return e[1LL * r * dim + c]; }
  static ModelOperator identity(int d) {
    ModelOperator m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = S::one();
    return m;
  }
  friend ModelOperator operator*(const ModelOperator& a, const ModelOperator& b) {
    ModelOperator c(a.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < a.dim; ++k) {
        const auto& v = a.at(i, k);
        if (S::abs2(v) == 0) continue;
        for (int j = 0; j < a.dim; ++j)
          c.at(i, j) = S::add(c.at(i, j), S::mul(v, b.at(k, j)));
      }
    return c;
  }
  typename S::value trace() const {
    auto t = S::zero();
    for (int i = 0; i < dim; ++i) t = S::add(t, at(i, i));
    return t;
  }
};

// Generators of Sp_2N through the Siegel parabolic.
struct GenUpper {
  FqMatrix A;  // symmetric
};
struct GenWeyl {
  FqMatrix B;  // symmetric invertible
};
struct GenLevi {
  FqMatrix C;  // invertible
};
using Generator = std::variant<GenUpper, GenWeyl, GenLevi>;

inline FqMatrix generator_matrix(const Generator& gen, int N, long long q) {
  FqMatrix m(2 * N, q);
  if (std::holds_alternative<GenUpper>(gen)) {
    const FqMatrix& A = std::get<GenUpper>(gen).A;
    for (int i = 0; i < 2 * N; ++i) m.at(i, i) = 1;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m.at(i, N + j) = A.at(i, j);
  } else if (std::holds_alternative<GenWeyl>(gen)) {
    const FqMatrix& B = std::get<GenWeyl>(gen).B;
    FqMatrix Binv = fq_gauss(B).inverse;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        m.at(i, N + j) = B.at(i, j);
        m.at(N + i, j) = static_cast<int>((q - Binv.at(i, j)) % q);
      }
  } else {
    const FqMatrix& C = std::get<GenLevi>(gen).C;
    FqMatrix Cti = fq_gauss(transpose(C)).inverse;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        m.at(i, j) = Cti.at(i, j);
        m.at(N + i, N + j) = C.at(i, j);
      }
  }
  return m;
}

namespace detail {
inline std::vector<std::vector<int>> all_vectors(int N, long long q) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(N, 0);
  while (true) {
    out.push_back(v);
    int i = N - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}
inline long long form_value(const FqMatrix& B, const std::vector<int>& v,
                            const std::vector<int>& w) {
  long long s = 0;
  for (int i = 0; i < B.dim; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < B.dim; ++j) s += 1LL * v[i] * B.at(i, j) * w[j];
  }
  return s % B.q;
}
}  // namespace detail

// The three displayed generator actions on the Schroedinger model; the Levi
// action carries eps(det C) (the printed eps(-1) breaks the homomorphism
// property and the closed-form character, so det C is used).
template <class S>
ModelOperator<S> generator_operator(const Generator& gen, int N, long long q, long long a = 1) {
  const long long p = make_field(q).p;
  if (make_field(q).e != 1) throw std::domain_error("the matrix model requires prime q");
  auto vecs = detail::all_vectors(N, q);
  const int D = static_cast<int>(vecs.size());
  const long long half = (q + 1) / 2;  // inverse of 2 mod q
  ModelOperator<S> op(D);
  if (std::holds_alternative<GenUpper>(gen)) {
    const FqMatrix& A = std::get<GenUpper>(gen).A;
    if (!(A == transpose(A))) throw std::domain_error("upper generator needs symmetric A");
    for (int v = 0; v < D; ++v) {
      long long val = a % q * half % q * detail::form_value(A, vecs[v], vecs[v]) % q;
      op.at(v, v) = S::psi(p, val);
    }
  } else if (std::holds_alternative<GenWeyl>(gen)) {
    const FqMatrix& B = std::get<GenWeyl>(gen).B;
    if (!(B == transpose(B)) || !fq_gauss(B).invertible)
      throw std::domain_error("weyl generator needs symmetric invertible B");
    // Normalized by eps(det B) (sum_x psi(-2a x^2))^N.  The printed sum
    // psi((a/2) B(u,u)) differs from this by the constant eps(-1)^N, under
    // which the representation property fails on longer words whenever
    // eps(-1) = -1 on an odd number of coordinates; the corrected divisor is
    // pinned exactly by the relations W(B) W(B') = L and W U W = U W U L,
    // and the multiplication-table tests verify it.
    long long c0 = ((-2 * a) % q + q) % q;
    auto gamma = S::from_int(eps_fq(fq_gauss(B).det, q));
    {
      auto g1 = S::zero();
      for (long long x = 0; x < q; ++x) g1 = S::add(g1, S::psi(p, c0 * x % q * x % q));
      for (int i = 0; i < N; ++i) gamma = S::mul(gamma, g1);
    }
    for (int v = 0; v < D; ++v)
      for (int w = 0; w < D; ++w)
        op.at(w, v) = S::div(S::psi(p, a % q * detail::form_value(B, vecs[v], vecs[w]) % q), gamma);
  } else {
    const FqMatrix& C = std::get<GenLevi>(gen).C;
    auto g = fq_gauss(C);
    if (!g.invertible) throw std::domain_error("levi generator needs invertible C");
    auto scale = S::from_int(eps_fq(g.det, q));
    std::map<std::vector<int>, int> index;
    for (int v = 0; v < D; ++v) index.emplace(vecs[v], v);
    for (int v = 0; v < D; ++v) {
      std::vector<int> img(N, 0);
      for (int i = 0; i < N; ++i) {
        long long s = 0;
        for (int j = 0; j < N; ++j) s += 1LL * C.at(i, j) * vecs[v][j];
        img[i] = static_cast<int>(s % q);
      }
      op.at(index.at(img), v) = scale;
    }
  }
  return op;
}

// Bruhat-style factorization through the Siegel parabolic: the returned word
// of generators multiplies out to g.
inline std::vector<Generator> factorize(const SymplecticElement& g) {
  const int N = g.N();
  const long long q = g.mat.q;
  auto block = [&](int r0, int c0) {
    FqMatrix b(N, q);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) b.at(i, j) = g.mat.at(r0 + i, c0 + j);
    return b;
  };
  FqMatrix A = block(0, 0), B = block(0, N), C = block(N, 0), D = block(N, N);
  auto is_zero = [](const FqMatrix& m) {
    for (int x : m.e)
      if (x) return false;
    return true;
  };
  std::vector<Generator> word;
  if (g.mat == FqMatrix::identity(2 * N, q)) return word;
  auto cg = fq_gauss(C);
  if (is_zero(A) && is_zero(D) && B == transpose(B)) {
    word.push_back(GenWeyl{B});
  } else if (is_zero(C)) {
    // g = L(A) U(A^{-1} B); the levi generator with C_gen = A^{-T} has
    // top-left block A.
    FqMatrix Ainv = fq_gauss(A).inverse;
    word.push_back(GenLevi{transpose(Ainv)});
    FqMatrix X = Ainv * B;
    if (!is_zero(X)) word.push_back(GenUpper{X});
  } else if (cg.invertible) {
    // g = U(A C^{-1}) W(-I) U(D C^T) L where L has top-left block C,
    // i.e. C_gen = C^{-T}
    FqMatrix X = A * cg.inverse;
    FqMatrix Y = D * transpose(C);
    if (!is_zero(X)) word.push_back(GenUpper{X});
    FqMatrix negI(N, q);
    for (int i = 0; i < N; ++i) negI.at(i, i) = static_cast<int>(q - 1);
    word.push_back(GenWeyl{negI});
    if (!is_zero(Y)) word.push_back(GenUpper{Y});
    word.push_back(GenLevi{transpose(cg.inverse)});
  } else {
    // find symmetric S with C + D S invertible, peel off Low(S)
    FqMatrix S(N, q);
    bool found = false;
    int slots = N * (N + 1) / 2;
    long long total = 1;
    for (int i = 0; i < slots; ++i) total *= q;
    for (long long code = 0; code < total && !found; ++code) {
      long long c2 = code;
      FqMatrix Sc(N, q);
      for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
          int v = static_cast<int>(c2 % q);
          c2 /= q;
          Sc.at(i, j) = v;
          Sc.at(j, i) = v;
        }
      FqMatrix CDS = C;
      FqMatrix DS = D * Sc;
      for (int t = 0; t < N * N; ++t) CDS.e[t] = static_cast<int>((CDS.e[t] + DS.e[t]) % q);
      if (fq_gauss(CDS).invertible) {
        S = Sc;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no symmetric S with C + DS invertible");
    // g = (g Low(S)) Low(-S), Low(-S) = W(I) U(S) W(-I)
    FqMatrix low = FqMatrix::identity(2 * N, q);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) low.at(N + i, j) = S.at(i, j);
    SymplecticElement g2(g.mat * low);
    word = factorize(g2);
    FqMatrix I = FqMatrix::identity(N, q);
    FqMatrix negI = I;
    for (int i = 0; i < N; ++i) negI.at(i, i) = static_cast<int>(q - 1);
    word.push_back(GenWeyl{I});
    word.push_back(GenUpper{S});
    word.push_back(GenWeyl{negI});
  }
  // verify the word multiplies out to g
  FqMatrix prod = FqMatrix::identity(2 * N, q);
  for (const Generator& w : word) prod = prod * generator_matrix(w, N, q);
  if (!(prod == g.mat)) throw std::logic_error("factorization failed to reproduce the element");
  return word;
}

template <class S>
ModelOperator<S> weil_operator(const SymplecticElement& g, long long a = 1) {
  const int N = g.N();
  const long long q = g.mat.q;
  auto word = factorize(g);
  ModelOperator<S> op = ModelOperator<S>::identity(1);
  bool first = true;
  for (const Generator& w : word) {
    auto gw = generator_operator<S>(w, N, q, a);
    op = first ? gw : op * gw;
    first = false;
  }
  if (first) {
    int D = 1;
    for (int i = 0; i < N; ++i) D *= static_cast<int>(q);
    op = ModelOperator<S>::identity(D);
  }
  return op;
}

template <class S>
typename S::value character(const SymplecticElement& g, long long a = 1) {
  return weil_operator<S>(g, a).trace();
}

// Congruent diagonalization of a symmetric form over F_q (char != 2):
// returns the nonzero diagonal entries.
inline std::vector<int> diagonalize_symmetric(FqMatrix A) {
  const long long q = A.q;
  const int n = A.dim;
  std::vector<int> diag;
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  while (!active.empty()) {
    // find a nonzero diagonal entry among active indices
    int pivot = -1;
    for (int i : active)
      if (A.at(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // all diagonal zero: find offdiagonal nonzero and mix
      int pi = -1, pj = -1;
      for (std::size_t a1 = 0; a1 < active.size() && pi < 0; ++a1)
        for (std::size_t a2 = a1 + 1; a2 < active.size() && pi < 0; ++a2)
          if (A.at(active[a1], active[a2]) != 0) {
            pi = active[a1];
            pj = active[a2];
          }
      if (pi < 0) break;  // the active block is zero
      // replace row/col pi by pi + pj to create a diagonal entry
      for (int t = 0; t < n; ++t)
        A.at(pi, t) = static_cast<int>((A.at(pi, t) + A.at(pj, t)) % q);
      for (int t = 0; t < n; ++t)
        A.at(t, pi) = static_cast<int>((A.at(t, pi) + A.at(t, pj)) % q);
      continue;
    }
    long long d = A.at(pivot, pivot);
    diag.push_back(static_cast<int>(d));
    long long dinv = fq_inv(d, q);
    std::vector<int> rest;
    for (int i : active)
      if (i != pivot) rest.push_back(i);
    // clear the pivot row/column on the rest
    for (int i : rest) {
      long long f = A.at(i, pivot) % q * dinv % q;
      if (!f) continue;
      for (int t = 0; t < n; ++t)
        A.at(i, t) = static_cast<int>(((A.at(i, t) - f * A.at(pivot, t)) % q + q) % q);
      for (int t = 0; t < n; ++t)
        A.at(t, i) = static_cast<int>(((A.at(t, i) - f * A.at(t, pivot)) % q + q) % q);
    }
    active = rest;
  }
  return diag;
}

// Gauss sum G(c) = sum_x psi(c x^2) = eps(c) G(1), evaluated exactly.
template <class S>
typename S::value gauss_sum(long long q, long long c) {
  const long long p = make_field(q).p;
  auto s = S::zero();
  for (long long x = 0; x < q; ++x) s = S::add(s, S::psi(p, c % q * x % q * x % q));
  return s;
}

// Closed-form characters of the three generator families.
template <class S>
typename S::value closed_form_character(const Generator& gen, int N, long long q, long long a = 1) {
  const long long half = (q + 1) / 2;
  auto qhalf_power = [&](int exponent) {  // q^{N - rank}
    long long v = 1;
    for (int i = 0; i < exponent; ++i) v *= q;
    return S::from_int(v);
  };
  if (std::holds_alternative<GenUpper>(gen)) {
    // trace = sum_v psi((a/2) v^T A v) = q^{N-n} eps(prod c_i) G(1)^n
    FqMatrix form = std::get<GenUpper>(gen).A;
    for (int& x : form.e) x = static_cast<int>(x * (a % q) % q * half % q);
    std::vector<int> cs = diagonalize_symmetric(form);
    long long prod = 1;
    for (int c : cs) prod = prod * c % q;
    auto v = qhalf_power(N - static_cast<int>(cs.size()));
    v = S::mul(v, S::from_int(cs.empty() ? 1 : eps_fq(prod, q)));
    auto g1 = gauss_sum<S>(q, 1);
    for (std::size_t i = 0; i < cs.size(); ++i) v = S::mul(v, g1);
    return v;
  }
  if (std::holds_alternative<GenWeyl>(gen)) {
    // trace = [sum_v psi(a v^T B v)] / (eps(det B) gauss(-2a)^N)
    const FqMatrix& B = std::get<GenWeyl>(gen).B;
    FqMatrix form = B;
    for (int& x : form.e) x = static_cast<int>(1LL * x * (a % q) % q);
    std::vector<int> cs = diagonalize_symmetric(form);
    long long prod = 1;
    for (int c : cs) prod = prod * c % q;
    auto num = qhalf_power(N - static_cast<int>(cs.size()));
    num = S::mul(num, S::from_int(cs.empty() ? 1 : eps_fq(prod, q)));
    auto g1 = gauss_sum<S>(q, 1);
    for (std::size_t i = 0; i < cs.size(); ++i) num = S::mul(num, g1);
    auto den = S::from_int(eps_fq(fq_gauss(B).det, q));
    auto ga = gauss_sum<S>(q, ((-2 * a) % q + q) % q);
    for (int i = 0; i < N; ++i) den = S::mul(den, ga);
    return S::div(num, den);
  }
  const FqMatrix& C = std::get<GenLevi>(gen).C;
  FqMatrix CmI = C;
  for (int i = 0; i < C.dim; ++i) CmI.at(i, i) = static_cast<int>(((CmI.at(i, i) - 1) % q + q) % q);
  auto g = fq_gauss(C);
  int fixdim = C.dim - fq_gauss(CmI).rank;
  long long v = 1;
  for (int i = 0; i < fixdim; ++i) v *= q;
  return S::mul(S::from_int(eps_fq(g.det, q)), S::from_int(v));
}

// ---------------------------------------------------------------------------
// The dual-pair embedding and the multiplicity oracle.

// Matrix of g (x) h on V (x) W in a standard symplectic basis, where g is
// 2N x 2N symplectic and h preserves the diagonal Gram matrix of W.
inline SymplecticElement tensor_embed(const FqMatrix& g, const FqMatrix& h, const FqMatrix& gram) {
  const long long q = g.q;
  const int N = g.dim / 2;
  const int d = h.dim;
  const int D = 2 * N * d;
  // basis: x_{ij} = e_i (x) w_j  (index i*d+j), y_{ij} = b_j^{-1} f_i (x) w_j
  FqMatrix out(D, q);
  auto bvals = [&](int j) { return gram.at(j, j); };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int half = 0; half < 2; ++half) {
        // source basis vector: e_i (x) w_j or b_j^{-1} f_i (x) w_j
        int src = half * N * d + i * d + j;
        long long src_scale = half == 0 ? 1 : fq_inv(bvals(j), q);
        // v-part of the source in V: column i (half 0) or N+i (half 1) of g
        for (int k = 0; k < 2 * N; ++k) {
          int gk = g.at(k, half * N + i);
          if (!gk) continue;
          for (int l = 0; l < d; ++l) {
            int hl = h.at(l, j);
            if (!hl) continue;
            // v_k (x) w_l: if k < N it is x_{kl}; else f_{k-N} (x) w_l = b_l y_{(k-N)l}
            long long coefficient = 1LL * gk * hl % q * src_scale % q;
            int dst;
            if (k < N) {
              dst = k * d + l;
            } else {
              dst = N * d + (k - N) * d + l;
              coefficient = coefficient * bvals(l) % q;
            }
            out.at(dst, src) = static_cast<int>((out.at(dst, src) + coefficient) % q);
          }
        }
      }
    }
  }
  return SymplecticElement(out);
}

// <chi, chi> over Sp(V) x O(W,B) for chi the character of the restricted
// oscillator representation, computed by class sums in double precision.
struct RestrictedNormResult {
  long long value = 0;
  double residual = 0.0;
};

inline RestrictedNormResult restricted_norm(int dimW, int form, long long q,
                                            const std::vector<FqMatrix>& sp_elements,
                                            const std::vector<ConjClass>& sp_classes) {
  FqMatrix gram = pick_gram(dimW, form, q);
  std::vector<FqMatrix> o_elements =
      dimW > 0 ? isometry_group_elements(gram) : std::vector<FqMatrix>{FqMatrix(0, q)};
  std::vector<ConjClass> o_classes;
  if (dimW > 0) {
    o_classes = class_enumerate(o_elements, o_elements);
  } else {
    ConjClass c;
    c.rep = FqMatrix(0, q);
    c.size = 1;
    o_classes.push_back(c);
  }
  long long sp_order = static_cast<long long>(sp_elements.size());
  long long o_order = static_cast<long long>(o_elements.size());
  double acc = 0.0;
  std::vector<double> partial(sp_classes.size() * o_classes.size(), 0.0);
  parallel_for(sp_classes.size() * o_classes.size(), [&](std::size_t idx) {
    std::size_t i = idx / o_classes.size(), j = idx % o_classes.size();
    const FqMatrix& gm = sp_classes[i].rep;
    std::complex<double> chi;
    if (dimW == 0) {
      chi = {1.0, 0.0};
    } else {
      SymplecticElement big = tensor_embed(gm, o_classes[j].rep, gram);
      chi = character<ComplexScalar>(big);
    }
    partial[idx] = std::norm(chi) * static_cast<double>(sp_classes[i].size) *
                   static_cast<double>(o_classes[j].size);
  });
  for (double v : partial) acc += v;
  acc /= static_cast<double>(sp_order) * static_cast<double>(o_order);
  RestrictedNormResult r;
  r.value = std::llround(acc);
  r.residual = std::abs(acc - static_cast<double>(r.value));
  return r;
}

// Standard generator set of Sp_2N over a prime field: the elementary-symmetric
// upper unipotents and one Weyl element.
inline std::vector<FqMatrix> symplectic_generators(int N, long long q) {
  std::vector<FqMatrix> gens;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      FqMatrix A(N, q);
      A.at(i, j) = 1;
      A.at(j, i) = 1;
      gens.push_back(generator_matrix(GenUpper{A}, N, q));
    }
  gens.push_back(generator_matrix(GenWeyl{FqMatrix::identity(N, q)}, N, q));
  return gens;
}

inline std::vector<FqMatrix> random_symplectic_sample(int N, long long q, int count,
                                                      unsigned seed) {
  auto gens = symplectic_generators(N, q);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<FqMatrix> out;
  for (int i = 0; i < count; ++i) {
    FqMatrix g = FqMatrix::identity(2 * N, q);
    int len = 6 + static_cast<int>(rng() % 20);
    for (int s = 0; s < len; ++s) g = g * gens[pick(rng)];
    out.push_back(g);
  }
  return out;
}

}  // namespace howelab
