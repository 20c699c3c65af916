#include <catch2/catch_amalgamated.hpp>

#include "howelab/weil.hpp"

using namespace howelab;

namespace {
using CMat = ModelOperator<ComplexScalar>;

double op_norm_inf(const CMat& m) {
  double best = 0.0;
  for (const auto& z : m.e) best = std::max(best, std::abs(z));
  return best;
}

CMat op_sub(const CMat& a, const CMat& b) {
  CMat c(a.dim);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = a.e[i] - b.e[i];
  return c;
}

double unitarity_defect(const CMat& m) {
  CMat prod(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      std::complex<double> s = 0;
      for (int k = 0; k < m.dim; ++k) s += m.at(i, k) * std::conj(m.at(j, k));
      prod.at(i, j) = s - (i == j ? 1.0 : 0.0);
    }
  return op_norm_inf(prod);
}

long long fixed_space_dim(const FqMatrix& g) {
  FqMatrix m = g;
  for (int i = 0; i < m.dim; ++i)
    m.at(i, i) = static_cast<int>(((m.at(i, i) - 1) % m.q + m.q) % m.q);
  return m.dim - fq_gauss(m).rank;
}
}  // namespace

TEST_CASE("generator operators") {
  // A = 0 gives the identity
  FqMatrix zero(1, 3);
  CMat id = generator_operator<ComplexScalar>(GenUpper{zero}, 1, 3);
  CHECK(op_norm_inf(op_sub(id, CMat::identity(3))) < 1e-12);
  // weyl at q=3, N=1: the normalized Fourier matrix (all entries 1/sqrt 3)
  CMat w = generator_operator<ComplexScalar>(GenWeyl{FqMatrix::identity(1, 3)}, 1, 3);
  for (const auto& z : w.e) CHECK(std::abs(std::abs(z) - 1.0 / std::sqrt(3.0)) < 1e-12);
  CHECK(unitarity_defect(w) < 1e-12);
  // levi with C = I is scalar
  CMat l = generator_operator<ComplexScalar>(GenLevi{FqMatrix::identity(2, 3)}, 2, 3);
  CHECK(op_norm_inf(op_sub(l, CMat::identity(9))) < 1e-12);
}

TEST_CASE("factorization") {
  // identity: empty word
  CHECK(factorize(SymplecticElement(FqMatrix::identity(2, 3))).empty());
  // a weyl generator factors as itself
  FqMatrix wmat = generator_matrix(GenWeyl{FqMatrix::identity(1, 3)}, 1, 3);
  auto word = factorize(SymplecticElement(wmat));
  REQUIRE(word.size() == 1);
  CHECK(std::holds_alternative<GenWeyl>(word[0]));
  // random elements of Sp_4(F_3) round-trip (factorize self-verifies)
  for (const FqMatrix& g : random_symplectic_sample(2, 3, 100, 1234)) {
    auto w4 = factorize(SymplecticElement(g));
    FqMatrix prod = FqMatrix::identity(4, 3);
    for (const Generator& gen : w4) prod = prod * generator_matrix(gen, 2, 3);
    CHECK(prod == g);
  }
}

TEST_CASE("weil operator homomorphism and unitarity") {
  for (int N : {1, 2}) {
    auto sample = random_symplectic_sample(N, 3, 40, 777 + N);
    for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
      SymplecticElement g(sample[i]), h(sample[i + 1]);
      CMat og = weil_operator<ComplexScalar>(g);
      CMat oh = weil_operator<ComplexScalar>(h);
      CMat ogh = weil_operator<ComplexScalar>(SymplecticElement(g.mat * h.mat));
      CHECK(op_norm_inf(op_sub(og * oh, ogh)) < 1e-9);
      CHECK(unitarity_defect(og) < 1e-9);
    }
  }
  // trace at the identity is q^N
  for (int N : {1, 2}) {
    auto tr = character<ComplexScalar>(SymplecticElement(FqMatrix::identity(2 * N, 3)));
    CHECK(std::abs(tr - std::complex<double>(std::pow(3.0, N), 0.0)) < 1e-9);
  }
}

TEST_CASE("exact cyclotomic backend at q=3") {
  auto sample = random_symplectic_sample(1, 3, 20, 4242);
  for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
    SymplecticElement g(sample[i]), h(sample[i + 1]);
    auto og = weil_operator<Zeta3Scalar>(g);
    auto oh = weil_operator<Zeta3Scalar>(h);
    auto ogh = weil_operator<Zeta3Scalar>(SymplecticElement(g.mat * h.mat));
    auto prod = og * oh;
    REQUIRE(prod.e.size() == ogh.e.size());
    for (std::size_t t = 0; t < prod.e.size(); ++t) CHECK(prod.e[t] == ogh.e[t]);
    // exact unitarity: M conj(M)^T = 1
    for (int r = 0; r < og.dim; ++r)
      for (int c = 0; c < og.dim; ++c) {
        Zeta3 s;
        for (int k = 0; k < og.dim; ++k)
          s = s + og.at(r, k) * og.at(c, k).conj();
        CHECK(s == (r == c ? Zeta3(Rat(1)) : Zeta3()));
      }
  }
  // one 9x9 exact spot check in Sp_4(F_3)
  auto s4 = random_symplectic_sample(2, 3, 2, 99);
  auto a = weil_operator<Zeta3Scalar>(SymplecticElement(s4[0]));
  auto b = weil_operator<Zeta3Scalar>(SymplecticElement(s4[1]));
  auto ab = weil_operator<Zeta3Scalar>(SymplecticElement(s4[0] * s4[1]));
  auto prod = a * b;
  for (std::size_t t = 0; t < prod.e.size(); ++t) CHECK(prod.e[t] == ab.e[t]);
}

TEST_CASE("closed form characters match traces") {
  for (long long q : {3LL, 5LL}) {
    for (int N : {1, 2}) {
      // upper family: rank-1 and full-rank symmetric A
      std::vector<FqMatrix> uppers;
      FqMatrix a1(N, q);
      a1.at(0, 0) = 1;
      uppers.push_back(a1);
      uppers.push_back(FqMatrix::identity(N, q));
      if (N == 2) {
        FqMatrix mix(N, q);
        mix.at(0, 1) = 1;
        mix.at(1, 0) = 1;
        uppers.push_back(mix);
      }
      for (const FqMatrix& A : uppers) {
        auto trace = generator_operator<ComplexScalar>(GenUpper{A}, N, q).trace();
        auto closed = closed_form_character<ComplexScalar>(GenUpper{A}, N, q);
        CHECK(std::abs(trace - closed) < 1e-9);
      }
      // weyl family, including C = -I levi below
      auto wt = generator_operator<ComplexScalar>(GenWeyl{FqMatrix::identity(N, q)}, N, q).trace();
      auto wc = closed_form_character<ComplexScalar>(GenWeyl{FqMatrix::identity(N, q)}, N, q);
      CHECK(std::abs(wt - wc) < 1e-9);
      // levi family with C = -I and a generic invertible C
      FqMatrix negI = FqMatrix::identity(N, q);
      for (int i = 0; i < N; ++i) negI.at(i, i) = static_cast<int>(q - 1);
      auto lt = generator_operator<ComplexScalar>(GenLevi{negI}, N, q).trace();
      auto lc = closed_form_character<ComplexScalar>(GenLevi{negI}, N, q);
      CHECK(std::abs(lt - lc) < 1e-9);
    }
  }
}

TEST_CASE("character magnitude identity") {
  // |chi(g)|^2 = q^{dim ker(g-1)} (secondary oracle)
  for (const FqMatrix& g : random_symplectic_sample(2, 3, 30, 555)) {
    auto chi = character<ComplexScalar>(SymplecticElement(g));
    double expect = std::pow(3.0, static_cast<double>(fixed_space_dim(g)));
    CHECK(std::abs(std::norm(chi) - expect) < 1e-6);
  }
}

TEST_CASE("class enumeration") {
  auto sp2 = symplectic_group_elements(1, 3);
  REQUIRE(sp2.size() == 24);
  CHECK(class_enumerate(sp2, sp2).size() == 7);
  auto o1 = isometry_group_elements(pick_gram(1, +1, 3));
  REQUIRE(o1.size() == 2);
  CHECK(class_enumerate(o1, o1).size() == 2);
  auto o2m = isometry_group_elements(pick_gram(2, -1, 3));
  REQUIRE(o2m.size() == 8);
  CHECK(class_enumerate(o2m, o2m).size() == 5);
}

TEST_CASE("restricted norm on tiny pairs") {
  auto sp2 = symplectic_group_elements(1, 3);
  auto sp2_classes = class_enumerate(sp2, sp2);
  // Sp_2(F_3) x O_1(F_3): two tensor products appear
  auto r = restricted_norm(1, +1, 3, sp2, sp2_classes);
  CHECK(r.residual < 1e-6);
  CHECK(r.value == 2);
  // dimW = 0: the trivial representation, norm 1
  auto r0 = restricted_norm(0, +1, 3, sp2, sp2_classes);
  CHECK(r0.value == 1);
}

TEST_CASE("character recipe on the smallest pair") {
  // For dim W = 1 the top part is the whole oscillator representation, so
  // chi_{eta(pi^{+-})}(g) = (1/2)[chi_omega(g x 1) +- chi_omega(g x (-1))].
  // Inner products over Sp_2(F_3) then certify irreducibility and the
  // dimensions (q +- 1)/2 of the two halves.
  const long long q = 3;
  auto sp2 = symplectic_group_elements(1, q);
  auto classes = class_enumerate(sp2, sp2);
  FqMatrix gram = pick_gram(1, +1, q);
  FqMatrix h_plus = FqMatrix::identity(1, q);
  FqMatrix h_minus(1, q);
  h_minus.at(0, 0) = static_cast<int>(q - 1);
  std::vector<std::complex<double>> chi_plus, chi_minus;
  for (const ConjClass& c : classes) {
    auto a = character<ComplexScalar>(tensor_embed(c.rep, h_plus, gram));
    auto b = character<ComplexScalar>(tensor_embed(c.rep, h_minus, gram));
    chi_plus.push_back(0.5 * (a + b));
    chi_minus.push_back(0.5 * (a - b));
  }
  auto inner = [&](const std::vector<std::complex<double>>& x,
                   const std::vector<std::complex<double>>& y) {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      s += x[i] * std::conj(y[i]) * static_cast<double>(classes[i].size);
    return s / static_cast<double>(sp2.size());
  };
  CHECK(std::abs(inner(chi_plus, chi_plus) - 1.0) < 1e-9);
  CHECK(std::abs(inner(chi_minus, chi_minus) - 1.0) < 1e-9);
  CHECK(std::abs(inner(chi_plus, chi_minus)) < 1e-9);
  // the halves have dimensions (q-1)/2 and (q+1)/2; at q = 3 (where
  // eps(-1) = -1 and N is odd) the trivial mu_2-character pairs with the
  // odd-function half
  std::size_t id_index = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].rep == FqMatrix::identity(2, q)) id_index = i;
  REQUIRE(id_index < classes.size());
  CHECK(std::abs(chi_plus[id_index] - 1.0) < 1e-9);   // (q-1)/2
  CHECK(std::abs(chi_minus[id_index] - 2.0) < 1e-9);  // (q+1)/2
}
