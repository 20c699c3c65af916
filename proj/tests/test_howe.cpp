#include <catch2/catch_amalgamated.hpp>

#include "howelab/howe.hpp"
#include "howelab/weil.hpp"

#include <random>

using namespace howelab;

namespace {
LusztigSymbol sym(const std::string& s) { return parse_symbol(s); }

// the irreducible of O_1(F_q) with the given mu_2 character
IrrepData o1_irrep(int ext) {
  IrrepData r;
  r.group = {GF::Oodd, 0, 1};
  r.plus_block = trivial_bc_symbol(0);
  r.minus_block = trivial_bc_symbol(0);
  r.ext_sign = ext;
  return r;
}

IrrepData trivial_sp(int N) {
  IrrepData r;
  r.group = {GF::Sp, N, 1};
  r.ss.p = N;
  r.plus_block = trivial_bc_symbol(N);
  r.minus_block = empty_d_symbol();
  return r;
}
}  // namespace

TEST_CASE("range classification") {
  // odd W
  CHECK(classify_range({3, 5, +1, 3}) == RangeClass::SympMeta);   // m<N<2m+1
  CHECK(classify_range({5, 5, +1, 3}) == RangeClass::SympStable); // N = 2m+1
  CHECK(classify_range({2, 5, +1, 3}) == RangeClass::OrthoMeta);  // m<2N<=2m
  CHECK(classify_range({1, 5, +1, 3}) == RangeClass::OrthoStable);
  CHECK(classify_range({2, 3, +1, 3}) == RangeClass::SympMeta);
  CHECK(classify_range({1, 3, +1, 3}) == RangeClass::OrthoMeta);  // boundary N=m
  // even W, split: h_W = m
  CHECK(classify_range({1, 4, +1, 3}) == RangeClass::OrthoStable);  // 2N <= h_W
  CHECK(classify_range({2, 4, +1, 3}) == RangeClass::SympMeta);
  CHECK(classify_range({4, 4, +1, 3}) == RangeClass::SympStable);
  // even W, non-split: h_W = m-1
  CHECK(classify_range({1, 4, -1, 3}) == RangeClass::OrthoMeta);  // 2 > h_W = 1
  CHECK(classify_range({1, 6, -1, 3}) == RangeClass::OrthoStable);
  CHECK(classify_range({0, 2, -1, 3}) == RangeClass::OrthoStable);
  CHECK(classify_range({1, 2, -1, 3}) == RangeClass::SympMeta);
  // every small pair lands in exactly one class (totality is by construction;
  // spot check the boundary walls)
  for (int N = 0; N <= 4; ++N)
    for (int dimW = 0; dimW <= 5; ++dimW)
      for (int form : {+1, -1}) {
        if (dimW % 2 == 0 && dimW == 0 && form < 0) continue;
        DualPairSpec p{N, dimW, form, 3};
        RangeClass r = classify_range(p);
        bool eta = r == RangeClass::SympStable || r == RangeClass::SympMeta;
        if (dimW % 2 == 1)
          CHECK(eta == (N > dimW / 2));
        else
          CHECK(eta == (N >= dimW / 2));
      }
}

TEST_CASE("n_prime and m_prime") {
  // O_1 trivial: N' = N
  for (int N : {1, 2, 3}) {
    DualPairSpec pair{N, 1, +1, 3};
    CHECK(n_prime(o1_irrep(+1), pair) == N);
  }
  // O_3 irrep with minus block {0<1|1}, N=2: N' = 2
  IrrepData r;
  r.group = {GF::Oodd, 1, 1};
  r.ss.ell = 1;
  r.plus_block = trivial_bc_symbol(0);
  r.minus_block = sym("{0<1|1}");
  r.ext_sign = +1;
  REQUIRE(validate_irrep(r, 3).ok);
  CHECK(n_prime(r, {2, 3, +1, 3}) == 2);
  CHECK_THROWS_AS(m_prime(r, {2, 3, +1, 3}), WrongRange);
  // minimal orthogonal-side boundary: m' = 1
  CHECK(m_prime(trivial_sp(0), {0, 2, -1, 3}) == 1);
  CHECK(m_prime(trivial_sp(1), {1, 3, +1, 3}) == 0);  // the ell = 0 bypass value
}

TEST_CASE("eta on O_1: the oscillator halves") {
  for (long long q : {3LL, 5LL}) {
    for (int N : {1, 2, 3}) {
      for (int disc : {+1, -1}) {
        DualPairSpec pair{N, 1, disc, q};
        VirtualIrrep plus = eta(pair, o1_irrep(+1));
        VirtualIrrep minus = eta(pair, o1_irrep(-1));
        REQUIRE(plus.coef == 1);
        REQUIRE(minus.coef == 1);
        // dims (q^N + 1)/2 and (q^N - 1)/2
        CHECK(dim_irrep(*plus.payload, q) == (ipow(Int(q), N) + 1) / 2);
        CHECK(dim_irrep(*minus.payload, q) == (ipow(Int(q), N) - 1) / 2);
        CHECK(plus.payload->ss.ell == N);
        CHECK(plus.payload->ss.minus_sign == +1);
        CHECK(minus.payload->ss.minus_sign == -1);
        CHECK(minus.payload->minus_block == LusztigSymbol({0, N}, {}));
        CHECK(plus.payload->minus_block == LusztigSymbol({0}, {N}));
      }
    }
  }
}

TEST_CASE("eta odd case: constructible and inconstructible") {
  // O_3(F_3) irrep with minus block {0<1|1}, N = 2
  IrrepData base;
  base.group = {GF::Oodd, 1, 1};
  base.ss.ell = 1;
  base.plus_block = trivial_bc_symbol(0);
  base.minus_block = sym("{0<1|1}");
  DualPairSpec pair{2, 3, +1, 3};
  base.ext_sign = +1;
  VirtualIrrep vplus = eta(pair, base);
  REQUIRE(vplus.coef == 1);
  CHECK(vplus.payload->minus_block == sym("{0<1|1<2}"));
  CHECK(vplus.payload->minus_block.family == Family::D);
  CHECK(rank(vplus.payload->minus_block) == 2);
  base.ext_sign = -1;
  VirtualIrrep vminus = eta(pair, base);
  REQUIRE(vminus.coef == 1);
  CHECK(vminus.payload->minus_block == sym("{0<1<2|1}"));
  CHECK(vminus.payload->minus_block.family == Family::TwoD);
  // minus block {1|}: the top-row append collides (N' = 1 = lambda_a)
  IrrepData small;
  small.group = {GF::Oodd, 1, 1};
  small.ss.ell = 1;
  small.plus_block = trivial_bc_symbol(0);
  small.minus_block = sym("{1|}");
  small.ext_sign = -1;  // top-row append
  CHECK(eta(pair, small).coef == 0);
  // while the bottom append gives the degenerate block {1|1}
  small.ext_sign = +1;
  VirtualIrrep vdeg = eta(pair, small);
  REQUIRE(vdeg.coef == 1);
  CHECK(is_degenerate(vdeg.payload->minus_block));
  CHECK(vdeg.payload->minus_orient == 0);
}

TEST_CASE("zeta odd case") {
  // Sp_0 trivial, W of odd dimension 2m+1: psi(s) = -I_{2m}, trivial block,
  // extension sign eps(s) disc(B) = disc(B)
  for (int m : {1, 2}) {
    for (int disc : {+1, -1}) {
      DualPairSpec pair{0, 2 * m + 1, disc, 3};
      VirtualIrrep v = zeta(pair, trivial_sp(0));
      REQUIRE(v.coef == 1);
      CHECK(v.payload->ss.ell == m);
      CHECK(v.payload->ss.p == 0);
      CHECK(v.payload->minus_block == trivial_bc_symbol(m));
      CHECK(v.payload->ext_sign == disc);
      CHECK(dim_irrep(*v.payload, 3) == 1);
    }
  }
  CHECK_THROWS_AS(zeta({3, 3, +1, 3}, trivial_sp(3)), WrongRange);
}

TEST_CASE("zeta even case with the alpha(sigma) recipe") {
  // sigma = -1: the grown top row is strictly longer, so always +1
  CHECK(alpha_sigma(OrderedSymbol({0, 2}, {1}), 3, -1) == +1);
  CHECK(alpha_sigma(OrderedSymbol({1}, {}), 2, -1) == +1);
  // sigma = +1 with a = b+1 and the appended coordinate tying lambda_a:
  // the shifted comparison decides, and mu_i > lambda_{i+1} flips the sign
  CHECK(alpha_sigma(OrderedSymbol({0, 2}, {1}), 2, +1) == -1);  // [0<2 / 1<2]
  CHECK(alpha_sigma(OrderedSymbol({1, 2}, {0}), 2, +1) == +1);  // [1<2 / 0<2]
  // a > b+1 keeps the top row longer: +1
  CHECK(alpha_sigma(OrderedSymbol({0, 1, 2, 3, 9}, {}), 3, +1) == +1);
  // degenerate output has no sign slot
  CHECK(alpha_sigma(OrderedSymbol({1, 2}, {1}), 2, +1) == 0);
  CHECK_THROWS_AS(alpha_sigma(OrderedSymbol({0, 2}, {1}), 1, +1), BadRange);
  // the stored orientation of a zeta output equals this label
  DualPairSpec pair{0, 2, -1, 3};
  IrrepData triv;
  triv.group = {GF::Sp, 0, 1};
  triv.plus_block = trivial_bc_symbol(0);
  triv.minus_block = empty_d_symbol();
  VirtualIrrep v = zeta(pair, triv);
  REQUIRE(v.coef == 1);
  CHECK(v.payload->plus_orient == alpha_sigma(to_pan(triv.plus_block), 1, -1));
}

TEST_CASE("virtual correspondences") {
  // coordinate collision gives 0
  IrrepData small;
  small.group = {GF::Oodd, 1, 1};
  small.ss.ell = 1;
  small.plus_block = trivial_bc_symbol(0);
  small.minus_block = sym("{1|}");
  small.ext_sign = -1;
  DualPairSpec pair{2, 3, +1, 3};
  CHECK(eta_virtual(pair, small).coef == 0);
  // strictly interior insertion: minus block {0<3|1}, N' = 2 -> sign -1 with
  // inserted row (0,2,3)
  IrrepData mid;
  mid.group = {GF::Oodd, 3, 1};
  mid.ss.ell = 3;
  mid.plus_block = trivial_bc_symbol(0);
  mid.minus_block = sym("{0<3|1}");
  mid.ext_sign = -1;  // append to the top row of the defect-normalized block
  REQUIRE(validate_irrep(mid, 3).ok);
  DualPairSpec pair2{4, 7, +1, 3};
  REQUIRE(n_prime(mid, pair2) == 2);
  VirtualIrrep v = eta_virtual(pair2, mid);
  CHECK(v.coef == -1);
  CHECK(v.payload->minus_block == sym("{0<2<3|1}"));
  // constructible inputs agree with the genuine eta
  DualPairSpec pair3{2, 1, +1, 3};
  CHECK(eta(pair3, o1_irrep(+1)).payload == eta_virtual(pair3, o1_irrep(+1)).payload);
  CHECK(eta_virtual(pair3, o1_irrep(+1)).coef == 1);
}

TEST_CASE("coefficient lift") {
  // k = 0 is the input itself
  DualPairSpec pair{2, 3, +1, 3};
  IrrepData base;
  base.group = {GF::Oodd, 1, 1};
  base.ss.ell = 1;
  base.plus_block = trivial_bc_symbol(0);
  base.minus_block = sym("{0<1|1}");
  base.ext_sign = +1;
  auto lift0 = coefficient_A(pair, base, 0, n_prime(base, pair));
  REQUIRE(lift0.size() == 1);
  CHECK(lift0[0] == base);
  // level 1 under O_3 -> O_5 with the trivial input: the two-symbol list
  DualPairSpec pair5{3, 5, +1, 3};
  DualPairSpec sub = pair5.sub_W(1);
  IrrepData o3triv;
  o3triv.group = {GF::Oodd, 1, 1};
  o3triv.ss.p = 1;
  o3triv.plus_block = trivial_bc_symbol(1);
  o3triv.minus_block = trivial_bc_symbol(0);
  o3triv.ext_sign = +1;
  REQUIRE(validate_irrep(o3triv, 3).ok);
  auto lifted = coefficient_A(pair5, o3triv, 1, n_prime(o3triv, sub));
  for (const IrrepData& r : lifted) {
    CHECK(r.group.rank == 2);
    CHECK(r.ss.ell == 1);
    CHECK(validate_irrep(r, 3).ok);
  }
}

TEST_CASE("eta preimages and tensor rank") {
  const long long q = 3;
  // omega^{+-} come from O_1
  for (int N : {1, 2}) {
    DualPairSpec pair{N, 1, +1, q};
    for (int ext : {+1, -1}) {
      VirtualIrrep v = eta(pair, o1_irrep(ext));
      auto pre = eta_preimage(*v.payload, q);
      bool found = false;
      for (auto& [dimW, form, cand] : pre)
        if (dimW == 1 && form == +1 && cand == o1_irrep(ext)) found = true;
      CHECK(found);
      CHECK(tensor_rank(*v.payload, q) == 1);
    }
  }
  // the trivial representation has rank 0
  CHECK(tensor_rank(trivial_sp(2), q) == 0);
  // random eta outputs round-trip
  std::mt19937 rng(12);
  int checked = 0;
  auto o3 = enumerate_irreps({GF::Oodd, 1, 1}, q);
  for (const IrrepData& pi : o3) {
    DualPairSpec pair{2, 3, +1, q};
    VirtualIrrep v = eta(pair, pi);
    if (v.coef != 1) continue;
    auto pre = eta_preimage(*v.payload, q);
    bool found = false;
    for (auto& [dimW, form, cand] : pre)
      if (dimW == 3 && form == +1 && cand == pi) found = true;
    CHECK(found);
    ++checked;
  }
  CHECK(checked >= 6);
  (void)rng;
}

TEST_CASE("tensor rank layers partition Sp_4(F_3)") {
  const long long q = 3;
  auto all = enumerate_irreps({GF::Sp, 2, 1}, q);
  std::map<int, int> layer_sizes;
  for (const IrrepData& r : all) {
    int rk = tensor_rank(r, q);
    CHECK(rk >= 0);
    CHECK(rk <= 4);
    layer_sizes[rk] += 1;
  }
  int total = 0;
  for (auto& [k, n] : layer_sizes) total += n;
  CHECK(total == 34);
  CHECK(layer_sizes[0] == 1);
}

TEST_CASE("ind eta relation") {
  const long long q = 3;
  // M = N is trivially true
  DualPairSpec pair{1, 1, +1, q};
  CHECK(ind_eta_check(o1_irrep(+1), pair, pair));
  // O_1 trivial, N=1 -> M=2
  CHECK(ind_eta_check(o1_irrep(+1), {1, 1, +1, q}, {2, 1, +1, q}));
  CHECK(ind_eta_check(o1_irrep(-1), {1, 1, +1, q}, {2, 1, +1, q}));
  // randomized within valid ranges
  std::mt19937 rng(2024);
  int done = 0;
  std::vector<std::pair<int, int>> wforms = {{1, +1}, {1, -1}, {2, +1}, {2, -1}, {3, +1}, {3, -1}};
  while (done < 200) {
    auto [dimW, form] = wforms[rng() % wforms.size()];
    int m = dimW / 2;
    int minN = dimW % 2 == 1 ? m + 1 : m;
    int N = minN + static_cast<int>(rng() % 3);
    int M = N + static_cast<int>(rng() % (6 - std::min(5, N) + 1));
    if (M > 6) continue;
    DualPairSpec pv{N, dimW, form, q}, pu{M, dimW, form, q};
    if (!eta_side(pv) || !eta_side(pu)) continue;
    auto os = enumerate_irreps(pv.o_group(), q);
    const IrrepData& pi = os[rng() % os.size()];
    if (eta(pv, pi).coef != 1) continue;
    CHECK(ind_eta_check(pi, pv, pu));
    ++done;
  }
}

TEST_CASE("chains to terminal representations") {
  const long long q = 3;
  // a terminal representation has the empty chain
  auto sp2 = enumerate_irreps({GF::Sp, 1, 1}, q);
  for (const IrrepData& r : sp2)
    if (is_terminal(r)) CHECK(build_chain(r, q).empty());
  // omega^{+-}: a single eta step from O_1
  DualPairSpec pair{2, 1, +1, q};
  VirtualIrrep omega = eta(pair, o1_irrep(+1));
  auto chain = build_chain(*omega.payload, q);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].kind == ChainStep::Kind::Eta);
  CHECK(chain[0].source == o1_irrep(+1));
  // the unipotent cuspidal of Sp_4: a three-step chain
  IrrepData cuspidal;
  cuspidal.group = {GF::Sp, 2, 1};
  cuspidal.ss.p = 2;
  cuspidal.plus_block = sym("{0<1<2|}");
  cuspidal.minus_block = empty_d_symbol();
  REQUIRE(validate_irrep(cuspidal, q).ok);
  auto cchain = build_chain(cuspidal, q);
  CHECK(cchain.size() == 3);
  // all Sp_4(F_3) irreps reach a terminal representation
  for (const IrrepData& r : enumerate_irreps({GF::Sp, 2, 1}, q)) {
    auto ch = build_chain(r, q);
    if (!is_terminal(r)) CHECK(!ch.empty());
  }
}

TEST_CASE("pan conditions") {
  // hand-checked pairs for N = m = 1 (cf. the engine set-equality tests)
  OrderedSymbol st({0, 1}, {1});   // Steinberg of Sp_2, defect 1 orientation
  OrderedSymbol triv({1}, {});     // trivial of Sp_2
  OrderedSymbol d_plus({1}, {0});  // split block, canonical orientation
  OrderedSymbol d_minus({0}, {1});
  CHECK(pan_conditions(st, d_plus, true));
  CHECK_FALSE(pan_conditions(st, d_minus, true));
  CHECK(pan_conditions(triv, d_plus, true));
  CHECK(pan_conditions(triv, d_minus, true));
  // non-split: only the Steinberg pairs with the swapped 2D orientation
  OrderedSymbol twod_a({0, 1}, {});
  OrderedSymbol twod_b({}, {0, 1});
  CHECK(pan_conditions(st, twod_b, false));
  CHECK_FALSE(pan_conditions(st, twod_a, false));
  CHECK_FALSE(pan_conditions(triv, twod_a, false));
  CHECK_FALSE(pan_conditions(triv, twod_b, false));
  // defect-violating pair
  CHECK_FALSE(pan_conditions(triv, OrderedSymbol({2}, {0}), false));
  CHECK_THROWS_AS(pan_conditions(OrderedSymbol({1}, {0}), d_plus, true), InvalidSymbol);
}

TEST_CASE("virtual outputs name genuine images of smaller groups") {
  // whenever the virtual eta correspondence outputs coefficient -1, the named
  // irreducible is a genuine eta image over a smaller orthogonal group
  const long long q = 3;
  int virtual_hits = 0;
  for (DualPairSpec pair : {DualPairSpec{2, 3, +1, q}, DualPairSpec{2, 3, -1, q},
                            DualPairSpec{2, 4, +1, q}, DualPairSpec{2, 4, -1, q},
                            DualPairSpec{3, 4, +1, q}, DualPairSpec{3, 5, +1, q}}) {
    if (!eta_side(pair)) continue;
    for (const IrrepData& pi : enumerate_irreps(pair.o_group(), q)) {
      VirtualIrrep v = eta_virtual(pair, pi);
      if (v.coef != -1) continue;
      ++virtual_hits;
      auto pre = eta_preimage(*v.payload, q);
      bool smaller = false;
      for (auto& [dimW, form, cand] : pre)
        if (dimW < pair.dimW) smaller = true;
      CHECK(smaller);
    }
  }
  CHECK(virtual_hits > 0);
}

TEST_CASE("semisimple count for the odd special orthogonal group by brute force") {
  // SO_3(F_3): elements of determinant 1 in the isometry group of a
  // 3-dimensional form; 4 semisimple (3'-order) classes
  auto o3 = isometry_group_elements(pick_gram(3, +1, 3));
  std::vector<FqMatrix> so3;
  for (const FqMatrix& g : o3)
    if (fq_gauss(g).det == 1) so3.push_back(g);
  REQUIRE(so3.size() == 24);
  auto classes = class_enumerate(so3, so3);
  int semisimple = 0;
  for (auto& c : classes) {
    FqMatrix x = c.rep;
    FqMatrix id = FqMatrix::identity(3, 3);
    long long order = 1;
    while (!(x == id)) {
      x = x * c.rep;
      ++order;
    }
    if (order % 3 != 0) ++semisimple;
  }
  CHECK(semisimple == 4);
  CHECK(enumerate_semisimple(DualAmbient::SOodd, 1, 3).size() == 4);
}
