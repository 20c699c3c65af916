// Batch front end for the Howe-duality engine: decompositions, symbol
// calculus, classification tables, and the matrix-model verifier.

#include "howelab/io.hpp"
#include "howelab/weil.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace howelab;

namespace {

int g_exit = 0;

long long parse_q(long long q) {
  make_field(q);  // throws on bad q
  return q;
}

DualPairSpec pair_from(long long q, int N, int dimW, const std::string& disc,
                       const std::string& sign) {
  DualPairSpec p;
  p.q = parse_q(q);
  p.N = N;
  p.dimW = dimW;
  if (dimW % 2 == 1)
    p.form = disc == "nonsquare" ? -1 : +1;
  else
    p.form = sign == "-" ? -1 : +1;
  return p;
}

GroupSpec group_from(const std::string& name, int rank) {
  if (name == "sp") return {GF::Sp, rank, 1};
  if (name == "o-odd") return {GF::Oodd, rank, 1};
  if (name == "o-even-plus") return {GF::OevenPlus, rank, 1};
  if (name == "o-even-minus") return {GF::OevenMinus, rank, 1};
  throw std::domain_error("group must be one of sp, o-odd, o-even-plus, o-even-minus");
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  throw std::logic_error("emit called for non-json format");
}

void cmd_decompose(long long q, int N, int dimW, const std::string& disc, const std::string& sign,
                   const std::string& format) {
  DualPairSpec pair = pair_from(q, N, dimW, disc, sign);
  DecompositionReport rep = decompose(pair);
  auto ck = checksum(rep);
  if (format == "json") {
    emit(to_json(rep), format);
  } else {
    std::cout << "pair: q=" << q << " N=" << N << " dimW=" << dimW
              << (pair.odd() ? (pair.form > 0 ? " disc=square" : " disc=nonsquare")
                             : (pair.form > 0 ? " sign=+" : " sign=-"))
              << "  side=" << (rep.eta_oriented ? "eta" : "zeta") << "  range="
              << range_name(classify_range(pair)) << "\n";
    for (const DecompositionTerm& t : rep.terms) {
      std::cout << "k=" << t.level << "  top: " << render_irrep(t.top, q) << "\n";
      for (const IrrepData& c : t.coeff) std::cout << "      coeff: " << render_irrep(c, q) << "\n";
    }
    std::cout << "checksum: " << ck.total.str() << " / " << ck.target.str() << " "
              << (ck.ok ? "ok" : "FAIL") << "\n";
  }
  if (!ck.ok || !disjointness_audit(rep)) g_exit = 1;
}

void cmd_eta_zeta(bool eta_side_cmd, long long q, int N, int dimW, const std::string& disc,
                  const std::string& sign, const std::string& format) {
  DualPairSpec pair = pair_from(q, N, dimW, disc, sign);
  bool use_eta = eta_side(pair);
  if (use_eta != eta_side_cmd)
    throw std::domain_error(use_eta ? "pair is on the eta side" : "pair is on the zeta side");
  GroupSpec src = use_eta ? pair.o_group() : pair.sp_group();
  Json rows = Json::array();
  for (const IrrepData& rho : enumerate_irreps(src, q)) {
    VirtualIrrep v = use_eta ? eta(pair, rho) : zeta(pair, rho);
    VirtualIrrep vv = use_eta ? eta_virtual(pair, rho) : zeta_virtual(pair, rho);
    if (format == "json") {
      Json row;
      row["input"] = to_json(rho, q);
      row["coefficient"] = v.coef;
      if (v.coef != 0) row["output"] = to_json(*v.payload, q);
      row["virtual_coefficient"] = vv.coef;
      if (vv.coef != 0 && v.coef == 0) row["virtual_output"] = to_json(*vv.payload, q);
      rows.push_back(row);
    } else {
      std::cout << render_irrep(rho, q) << "\n  -> ";
      if (v.coef == 1)
        std::cout << render_irrep(*v.payload, q) << "\n";
      else if (vv.coef != 0)
        std::cout << "0  (virtual: " << (vv.coef > 0 ? "+" : "-")
                  << render_irrep(*vv.payload, q) << ")\n";
      else
        std::cout << "0\n";
    }
  }
  if (format == "json") emit(Json{{"pair", to_json(pair)}, {"rows", rows}}, format);
}

void cmd_pieri(const std::string& symbol, int k, long long q, const std::string& format) {
  LusztigSymbol s = parse_symbol(symbol);
  auto children = pieri_induct(s, k);
  if (format == "json") {
    Json arr = Json::array();
    for (const LusztigSymbol& c : children) arr.push_back(to_json(c));
    emit(Json{{"symbol", to_json(s)}, {"k", k}, {"children", arr}}, format);
  } else {
    for (const LusztigSymbol& c : children)
      std::cout << render(c) << "  rank=" << rank(c) << " dim_q" << q << "="
                << dim_unipotent(c, q).str() << "\n";
  }
}

void cmd_altsum(const std::string& symbol, const std::string& row, int nprime, int k,
                const std::string& format) {
  LusztigSymbol s = parse_symbol(symbol);
  OrderedSymbol theta(s.row_a, s.row_b);
  if (row == "bottom") theta = theta.swapped();
  auto terms = altsum_terms(theta, nprime, k);
  auto resolved = altsum_resolve(theta, nprime, k);
  bool ok = altsum_verify(theta, nprime, k);
  if (format == "json") {
    Json jt = Json::array();
    for (const AltsumTerm& t : terms)
      jt.push_back(Json{{"sign", t.sign}, {"step", t.step}, {"symbol", to_json(t.sym)}});
    Json jr = Json::array();
    for (const OrderedSymbol& r : resolved) jr.push_back(to_json(r));
    emit(Json{{"theta", to_json(theta)},
              {"Nprime", nprime},
              {"k", k},
              {"terms", jt},
              {"resolved", jr},
              {"verified", ok}},
         format);
  } else {
    std::cout << "A_" << k << "(" << render(theta) << ", " << nprime << "):\n";
    for (const AltsumTerm& t : terms)
      std::cout << "  " << (t.sign > 0 ? "+" : "-") << " Ind_" << t.step << " "
                << render(t.sym) << "\n";
    std::cout << "resolved:\n";
    for (const OrderedSymbol& r : resolved) std::cout << "  " << render(r) << "\n";
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  }
  if (!ok) g_exit = 1;
}

void cmd_dim(const std::string& symbol, long long q, const std::string& format) {
  LusztigSymbol s = parse_symbol(symbol);
  Int d = dim_unipotent(s, q);
  if (format == "json")
    emit(Json{{"symbol", to_json(s)},
              {"q", q},
              {"rank", rank(s)},
              {"defect", defect(s)},
              {"dim", d.str()}},
         format);
  else
    std::cout << render(s) << " rank=" << rank(s) << " defect=" << defect(s) << " dim=" << d.str()
              << "\n";
}

void cmd_irreps(const std::string& group, int rank, long long q, const std::string& format) {
  GroupSpec g = group_from(group, rank);
  auto irreps = enumerate_irreps(g, parse_q(q));
  Int total = 0;
  Json arr = Json::array();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    Int d = dim_irrep(irreps[i], q);
    total += d * d;
    if (format == "json") {
      Json row = to_json(irreps[i], q);
      row["index"] = i;
      arr.push_back(row);
    } else {
      std::cout << i << ": " << render_irrep(irreps[i], q) << "\n";
    }
  }
  bool ok = total == group_order(g, q);
  if (format == "json")
    emit(Json{{"group", to_json(g)},
              {"q", q},
              {"count", irreps.size()},
              {"sum_dim_sq", total.str()},
              {"group_order", group_order(g, q).str()},
              {"complete", ok}},
         format);
  else
    std::cout << "count=" << irreps.size() << " sum dim^2=" << total.str() << " |G|="
              << group_order(g, q).str() << (ok ? " ok" : " FAIL") << "\n";
  if (!ok) g_exit = 1;
}

void cmd_checksum_scan(long long q, int maxN, int maxW, const std::string& format) {
  parse_q(q);
  struct Row {
    DualPairSpec pair;
    bool ok = false, disjoint = false, virt = false;
    std::string total, target;
  };
  std::vector<DualPairSpec> pairs;
  for (int N = 0; N <= maxN; ++N)
    for (int dimW = 0; dimW <= maxW; ++dimW)
      for (int form : dimW == 0 ? std::vector<int>{+1} : std::vector<int>{+1, -1})
        pairs.push_back({N, dimW, form, q});
  std::vector<Row> rows(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    Row r;
    r.pair = pairs[i];
    DecompositionReport rep = decompose(pairs[i]);
    auto ck = checksum(rep);
    r.ok = ck.ok;
    r.total = ck.total.str();
    r.target = ck.target.str();
    r.disjoint = disjointness_audit(rep);
    r.virt = virtual_form_matches(pairs[i], rep);
    rows[i] = r;
  });
  bool all = true;
  Json arr = Json::array();
  for (const Row& r : rows) {
    bool good = r.ok && r.disjoint && r.virt;
    all = all && good;
    if (format == "json") {
      arr.push_back(Json{{"pair", to_json(r.pair)},
                         {"total", r.total},
                         {"target", r.target},
                         {"checksum_ok", r.ok},
                         {"disjoint", r.disjoint},
                         {"virtual_form_ok", r.virt}});
    } else {
      std::cout << "N=" << r.pair.N << " dimW=" << r.pair.dimW << " form="
                << (r.pair.form > 0 ? "+" : "-") << "  " << r.total << "/" << r.target
                << (good ? "  ok" : "  FAIL") << "\n";
    }
  }
  if (format == "json") emit(Json{{"q", q}, {"pairs", arr}, {"all_ok", all}}, format);
  else std::cout << (all ? "all pass" : "FAILURES PRESENT") << "\n";
  if (!all) g_exit = 1;
}

void cmd_pan_verify(long long q, int N, int m, const std::string& sign,
                    const std::string& format) {
  DualPairSpec pair = pair_from(q, N, 2 * m, "square", sign);
  DecompositionReport rep = decompose(pair);
  bool ok = pan_check(rep);
  if (format == "json")
    emit(Json{{"pair", to_json(pair)}, {"pan_ok", ok}}, format);
  else
    std::cout << "pan check N=" << N << " m=" << m << " sign=" << sign << ": "
              << (ok ? "ok" : "FAIL") << "\n";
  if (!ok) g_exit = 1;
}

void cmd_weil_verify(long long q, int N, int samples, unsigned seed, const std::string& format) {
  parse_q(q);
  double worst_hom = 0, worst_unit = 0, worst_closed = 0, worst_mag = 0;
  auto sample = random_symplectic_sample(N, q, 2 * samples, seed);
  for (int i = 0; i + 1 < 2 * samples; i += 2) {
    SymplecticElement g(sample[i]), h(sample[i + 1]);
    auto og = weil_operator<ComplexScalar>(g);
    auto oh = weil_operator<ComplexScalar>(h);
    auto ogh = weil_operator<ComplexScalar>(SymplecticElement(g.mat * h.mat));
    auto prod = og * oh;
    for (std::size_t t = 0; t < prod.e.size(); ++t)
      worst_hom = std::max(worst_hom, std::abs(prod.e[t] - ogh.e[t]));
    for (int r = 0; r < og.dim; ++r)
      for (int c = 0; c < og.dim; ++c) {
        std::complex<double> s = 0;
        for (int k2 = 0; k2 < og.dim; ++k2) s += og.at(r, k2) * std::conj(og.at(c, k2));
        worst_unit = std::max(worst_unit, std::abs(s - (r == c ? 1.0 : 0.0)));
      }
    // |chi(g)|^2 = q^{dim ker(g-1)}
    FqMatrix gm1 = g.mat;
    for (int d2 = 0; d2 < gm1.dim; ++d2)
      gm1.at(d2, d2) = static_cast<int>(((gm1.at(d2, d2) - 1) % q + q) % q);
    double expect = std::pow(static_cast<double>(q), gm1.dim - fq_gauss(gm1).rank);
    worst_mag = std::max(worst_mag, std::abs(std::norm(og.trace()) - expect));
  }
  // closed forms on the generator families
  std::mt19937 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    FqMatrix A(N, q);
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) {
        int v = static_cast<int>(rng() % q);
        A.at(i, j) = v;
        A.at(j, i) = v;
      }
    Generator up = GenUpper{A};
    worst_closed =
        std::max(worst_closed, std::abs(generator_operator<ComplexScalar>(up, N, q).trace() -
                                        closed_form_character<ComplexScalar>(up, N, q)));
  }
  for (const Generator& gen :
       {Generator(GenWeyl{FqMatrix::identity(N, q)}), Generator(GenLevi{FqMatrix::identity(N, q)})}) {
    worst_closed =
        std::max(worst_closed, std::abs(generator_operator<ComplexScalar>(gen, N, q).trace() -
                                        closed_form_character<ComplexScalar>(gen, N, q)));
  }
  bool ok = worst_hom < 1e-9 && worst_unit < 1e-9 && worst_closed < 1e-9 && worst_mag < 1e-6;
  if (format == "json")
    emit(Json{{"q", q},
              {"N", N},
              {"samples", samples},
              {"seed", seed},
              {"homomorphism_defect", worst_hom},
              {"unitarity_defect", worst_unit},
              {"closed_form_defect", worst_closed},
              {"magnitude_defect", worst_mag},
              {"ok", ok}},
         format);
  else
    std::cout << "weil model q=" << q << " N=" << N << ": hom=" << worst_hom
              << " unit=" << worst_unit << " closed=" << worst_closed << " |chi|^2=" << worst_mag
              << (ok ? "  ok" : "  FAIL") << "\n";
  if (!ok) g_exit = 1;
}

void cmd_chain(const std::string& group, int rank, long long q, int index,
               const std::string& format) {
  auto irreps = enumerate_irreps(group_from(group, rank), parse_q(q));
  if (index < 0 || index >= static_cast<int>(irreps.size()))
    throw std::domain_error("index out of range; see the irreps subcommand");
  const IrrepData& rho = irreps[index];
  auto chain = build_chain(rho, q);
  if (format == "json") {
    Json arr = Json::array();
    for (const ChainStep& s : chain) {
      Json js;
      js["kind"] = s.kind == ChainStep::Kind::Eta    ? "eta"
                   : s.kind == ChainStep::Kind::Zeta ? "zeta"
                                                     : "twist";
      if (s.kind != ChainStep::Kind::Twist) js["pair"] = to_json(s.pair);
      js["source"] = to_json(s.source, q);
      arr.push_back(js);
    }
    emit(Json{{"target", to_json(rho, q)}, {"steps", arr}}, format);
  } else {
    std::cout << "target: " << render_irrep(rho, q) << "\n";
    for (const ChainStep& s : chain) {
      const char* k = s.kind == ChainStep::Kind::Eta    ? "eta"
                      : s.kind == ChainStep::Kind::Zeta ? "zeta"
                                                        : "twist";
      std::cout << "  " << k;
      if (s.kind != ChainStep::Kind::Twist)
        std::cout << " (N=" << s.pair.N << ", dimW=" << s.pair.dimW << ", form="
                  << (s.pair.form > 0 ? "+" : "-") << ")";
      std::cout << " from " << render_irrep(s.source, q) << "\n";
    }
    if (chain.empty()) std::cout << "  terminal representation; empty chain\n";
  }
}

void cmd_tensor_rank(long long q, int N, int index, const std::string& format) {
  auto irreps = enumerate_irreps({GF::Sp, N, 1}, parse_q(q));
  Json arr = Json::array();
  std::map<int, int> layers;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (index >= 0 && static_cast<int>(i) != index) continue;
    int rk = tensor_rank(irreps[i], q);
    layers[rk] += 1;
    if (format == "json") {
      Json row;
      row["index"] = i;
      row["tensor_rank"] = rk;
      row["irrep"] = to_json(irreps[i], q);
      arr.push_back(row);
    } else {
      std::cout << i << ": rk=" << rk << "  " << render_irrep(irreps[i], q) << "\n";
    }
  }
  if (format == "json") {
    Json jl;
    for (auto& [k, n] : layers) jl[std::to_string(k)] = n;
    emit(Json{{"q", q}, {"N", N}, {"rows", arr}, {"layer_sizes", jl}}, format);
  } else if (index < 0) {
    std::cout << "layers:";
    for (auto& [k, n] : layers) std::cout << " rk" << k << "=" << n;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"howelab: exact Howe-duality decompositions for finite dual pairs"};
  app.require_subcommand(1);

  long long q = 3;
  int N = 1, dimW = 1, k = 0, rank = 1, m = 1, maxN = 2, maxW = 3, nprime = 1, index = -1,
      samples = 100;
  unsigned seed = 20240817;
  std::string disc = "square", sign = "+", format = "table", symbol = "{1|}", row = "top",
              group = "sp";

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_pair = [&](CLI::App* c) {
    c->add_option("--q", q, "odd prime power");
    c->add_option("--N", N, "half the dimension of V");
    c->add_option("--dimW", dimW, "dimension of W");
    c->add_option("--disc", disc, "discriminant class for odd dim W")
        ->check(CLI::IsMember({"square", "nonsquare"}));
    c->add_option("--sign", sign, "split type for even dim W")->check(CLI::IsMember({"+", "-"}));
    add_format(c);
  };

  auto* cdec = app.add_subcommand("decompose", "decompose the restricted oscillator representation");
  add_pair(cdec);
  auto* ceta = app.add_subcommand("eta", "tabulate the (extended) eta correspondence");
  add_pair(ceta);
  auto* czeta = app.add_subcommand("zeta", "tabulate the (extended) zeta correspondence");
  add_pair(czeta);

  auto* cpieri = app.add_subcommand("pieri", "k-step Pieri induction of a symbol");
  cpieri->add_option("--symbol", symbol, "symbol, e.g. \"{0<1<2|1<2}\"")->required();
  cpieri->add_option("--k", k, "number of boxes")->required();
  cpieri->add_option("--q", q, "q for the printed dimensions");
  add_format(cpieri);

  auto* calt = app.add_subcommand("altsum", "alternating sum of parabolic inductions");
  calt->add_option("--symbol", symbol)->required();
  calt->add_option("--row", row, "designated row")->check(CLI::IsMember({"top", "bottom"}));
  calt->add_option("--Nprime", nprime, "appended coordinate")->required();
  calt->add_option("--k", k, "induction steps")->required();
  add_format(calt);

  auto* cdim = app.add_subcommand("dim", "unipotent dimension of a symbol");
  cdim->add_option("--symbol", symbol)->required();
  cdim->add_option("--q", q);
  add_format(cdim);

  auto* cirr = app.add_subcommand("irreps", "classification data of a small group");
  cirr->add_option("--group", group)->required();
  cirr->add_option("--rank", rank)->required();
  cirr->add_option("--q", q);
  add_format(cirr);

  auto* cscan = app.add_subcommand("checksum-scan", "dimension checksums over a parameter grid");
  cscan->add_option("--q", q);
  cscan->add_option("--max-N", maxN);
  cscan->add_option("--max-dimW", maxW);
  add_format(cscan);

  auto* cpan = app.add_subcommand("pan-verify", "compare a decomposition with Pan's conditions");
  cpan->add_option("--q", q);
  cpan->add_option("--N", N);
  cpan->add_option("--m", m, "half the dimension of W");
  cpan->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  add_format(cpan);

  auto* cweil = app.add_subcommand("weil-verify", "matrix-model homomorphism and character checks");
  cweil->add_option("--q", q);
  cweil->add_option("--N", N);
  cweil->add_option("--samples", samples);
  cweil->add_option("--seed", seed);
  add_format(cweil);

  auto* cchain = app.add_subcommand("chain", "eta/zeta chain from a terminal representation");
  cchain->add_option("--group", group)->required();
  cchain->add_option("--rank", rank)->required();
  cchain->add_option("--q", q);
  cchain->add_option("--index", index, "irrep index in enumeration order")->required();
  add_format(cchain);

  auto* crank = app.add_subcommand("tensor-rank", "tensor-rank layers of Sp_2N");
  crank->add_option("--q", q);
  crank->add_option("--N", N);
  crank->add_option("--index", index, "restrict to one irrep");
  add_format(crank);

  try {
    app.parse(argc, argv);
    if (cdec->parsed()) cmd_decompose(q, N, dimW, disc, sign, format);
    if (ceta->parsed()) cmd_eta_zeta(true, q, N, dimW, disc, sign, format);
    if (czeta->parsed()) cmd_eta_zeta(false, q, N, dimW, disc, sign, format);
    if (cpieri->parsed()) cmd_pieri(symbol, k, q, format);
    if (calt->parsed()) cmd_altsum(symbol, row, nprime, k, format);
    if (cdim->parsed()) cmd_dim(symbol, q, format);
    if (cirr->parsed()) cmd_irreps(group, rank, q, format);
    if (cscan->parsed()) cmd_checksum_scan(q, maxN, maxW, format);
    if (cpan->parsed()) cmd_pan_verify(q, N, m, sign, format);
    if (cweil->parsed()) cmd_weil_verify(q, N, samples, seed, format);
    if (cchain->parsed()) cmd_chain(group, rank, q, index, format);
    if (crank->parsed()) cmd_tensor_rank(q, N, index, format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
