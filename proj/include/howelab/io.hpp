#pragma once

#include "howelab/decomp.hpp"

#include <json.hpp>

namespace howelab {

using Json = nlohmann::ordered_json;

inline Json to_json(const LusztigSymbol& s) {
  return Json{{"family", family_name(s.family)}, {"rowA", s.row_a}, {"rowB", s.row_b}};
}

inline LusztigSymbol symbol_from_json(const Json& j) {
  LusztigSymbol s(j.at("rowA").get<std::vector<int>>(), j.at("rowB").get<std::vector<int>>());
  std::string fam = j.at("family").get<std::string>();
  if (fam != family_name(s.family)) throw InvalidSymbol("declared family does not match the rows");
  return s;
}

inline Json to_json(const OrderedSymbol& s) {
  return Json{{"family", family_name(s.family)}, {"top", s.top}, {"bottom", s.bottom}};
}

inline Json to_json(const GroupSpec& g) {
  Json j{{"family", group_family_name(g.fam)}, {"rank", g.rank}};
  if (g.fam == GF::GL || g.fam == GF::U) j["degree"] = g.n;
  return j;
}

inline const char* sign_text(int s) { return s > 0 ? "+" : "-"; }

inline Json to_json(const SemisimpleData& s) {
  Json j;
  j["plus_units"] = s.p;
  j["minus_units"] = s.ell;
  if (s.plus_sign != 0) j["plus_sign"] = sign_text(s.plus_sign);
  if (s.minus_sign != 0) j["minus_sign"] = sign_text(s.minus_sign);
  Json gen = Json::array();
  for (auto& [t, m] : s.generic)
    gen.push_back(Json{{"n", t.n},
                       {"kind", t.self_dual ? "self_dual" : "dual_pair"},
                       {"rep", t.rep},
                       {"mult", m}});
  j["generic"] = gen;
  return j;
}

inline Json to_json(const IrrepData& r, long long q) {
  Json j;
  j["group"] = to_json(r.group);
  j["s"] = to_json(r.ss);
  Json u;
  Json parts = Json::array();
  for (auto& p : r.parts) parts.push_back(p);
  u["generic_partitions"] = parts;
  u["plus_block"] = to_json(r.plus_block);
  u["minus_block"] = to_json(r.minus_block);
  j["u"] = u;
  Json signs;
  if (r.plus_orient != 0) signs["plus"] = sign_text(r.plus_orient);
  if (r.minus_orient != 0)
    signs[r.group.fam == GF::Sp ? "central" : "minus"] = sign_text(r.minus_orient);
  if (r.ext_sign != 0) signs["extension"] = sign_text(r.ext_sign);
  j["signs"] = signs;
  j["dim"] = dim_irrep(r, q).str();
  return j;
}

inline int sign_from_text(const std::string& s) {
  if (s == "+") return +1;
  if (s == "-") return -1;
  throw std::domain_error("sign must be '+' or '-'");
}

inline GroupSpec group_from_json(const Json& j) {
  GroupSpec g;
  std::string fam = j.at("family").get<std::string>();
  bool found = false;
  for (GF f : {GF::Sp, GF::SOodd, GF::SOevenPlus, GF::SOevenMinus, GF::Oodd, GF::OevenPlus,
               GF::OevenMinus, GF::GL, GF::U}) {
    if (fam == group_family_name(f)) {
      g.fam = f;
      found = true;
    }
  }
  if (!found) throw std::domain_error("unknown group family: " + fam);
  g.rank = j.at("rank").get<int>();
  if (j.contains("degree")) g.n = j.at("degree").get<int>();
  return g;
}

inline SemisimpleData semisimple_from_json(const Json& j) {
  SemisimpleData s;
  s.p = j.at("plus_units").get<int>();
  s.ell = j.at("minus_units").get<int>();
  if (j.contains("plus_sign")) s.plus_sign = sign_from_text(j.at("plus_sign").get<std::string>());
  if (j.contains("minus_sign"))
    s.minus_sign = sign_from_text(j.at("minus_sign").get<std::string>());
  for (const Json& g : j.at("generic")) {
    TorusOrbit t;
    t.n = g.at("n").get<int>();
    t.self_dual = g.at("kind").get<std::string>() == "self_dual";
    t.rep = g.at("rep").get<long long>();
    s.generic.emplace_back(t, g.at("mult").get<int>());
  }
  std::sort(s.generic.begin(), s.generic.end());
  return s;
}

inline IrrepData irrep_from_json(const Json& j) {
  IrrepData r;
  r.group = group_from_json(j.at("group"));
  r.ss = semisimple_from_json(j.at("s"));
  const Json& u = j.at("u");
  for (const Json& p : u.at("generic_partitions")) r.parts.push_back(p.get<Partition>());
  r.plus_block = symbol_from_json(u.at("plus_block"));
  r.minus_block = symbol_from_json(u.at("minus_block"));
  const Json& signs = j.at("signs");
  if (signs.contains("plus")) r.plus_orient = sign_from_text(signs.at("plus").get<std::string>());
  if (signs.contains("central"))
    r.minus_orient = sign_from_text(signs.at("central").get<std::string>());
  if (signs.contains("minus")) r.minus_orient = sign_from_text(signs.at("minus").get<std::string>());
  if (signs.contains("extension"))
    r.ext_sign = sign_from_text(signs.at("extension").get<std::string>());
  return r;
}

inline Json to_json(const DualPairSpec& p) {
  Json j{{"q", p.q}, {"N", p.N}, {"dimW", p.dimW}};
  if (p.odd())
    j["disc"] = p.form > 0 ? "square" : "nonsquare";
  else
    j["sign"] = sign_text(p.form);
  return j;
}

inline Json to_json(const DecompositionReport& rep) {
  const long long q = rep.pair.q;
  Json j;
  j["pair"] = to_json(rep.pair);
  j["side"] = rep.eta_oriented ? "eta" : "zeta";
  j["range"] = range_name(classify_range(rep.pair));
  Json terms = Json::array();
  for (const DecompositionTerm& t : rep.terms) {
    Json jt;
    jt["level"] = t.level;
    jt["top"] = to_json(t.top, q);
    Json cs = Json::array();
    for (const IrrepData& c : t.coeff) cs.push_back(to_json(c, q));
    jt["coefficient"] = cs;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  auto ck = checksum(rep);
  j["checksum"] = Json{{"total", ck.total.str()}, {"target", ck.target.str()}, {"ok", ck.ok}};
  return j;
}

// Compact one-line rendering used by the table output mode.
inline std::string render_irrep(const IrrepData& r, long long q) {
  std::ostringstream os;
  os << "r^" << group_family_name(r.group.fam) << "_" << r.group.rank << "[p=" << r.ss.p;
  if (r.ss.plus_sign != 0) os << sign_text(r.ss.plus_sign);
  os << ",l=" << r.ss.ell;
  if (r.ss.minus_sign != 0) os << sign_text(r.ss.minus_sign);
  if (!r.ss.generic.empty()) {
    os << ",gen=";
    for (std::size_t i = 0; i < r.ss.generic.size(); ++i) {
      auto& [t, m] = r.ss.generic[i];
      os << (i ? "," : "") << (t.self_dual ? "U" : "GL") << t.n << "@" << t.rep << "x" << m << "(";
      for (std::size_t k = 0; k < r.parts[i].size(); ++k) os << (k ? "," : "") << r.parts[i][k];
      os << ")";
    }
  }
  os << "; " << render(r.plus_block);
  if (r.plus_orient != 0) os << sign_text(r.plus_orient);
  os << "x" << render(r.minus_block);
  if (r.minus_orient != 0) os << sign_text(r.minus_orient);
  if (r.ext_sign != 0) os << "]^" << sign_text(r.ext_sign);
  else os << "]";
  os << " dim=" << dim_irrep(r, q).str();
  return os.str();
}

}  // namespace howelab
