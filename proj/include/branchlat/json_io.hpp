#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "classical.hpp"
#include "diagrams.hpp"
#include "errors.hpp"
#include "gtpattern.hpp"
#include "lattice.hpp"
#include "straightening.hpp"

namespace branchlat {

// All machine output uses insertion-ordered JSON so that byte-level goldens
// are stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const YoungDiagram& d) { return Json(d.parts()); }

inline Json to_json(const SkewShape& s) {
  Json j;
  j["outer"] = s.outer.parts();
  j["inner"] = s.inner.parts();
  return j;
}

inline Json to_json(const GTPattern& p) {
  Json j;
  j["m"] = p.poset().m;
  j["n"] = p.poset().n;
  j["k"] = p.poset().k;
  j["rows"] = p.rows();
  return j;
}

inline Json to_json(const Chain& t) {
  Json j = Json::array();
  for (const ColumnSet& col : t) j.push_back(col);
  return j;
}

inline Json to_json(const LetterColumn& col) {
  Json j = Json::array();
  for (const Letter& w : col) j.push_back(w.str());
  return j;
}

inline Json to_json(const StraighteningExpansion& e) {
  Json j;
  j["I"] = e.i;
  j["J"] = e.j;
  Json terms = Json::array();
  for (const StraighteningTerm& term : e.terms) {
    Json t;
    t["coeff"] = rational_str(term.coeff);
    t["S"] = term.s;
    t["T"] = term.t;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline Json to_json(const DegenerationReport& r) {
  Json j;
  j["family"] = Json{{"m", r.m}, {"k", r.k}, {"n", r.n}};
  j["base"] = integer_str(r.base);
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  j["seed"] = r.seed;
  j["pairs_checked"] = r.pairs_checked;
  j["violations"] = r.violations;
  return j;
}

inline DegenerationReport report_from_json(const Json& j) {
  DegenerationReport r;
  r.m = j.at("family").at("m").get<int>();
  r.k = j.at("family").at("k").get<int>();
  r.n = j.at("family").at("n").get<int>();
  r.base = Integer(j.at("base").get<std::string>());
  std::string mode = j.at("mode").get<std::string>();
  require(mode == "exhaustive" || mode == "sampled",
          "mode must be exhaustive or sampled");
  r.exhaustive = mode == "exhaustive";
  r.seed = j.at("seed").get<std::uint64_t>();
  r.pairs_checked = j.at("pairs_checked").get<long long>();
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

}  // namespace branchlat
