#pragma once

#include <json.hpp>

#include "verma/charbox.hpp"
#include "verma/jantzen.hpp"
#include "verma/shapodet.hpp"

namespace verma {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const Weight& w) {
  Json j;
  Json fin = Json::array();
  for (const auto& c : w.finite) fin.push_back(rat_str(c));
  j["finite"] = fin;
  j["level"] = rat_str(w.level);
  j["ddeg"] = rat_str(w.ddeg);
  return j;
}

inline Json boxcoords_to_json(const BoxCoords& bc) {
  Json j;
  j["c0"] = bc.c0;
  j["cfin"] = bc.cfin;
  return j;
}

inline Json box_to_json(const Box& box) {
  Json j;
  j["dmax"] = box.dmax;
  j["hmax"] = box.hmax;
  return j;
}

inline Json character_to_json(const Character& ch) {
  Json j;
  j["base"] = weight_to_json(ch.base);
  j["box"] = box_to_json(ch.box);
  Json entries = Json::array();
  for (const auto& [nu, value] : ch.coeffs) {
    if (value == 0) continue;
    Json e;
    e["c0"] = nu.c0;
    e["cfin"] = nu.cfin;
    e["value"] = value;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

inline Json factorization_to_json(const DetFactorization& f) {
  Json list = Json::array();
  for (const auto& fac : f.factors) {
    Json e;
    Json beta;
    beta["kind"] = fac.beta.imaginary ? "imaginary" : "real";
    beta["root"] = fac.beta.finite;
    beta["n"] = fac.beta.n;
    e["beta"] = beta;
    e["n"] = fac.n;
    e["exponent"] = fac.exponent;
    list.push_back(e);
  }
  return list;
}

inline Json sum_formula_report_to_json(const SumFormulaReport& rep) {
  Json j;
  j["lambda"] = weight_to_json(rep.lam);
  j["box"] = box_to_json(rep.box);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["mu"] = boxcoords_to_json(row.nu);
    r["lhs"] = row.lhs;
    r["rhs"] = row.rhs;
    r["match"] = row.match;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["verdict"] = rep.verdict;
  return j;
}

inline Json shapovalov_report_to_json(const ShapovalovReport& rep) {
  Json j;
  j["lambda"] = weight_to_json(rep.lam);
  j["box"] = box_to_json(rep.box);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["eta"] = boxcoords_to_json(row.eta);
    r["status"] = row.status;
    r["ok"] = row.ok;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["verdict"] = rep.verdict;
  return j;
}

}  // namespace verma
