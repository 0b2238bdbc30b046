#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "verma/charbox.hpp"
#include "verma/oracle.hpp"
#include "verma/shapodet.hpp"
#include "verma/weylcalc.hpp"

namespace verma {

// Right-hand side of the restricted sum formula: over every finite positive
// integral root, the alternating down-chain of restricted Verma characters.
// Roots pairing to zero telescope away and are skipped.
inline Character sum_formula_rhs(PartitionEngine& pe, const Weight& lam, const Box& box) {
  const FiniteRootSystem& sys = pe.system();
  if (!is_critical(sys, lam))
    throw std::invalid_argument("sum_formula_rhs: weight not critical");
  Character total{lam, box, {}};
  Weight shifted = lam + rho(sys);
  for (const auto& alpha : integral_roots(sys, lam).positive) {
    if (coroot_pairing(sys, shifted, AffineRoot::real(alpha, 0)) == 0) continue;
    total = char_add(total, down_chain_alternating(pe, lam, alpha, box, 1));
  }
  return total;
}

struct SumFormulaRow {
  BoxCoords nu;
  long lhs = 0;  // oracle Jantzen dimension sum
  long rhs = 0;  // formula value
  bool match = false;
};

struct SumFormulaReport {
  Weight lam;
  Box box;
  std::vector<SumFormulaRow> rows;
  bool verdict = false;
};

// Exact row-by-row comparison of the oracle Jantzen sums against the formula.
inline SumFormulaReport verify_sum_formula(LoopAlgebra& alg, PartitionEngine& pe,
                                           const Weight& lam, const Box& box) {
  const FiniteRootSystem& sys = pe.system();
  Character lhs = oracle_jantzen_sum(alg, lam, box, /*restricted=*/true);
  Character rhs = sum_formula_rhs(pe, lam, box);
  SumFormulaReport rep{lam, box, {}, true};
  for (const auto& nu : box.all_coords(sys.rank())) {
    SumFormulaRow row{nu, lhs.at(nu), rhs.at(nu), false};
    row.match = row.lhs == row.rhs;
    rep.verdict = rep.verdict && row.match;
    rep.rows.push_back(row);
  }
  return rep;
}

struct FiltrationDescriptor {
  WeightClass kind = WeightClass::Generic;
  std::vector<Character> layers;  // layer 0, layer 1; everything deeper is zero
};

// Two-step filtration of a subgeneric restricted Verma: layer 0 is the
// simple head, layer 1 the simple socle, nothing below.
inline FiltrationDescriptor subgeneric_filtration(PartitionEngine& pe, const Weight& lam,
                                                  const Box& box) {
  const FiniteRootSystem& sys = pe.system();
  IntegralData data = integral_roots(sys, lam);
  if (data.cls != WeightClass::Subgeneric)
    throw std::invalid_argument("subgeneric_filtration: weight not subgeneric");
  Character socle = down_chain_alternating(pe, lam, data.subgeneric_root, box, 1);
  Character head = char_sub(ch_restricted_verma(pe, lam, box), socle);
  FiltrationDescriptor out{WeightClass::Subgeneric, {head, socle}};
  Character rhs = sum_formula_rhs(pe, lam, box);
  for (const auto& nu : box.all_coords(sys.rank()))
    if (socle.at(nu) != rhs.at(nu))
      throw std::logic_error("subgeneric filtration disagrees with the sum formula");
  return out;
}

struct ShapovalovRow {
  BoxCoords eta;
  std::string status;  // "constant-ratio", "both-zero", "mismatch"
  bool ok = false;
};

struct ShapovalovReport {
  Weight lam;
  Box box;
  std::vector<ShapovalovRow> rows;
  bool verdict = false;
};

// Oracle Gram determinant along lam + t*rho against the product formula:
// the ratio must be a nonzero constant, or both sides identically zero.
inline ShapovalovReport verify_shapovalov(LoopAlgebra& alg, PartitionEngine& pe,
                                          const Weight& lam, const Box& box) {
  const FiniteRootSystem& sys = alg.system();
  VermaLattice lat(alg, lam, rho(sys));
  ShapovalovReport rep{lam, box, {}, true};
  for (const auto& eta : box.all_coords(sys.rank())) {
    PolyT oracle_det = det_exact(lat.gram(eta));
    PolyT product = specialized_product(sys, pe, eta, lam, rho(sys));
    ShapovalovRow row{eta, "", false};
    if (oracle_det.is_zero() && product.is_zero()) {
      row.status = "both-zero";
      row.ok = true;
    } else if (oracle_det.is_zero() || product.is_zero()) {
      row.status = "mismatch";
    } else {
      PolyT q, r;
      PolyT::divmod(oracle_det, product, q, r);
      if (r.is_zero() && q.is_constant() && !q.is_zero()) {
        row.status = "constant-ratio";
        row.ok = true;
      } else {
        row.status = "mismatch";
      }
    }
    rep.verdict = rep.verdict && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

struct LinkageReport {
  Weight lam;
  Box box;
  std::vector<BoxCoords> chain_weights;  // highest weights entering the formula
  std::vector<BoxCoords> violations;     // chain weights outside the orbit
  bool verdict = false;
};

// The restricted Verma characters entering the sum formula are indexed by the
// down-chain weights; each of those highest weights must lie in the truncated
// dot-orbit of lam under its integral Weyl group.
inline LinkageReport linkage_check(PartitionEngine& pe, const Weight& lam, const Box& box) {
  const FiniteRootSystem& sys = pe.system();
  if (!is_critical(sys, lam)) throw std::invalid_argument("linkage_check: weight not critical");
  auto orbit = linkage_orbit(sys, lam, box);
  LinkageReport rep{lam, box, {}, {}, true};
  Weight shifted = lam + rho(sys);
  for (const auto& alpha : integral_roots(sys, lam).positive) {
    if (coroot_pairing(sys, shifted, AffineRoot::real(alpha, 0)) == 0) continue;
    Weight w = down(sys, alpha, lam);
    for (;;) {
      auto bc = leq(sys, w, lam);
      if (!bc || !box.contains(*bc)) break;
      rep.chain_weights.push_back(*bc);
      if (orbit.count(*bc) == 0) {
        rep.violations.push_back(*bc);
        rep.verdict = false;
      }
      w = down(sys, alpha, w);
    }
  }
  return rep;
}

}  // namespace verma
