#include <catch2/catch_amalgamated.hpp>

#include "verma/rootdata.hpp"

using namespace verma;

namespace {

RootCoords reflect_root(const FiniteRootSystem& sys, int i, const RootCoords& beta) {
  RootCoords r = beta;
  r[i] -= sys.cartan_pairing(beta, i);
  return r;
}

}  // namespace

TEST_CASE("root counts and highest roots for all finite series") {
  struct Row {
    std::string name;
    size_t num_roots;
    RootCoords theta;
  };
  std::vector<Row> table = {
      {"A1", 2, {1}},
      {"A2", 6, {1, 1}},
      {"A3", 12, {1, 1, 1}},
      {"B2", 8, {1, 2}},
      {"B3", 18, {1, 2, 2}},
      {"C3", 18, {2, 2, 1}},
      {"D4", 24, {1, 2, 1, 1}},
      {"G2", 12, {3, 2}},
      {"F4", 48, {2, 3, 4, 2}},
      {"E6", 72, {1, 2, 2, 3, 2, 1}},
  };
  for (const auto& row : table) {
    INFO(row.name);
    FiniteRootSystem sys(parse_cartan(row.name));
    REQUIRE(sys.roots().size() == row.num_roots);
    REQUIRE(sys.positive_roots().size() == row.num_roots / 2);
    REQUIRE(sys.theta() == row.theta);
  }
}

TEST_CASE("dual Coxeter numbers") {
  REQUIRE(FiniteRootSystem(parse_cartan("A1")).hdual() == 2);
  REQUIRE(FiniteRootSystem(parse_cartan("A2")).hdual() == 3);
  REQUIRE(FiniteRootSystem(parse_cartan("A4")).hdual() == 5);
  REQUIRE(FiniteRootSystem(parse_cartan("B3")).hdual() == 5);
  REQUIRE(FiniteRootSystem(parse_cartan("C3")).hdual() == 4);
  REQUIRE(FiniteRootSystem(parse_cartan("D4")).hdual() == 6);
  REQUIRE(FiniteRootSystem(parse_cartan("G2")).hdual() == 4);
  REQUIRE(FiniteRootSystem(parse_cartan("F4")).hdual() == 9);
  REQUIRE(FiniteRootSystem(parse_cartan("E6")).hdual() == 12);
}

TEST_CASE("normalization: long roots have square length two") {
  for (const char* name : {"A1", "A2", "B2", "C3", "G2", "F4"}) {
    FiniteRootSystem sys(parse_cartan(name));
    REQUIRE(sys.form_root_root(sys.theta(), sys.theta()) == 2);
    // Every root length is one of the at most two allowed values.
    for (const auto& beta : sys.roots()) {
      Rat len = sys.form_root_root(beta, beta);
      REQUIRE((len == 2 || len == 1 || len == Rat(2, 3)));
      REQUIRE(len > 0);
    }
  }
}

TEST_CASE("form is invariant under simple reflections") {
  for (const char* name : {"A2", "B2", "G2", "D4"}) {
    FiniteRootSystem sys(parse_cartan(name));
    for (const auto& a : sys.roots())
      for (const auto& b : sys.roots())
        for (int i = 0; i < sys.rank(); ++i)
          REQUIRE(sys.form_root_root(reflect_root(sys, i, a), reflect_root(sys, i, b)) ==
                  sys.form_root_root(a, b));
  }
}

TEST_CASE("weight-coordinate form matches root-coordinate form") {
  for (const char* name : {"A2", "B3", "G2"}) {
    FiniteRootSystem sys(parse_cartan(name));
    for (const auto& a : sys.roots())
      for (const auto& b : sys.roots()) {
        Weight wa{sys.root_to_weight_coords(a), Rat(0), Rat(0)};
        Weight wb{sys.root_to_weight_coords(b), Rat(0), Rat(0)};
        REQUIRE(bilinear(sys, wa, wb) == sys.form_root_root(a, b));
        // Round trip through the coordinate change.
        std::vector<Rat> rc = sys.weight_to_root_coords(wa.finite);
        for (int i = 0; i < sys.rank(); ++i) REQUIRE(rc[i] == a[i]);
      }
  }
}

TEST_CASE("affine form: delta is isotropic and pairs with Lambda_0") {
  FiniteRootSystem sys(parse_cartan("A2"));
  Weight delta = weight_delta(sys);
  Weight l0 = weight_lambda0(sys);
  REQUIRE(bilinear(sys, delta, delta) == 0);
  REQUIRE(bilinear(sys, l0, delta) == 1);
  REQUIRE(bilinear(sys, l0, l0) == 0);
  // Pairing with delta reads off the level.
  Weight lam = make_weight(sys, {Rat(2), Rat(1, 3)}, Rat(-5), Rat(7));
  REQUIRE(bilinear(sys, lam, delta) == lam.level);
}

TEST_CASE("rho pairs to one with simple coroots and nonzero with positive coroots") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    FiniteRootSystem sys(parse_cartan(name));
    Weight r = rho(sys);
    REQUIRE(r.level == sys.hdual());
    for (int i = 0; i < sys.rank(); ++i) {
      RootCoords alpha(sys.rank(), 0);
      alpha[i] = 1;
      REQUIRE(coroot_pairing(sys, r, AffineRoot::real(alpha, 0)) == 1);
    }
    for (const auto& alpha : sys.positive_roots())
      for (long n = 0; n <= 3; ++n) {
        REQUIRE(coroot_pairing(sys, r, AffineRoot::real(alpha, n)) != 0);
        RootCoords neg = alpha;
        for (auto& x : neg) x = -x;
        if (n > 0) REQUIRE(coroot_pairing(sys, r, AffineRoot::real(neg, n)) != 0);
      }
  }
}

TEST_CASE("affine roots: multiplicities, norms, coroot pairings") {
  FiniteRootSystem sys(parse_cartan("A2"));
  AffineRoot im = AffineRoot::imag(2);
  REQUIRE(mult(sys, im) == 2);
  REQUIRE(root_norm(sys, im) == 0);
  REQUIRE_THROWS_AS(coroot_pairing(sys, rho(sys), im), std::invalid_argument);
  RootCoords alpha = {1, 0};
  AffineRoot beta = AffineRoot::real(alpha, 1);
  REQUIRE(mult(sys, beta) == 1);
  REQUIRE(root_norm(sys, beta) == 2);
  // <Lambda_0, (alpha + delta)^vee> = 1 since (Lambda_0|alpha)=0, (Lambda_0|delta)=1.
  REQUIRE(coroot_pairing(sys, weight_lambda0(sys), beta) == 1);
}

TEST_CASE("deformed weights evaluate back at t = 0") {
  FiniteRootSystem sys(parse_cartan("A2"));
  Weight lam = make_weight(sys, {Rat(1), Rat(-2)}, Rat(-3));
  DeformedWeight d = deform(lam, rho(sys));
  REQUIRE(at_t_zero(d) == lam);
  REQUIRE(d.finite[0] == PolyT(1) + PolyT::t());
  REQUIRE(d.level == PolyT(-3) + PolyT::t() * PolyT(sys.hdual()));
  // Bilinear form over the polynomial ring specializes correctly.
  PolyT v = bilinear(sys, d, as_deformed(weight_delta(sys)));
  REQUIRE(v.eval(Rat(0)) == lam.level);
}

TEST_CASE("invalid Cartan data is rejected") {
  REQUIRE_THROWS_AS(make_cartan('A', 0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_cartan('G', 3), std::invalid_argument);
  REQUIRE_THROWS_AS(make_cartan('Z', 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_cartan("A"), std::invalid_argument);
}
