#include <catch2/catch_amalgamated.hpp>

#include "verma/charbox.hpp"

using namespace verma;

namespace {

// Independent partition counter: expand the truncated generating product
// prod_items 1/(1 - x^b) term by term. Coordinates only grow, so truncating
// to the box at every step loses nothing inside the box.
std::map<BoxCoords, long> product_expansion(const FiniteRootSystem& sys, const Box& box,
                                            bool imaginary) {
  BoxCoords cap{box.dmax, std::vector<long>(sys.rank(), box.hmax)};
  auto items = positive_roots_under(sys, cap, imaginary);
  std::map<BoxCoords, long> acc;
  acc[BoxCoords::zero(sys.rank())] = 1;
  for (const auto& item : items) {
    std::map<BoxCoords, long> next;
    for (const auto& [nu, c] : acc) {
      BoxCoords cur = nu;
      while (box.contains(cur)) {
        next[cur] += c;
        cur = cur + item.coords;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("positive roots under a cap") {
  FiniteRootSystem sys(parse_cartan("A1"));
  BoxCoords cap{1, {1}};
  auto items = positive_roots_under(sys, cap, true);
  // alpha, -alpha+delta, delta (one color in rank one).
  REQUIRE(items.size() == 3);
  auto real_only = positive_roots_under(sys, cap, false);
  REQUIRE(real_only.size() == 2);
  // Root coordinates: delta = (-theta+delta) + theta.
  REQUIRE(affine_root_coords(sys, AffineRoot::imag(2)) == BoxCoords{2, {2}});
  REQUIRE(affine_root_coords(sys, AffineRoot::real({-1}, 1)) == BoxCoords{1, {0}});
}

TEST_CASE("small partition counts in rank one") {
  FiniteRootSystem sys(parse_cartan("A1"));
  PartitionEngine pe(sys);
  BoxCoords delta{1, {1}};
  BoxCoords alpha{0, {1}};
  REQUIRE(pe.kostant(BoxCoords::zero(1)) == 1);
  REQUIRE(pe.kostant(alpha) == 1);
  REQUIRE(pe.kostant(delta) == 2);
  REQUIRE(pe.kostant(delta.scaled(2)) == 6);
  REQUIRE(pe.restricted(delta) == 1);
  REQUIRE(pe.restricted(BoxCoords{2, {1}}) == 2);  // 2*delta - alpha
  REQUIRE(pe.kostant(BoxCoords{1, {0}}) == 1);     // -alpha + delta is a root
  REQUIRE(pe.restricted(alpha) == 1);
}

TEST_CASE("partition engines match the generating-product expansion") {
  for (const char* name : {"A1", "A2"}) {
    FiniteRootSystem sys(parse_cartan(name));
    PartitionEngine pe(sys);
    Box box = sys.rank() == 1 ? Box{2, 4} : Box{1, 3};
    auto full = product_expansion(sys, box, true);
    auto real_only = product_expansion(sys, box, false);
    for (const auto& nu : box.all_coords(sys.rank())) {
      INFO(name << " c0=" << nu.c0);
      auto fit = full.find(nu);
      REQUIRE(pe.kostant(nu) == (fit == full.end() ? 0 : fit->second));
      auto rit = real_only.find(nu);
      REQUIRE(pe.restricted(nu) == (rit == real_only.end() ? 0 : rit->second));
    }
  }
}

TEST_CASE("full partitions factor through real partitions times imaginary ones") {
  // P = P_real * (partitions into colored copies of n*delta), as multisets split
  // into their real and imaginary parts.
  for (const char* name : {"A1", "A2"}) {
    FiniteRootSystem sys(parse_cartan(name));
    PartitionEngine pe(sys);
    Box box{3, 3};
    // Imaginary-only counts: partitions of m*delta into colored n*delta parts.
    std::map<long, long> imag_count;
    {
      std::map<long, long> acc{{0, 1}};
      for (long n = 1; n <= box.dmax; ++n)
        for (int color = 0; color < sys.rank(); ++color) {
          std::map<long, long> next;
          for (const auto& [m, c] : acc)
            for (long k = m; k <= box.dmax; k += n) next[k] += c;
          acc = std::move(next);
        }
      imag_count = acc;
    }
    for (const auto& nu : box.all_coords(sys.rank())) {
      long conv = 0;
      for (long m = 0; m <= nu.c0; ++m) {
        BoxCoords rest = nu - affine_root_coords(sys, AffineRoot::imag(1)).scaled(m);
        if (!rest.nonneg()) continue;
        conv += imag_count[m] * pe.restricted(rest);
      }
      REQUIRE(pe.kostant(nu) == conv);
    }
  }
}

TEST_CASE("character container arithmetic") {
  FiniteRootSystem sys(parse_cartan("A1"));
  PartitionEngine pe(sys);
  Weight lam = critical_weight(sys, {Rat(0)});
  Box box{2, 2};
  Character v = ch_verma(pe, lam, box);
  Character r = ch_restricted_verma(pe, lam, box);
  REQUIRE(v.at(BoxCoords::zero(1)) == 1);
  REQUIRE(v.at(BoxCoords{1, {1}}) == 2);
  REQUIRE(r.at(BoxCoords{1, {1}}) == 1);
  Character diff = char_sub(v, r);
  REQUIRE(diff.at(BoxCoords::zero(1)) == 0);
  REQUIRE(diff.at(BoxCoords{1, {1}}) == 1);
  Character sum = char_add(diff, r);
  for (const auto& nu : box.all_coords(1)) REQUIRE(sum.at(nu) == v.at(nu));

  Character other{critical_weight(sys, {Rat(1)}), box, {}};
  REQUIRE_THROWS_AS(char_add(v, other), std::invalid_argument);

  // Absolute-weight lookup distinguishes zero from out-of-box.
  Weight delta = weight_delta(sys);
  REQUIRE(coefficient_at(sys, r, lam - delta) == std::optional<long>{1});
  REQUIRE(!coefficient_at(sys, r, lam - delta - delta - delta));  // outside the box
  REQUIRE(!coefficient_at(sys, r, lam + delta));
  Character shifted = char_shift(r, delta);
  REQUIRE(coefficient_at(sys, shifted, lam - delta - delta) == std::optional<long>{1});

  REQUIRE(ch_restricted_verma(pe, lam, box).is_zero() == false);
  REQUIRE_THROWS_AS(ch_restricted_verma(pe, make_weight(sys, {Rat(0)}, Rat(0)), box),
                    std::invalid_argument);
}

TEST_CASE("alternating down-chain characters in rank one") {
  FiniteRootSystem sys(parse_cartan("A1"));
  PartitionEngine pe(sys);
  Weight lam = critical_weight(sys, {Rat(0)});
  Box box{2, 2};
  // Starting at step one: ch of the image submodule part of the chain.
  Character socle = down_chain_alternating(pe, lam, {1}, box, 1);
  REQUIRE(socle.at(BoxCoords::zero(1)) == 0);
  REQUIRE(socle.at(BoxCoords{0, {1}}) == 1);   // lam - alpha
  REQUIRE(socle.at(BoxCoords{1, {1}}) == 0);   // lam - delta: +1 from step 1, -1 from step 2
  REQUIRE(socle.at(BoxCoords{1, {2}}) == 1);   // lam - alpha - delta
  REQUIRE(socle.at(BoxCoords{2, {2}}) == 1);   // lam - 2delta: 2 - 1 - 1 + 1
  // Starting at step zero gives the simple character.
  Character simple = ch_simple_subgeneric(pe, lam, box);
  Character head = char_sub(ch_restricted_verma(pe, lam, box), socle);
  for (const auto& nu : box.all_coords(1)) REQUIRE(simple.at(nu) == head.at(nu));
  REQUIRE(simple.at(BoxCoords::zero(1)) == 1);
  REQUIRE(simple.at(BoxCoords{0, {1}}) == 0);

  // Generic weights: the restricted Verma is already simple.
  Weight gen = critical_weight(sys, {Rat(1, 2)});
  Character gs = ch_simple_subgeneric(pe, gen, box);
  for (const auto& nu : box.all_coords(1)) REQUIRE(gs.at(nu) == pe.restricted(nu));
}
