#include <doctest.h>

#include <functional>

#include "bf/jss.hpp"

using namespace bf;

namespace {

GroupPtr v4() { return build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)})); }

std::vector<std::string> groups_of(const std::vector<E3Entry>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(factors_string(e.factors));
  return out;
}

}  // namespace

TEST_SUITE("jss") {
  TEST_CASE("coefficient table") {
    auto g = v4();
    Character w(g, {1, 0});
    auto spin = make_xi(g, w);
    CHECK(jss_coefficient(spin, 0) == Coeff::ZTwisted);
    CHECK(jss_coefficient(spin, 1) == Coeff::Z2);
    CHECK(jss_coefficient(spin, 2) == Coeff::Z2);
    CHECK(jss_coefficient(spin, 3) == Coeff::Zero);
    CHECK(jss_coefficient(spin, 4) == Coeff::ZTwisted);
    auto so = make_xi_infinite(g, w);
    CHECK(jss_coefficient(so, 1) == Coeff::Zero);
    CHECK(jss_coefficient(so, 2) == Coeff::Zero);
    CHECK(jss_coefficient(so, 4) == Coeff::ZTwisted);
    for (int q = 1; q <= 3; ++q) {
      CHECK(jss_coefficient(spin, q) != Coeff::ZTwisted);
      CHECK(jss_coefficient(so, q) != Coeff::ZTwisted);
    }
  }

  TEST_CASE("spin base case: the degree-3 line vanishes") {
    auto g = build_group(GroupSpec::trivial());
    auto page = e2_page(make_xi(g, trivial_character(g)));
    for (int p = 0; p <= 3; ++p) {
      const auto& e = page.at(p, 3 - p);
      REQUIRE(e.h);
      CHECK(e.h->is_zero());
    }
    CHECK(page.at(0, 0).h->describe() == "Z");
    CHECK(page.at(0, 1).h->describe() == "Z/2");
    CHECK(page.at(0, 2).h->describe() == "Z/2");
    CHECK(page.at(0, 4).h->describe() == "Z");
  }

  TEST_CASE("filtration for xi(Z, w1, 0) in both orientation cases") {
    auto z = build_group(GroupSpec::integers());
    for (int tw = 0; tw <= 1; ++tw) {
      auto xi = make_xi(z, Character(z, {static_cast<uint8_t>(tw)}));
      auto rep = filtration_report(xi, {}, "user-declared");
      CHECK(groups_of(rep.quotients) == std::vector<std::string>{"0", "Z/2", "0", "0"});
      REQUIRE(rep.quotients[1].h1.size() == 1);
      CHECK(format_h1(*z, rep.quotients[1].h1[0]) == "t");
      // a declared d3 hitting t kills the p = 1 quotient
      auto killed = filtration_report(xi, {h1_of_element(*z, z->parse_word("t"))}, "user-declared");
      CHECK(killed.quotients[1].factors.empty());
    }
  }

  TEST_CASE("page turn: E3 ranks from independent d2 ranks") {
    auto g = v4();
    for (auto bits : std::vector<std::vector<uint8_t>>{{0, 0}, {1, 0}, {1, 1}}) {
      auto xi = make_xi(g, Character(g, bits));
      auto e3 = e3_degree3(xi);
      auto h1 = homology(g, xi.w1, Coeff::Z2, 1);
      auto h2 = homology(g, xi.w1, Coeff::Z2, 2);
      const int r31 = d2_matrix(xi, 3, Line::Q1).rank();
      const int r21 = d2_matrix(xi, 2, Line::Q1).rank();
      const int r40 = d2_matrix(xi, 4, Line::Q0).rank();
      CHECK(e3[1].factors.size() == static_cast<size_t>(h1.ngens() - r31));
      CHECK(e3[2].factors.size() == static_cast<size_t>(h2.ngens() - r21 - r40));
      CHECK(e3[0].factors.empty());
    }
  }

  TEST_CASE("w1 = 0 page equals the Sq2-only operator") {
    auto g = v4();
    auto xi = make_xi(g, trivial_character(g));
    for (int r = 2; r <= 4; ++r) {
      auto a = d2_matrix(xi, r, Line::Q1);
      auto b = d2_matrix_with(xi, r, Line::Q1, [](const BarModel& B, const Cochain& c) { return B.sq2(c); });
      CHECK(a.columns == b.columns);
    }
  }

  TEST_CASE("w2 = infinity keeps only H3 on the degree-3 line") {
    auto g = build_group(GroupSpec::cyclic(2));
    auto e3 = e3_degree3(make_xi_infinite(g, trivial_character(g)));
    CHECK(groups_of(e3) == std::vector<std::string>{"0", "0", "0", "Z/2"});
  }

  TEST_CASE("H1 classes to generator coordinates") {
    auto g = v4();
    auto h1 = homology(g, trivial_character(g), Coeff::Z2, 1);
    BitVec c = h1_to_generator_coords(h1, h1_of_element(*g, g->parse_word("ts")));
    CHECK(c.popcount() == 2);
    CHECK_THROWS_AS(h1_to_generator_coords(h1, H1Class{{1}}), Error);
  }

  TEST_CASE("unknown provenance is rejected") {
    auto z = build_group(GroupSpec::integers());
    CHECK_THROWS_AS(filtration_report(make_xi(z, trivial_character(z)), {}, "guess"), Error);
  }
}
