#include <doctest.h>

#include <functional>

#include "bf/config.hpp"
#include "bf/obstruct.hpp"
#include "support/gen.hpp"

using namespace bf;

namespace {

std::string data(const std::string& f) { return std::string(BF_DATA_DIR) + "/" + f; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

Xi1Type xi_z2(bool twisted) {
  auto g = build_group(GroupSpec::cyclic(2));
  return make_xi(g, twisted ? Character(g, {1}) : trivial_character(g));
}

ClosedManifoldRecord closed(const std::string& file, const Xi1Type& xi) { return *load_y(data(file), xi).closed; }

}  // namespace

TEST_SUITE("obstruct") {
  TEST_CASE("secondary stage over xi(Z/2, x1, 0)") {
    auto xi = xi_z2(true);
    auto img = delta2_40_image(xi);
    REQUIRE(img.size() == 1);
    CHECK(img[0].any());

    auto rp4 = run_closed(closed("rp4.yaml", xi), {});
    CHECK(rp4.stopped_at == "secondary");
    CHECK(rp4.verdict == "secondary invariant nonzero");
    CHECK(rp4.warnings.empty());

    auto rp2s2 = run_closed(closed("rp2xs2.yaml", xi), {});
    REQUIRE(rp2s2.stages.size() == 3);
    CHECK(rp2s2.stages[2].stage == "tertiary");
    CHECK(rp2s2.stages[2].is_zero);

    // delta2(3,1): H3(Z/2; Z/2) -> H1(Z/2; Z/2) is an isomorphism
    auto cols = delta2_31_columns(xi);
    REQUIRE(cols.size() == 1);
    CHECK(format_h1(*xi.group, cols[0]) == "t");
    CHECK(homology(xi.group, xi.w1, Coeff::Z2, 1).ngens() == 1);
  }

  TEST_CASE("closed records: stage forcing and cross-checks") {
    auto xi = xi_z2(true);
    CHECK(code_of([&] { run_closed(closed("rp4.yaml", xi), {}, Stage::Tertiary); }) == Errc::Delta2Nonzero);
    CHECK(code_of([&] { delta3_eval(closed("rp4.yaml", xi)); }) == Errc::Delta2Nonzero);
    auto wrong = closed("rp4.yaml", xi);
    wrong.secondary = {0};
    auto r = run_closed(wrong, {});
    CHECK(r.warnings.size() == 1);
  }

  TEST_CASE("V_g fillings are obstructed at the tertiary stage") {
    auto z = build_group(GroupSpec::integers());
    for (int tw = 0; tw <= 1; ++tw) {
      auto xi = make_xi(z, Character(z, {static_cast<uint8_t>(tw)}));
      auto y = *load_y(data("vg-boundary.yaml"), xi).three;
      auto fill = load_filling(data("vg-filling.yaml"), y);
      auto r = run_pipeline(y, fill, {});
      CHECK(r.stopped_at == "tertiary");
      CHECK(r.verdict == "no xi-filling");
      // declaring d3 onto t removes the obstruction
      auto t = evaluate_tertiary(fill, {h1_of_element(*z, z->parse_word("t"))}, "user-declared");
      CHECK(t.is_zero);
    }
  }

  TEST_CASE("trivial group: a filling exists") {
    auto g = build_group(GroupSpec::trivial());
    auto xi = make_xi(g, trivial_character(g));
    auto y = *load_y(data("trivial-y.yaml"), xi).three;
    auto r = run_pipeline(y, load_filling(data("trivial-filling.yaml"), y), {});
    CHECK(r.verdict == "xi-filling exists");
  }

  TEST_CASE("surgery example over Z/2 x Z/2: delta2(3,1) on lifts matches the d2 columns") {
    auto xi = load_xi(data("z2xz2-pin.yaml")).xi;
    auto y = *load_y(data("case-iii-y.yaml"), xi).three;
    auto fill = load_filling(data("case-iii-filling.yaml"), y);
    auto r = run_pipeline(y, fill, {});
    CHECK(r.verdict == "xi-filling exists");
    REQUIRE(r.delta2_31.size() == 4);
    for (const auto& c : r.delta2_31) CHECK(c.value == c.expected);
    CHECK(lift_orthogonality_violations(fill).empty());
  }

  TEST_CASE("pipeline monotonicity") {
    auto xi = xi_z2(false);
    XiThreeManifoldRecord y{xi, {1}, "L"};  // H3(Z/2; Z) = Z/2, generator hit
    REQUIRE_FALSE(evaluate_primary(y).is_zero);
    FillingRecord f;
    f.manifold = y;
    f.secondary = {0};
    CHECK(code_of([&] { evaluate_secondary(f); }) == Errc::PrimaryNonzero);
    CHECK(code_of([&] { run_pipeline(y, f, {}, Stage::Secondary); }) == Errc::PrimaryNonzero);
    CHECK(run_pipeline(y, f, {}).stopped_at == "primary");

    XiThreeManifoldRecord y0{xi, {0}, "Y0"};
    FillingRecord g;
    g.manifold = y0;
    g.secondary = {1};
    CHECK_FALSE(evaluate_secondary(g).is_zero);
    CHECK(code_of([&] { evaluate_tertiary(g, {}); }) == Errc::SecondaryNonzero);
    CHECK(code_of([&] { run_pipeline(y0, g, {}, Stage::Tertiary); }) == Errc::SecondaryNonzero);
  }

  TEST_CASE("missing inputs") {
    auto xi = xi_z2(true);
    FillingRecord f;
    f.manifold = {xi, {0}, "Y"};
    f.secondary = {0};
    CHECK(code_of([&] { delta2_31_eval(f, 0); }) == Errc::MissingForm);
    f.form = LambdaMuForm(xi.group, xi.w1, {{RingElem::scalar(xi.group, 1)}}, {RingElem(xi.group)});
    CHECK(code_of([&] { delta2_31_eval(f, 0); }) == Errc::MissingLift);
    f.serre_lifts.push_back({0, {RingElem::scalar(xi.group, 1)}});
    CHECK(code_of([&] { delta2_31_eval(f, 0); }) == Errc::MissingSphericalRep);
    CHECK(code_of([&] { evaluate_tertiary(f, {}); }) == Errc::MissingSphericalRep);
    f.spherical_rep = SphericalRep{ModuleVector{RingElem::scalar(xi.group, 0)}, std::nullopt};
    CHECK(code_of([&] { evaluate_tertiary(f, {}); }) == Errc::NotSCharacteristic);
  }

  TEST_CASE("delta2(3,1) ignores null-homologous changes of w") {
    bft::Rng rng(31);
    for (int k = 0; k < 50; ++k) {
      auto xi = xi_z2(k % 2);
      auto form = bft::rand_form(xi.group, xi.w1, static_cast<int>(bft::rand_int(rng, 1, 3)), rng);
      FillingRecord f;
      f.manifold = {xi, {0}, "Y"};
      f.form = form;
      // J-coefficient vectors stand in for lifts of null-homologous classes
      for (int z = 0; z < 2; ++z) {
        ModuleVector v;
        for (int i = 0; i < form.rank(); ++i) v.push_back(bft::rand_J(xi.group, rng));
        f.serre_lifts.push_back({z, v});
      }
      auto w = bft::rand_vector(xi.group, form.rank(), rng);
      f.spherical_rep = SphericalRep{w, std::nullopt};
      auto before = delta2_31_eval(f, 0);
      f.spherical_rep->vector = add(w, f.serre_lifts[1].v);
      CHECK(delta2_31_eval(f, 0) == before);
      CHECK(lift_orthogonality_violations(f).empty());
    }
  }

  TEST_CASE("delta3: representative independence and stabilization") {
    bft::Rng rng(37);
    for (int k = 0; k < 50; ++k) {
      auto xi = xi_z2(k % 2);
      auto form = bft::rand_form(xi.group, xi.w1, static_cast<int>(bft::rand_int(rng, 1, 3)), rng);
      ClosedManifoldRecord m;
      m.xi = xi;
      m.fundamental = {0};
      m.form = form;
      auto c = bft::s_characteristic_vector(form, rng);
      m.spherical_rep = SphericalRep{c, std::nullopt};
      auto base = delta3_eval(m);

      ModuleVector n;
      for (int i = 0; i < form.rank(); ++i) n.push_back(bft::rand_J(xi.group, rng));
      auto moved = m;
      moved.spherical_rep->vector = add(c, n);
      CHECK(delta3_eval(moved).reduced == base.reduced);

      auto stab = m;
      stab.form = form.stabilized();
      auto c2 = c;
      c2.push_back(RingElem::scalar(xi.group, 1));
      stab.spherical_rep->vector = c2;
      CHECK(delta3_eval(stab).reduced == base.reduced);
    }
  }

  TEST_CASE("lift orthogonality violations are reported") {
    auto g = build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
    Character w = trivial_character(g);
    RingElem x = RingElem::parse(g, "t"), zero(g);
    LambdaMuForm form(g, w, {{zero, x}, {involute(x, w), zero}}, {zero, zero});
    FillingRecord f;
    f.manifold = {make_xi(g, w), {}, "Y"};
    f.form = form;
    f.serre_lifts = {{0, {RingElem::parse(g, "1 - t"), zero}}, {1, {zero, RingElem::parse(g, "1 - s")}}};
    // lambda-bar(e1 (1 - t), e2 (1 - s)) is in IJ
    CHECK(lift_orthogonality_violations(f).empty());
    f.serre_lifts[1].v = {zero, RingElem::scalar(g, 1)};
    CHECK(lift_orthogonality_violations(f).size() == 1);
  }

  TEST_CASE("registry span skips records over other normal 1-types") {
    auto xi = xi_z2(true);
    Registry reg = load_registry(data("registry-z2"), xi);
    REQUIRE(reg.records.size() == 2);
    auto span = delta3_span(xi, reg);
    CHECK(span.used.size() == 1);  // RP4 has nonzero delta2(4,0)
    CHECK(span.skipped.size() == 1);
    auto other = delta3_span(xi_z2(false), reg);
    CHECK(other.used.empty());
  }

  TEST_CASE("secondary Wu check refuses non-characteristic vectors") {
    auto g = build_group(GroupSpec::cyclic(2));
    LambdaMuForm f(g, trivial_character(g), {{RingElem::scalar(g, 1)}}, {RingElem(g)});
    CHECK(code_of([&] { secondary_wu_check(f, {RingElem::scalar(g, 2)}, {RingElem(g)}); }) == Errc::NotSCharacteristic);
    CHECK(secondary_wu_check(f, {RingElem::parse(g, "1 - t")}, {RingElem::scalar(g, 1)}));
  }

  TEST_CASE("w2 = infinity: the primary stage decides") {
    auto g = build_group(GroupSpec::cyclic(2));
    auto xi = make_xi_infinite(g, trivial_character(g));
    XiThreeManifoldRecord y{xi, {0}, "Y"};
    auto r = run_pipeline(y, std::nullopt, {});
    CHECK(r.verdict == "xi-filling exists");
    CHECK(code_of([&] { delta2_31_columns(xi); }) == Errc::InvalidArgument);
  }
}
