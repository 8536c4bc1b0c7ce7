#include "bf/commands.hpp"

#include "bf/config.hpp"
#include "bf/report.hpp"

namespace bf {

namespace {

Coeff parse_coeff(const std::string& s) {
  if (s == "z") return Coeff::Z;
  if (s == "z-twisted") return Coeff::ZTwisted;
  if (s == "z2") return Coeff::Z2;
  fail(Errc::ParseError, "unknown coefficient system '" + s + "' (z, z-twisted, z2)");
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "periodic") return Strategy::Periodic;
  if (s == "tensor") return Strategy::Tensor;
  if (s == "bar") return Strategy::Bar;
  fail(Errc::ParseError, "unknown strategy '" + s + "'");
}

Line parse_line(const std::string& s) {
  if (s == "q0") return Line::Q0;
  if (s == "q1") return Line::Q1;
  fail(Errc::ParseError, "unknown line '" + s + "' (q0, q1)");
}

Stage parse_stage(const std::string& s) {
  if (s.empty() || s == "all") return Stage::All;
  if (s == "primary") return Stage::Primary;
  if (s == "secondary") return Stage::Secondary;
  if (s == "tertiary") return Stage::Tertiary;
  fail(Errc::ParseError, "unknown stage '" + s + "'");
}

}  // namespace

json cmd_homology(const HomologyArgs& a) {
  json spec;
  GroupPtr g = load_group(a.group, &spec["group"]);
  Coeff c = parse_coeff(a.coeff);
  Strategy s = parse_strategy(a.strategy);
  Character w = parse_character(g, a.w1);
  const int depth = a.depth < 0 ? a.deg + 1 : a.depth;
  spec["coeff"] = a.coeff;
  spec["deg"] = a.deg;
  spec["depth"] = depth;
  spec["w1"] = w.describe();
  spec["strategy"] = a.strategy;
  auto R = build_resolution(g, depth, s);
  json out = envelope("homology", spec);
  out["result"] = to_json(homology(R, w, c, a.deg));
  return out;
}

json cmd_e2(const std::string& xi) {
  auto x = load_xi(xi);
  json out = envelope("e2", json{{"xi", x.resolved}});
  out["result"] = to_json(e2_page(x.xi));
  return out;
}

json cmd_d2(const std::string& xi, int row, const std::string& line) {
  auto x = load_xi(xi);
  Line l = parse_line(line);
  json out = envelope("d2", json{{"xi", x.resolved}, {"row", row}, {"line", line}});
  out["result"] = to_json(d2_matrix(x.xi, row, l));
  return out;
}

json cmd_filtration(const FiltrationArgs& a) {
  auto x = load_xi(a.xi);
  json spec{{"xi", x.resolved}, {"assume_d3_30_zero", a.assume_d3_30_zero}};
  std::vector<H1Class> img;
  std::string prov = "delta3-computed";
  if (!a.d3_image.empty()) {
    img = load_d3_image(a.d3_image, x.xi.group, &spec["d3_image"]);
    prov = "user-declared";
  } else if (!a.registry.empty()) {
    auto reg = load_registry(a.registry, x.xi, &spec["registry"]);
    img = delta3_span(x.xi, reg).span;
  }
  E3Options opt;
  opt.assume_d3_30_zero = a.assume_d3_30_zero;
  json out = envelope("filtration", spec);
  out["result"] = to_json(filtration_report(x.xi, img, prov, opt));
  return out;
}

json cmd_obstruct(const ObstructArgs& a) {
  auto x = load_xi(a.xi);
  json spec{{"xi", x.resolved}};
  auto y = load_y(a.y, x.xi);
  spec["y"] = y.resolved;
  Registry reg;
  if (!a.registry.empty()) reg = load_registry(a.registry, x.xi, &spec["registry"]);
  Stage st = parse_stage(a.stage);
  spec["stage"] = a.stage.empty() ? "all" : a.stage;
  PipelineResult res;
  if (y.closed) {
    res = run_closed(*y.closed, reg, st);
  } else {
    std::optional<FillingRecord> fill;
    if (!a.filling.empty()) fill = load_filling(a.filling, *y.three, &spec["filling"]);
    res = run_pipeline(*y.three, fill, reg, st);
  }
  json out = envelope("obstruct", spec);
  out["result"] = to_json(*x.xi.group, res);
  return out;
}

int exit_code(const std::exception& e) {
  const auto* b = dynamic_cast<const Error*>(&e);
  if (!b) return 2;
  if (b->code() == Errc::ParseError) return 1;
  if (is_stage_error(b->code())) return 3;
  return 2;
}

}  // namespace bf
