#include "bf/report.hpp"

#include <cstdio>

namespace bf {

const char* tool_version() { return BF_VERSION; }

std::string spec_hash(const json& resolved) {
  const std::string s = resolved.dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json envelope(const std::string& command, const json& resolved) {
  return json{{"tool", "bfill"}, {"tool_version", tool_version()}, {"command", command},
              {"spec_hash", spec_hash(resolved)}, {"spec", resolved}};
}

json bits_json(const BitVec& b) {
  json a = json::array();
  for (size_t i = 0; i < b.size(); ++i) a.push_back(b.get(i) ? 1 : 0);
  return a;
}

json h1_json(const Group& g, const H1Class& c) {
  json bits = json::array();
  for (auto x : c.v) bits.push_back(static_cast<int>(x));
  return json{{"class", format_h1(g, c)}, {"bits", bits}};
}

json to_json(const HomologyPresentation& h) {
  json gens = json::array();
  for (const auto& g : h.generators) gens.push_back(g);
  json labels = json::array();
  if (h.model)
    for (const auto& l : h.model->labels[h.degree]) labels.push_back(l);
  return json{{"degree", h.degree},
              {"coefficients", coeff_name(h.coeff)},
              {"w1", h.w1.group() ? h.w1.describe() : "0"},
              {"invariant_factors", h.factors},
              {"group", h.describe()},
              {"generators", gens},
              {"model", h.model ? h.model->strategy : ""},
              {"basis_labels", labels}};
}

json to_json(const D2Matrix& d) {
  json rows = json::array();
  for (int i = 0; i < d.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < d.cols(); ++j) r.push_back(d.entry(i, j));
    rows.push_back(r);
  }
  json out{{"r", d.r},
           {"line", line_name(d.line)},
           {"source", to_json(d.source)},
           {"target", to_json(d.target)},
           {"matrix", rows},
           {"rank", d.rank()}};
  if (d.target.degree == 1 && d.target.ngens() > 0) {
    const Group& g = *d.target.model->group;
    auto dict = h1_dictionary(d.target);
    json cols = json::array();
    for (const auto& c : d.columns) {
      H1Class h = h1_zero(g);
      for (size_t j : c.ones()) h += dict[j];
      cols.push_back(format_h1(g, h));
    }
    out["column_classes"] = cols;
  }
  return out;
}

json to_json(const E2Page& p) {
  json entries = json::object();
  for (const auto& [key, e] : p.entries) {
    json j{{"p", e.p}, {"q", e.q}, {"coefficients", jss_coefficient_label(p.xi, e.q)}};
    if (e.h) {
      j["invariant_factors"] = e.h->factors;
      j["group"] = e.h->describe();
      json gens = json::array();
      for (const auto& g : e.h->generators) gens.push_back(g);
      j["generators"] = gens;
    } else {
      j["unavailable"] = e.unavailable;
    }
    entries[std::to_string(key.first) + "," + std::to_string(key.second)] = j;
  }
  json line = json::array();
  bool line_zero = true;
  for (int pp = 0; pp <= 3; ++pp) {
    const auto& e = p.at(pp, 3 - pp);
    line.push_back(e.h ? json(e.h->describe()) : json("unavailable"));
    if (!e.h || !e.h->is_zero()) line_zero = false;
  }
  return json{{"xi", describe(p.xi)},
              {"table", p.so_table ? "SO" : "Spin"},
              {"entries", entries},
              {"degree3_line", line},
              {"degree3_line_zero", line_zero}};
}

json to_json(const Group& g, const E3Entry& e) {
  json gens = json::array();
  for (const auto& v : e.generators) gens.push_back(v);
  json j{{"p", e.p},
         {"q", e.q},
         {"invariant_factors", e.factors},
         {"group", factors_string(e.factors)},
         {"generators", gens},
         {"upper_bound", e.upper_bound}};
  if (!e.note.empty()) j["note"] = e.note;
  if (!e.h1.empty()) {
    json cls = json::array();
    for (const auto& c : e.h1) cls.push_back(format_h1(g, c));
    j["h1_classes"] = cls;
  }
  return j;
}

json to_json(const FiltrationReport& r) {
  const Group& g = *r.xi.group;
  json e3 = json::array(), q = json::array(), d3 = json::array(), orders = json::array();
  for (const auto& e : r.e3) e3.push_back(to_json(g, e));
  for (const auto& e : r.quotients) {
    q.push_back(to_json(g, e));
    orders.push_back(factors_string(e.factors));
  }
  for (const auto& c : r.d3_image) d3.push_back(h1_json(g, c));
  return json{{"xi", describe(r.xi)},
              {"e3", e3},
              {"d3_image", d3},
              {"d3_provenance", r.provenance},
              {"quotients", q},
              {"quotient_groups", orders}};
}

json to_json(const Group& g, const Coset& c) {
  json basis = json::array();
  auto name = [&](const BitVec& b) -> json {
    if (c.space == "H1") return format_h1(g, to_h1(b));
    return bits_json(b);
  };
  for (const auto& b : c.quotient_basis) basis.push_back(name(b));
  return json{{"space", c.space},
              {"representative", name(c.representative)},
              {"reduced", name(c.reduced)},
              {"quotient_basis", basis},
              {"is_zero", c.is_zero},
              {"provenance", c.provenance}};
}

json to_json(const Group& g, const PipelineResult& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    json j{{"stage", s.stage}, {"is_zero", s.is_zero}};
    if (s.primary) {
      j["class_coordinates"] = s.primary->coords;
      j["group"] = s.primary->h3.describe();
      j["invariant_factors"] = s.primary->h3.factors;
      j["provenance"] = "H3(pi; Z^w1) via the default model";
    }
    if (s.coset) j["coset"] = to_json(g, *s.coset);
    if (!s.note.empty()) j["note"] = s.note;
    stages.push_back(j);
  }
  json out{{"stages", stages}, {"stopped_at", r.stopped_at}, {"verdict", r.verdict}, {"warnings", r.warnings}};
  if (!r.delta2_31.empty()) {
    json d = json::array();
    for (const auto& c : r.delta2_31)
      d.push_back(json{{"z", c.z_index}, {"value", format_h1(g, c.value)}, {"d2_column", format_h1(g, c.expected)},
                       {"agrees", c.value == c.expected}});
    out["delta2_31"] = d;
  }
  return out;
}

}  // namespace bf
