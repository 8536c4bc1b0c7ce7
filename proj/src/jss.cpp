#include "bf/jss.hpp"

namespace bf {

Coeff jss_coefficient(const Xi1Type& xi, int q) {
  switch (q) {
    case 0:
    case 4: return Coeff::ZTwisted;
    case 1:
    case 2: return xi.w2_infinite ? Coeff::Zero : Coeff::Z2;
    default: return Coeff::Zero;
  }
}

std::string jss_coefficient_label(const Xi1Type& xi, int q) {
  switch (jss_coefficient(xi, q)) {
    case Coeff::ZTwisted: return xi.w1.is_trivial() ? "Z" : "Z^w1";
    case Coeff::Z2: return "Z/2";
    case Coeff::Z: return "Z";
    case Coeff::Zero: return "0";
  }
  return "?";
}

const E2Entry& E2Page::at(int p, int q) const {
  auto it = entries.find({p, q});
  if (it == entries.end()) fail(Errc::DegreeOutOfRange, "E2 entry (" + std::to_string(p) + "," + std::to_string(q) + ") outside the page");
  return it->second;
}

E2Page e2_page(const Xi1Type& xi) {
  E2Page page;
  page.xi = xi;
  page.so_table = xi.w2_infinite;
  // one model serves every entry; fall back to per-degree models when the full depth is too large
  ResolutionPtr full;
  try {
    full = build_resolution(xi.group, 6);
  } catch (const Error& e) {
    if (e.code() != Errc::OrderTooLarge) throw;
  }
  for (int q = 0; q <= 4; ++q)
    for (int p = 0; p <= 5; ++p) {
      E2Entry e;
      e.p = p;
      e.q = q;
      e.coeff = jss_coefficient(xi, q);
      try {
        ResolutionPtr R = full ? full : build_resolution(xi.group, p + 1);
        e.h = homology(R, xi.w1, e.coeff, p);
      } catch (const Error& err) {
        if (err.code() != Errc::OrderTooLarge) throw;
        e.unavailable = err.what();
      }
      page.entries[{p, q}] = std::move(e);
    }
  return page;
}

namespace {

ZVec combine(const std::vector<ZVec>& gens, const BitVec& which) {
  ZVec out(gens.empty() ? 0 : gens[0].size(), 0);
  for (size_t i : which.ones())
    for (size_t k = 0; k < out.size(); ++k) out[k] = (out[k] + gens[i][k]) & 1;
  return out;
}

// representatives of K / I over GF(2), I inside K
std::vector<BitVec> gf2_quotient(size_t n, const std::vector<BitVec>& K, const std::vector<BitVec>& I) {
  Gf2Echelon e(n);
  for (const auto& v : I) e.insert(v);
  std::vector<BitVec> reps;
  for (const auto& v : K)
    if (e.insert(v)) reps.push_back(v);
  return reps;
}

std::vector<BitVec> units(size_t n) {
  std::vector<BitVec> out;
  for (size_t i = 0; i < n; ++i) {
    BitVec e(n);
    e.set(i);
    out.push_back(std::move(e));
  }
  return out;
}

E3Entry zero_entry(int p, const std::string& note) {
  E3Entry e;
  e.p = p;
  e.q = 3 - p;
  e.note = note;
  return e;
}

E3Entry e3_12(const Xi1Type& xi, const std::vector<BitVec>& extra) {
  if (xi.w2_infinite) return zero_entry(1, "coefficient group is zero");
  auto h1 = homology(xi.group, xi.w1, Coeff::Z2, 1);
  auto D = d2_matrix(xi, 3, Line::Q1);
  std::vector<BitVec> im = D.columns;
  im.insert(im.end(), extra.begin(), extra.end());
  E3Entry e;
  e.p = 1;
  e.q = 2;
  auto dict = h1_dictionary(h1);
  for (const auto& rep : gf2_quotient(h1.ngens(), units(h1.ngens()), im)) {
    e.factors.push_back(2);
    e.generators.push_back(combine(h1.generators, rep));
    H1Class c = h1_zero(*xi.group);
    for (size_t i : rep.ones()) c += dict[i];
    e.h1.push_back(c);
  }
  return e;
}

}  // namespace

BitVec h1_to_generator_coords(const HomologyPresentation& h1, const H1Class& c) {
  const int d = h1.model->group->ab_dim();
  if (static_cast<int>(c.v.size()) != d)
    fail(Errc::SubspaceMismatch, "class has " + std::to_string(c.v.size()) + " coordinates, H_1 has dimension " + std::to_string(d));
  auto dict = h1_dictionary(h1);
  Gf2Echelon e(d);
  auto bits = [&](const H1Class& x) {
    BitVec b(d);
    for (int i = 0; i < d; ++i)
      if (x.v[i]) b.set(i);
    return b;
  };
  for (const auto& x : dict) e.insert(bits(x));
  auto combo = e.express(bits(c));
  if (!combo) fail(Errc::SubspaceMismatch, "class is not in the span of the H_1 generators");
  BitVec out(h1.ngens());
  for (size_t i : combo->ones()) out.set(i);
  return out;
}

std::vector<E3Entry> e3_degree3(const Xi1Type& xi, const E3Options& opt) {
  std::vector<E3Entry> out;
  out.push_back(zero_entry(0, "coefficient group is zero"));
  out.push_back(e3_12(xi, {}));

  // (2,1): ker(d2 -> (0,2)) / im(d2 from (4,0))
  if (xi.w2_infinite) {
    out.push_back(zero_entry(2, "coefficient group is zero"));
  } else {
    auto out_d = d2_matrix(xi, 2, Line::Q1);
    auto in_d = d2_matrix(xi, 4, Line::Q0);
    const auto& h2 = out_d.source;
    E3Entry e;
    e.p = 2;
    e.q = 1;
    for (const auto& rep : gf2_quotient(h2.ngens(), gf2_kernel(out_d.columns, out_d.rows()), in_d.columns)) {
      e.factors.push_back(2);
      e.generators.push_back(combine(h2.generators, rep));
    }
    out.push_back(std::move(e));
  }

  // (3,0): ker(d2 -> (1,1)), no incoming differential
  E3Entry e;
  e.p = 3;
  e.q = 0;
  if (xi.w2_infinite) {
    auto h3 = homology(xi.group, xi.w1, Coeff::ZTwisted, 3);
    e.factors = h3.factors;
    e.generators = h3.generators;
    e.note = "oriented coefficients; no d2 or d3 touches this entry";
    out.push_back(std::move(e));
    return out;
  }
  auto D = d2_matrix(xi, 3, Line::Q0);
  const auto& h3 = D.source;
  const auto& R = *h3.model;
  const ZMatrix rel = collapse(R, 4, xi.w1, true);
  std::vector<ZVec> lg;
  for (int i = 0; i < h3.ngens(); ++i) {
    ZVec g = h3.generators[i];
    if (h3.factors[i] == 0 || h3.factors[i] % 2 == 0)
      for (auto& x : g) x = mul_ck(x, 2);
    lg.push_back(std::move(g));
  }
  for (const auto& kv : gf2_kernel(D.columns, D.rows())) {
    ZVec g(R.rank[3], 0);
    for (size_t i : kv.ones())
      for (int k = 0; k < R.rank[3]; ++k) g[k] = add_ck(g[k], h3.generators[i][k]);
    lg.push_back(std::move(g));
  }
  for (int j = 0; j < rel.cols(); ++j) lg.push_back(rel.column(j));
  auto sq = Subquotient::of_generators(ZMatrix::from_columns(R.rank[3], lg), rel);
  e.factors = sq.factors();
  for (int j = 0; j < sq.ngens(); ++j) e.generators.push_back(sq.generators().column(j));
  if (!e.factors.empty()) {
    auto into02 = d2_matrix(xi, 2, Line::Q1);
    const bool target_zero = static_cast<int>(gf2_rank(into02.columns, into02.rows())) == into02.rows();
    if (opt.assume_d3_30_zero)
      e.note = "d3 into (0,2) declared zero";
    else if (!target_zero) {
      e.upper_bound = true;
      e.note = "upper bound: d3 into E3(0,2) = Z/2 is not determined";
    }
  }
  out.push_back(std::move(e));
  return out;
}

FiltrationReport filtration_report(const Xi1Type& xi, const std::vector<H1Class>& d3_image,
                                   const std::string& provenance, const E3Options& opt) {
  if (provenance != "user-declared" && provenance != "delta3-computed")
    fail(Errc::InvalidArgument, "unknown d3 provenance '" + provenance + "'");
  FiltrationReport rep;
  rep.xi = xi;
  rep.e3 = e3_degree3(xi, opt);
  rep.d3_image = d3_image;
  rep.provenance = provenance;
  std::vector<BitVec> extra;
  if (!xi.w2_infinite && !d3_image.empty()) {
    auto h1 = homology(xi.group, xi.w1, Coeff::Z2, 1);
    for (const auto& c : d3_image) extra.push_back(h1_to_generator_coords(h1, c));
  }
  rep.quotients.push_back(zero_entry(0, "F(0,3) = 0"));
  E3Entry q1 = e3_12(xi, extra);
  q1.note = "E3(1,2) modulo the d3 image (" + provenance + ")";
  rep.quotients.push_back(std::move(q1));
  rep.quotients.push_back(rep.e3[2]);
  rep.quotients.push_back(rep.e3[3]);
  return rep;
}

}  // namespace bf
