#include "bf/obstruct.hpp"

namespace bf {

BitVec to_bits(const H1Class& c) {
  BitVec b(c.v.size());
  for (size_t i = 0; i < c.v.size(); ++i)
    if (c.v[i]) b.set(i);
  return b;
}

H1Class to_h1(const BitVec& b) {
  H1Class c;
  c.v.assign(b.size(), 0);
  for (size_t i : b.ones()) c.v[i] = 1;
  return c;
}

Coset make_coset(const std::string& space, const BitVec& rep, const std::vector<BitVec>& sub, const std::string& provenance) {
  Coset c;
  c.space = space;
  c.representative = rep;
  c.provenance = provenance;
  for (const auto& v : sub)
    if (v.size() != rep.size()) fail(Errc::SubspaceMismatch, "subspace vector of dimension " + std::to_string(v.size()) + " in a space of dimension " + std::to_string(rep.size()));
  c.quotient_basis = gf2_span_basis(sub, rep.size());
  Gf2Echelon e(rep.size());
  for (const auto& v : c.quotient_basis) e.insert(v);
  c.reduced = e.reduce(rep);
  c.is_zero = !c.reduced.any();
  return c;
}

PrimaryResult evaluate_primary(const XiThreeManifoldRecord& rec) {
  PrimaryResult r;
  r.h3 = homology(rec.xi.group, rec.xi.w1, Coeff::ZTwisted, 3);
  r.coords = r.h3.coords(rec.primary);
  r.is_zero = true;
  for (int64_t c : r.coords)
    if (c) r.is_zero = false;
  r.complete = rec.xi.w2_infinite;
  return r;
}

std::vector<BitVec> delta2_40_image(const Xi1Type& xi) {
  auto D = d2_matrix(xi, 4, Line::Q0);
  return gf2_span_basis(D.columns, D.rows());
}

BitVec delta2_40_value(const Xi1Type& xi, const ZVec& fundamental) {
  auto D = d2_matrix(xi, 4, Line::Q0);
  ZVec c = D.source.coords(fundamental);
  BitVec v(D.rows());
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] & 1) v ^= D.columns[i];
  return v;
}

namespace {

void require_finite_w2(const Xi1Type& xi, const char* what) {
  if (xi.w2_infinite) fail(Errc::InvalidArgument, std::string(what) + " is not defined for w2 = infinity; the primary stage is complete");
}

std::vector<BitVec> bits_of(const std::vector<H1Class>& v) {
  std::vector<BitVec> out;
  for (const auto& c : v) out.push_back(to_bits(c));
  return out;
}

bool same_xi(const Xi1Type& a, const Xi1Type& b) {
  return a.group->same_as(*b.group) && a.w1.coeffs() == b.w1.coeffs() && a.w2_infinite == b.w2_infinite &&
         a.w2_zero == b.w2_zero && (a.w2_zero || a.w2.v == b.w2.v);
}

}  // namespace

Coset evaluate_secondary(const FillingRecord& fill) {
  const Xi1Type& xi = fill.manifold.xi;
  require_finite_w2(xi, "the secondary obstruction");
  auto p = evaluate_primary(fill.manifold);
  if (!p.is_zero) fail(Errc::PrimaryNonzero, "primary obstruction of '" + fill.manifold.label + "' is nonzero");
  auto h2 = homology(xi.group, xi.w1, Coeff::Z2, 2);
  if (static_cast<int>(fill.secondary.size()) != h2.ngens())
    fail(Errc::DimensionMismatch, "secondary class has " + std::to_string(fill.secondary.size()) + " coordinates, H_2 has " + std::to_string(h2.ngens()) + " generators");
  BitVec s(h2.ngens());
  for (size_t i = 0; i < fill.secondary.size(); ++i)
    if (fill.secondary[i] & 1) s.set(i);
  return make_coset("H2", s, delta2_40_image(xi), "image of d2(4,0)");
}

std::vector<H1Class> delta2_31_columns(const Xi1Type& xi) {
  require_finite_w2(xi, "delta2(3,1)");
  auto D = d2_matrix(xi, 3, Line::Q1);
  auto dict = h1_dictionary(D.target);
  std::vector<H1Class> out;
  for (const auto& col : D.columns) {
    H1Class c = h1_zero(*xi.group);
    for (size_t j : col.ones()) c += dict[j];
    out.push_back(c);
  }
  return out;
}

std::vector<H1Class> delta2_31_image(const Xi1Type& xi) {
  std::vector<H1Class> out;
  for (const auto& b : gf2_span_basis(bits_of(delta2_31_columns(xi)), xi.group->ab_dim())) out.push_back(to_h1(b));
  return out;
}

H1Class delta2_31_eval(const FillingRecord& fill, int z_index) {
  if (!fill.form) fail(Errc::MissingForm, "filling '" + fill.label + "' carries no intersection form");
  const SerreLift* lift = nullptr;
  for (const auto& l : fill.serre_lifts)
    if (l.z_index == z_index) lift = &l;
  if (!lift) fail(Errc::MissingLift, "no lift recorded for H_3 generator " + std::to_string(z_index));
  if (!fill.spherical_rep || !fill.spherical_rep->vector)
    fail(Errc::MissingSphericalRep, "delta2(3,1) needs the spherical representative w as a vector");
  const auto& f = *fill.form;
  return mubar_J(f, lift->v) + lambda_bar_J(f, lift->v, *fill.spherical_rep->vector);
}

H1Class spherical_mubar_J(const std::optional<LambdaMuForm>& form, const std::optional<SphericalRep>& rep) {
  if (!rep || (!rep->vector && !rep->sphere)) fail(Errc::MissingSphericalRep, "no spherical representative");
  if (rep->vector) {
    if (!form) fail(Errc::MissingForm, "a vector representative needs the intersection form");
    if (!s_characteristic_check(*form, *rep->vector)) fail(Errc::NotSCharacteristic, "spherical representative is not s-characteristic");
    return mubar_J(*form, *rep->vector);
  }
  return mubar_J(*rep->sphere);
}

Coset delta3_eval(const ClosedManifoldRecord& rec) {
  require_finite_w2(rec.xi, "delta3");
  if (delta2_40_value(rec.xi, rec.fundamental).any())
    fail(Errc::Delta2Nonzero, "delta2(4,0) of '" + rec.label + "' is nonzero, so delta3 is undefined");
  H1Class mu = spherical_mubar_J(rec.form, rec.spherical_rep);
  return make_coset("H1", to_bits(mu), bits_of(delta2_31_image(rec.xi)), "image of delta2(3,1)");
}

Coset evaluate_tertiary(const FillingRecord& fill, const std::vector<H1Class>& delta3_image, const std::string& provenance) {
  Coset sec = evaluate_secondary(fill);
  if (!sec.is_zero) fail(Errc::SecondaryNonzero, "secondary obstruction of '" + fill.label + "' is nonzero");
  H1Class mu = spherical_mubar_J(fill.form, fill.spherical_rep);
  auto sub = bits_of(delta2_31_image(fill.manifold.xi));
  for (const auto& c : delta3_image) {
    if (static_cast<int>(c.v.size()) != fill.manifold.xi.group->ab_dim())
      fail(Errc::SubspaceMismatch, "delta3 image vector has the wrong dimension");
    sub.push_back(to_bits(c));
  }
  return make_coset("H1", to_bits(mu), sub, "image of delta2(3,1) + delta3 image (" + provenance + ")");
}

bool secondary_wu_check(const LambdaMuForm& form, const ModuleVector& b, const ModuleVector& c) {
  if (!s_characteristic_check(form, c)) fail(Errc::NotSCharacteristic, "c is not s-characteristic");
  return h1_class(lambda_bar(form, b, c) - mubar_rep(form, b)).is_zero();
}

std::vector<std::pair<int, int>> lift_orthogonality_violations(const FillingRecord& fill) {
  std::vector<std::pair<int, int>> bad;
  if (!fill.form) return bad;
  for (size_t i = 0; i < fill.serre_lifts.size(); ++i)
    for (size_t j = i; j < fill.serre_lifts.size(); ++j)
      if (!lambda_bar_J(*fill.form, fill.serre_lifts[i].v, fill.serre_lifts[j].v).is_zero())
        bad.emplace_back(fill.serre_lifts[i].z_index, fill.serre_lifts[j].z_index);
  return bad;
}

Delta3Span delta3_span(const Xi1Type& xi, const Registry& reg) {
  Delta3Span out;
  std::vector<BitVec> vals;
  for (const auto& r : reg.records) {
    if (!same_xi(r.xi, xi)) {
      out.skipped.push_back(r.label + ": different normal 1-type");
      continue;
    }
    try {
      vals.push_back(delta3_eval(r).representative);
      out.used.push_back(r.label);
    } catch (const Error& e) {
      out.skipped.push_back(r.label + ": " + e.what());
    }
  }
  for (const auto& b : gf2_span_basis(vals, xi.group->ab_dim())) out.span.push_back(to_h1(b));
  return out;
}

PipelineResult run_pipeline(const XiThreeManifoldRecord& y, const std::optional<FillingRecord>& fill,
                            const Registry& reg, Stage force) {
  PipelineResult res;
  StageReport pri;
  pri.stage = "primary";
  pri.primary = evaluate_primary(y);
  pri.is_zero = pri.primary->is_zero;
  res.stages.push_back(pri);
  if (!pri.is_zero) {
    if (force == Stage::Secondary || force == Stage::Tertiary)
      fail(Errc::PrimaryNonzero, "primary obstruction is nonzero; the later stages are undefined");
    res.stopped_at = "primary";
    res.verdict = "no xi-filling";
    return res;
  }
  if (y.xi.w2_infinite) {
    if (force == Stage::Secondary || force == Stage::Tertiary)
      fail(Errc::InvalidArgument, "w2 = infinity has only the primary stage");
    res.verdict = "xi-filling exists";
    res.stages.back().note = "w2 = infinity: the primary obstruction is complete";
    return res;
  }
  if (force == Stage::Primary) {
    res.stopped_at = "primary";
    res.verdict = "primary obstruction vanishes";
    return res;
  }
  if (!fill) {
    if (force == Stage::Secondary || force == Stage::Tertiary)
      fail(Errc::InvalidArgument, "the secondary stage needs a filling record");
    res.stopped_at = "secondary";
    res.verdict = "undetermined: no filling record";
    return res;
  }
  for (const auto& [i, j] : lift_orthogonality_violations(*fill))
    res.warnings.push_back("lambda-bar_J does not vanish on lifts " + std::to_string(i) + ", " + std::to_string(j));

  if (fill->form && !fill->serre_lifts.empty() && fill->spherical_rep && fill->spherical_rep->vector) {
    auto cols = delta2_31_columns(y.xi);
    for (const auto& l : fill->serre_lifts) {
      if (l.z_index < 0 || l.z_index >= static_cast<int>(cols.size()))
        fail(Errc::InvalidArgument, "lift for H_3 generator " + std::to_string(l.z_index) + " out of range");
      PipelineResult::Delta2Check chk{l.z_index, delta2_31_eval(*fill, l.z_index), cols[l.z_index]};
      if (!(chk.value == chk.expected))
        res.warnings.push_back("delta2(3,1) on lift " + std::to_string(l.z_index) + " differs from the d2 column");
      res.delta2_31.push_back(std::move(chk));
    }
  }

  StageReport sec;
  sec.stage = "secondary";
  sec.coset = evaluate_secondary(*fill);
  sec.is_zero = sec.coset->is_zero;
  res.stages.push_back(sec);
  if (!sec.is_zero) {
    if (force == Stage::Tertiary) fail(Errc::SecondaryNonzero, "secondary obstruction is nonzero; the tertiary stage is undefined");
    res.stopped_at = "secondary";
    res.verdict = "no xi-filling";
    return res;
  }
  if (force == Stage::Secondary) {
    res.stopped_at = "secondary";
    res.verdict = "secondary obstruction vanishes";
    return res;
  }

  StageReport ter;
  ter.stage = "tertiary";
  Delta3Span span = delta3_span(y.xi, reg);
  for (const auto& s : span.skipped) res.warnings.push_back("registry record skipped: " + s);
  ter.coset = evaluate_tertiary(*fill, span.span, "delta3-computed");
  ter.is_zero = ter.coset->is_zero;
  ter.note = "delta3 span from " + std::to_string(span.used.size()) + " registry record(s)";
  res.stages.push_back(ter);
  if (!ter.is_zero) {
    res.stopped_at = "tertiary";
    res.verdict = "no xi-filling";
  } else {
    res.verdict = "xi-filling exists";
  }
  return res;
}

PipelineResult run_closed(const ClosedManifoldRecord& m, const Registry& reg, Stage force) {
  (void)reg;
  PipelineResult res;
  require_finite_w2(m.xi, "the closed-manifold invariants");
  StageReport pri;
  pri.stage = "primary";
  pri.note = "closed manifold: empty boundary";
  res.stages.push_back(pri);
  if (force == Stage::Primary) {
    res.stopped_at = "primary";
    res.verdict = "primary obstruction vanishes";
    return res;
  }

  StageReport sec;
  sec.stage = "secondary";
  BitVec v = delta2_40_value(m.xi, m.fundamental);
  sec.coset = make_coset("H2", v, {}, "delta2(4,0) of the fundamental class");
  sec.is_zero = sec.coset->is_zero;
  if (!m.secondary.empty()) {
    BitVec s(v.size());
    if (m.secondary.size() != v.size()) fail(Errc::DimensionMismatch, "record secondary class has the wrong length");
    for (size_t i = 0; i < m.secondary.size(); ++i)
      if (m.secondary[i] & 1) s.set(i);
    sec.note = s == v ? "record secondary agrees with d2(4,0)" : "record secondary DISAGREES with d2(4,0)";
    if (!(s == v)) res.warnings.push_back("record secondary class disagrees with d2(4,0) of the fundamental class");
  }
  res.stages.push_back(sec);
  if (!sec.is_zero) {
    if (force == Stage::Tertiary) fail(Errc::Delta2Nonzero, "delta2(4,0) is nonzero; delta3 is undefined");
    res.stopped_at = "secondary";
    res.verdict = "secondary invariant nonzero";
    return res;
  }
  if (force == Stage::Secondary) {
    res.stopped_at = "secondary";
    res.verdict = "secondary invariant vanishes";
    return res;
  }

  StageReport ter;
  ter.stage = "tertiary";
  ter.coset = delta3_eval(m);
  ter.is_zero = ter.coset->is_zero;
  res.stages.push_back(ter);
  if (!ter.is_zero) res.stopped_at = "tertiary";
  res.verdict = ter.is_zero ? "delta3 value vanishes" : "delta3 value nonzero";
  return res;
}

}  // namespace bf
