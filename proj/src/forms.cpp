#include "bf/forms.hpp"

#include <map>

namespace bf {

MuPair mu_from_sphere(const DoublePointSphere& s) {
  RingElem mu(s.group);
  for (const auto& p : s.points) {
    if (p.sign != 1 && p.sign != -1) fail(Errc::InvalidArgument, "double point sign must be +1 or -1");
    mu.add_term(p.g, p.sign);
  }
  return {mu, reduce_augmentation(mu)};
}

H1Class mubar_J(const DoublePointSphere& s) { return h1_class(mu_from_sphere(s).mubar); }

H1Class mubar_J(const RingElem& rep) { return h1_class(rep); }

RingElem wall_self_intersection(const DoublePointSphere& s) {
  RingElem mu = mu_from_sphere(s).mu;
  return mu + involute(mu, s.w1) + RingElem::scalar(s.group, s.euler);
}

ModuleVector zero_vector(const GroupPtr& g, int n) { return ModuleVector(n, RingElem(g)); }

ModuleVector basis_vector(const GroupPtr& g, int n, int i, const RingElem& coeff) {
  ModuleVector v = zero_vector(g, n);
  v[i] = coeff;
  return v;
}

ModuleVector add(const ModuleVector& a, const ModuleVector& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "module vectors of different length");
  ModuleVector r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

ModuleVector scale(const RingElem& r, const ModuleVector& a) {
  ModuleVector out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(r * x);
  return out;
}

LambdaMuForm::LambdaMuForm(GroupPtr g, Character w1, std::vector<std::vector<RingElem>> lambda,
                           std::vector<RingElem> mubar, std::vector<std::optional<DoublePointSphere>> spheres)
    : g_(std::move(g)), w1_(std::move(w1)), lambda_(std::move(lambda)), mubar_(std::move(mubar)),
      spheres_(std::move(spheres)) {
  const size_t n = mubar_.size();
  if (lambda_.size() != n) fail(Errc::DimensionMismatch, "lambda matrix has " + std::to_string(lambda_.size()) + " rows for rank " + std::to_string(n));
  for (const auto& row : lambda_)
    if (row.size() != n) fail(Errc::DimensionMismatch, "lambda matrix is not square");
  if (spheres_.empty()) spheres_.resize(n);
  if (spheres_.size() != n) fail(Errc::DimensionMismatch, "sphere list length");
  if (!w1_.group() || !w1_.group()->same_as(*g_)) fail(Errc::GroupMismatch, "orientation character over another group");
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      auto& x = lambda_[i][j];
      if (!x.group()) x = RingElem(g_);
      if (!x.group()->same_as(*g_)) fail(Errc::GroupMismatch, "lambda entry over another group");
    }
    if (!mubar_[i].group()) mubar_[i] = RingElem(g_);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      if (!(lambda_[j][i] == involute(lambda_[i][j], w1_)))
        fail(Errc::InvalidForm, "lambda is not Hermitian at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (size_t i = 0; i < n; ++i) {
    const RingElem& m = mubar_[i];
    if (augment(m) != 0) fail(Errc::NotInAugmentationIdeal, "mubar[" + std::to_string(i) + "] = " + m.str() + " is not in I");
    RingElem lhs = reduce_augmentation(lambda_[i][i]);
    RingElem rhs = reduce_augmentation(m + involute(m, w1_));
    if (!(lhs == rhs))
      fail(Errc::InvalidForm, "diagonal entry " + std::to_string(i) + " violates lambda-bar(e,e) = mubar + conj(mubar): " +
                                  lhs.str() + " vs " + rhs.str());
    if (spheres_[i]) {
      const auto& s = *spheres_[i];
      if (!mubar_equivalent(m, mu_from_sphere(s).mubar, w1_))
        fail(Errc::InvalidForm, "mubar[" + std::to_string(i) + "] disagrees with its sphere");
      if (!(lambda_[i][i] == wall_self_intersection(s)))
        fail(Errc::InvalidForm, "lambda[" + std::to_string(i) + "][" + std::to_string(i) + "] disagrees with mu + conj(mu) + e of its sphere");
    }
  }
}

LambdaMuForm LambdaMuForm::stabilized() const {
  const int n = rank();
  auto lam = lambda_;
  for (auto& row : lam) row.push_back(RingElem(g_));
  lam.push_back(std::vector<RingElem>(n + 1, RingElem(g_)));
  lam[n][n] = RingElem::scalar(g_, 1);
  auto mb = mubar_;
  mb.push_back(RingElem(g_));
  auto sp = spheres_;
  sp.push_back(DoublePointSphere{g_, w1_, {}, 1, "CP1"});
  return LambdaMuForm(g_, w1_, std::move(lam), std::move(mb), std::move(sp));
}

namespace {

void check_dim(const LambdaMuForm& f, const ModuleVector& x) {
  if (static_cast<int>(x.size()) != f.rank())
    fail(Errc::DimensionMismatch, "vector of length " + std::to_string(x.size()) + " on a rank " + std::to_string(f.rank()) + " form");
}

struct Term {
  int i;
  Elem g;
  int64_t m;
};

std::vector<Term> expand(const ModuleVector& x) {
  std::vector<Term> out;
  for (size_t i = 0; i < x.size(); ++i)
    for (const auto& [g, m] : x[i].terms()) out.push_back({static_cast<int>(i), g, m});
  return out;
}

RingElem conj_elem(const GroupPtr& G, const Character& w1, const Elem& g) {
  return RingElem::basis(G, G->inv(g), w1(g) ? -1 : 1);
}

// mubar of the integer combination sum m_k (g_k e_{i_k})
RingElem mubar_of_terms(const LambdaMuForm& f, const std::vector<Term>& ts) {
  const GroupPtr& G = f.group();
  RingElem r(G);
  for (size_t k = 0; k < ts.size(); ++k) {
    const Term& a = ts[k];
    // mubar(g v) = g mubar(v) conj(g)
    RingElem diag = f.mubar(a.i).left_mul(a.g) * conj_elem(G, f.w1(), a.g);
    r += diag * mul_ck(a.m, a.m);
    for (size_t l = k + 1; l < ts.size(); ++l) {
      const Term& b = ts[l];
      RingElem cross = f.lambda(a.i, b.i).left_mul(a.g) * conj_elem(G, f.w1(), b.g);
      r += reduce_augmentation(cross) * mul_ck(a.m, b.m);
    }
  }
  return r;
}

}  // namespace

RingElem lambda_value(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y) {
  check_dim(f, x);
  check_dim(f, y);
  RingElem r(f.group());
  for (int i = 0; i < f.rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < f.rank(); ++j) {
      if (y[j].is_zero() || f.lambda(i, j).is_zero()) continue;
      r += x[i] * f.lambda(i, j) * involute(y[j], f.w1());
    }
  }
  return r;
}

RingElem lambda_bar(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y) {
  return reduce_augmentation(lambda_value(f, x, y));
}

H1Class lambda_bar_J(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y) {
  return h1_class(lambda_bar(f, x, y));
}

std::variant<RingElem, H1Class> lambda_eval(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y,
                                            LambdaVariant v) {
  switch (v) {
    case LambdaVariant::Lambda: return lambda_value(f, x, y);
    case LambdaVariant::LambdaBar: return lambda_bar(f, x, y);
    case LambdaVariant::LambdaBarJ: return lambda_bar_J(f, x, y);
  }
  return lambda_value(f, x, y);
}

RingElem mubar_rep(const LambdaMuForm& f, const ModuleVector& x) {
  check_dim(f, x);
  return mubar_of_terms(f, expand(x));
}

H1Class mubar_J(const LambdaMuForm& f, const ModuleVector& x) { return h1_class(mubar_rep(f, x)); }

std::variant<RingElem, H1Class> mubar_extend(const LambdaMuForm& f, const ModuleVector& x, ExtendMode mode) {
  check_dim(f, x);
  if (mode == ExtendMode::Integer) {
    for (size_t i = 0; i < x.size(); ++i)
      for (const auto& [g, m] : x[i].terms())
        if (!(g == Elem{}))
          fail(Errc::NonIntegerCoefficient, "coefficient " + x[i].str() + " of e" + std::to_string(i + 1) + " is not an integer");
    return mubar_rep(f, x);
  }
  return mubar_J(f, x);
}

bool s_characteristic_check(const LambdaMuForm& f, const ModuleVector& c) {
  check_dim(f, c);
  for (int i = 0; i < f.rank(); ++i) {
    RingElem lc(f.group());
    for (int j = 0; j < f.rank(); ++j) lc += c[j] * f.lambda(j, i);
    if (augment2(lc) != augment2(f.lambda(i, i))) return false;
  }
  return true;
}

int km_invariant(const KmCertificate& cert) {
  if (!cert.mubar_zero) fail(Errc::MubarNonzero, "km is only defined when mubar vanishes");
  if (!cert.has_algebraic_dual)
    fail(Errc::InvalidArgument, "the disc-count formula needs an algebraic dual sphere");
  int64_t parity = 0;
  for (int64_t c : cert.disc_interior_counts) {
    if (c < 0) fail(Errc::InvalidArgument, "negative intersection count");
    parity ^= (c & 1);
  }
  return cert.r_characteristic ? static_cast<int>(parity) : 0;
}

}  // namespace bf
