#include "suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "bf/cohomology.hpp"
#include "bf/forms.hpp"
#include "bf/homology.hpp"
#include "bf/linalg.hpp"
#include "bf/obstruct.hpp"
#include "gen.hpp"

namespace bft {

using namespace bf;

namespace {

using Clock = std::chrono::steady_clock;

// runs body(rng, case) `cases` times; body returns "" on success or a description
SuiteResult run(const std::string& name, int cases, uint64_t seed,
                const std::function<std::string(Rng&, int)>& body) {
  SuiteResult r{name, 0, 0, "", 0};
  Rng rng(seed ^ std::hash<std::string>{}(name));
  auto t0 = Clock::now();
  for (int k = 0; k < cases; ++k) {
    std::string err;
    try {
      err = body(rng, k);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!err.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + err;
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string h1s(const GroupPtr& g, const H1Class& c) { return format_h1(*g, c); }

// (x - eps(x)) * eps2(y), the element whose class the identities compare against
RingElem times_eps2(const RingElem& x, const RingElem& y) {
  return reduce_augmentation(x) * static_cast<int64_t>(augment2(y));
}

struct FormCase {
  NamedGroup G;
  Character w1;
  LambdaMuForm f;
};

FormCase form_case(Rng& rng) {
  const NamedGroup& G = pick_group(rng);
  Character w1 = rand_character(G.g, rng);
  const int rank = static_cast<int>(rand_int(rng, 1, 3));
  return {G, w1, rand_form(G.g, w1, rank, rng)};
}

ModuleVector gmul(const GroupPtr& g, const Elem& e, const ModuleVector& a) { return scale(RingElem::basis(g, e), a); }

const BarModel& bar_for(const NamedGroup& G) {
  static std::map<std::string, std::unique_ptr<BarModel>> cache;
  auto& p = cache[G.name];
  if (!p) p = std::make_unique<BarModel>(G.g);
  return *p;
}

Cochain rand_cocycle(const BarModel& B, int k, Rng& rng) {
  static std::map<std::pair<const BarModel*, int>, std::vector<Cochain>> cache;
  auto& basis = cache[{&B, k}];
  if (basis.empty()) basis = B.cocycle_basis(k);
  Cochain c = B.zero(k);
  for (const auto& b : basis)
    if (rand_int(rng, 0, 1)) c = B.add(c, b);
  return c;
}

// groups whose bar cochains stay small enough in degree `top`
const NamedGroup& pick_group_for_degree(Rng& rng, int top) {
  for (;;) {
    const NamedGroup& G = pick_group(rng);
    int64_t cells = 1;
    for (int i = 0; i < top; ++i) cells *= G.g->order();
    if (cells <= 4096) return G;
  }
}

}  // namespace

std::vector<SuiteResult> property_suites(int cases, uint64_t seed) {
  std::vector<SuiteResult> out;

  out.push_back(run("mubarJ_invariant_under_translation", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng);
    Elem g = rand_elem(c.G.g, rng);
    auto l = mubar_J(c.f, gmul(c.G.g, g, a)), r = mubar_J(c.f, a);
    if (l == r) return "";
    return c.G.name + ": " + h1s(c.G.g, l) + " vs " + h1s(c.G.g, r);
  }));

  out.push_back(run("lambdabarJ_alternating", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng);
    auto v = lambda_bar_J(c.f, a, a);
    return v.is_zero() ? "" : c.G.name + ": " + h1s(c.G.g, v);
  }));

  out.push_back(run("lambdabarJ_translate", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng);
    Elem g = rand_elem(c.G.g, rng);
    auto l = lambda_bar_J(c.f, gmul(c.G.g, g, a), a);
    auto r = h1_class(times_eps2(RingElem::basis(c.G.g, g), lambda_value(c.f, a, a)));
    return l == r ? "" : c.G.name + ": " + h1s(c.G.g, l) + " vs " + h1s(c.G.g, r);
  }));

  out.push_back(run("lambdabarJ_J_linear", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng), b = rand_vector(c.G.g, c.f.rank(), rng);
    RingElem j = rand_J(c.G.g, rng);
    auto l = lambda_bar_J(c.f, scale(j, a), b);
    auto r = h1_class(times_eps2(j, lambda_value(c.f, a, b)));
    return l == r ? "" : c.G.name + ": " + h1s(c.G.g, l) + " vs " + h1s(c.G.g, r);
  }));

  out.push_back(run("mubarJ_J_shift", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng), b = rand_vector(c.G.g, c.f.rank(), rng);
    RingElem j = rand_J(c.G.g, rng);
    auto l = mubar_J(c.f, add(scale(j, a), b));
    auto r = h1_class(times_eps2(j, lambda_value(c.f, a, a) + lambda_value(c.f, a, b))) + mubar_J(c.f, b);
    return l == r ? "" : c.G.name + ": " + h1s(c.G.g, l) + " vs " + h1s(c.G.g, r);
  }));

  out.push_back(run("mubar_sum_formula", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng), b = rand_vector(c.G.g, c.f.rank(), rng);
    RingElem l = mubar_rep(c.f, add(a, b));
    RingElem r = mubar_rep(c.f, a) + mubar_rep(c.f, b) + lambda_bar(c.f, a, b);
    return mubar_equivalent(l, r, c.w1) ? "" : c.G.name + ": " + l.str() + " vs " + r.str();
  }));

  out.push_back(run("wall_identity", cases, seed, [](Rng& rng, int) -> std::string {
    // basis elements realized by spheres
    const NamedGroup& G = pick_group(rng);
    Character w1 = rand_character(G.g, rng);
    const int n = static_cast<int>(rand_int(rng, 1, 3));
    std::vector<std::vector<RingElem>> lam(n, std::vector<RingElem>(n, RingElem(G.g)));
    std::vector<RingElem> mu;
    std::vector<std::optional<DoublePointSphere>> sph;
    for (int i = 0; i < n; ++i) {
      auto s = rand_sphere(G.g, w1, rng);
      lam[i][i] = wall_self_intersection(s);
      mu.push_back(mu_from_sphere(s).mubar);
      sph.push_back(s);
      for (int j = 0; j < i; ++j) {
        lam[j][i] = rand_ring(G.g, rng, 3);
        lam[i][j] = involute(lam[j][i], w1);
      }
    }
    LambdaMuForm f(G.g, w1, lam, mu, sph);
    for (int i = 0; i < n; ++i) {
      auto e = basis_vector(G.g, n, i, RingElem::scalar(G.g, 1));
      RingElem m = f.mubar(i);
      if (!(lambda_bar(f, e, e) == reduce_augmentation(m + involute(m, w1)))) return G.name + ": basis element";
    }
    auto a = rand_vector(G.g, n, rng);
    RingElem m = mubar_rep(f, a);
    RingElem l = lambda_bar(f, a, a), r = reduce_augmentation(m + involute(m, w1));
    return l == r ? "" : G.name + ": " + l.str() + " vs " + r.str();
  }));

  out.push_back(run("mubar_ordering_independence", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    Character w1 = rand_character(G.g, rng);
    auto s = rand_sphere(G.g, w1, rng);
    if (s.points.empty()) s.points.push_back({rand_elem(G.g, rng), 1});
    auto t = s;
    for (auto& p : t.points) {
      if (!rand_int(rng, 0, 1)) continue;
      p.sign *= w1(p.g) ? -1 : 1;
      p.g = G.g->inv(p.g);
    }
    RingElem a = mu_from_sphere(s).mubar, b = mu_from_sphere(t).mubar;
    return mubar_equivalent(a, b, w1) ? "" : G.name + ": " + a.str() + " vs " + b.str();
  }));

  out.push_back(run("mod2_descent", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto a = rand_vector(c.G.g, c.f.rank(), rng), b = rand_vector(c.G.g, c.f.rank(), rng);
    auto a2 = a;
    const int i = static_cast<int>(rand_int(rng, 0, c.f.rank() - 1));
    a2[i] += rand_ring(c.G.g, rng, 3) * 2;
    if (!(mubar_J(c.f, a2) == mubar_J(c.f, a))) return c.G.name + ": mubar_J";
    if (!(lambda_bar_J(c.f, a2, b) == lambda_bar_J(c.f, a, b))) return c.G.name + ": lambda_bar_J left";
    if (!(lambda_bar_J(c.f, b, a2) == lambda_bar_J(c.f, b, a))) return c.G.name + ": lambda_bar_J right";
    return "";
  }));

  out.push_back(run("IJ_equals_JI", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    RingElem i = rand_I(G.g, rng), j = rand_J(G.g, rng);
    if (!is_in_IJ(i * j)) return G.name + ": i*j with i=" + i.str() + ", j=" + j.str();
    if (!is_in_IJ(j * i)) return G.name + ": j*i with i=" + i.str() + ", j=" + j.str();
    return "";
  }));

  out.push_back(run("J_squared_meets_I", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    // j1 j2 lies in I as soon as one factor does; pick one from I and the other from J
    RingElem j1 = rand_J(G.g, rng), j2 = rand_J(G.g, rng);
    if (rand_int(rng, 0, 1)) j1 = reduce_augmentation(j1); else j2 = reduce_augmentation(j2);
    RingElem u = j1 * j2;
    if (augment(u) != 0) return G.name + ": product not in I";
    return is_in_IJ(u) ? "" : G.name + ": " + u.str();
  }));

  out.push_back(run("I_squared_and_2I_in_IJ", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    RingElem i = rand_I(G.g, rng);
    if (!is_in_IJ(i * i)) return G.name + ": i^2 for i=" + i.str();
    if (!is_in_IJ(i * 2)) return G.name + ": 2i for i=" + i.str();
    return "";
  }));

  out.push_back(run("h1_class_additive", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    Elem g = rand_elem(G.g, rng), h = rand_elem(G.g, rng);
    RingElem one = RingElem::scalar(G.g, 1);
    auto l = h1_class(RingElem::basis(G.g, g) - one) + h1_class(RingElem::basis(G.g, h) - one);
    auto r = h1_class(RingElem::basis(G.g, G.g->mul(g, h)) - one);
    if (!(l == r)) return G.name + ": (g-1)+(h-1) vs gh-1";
    RingElem x = rand_I(G.g, rng), y = rand_I(G.g, rng);
    return h1_class(x + y) == h1_class(x) + h1_class(y) ? "" : G.name + ": linearity";
  }));

  out.push_back(run("involution_preserves_eps2", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    Character w1 = rand_character(G.g, rng);
    RingElem x = rand_ring(G.g, rng), y = rand_ring(G.g, rng);
    if (augment2(involute(x, w1)) != augment2(x)) return G.name + ": eps2";
    if (!(involute(involute(x, w1), w1) == x)) return G.name + ": not an involution";
    if (!(involute(x * y, w1) == involute(y, w1) * involute(x, w1))) return G.name + ": not anti-multiplicative";
    return "";
  }));

  out.push_back(run("sq1_sq1_zero", cases, seed, [](Rng& rng, int) -> std::string {
    const int k = static_cast<int>(rand_int(rng, 1, 2));
    const NamedGroup& G = pick_group_for_degree(rng, k + 2);
    const BarModel& B = bar_for(G);
    Cochain a = rand_cocycle(B, k, rng);
    Cochain s = B.sq1(a);
    if (!B.is_cocycle(s)) return G.name + ": sq1 not a cocycle";
    return B.is_coboundary(B.sq1(s)) ? "" : G.name + ": sq1 sq1 nonzero in degree " + std::to_string(k);
  }));

  out.push_back(run("cup_commutative_associative", cases, seed, [](Rng& rng, int) -> std::string {
    const int p = static_cast<int>(rand_int(rng, 1, 2)), q = static_cast<int>(rand_int(rng, 1, 2));
    const NamedGroup& G = pick_group_for_degree(rng, p + q + 1);
    const BarModel& B = bar_for(G);
    Cochain a = rand_cocycle(B, p, rng), b = rand_cocycle(B, q, rng);
    if (!B.same_class(B.cup(a, b), B.cup(b, a))) return G.name + ": a b != b a";
    Cochain c = rand_cocycle(B, 1, rng);
    if (p + q + 1 <= 4 && B.cells(p + q + 1) <= 4096 &&
        !(B.cup(B.cup(a, b), c).v == B.cup(a, B.cup(b, c)).v))
      return G.name + ": not associative";
    return "";
  }));

  out.push_back(run("hermitian_forms", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto x = rand_vector(c.G.g, c.f.rank(), rng), y = rand_vector(c.G.g, c.f.rank(), rng);
    if (!(lambda_value(c.f, y, x) == involute(lambda_value(c.f, x, y), c.w1))) return c.G.name + ": lambda(y,x)";
    RingElem a = rand_ring(c.G.g, rng);
    if (!(lambda_value(c.f, scale(a, x), y) == a * lambda_value(c.f, x, y))) return c.G.name + ": left linearity";
    if (c.f.rank() < 2) return "";
    auto lam = c.f.lambda_matrix();
    lam[0][1] += RingElem::basis(c.G.g, rand_elem(c.G.g, rng));
    try {
      LambdaMuForm bad(c.G.g, c.w1, lam, c.f.mubar_list());
      return c.G.name + ": non-Hermitian form accepted";
    } catch (const Error& e) {
      if (e.code() != Errc::InvalidForm) return c.G.name + ": wrong error " + e.what();
    }
    return "";
  }));

  out.push_back(run("resolution_d_squared_zero", cases, seed, [](Rng& rng, int k) -> std::string {
    const NamedGroup& G = pick_group(rng);
    const Strategy s = k % 2 ? Strategy::Bar : Strategy::Auto;
    // Auto falls back to the bar construction on table groups
    const bool bar = s == Strategy::Bar || G.g->kind() == Group::Kind::Table;
    const int depth = bar ? (G.g->order() <= 4 ? 4 : 3) : 5;
    auto R = build_resolution(G.g, depth, s);
    if (!d_squared_zero(*R)) return G.name + " " + R->strategy;
    // twisted and untwisted collapses also square to zero
    Character w1 = rand_character(G.g, rng);
    for (int d = 2; d <= depth; ++d) {
      ZMatrix a = collapse(*R, d - 1, w1, true), b = collapse(*R, d, w1, true);
      if (!(a * b).is_zero()) return G.name + ": twisted collapse";
    }
    return "";
  }));

  out.push_back(run("d2_w1_term", cases, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup* G = nullptr;
    do G = &pick_group(rng);
    while (G->g->order() > 4 || G->g->ab_dim() == 0);
    Character w1 = rand_character(G->g, rng);
    const int r = static_cast<int>(rand_int(rng, 2, 4));
    D2Matrix full = d2_matrix(make_xi(G->g, w1), r, Line::Q1);
    D2Matrix plain = d2_matrix(make_xi(G->g, trivial_character(G->g)), r, Line::Q1);
    D2Matrix term = d2_matrix_with(make_xi(G->g, w1), r, Line::Q1, [&](const BarModel& B, const Cochain& a) {
      return B.cup(B.sq1(a), B.from_character(w1));
    });
    D2Matrix sq2 = d2_matrix_with(make_xi(G->g, trivial_character(G->g)), r, Line::Q1,
                                  [](const BarModel& B, const Cochain& a) { return B.sq2(a); });
    if (full.cols() != plain.cols() || full.cols() != term.cols()) return G->name + ": shapes";
    for (int i = 0; i < full.cols(); ++i) {
      if (!(full.columns[i] == (plain.columns[i] ^ term.columns[i])))
        return G->name + ": column " + std::to_string(i) + " at r=" + std::to_string(r);
      if (!(plain.columns[i] == sq2.columns[i])) return G->name + ": w1 = 0 page differs from Sq2 alone";
    }
    return "";
  }));

  return out;
}

SuiteResult secondary_wu_suite(int cases, uint64_t seed) {
  return run("secondary_wu", cases, seed, [](Rng& rng, int) -> std::string {
    auto c = form_case(rng);
    auto cv = s_characteristic_vector(c.f, rng);
    ModuleVector b;
    for (int i = 0; i < c.f.rank(); ++i) b.push_back(rand_J(c.G.g, rng));
    if (!s_characteristic_check(c.f, cv)) return c.G.name + ": constructed c is not s-characteristic";
    return secondary_wu_check(c.f, b, cv) ? "" : c.G.name + ": lambda_J(b,c) != mubar_J(b)";
  });
}

namespace {

// membership in the Z-span of {(g-1)(h-1), 2(g-1)} via Smith normal form
struct SpanOracle {
  Snf snf;
  int n = 0;
  explicit SpanOracle(const Group& G) {
    n = static_cast<int>(G.order());
    std::vector<ZVec> cols;
    for (int g = 1; g < n; ++g) {
      ZVec v(n, 0);
      v[g] += 2;
      v[0] -= 2;
      cols.push_back(v);
      for (int h = 1; h < n; ++h) {
        ZVec w(n, 0);  // gh - g - h + 1
        w[G.mul_idx(g, h)] += 1;
        w[g] -= 1;
        w[h] -= 1;
        w[0] += 1;
        cols.push_back(w);
      }
    }
    if (cols.empty()) cols.push_back(ZVec(n, 0));
    snf = smith(ZMatrix::from_columns(n, cols), SnfWant{true, false, false, false});
  }
  bool contains(const ZVec& x) const {
    ZVec y = snf.U.apply(x);
    for (int i = 0; i < n; ++i) {
      if (i < snf.rank) {
        if (y[i] % snf.diag[i] != 0) return false;
      } else if (y[i] != 0) {
        return false;
      }
    }
    return true;
  }
};

std::string factors_of(const GroupPtr& g, const Character& w1, Coeff c, int k) {
  return homology(g, w1, c, k).describe();
}

}  // namespace

std::vector<SuiteResult> oracle_suites(uint64_t seed) {
  std::vector<SuiteResult> out;

  {
    SuiteResult r{"is_in_IJ_vs_smith_exhaustive", 0, 0, "", 0};
    auto t0 = Clock::now();
    for (const auto& G : small_groups()) {
      SpanOracle oracle(*G.g);
      const int n = oracle.n;
      // every coefficient vector in [-1,1] off the identity, completed into I
      int64_t total = 1;
      for (int i = 1; i < n; ++i) total *= 3;
      for (int64_t code = 0; code < total; ++code) {
        ZVec v(n, 0);
        int64_t c = code, s = 0;
        RingElem x(G.g);
        for (int i = 1; i < n; ++i, c /= 3) {
          v[i] = c % 3 - 1;
          s += v[i];
          x.add_term(G.g->element(i), v[i]);
        }
        v[0] = -s;
        x.add_term(Elem{}, -s);
        ++r.cases;
        if (is_in_IJ(x) != oracle.contains(v) && r.failures++ == 0)
          r.first_failure = G.name + ": " + x.str();
      }
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  }

  out.push_back(run("is_in_IJ_vs_smith_full_support", 400, seed, [](Rng& rng, int) -> std::string {
    const NamedGroup& G = pick_group(rng);
    static std::map<std::string, std::unique_ptr<SpanOracle>> cache;
    auto& o = cache[G.name];
    if (!o) o = std::make_unique<SpanOracle>(*G.g);
    ZVec v(o->n);
    RingElem x(G.g);
    int64_t s = 0;
    for (int i = 1; i < o->n; ++i) {
      v[i] = rand_int(rng, -3, 3);
      s += v[i];
      x.add_term(G.g->element(i), v[i]);
    }
    v[0] = -s;
    x.add_term(Elem{}, -s);
    return is_in_IJ(x) == o->contains(v) ? "" : G.name + ": " + x.str();
  }));

  {
    SuiteResult r{"cyclic_homology_closed_forms", 0, 0, "", 0};
    auto t0 = Clock::now();
    auto check = [&](const std::string& what, const std::string& got, const std::string& want) {
      ++r.cases;
      if (got != want && r.failures++ == 0) r.first_failure = what + ": got " + got + ", want " + want;
    };
    for (int n = 2; n <= 8; ++n) {
      GroupPtr g = build_group(GroupSpec::cyclic(n));
      Character triv = trivial_character(g);
      Character sgn = n % 2 ? triv : Character(g, {1});
      const std::string zn = "Z/" + std::to_string(n);
      for (int k = 0; k <= 5; ++k) {
        const std::string tag = "Z/" + std::to_string(n) + " deg " + std::to_string(k);
        check(tag + " Z", factors_of(g, triv, Coeff::Z, k), k == 0 ? "Z" : (k % 2 ? zn : "0"));
        check(tag + " Z/2", factors_of(g, triv, Coeff::Z2, k), (k == 0 || n % 2 == 0) ? "Z/2" : "0");
        if (n % 2 == 0) check(tag + " Z^-", factors_of(g, sgn, Coeff::ZTwisted, k), k % 2 ? "0" : "Z/2");
      }
    }
    GroupPtr z = build_group(GroupSpec::integers());
    for (int k = 0; k <= 5; ++k) {
      check("Z deg " + std::to_string(k), factors_of(z, trivial_character(z), Coeff::Z, k), k <= 1 ? "Z" : "0");
      check("Z^- deg " + std::to_string(k), factors_of(z, Character(z, {1}), Coeff::ZTwisted, k),
            k == 0 ? "Z/2" : "0");
    }
    // periodic resolutions against the bar construction
    for (int n = 2; n <= 5; ++n) {
      GroupPtr g = build_group(GroupSpec::cyclic(n));
      for (int k = 0; k <= 3; ++k)
        for (Coeff c : {Coeff::Z, Coeff::Z2})
          check("bar Z/" + std::to_string(n) + " deg " + std::to_string(k),
                homology(g, trivial_character(g), c, k, Strategy::Bar).describe(),
                homology(g, trivial_character(g), c, k, Strategy::Periodic).describe());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  }

  {
    SuiteResult r{"nonabelian_and_product_homology", 0, 0, "", 0};
    auto t0 = Clock::now();
    auto check = [&](const std::string& what, const std::string& got, const std::string& want) {
      ++r.cases;
      if (got != want && r.failures++ == 0) r.first_failure = what + ": got " + got + ", want " + want;
    };
    for (const auto& G : small_groups()) {
      Character triv = trivial_character(G.g);
      if (G.name == "s3") {
        check("s3 H1", factors_of(G.g, triv, Coeff::Z, 1), "Z/2");
        check("s3 H2", factors_of(G.g, triv, Coeff::Z, 2), "0");
        check("s3 H3", factors_of(G.g, triv, Coeff::Z, 3), "Z/6");
      } else if (G.name == "q8") {
        check("q8 H1", factors_of(G.g, triv, Coeff::Z, 1), "Z/2 + Z/2");
        check("q8 H2", factors_of(G.g, triv, Coeff::Z, 2), "0");
        check("q8 H3", factors_of(G.g, triv, Coeff::Z, 3), "Z/8");
      } else if (G.name == "d4") {
        check("d4 H1", factors_of(G.g, triv, Coeff::Z, 1), "Z/2 + Z/2");
        check("d4 H2", factors_of(G.g, triv, Coeff::Z, 2), "Z/2");
      }
    }
    // Kunneth for elementary abelian 2-groups: dim H_k(Z/2^r; Z/2) = C(k+r-1, r-1)
    GroupPtr v4 = build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
    GroupPtr v8 = build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
    for (int k = 0; k <= 5; ++k) {
      ++r.cases;
      if (homology(v4, trivial_character(v4), Coeff::Z2, k).ngens() != k + 1 && r.failures++ == 0)
        r.first_failure = "Z/2^2 mod-2 dimension in degree " + std::to_string(k);
      ++r.cases;
      if (homology(v8, trivial_character(v8), Coeff::Z2, k).ngens() != (k + 1) * (k + 2) / 2 && r.failures++ == 0)
        r.first_failure = "Z/2^3 mod-2 dimension in degree " + std::to_string(k);
    }
    for (int k = 0; k <= 3; ++k)
      for (Coeff c : {Coeff::Z, Coeff::Z2})
        check("Z/2^2 tensor vs bar deg " + std::to_string(k),
              homology(v4, trivial_character(v4), c, k, Strategy::Tensor).describe(),
              homology(v4, trivial_character(v4), c, k, Strategy::Bar).describe());
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  }

  return out;
}

}  // namespace bft
