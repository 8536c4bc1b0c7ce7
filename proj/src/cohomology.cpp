#include "bf/cohomology.hpp"

namespace bf {

namespace {

std::vector<int> digits(size_t idx, int k, int m) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<int>(idx % m);
    idx /= m;
  }
  return d;
}

size_t encode(const std::vector<int>& d, int m) {
  size_t r = 0;
  for (size_t i = d.size(); i-- > 0;) r = r * m + d[i];
  return r;
}

bool has_zero(const std::vector<int>& d) {
  for (int x : d)
    if (x == 0) return true;
  return false;
}

// faces of a (k+1)-tuple in the inhomogeneous bar complex, in order 0..k+1
std::vector<std::vector<int>> faces(const Group& g, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<int>> out;
  out.emplace_back(d.begin() + 1, d.end());
  for (int i = 1; i < n; ++i) {
    std::vector<int> f;
    for (int j = 0; j < i - 1; ++j) f.push_back(d[j]);
    f.push_back(g.mul_idx(d[i - 1], d[i]));
    for (int j = i + 1; j < n; ++j) f.push_back(d[j]);
    out.push_back(std::move(f));
  }
  out.emplace_back(d.begin(), d.end() - 1);
  return out;
}

}  // namespace

BarModel::BarModel(GroupPtr g) : g_(std::move(g)) {
  if (!g_->finite()) fail(Errc::ModelMismatch, "cochain computations need a finite group, got " + g_->describe());
  m_ = static_cast<int>(g_->order());
  unit_ = Cochain{0, BitVec(1)};
  unit_.v.set(0);
}

size_t BarModel::cells(int k) const {
  size_t r = 1;
  for (int i = 0; i < k; ++i) r *= m_;
  return r;
}

Cochain BarModel::zero(int k) const { return Cochain{k, BitVec(cells(k))}; }

Cochain BarModel::from_character(const Character& w) const {
  Cochain c = zero(1);
  for (int i = 1; i < m_; ++i)
    if (w.at_index(i)) c.v.set(i);
  return c;
}

Cochain BarModel::basis_class(int coord) const {
  if (coord < 0 || coord >= g_->ab_dim()) fail(Errc::InvalidArgument, "abelianization coordinate out of range");
  Cochain c = zero(1);
  for (int i = 1; i < m_; ++i)
    if (g_->project(g_->element(i))[coord]) c.v.set(i);
  return c;
}

bool BarModel::nondegenerate(size_t idx, int k) const {
  for (int i = 0; i < k; ++i) {
    if (idx % m_ == 0) return false;
    idx /= m_;
  }
  return true;
}

bool BarModel::is_normalized(const Cochain& f) const {
  for (size_t i : f.v.ones())
    if (!nondegenerate(i, f.degree)) return false;
  return true;
}

Cochain BarModel::coboundary(const Cochain& f) const {
  const int k = f.degree;
  Cochain r = zero(k + 1);
  if (!f.v.any()) return r;
  for (size_t s = 0; s < r.v.size(); ++s) {
    if (!nondegenerate(s, k + 1)) continue;
    int v = 0;
    for (const auto& face : faces(*g_, digits(s, k + 1, m_)))
      if (!has_zero(face)) v ^= f.v.get(encode(face, m_));
    if (v) r.v.set(s);
  }
  return r;
}

bool BarModel::is_cocycle(const Cochain& f) const { return !coboundary(f).v.any(); }

const Gf2Echelon& BarModel::coboundaries(int deg) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = cob_[deg];
  if (!slot) {
    auto e = std::make_shared<Gf2Echelon>(cells(deg));
    const int k = deg - 1;
    for (size_t t = 0; t < cells(k); ++t) {
      if (!nondegenerate(t, k)) continue;
      Cochain b = zero(k);
      b.v.set(t);
      e->insert(coboundary(b).v);
    }
    slot = std::move(e);
  }
  return *slot;
}

bool BarModel::is_coboundary(const Cochain& f) const {
  if (f.degree == 0) return !f.v.any();
  return coboundaries(f.degree).in_span(f.v);
}

bool BarModel::same_class(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) return false;
  return is_coboundary(add(a, b));
}

Cochain BarModel::add(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) fail(Errc::DimensionMismatch, "adding cochains of different degree");
  return Cochain{a.degree, a.v ^ b.v};
}

Cochain BarModel::cup(const Cochain& a, const Cochain& b) const {
  const int deg = a.degree + b.degree;
  if (deg > 5) fail(Errc::DegreeOutOfRange, "cup product above degree 5");
  Cochain r = zero(deg);
  const size_t shift = cells(a.degree);
  const auto ob = b.v.ones();
  for (size_t ia : a.v.ones())
    for (size_t ib : ob) r.v.set(ia + shift * ib);
  return r;
}

Cochain BarModel::sq1(const Cochain& a) const {
  const int k = a.degree;
  Cochain r = zero(k + 1);
  for (size_t s = 0; s < r.v.size(); ++s) {
    if (!nondegenerate(s, k + 1)) continue;
    auto fs = faces(*g_, digits(s, k + 1, m_));
    int64_t v = 0;
    for (size_t i = 0; i < fs.size(); ++i)
      if (!has_zero(fs[i]) && a.v.get(encode(fs[i], m_))) v += (i % 2) ? -1 : 1;
    if (v & 1) fail(Errc::InvalidArgument, "Bockstein of a cochain that is not a cocycle");
    if ((v / 2) & 1) r.v.set(s);
  }
  return r;
}

Cochain BarModel::sq2(const Cochain& a) const {
  switch (a.degree) {
    case 0: return zero(2);
    case 1: return zero(3);
    case 2: return cup(a, a);
    default: fail(Errc::DegreeOutOfRange, "Sq2 is implemented on degrees 0, 1 and 2 only");
  }
}

std::vector<Cochain> BarModel::cocycle_basis(int k) const {
  if (k == 0) return {unit_};
  std::vector<long> pos(cells(k), -1);
  std::vector<size_t> tuples;
  for (size_t t = 0; t < cells(k); ++t)
    if (nondegenerate(t, k)) {
      pos[t] = static_cast<long>(tuples.size());
      tuples.push_back(t);
    }
  const size_t rows = cells(k + 1);
  std::vector<BitVec> cols(tuples.size(), BitVec(rows));
  for (size_t s = 0; s < rows; ++s) {
    if (!nondegenerate(s, k + 1)) continue;
    for (const auto& face : faces(*g_, digits(s, k + 1, m_)))
      if (!has_zero(face)) cols[pos[encode(face, m_)]].flip(s);
  }
  std::vector<Cochain> out;
  for (const auto& kv : gf2_kernel(cols, rows)) {
    Cochain c = zero(k);
    for (size_t i : kv.ones()) c.v.set(tuples[i]);
    out.push_back(std::move(c));
  }
  return out;
}

BarModel::Comparison BarModel::comparison(const Resolution& R, int upto) const {
  if (!R.group->same_as(*g_)) fail(Errc::GroupMismatch, "resolution over another group");
  if (upto > R.depth) fail(Errc::DegreeOutOfRange, "comparison map above the model depth");
  Comparison phi(upto + 1);
  phi[0].assign(R.rank[0], unit_.v);
  for (int k = 1; k <= upto; ++k) {
    phi[k].assign(R.rank[k], BitVec(cells(k)));
    for (int x = 0; x < R.rank[k]; ++x) {
      BitVec& acc = phi[k][x];
      for (const auto& [row, a] : R.d[k][x]) {
        const auto prev = phi[k - 1][row].ones();
        for (const auto& [g, c] : a.terms()) {
          if (!(c & 1)) continue;
          const size_t gi = static_cast<size_t>(g_->index(g));
          if (gi == 0) continue;  // contracting homotopy kills [e|...]
          for (size_t t : prev) acc.flip(gi + m_ * t);
        }
      }
    }
  }
  return phi;
}

BitVec BarModel::map_chain(const Comparison& phi, int k, const ZVec& z) const {
  if (k >= static_cast<int>(phi.size())) fail(Errc::DegreeOutOfRange, "comparison map not built to this degree");
  if (z.size() != phi[k].size()) fail(Errc::DimensionMismatch, "chain length does not match the model");
  BitVec acc(cells(k));
  for (size_t x = 0; x < z.size(); ++x)
    if (z[x] & 1) acc ^= phi[k][x];
  return acc;
}

// ---- normal 1-types ----

Xi1Type make_xi(const GroupPtr& g, const Character& w1) {
  if (!w1.group() || !w1.group()->same_as(*g)) fail(Errc::GroupMismatch, "orientation character over another group");
  Xi1Type xi;
  xi.group = g;
  xi.w1 = w1;
  if (g->finite()) xi.w2 = BarModel(g).zero(2);
  return xi;
}

Xi1Type make_xi_infinite(const GroupPtr& g, const Character& w1) {
  Xi1Type xi = make_xi(g, w1);
  xi.w2_infinite = true;
  xi.w2_zero = false;
  xi.w2_text = "infinity";
  return xi;
}

Xi1Type make_xi_cup(const GroupPtr& g, const Character& w1, const std::vector<std::pair<int, int>>& monomials) {
  Xi1Type xi = make_xi(g, w1);
  std::string text;
  for (const auto& [a, b] : monomials) {
    if (a < 0 || b < 0 || a >= g->ab_dim() || b >= g->ab_dim())
      fail(Errc::InvalidArgument, "w2 monomial uses a coordinate outside the abelianization");
    text += (text.empty() ? "" : "+") + g->h1_name(a) + g->h1_name(b);
  }
  if (monomials.empty()) return xi;
  xi.w2_text = text;
  if (g->finite()) {
    BarModel B(g);
    for (const auto& [a, b] : monomials) xi.w2 = B.add(xi.w2, B.cup(B.basis_class(a), B.basis_class(b)));
    xi.w2_zero = B.is_coboundary(xi.w2);
    return xi;
  }
  // torsion-free factors only: squares vanish, x_a x_b (a != b) survive
  for (int f = 0; f < g->nfactors(); ++f)
    if (g->factor(f).kind != Factor::Kind::Integers)
      fail(Errc::ModelMismatch, "nonzero w2 on an infinite group with finite factors is not supported");
  std::vector<std::vector<int>> count(g->ab_dim(), std::vector<int>(g->ab_dim(), 0));
  for (const auto& [a, b] : monomials)
    if (a != b) count[std::min(a, b)][std::max(a, b)] ^= 1;
  for (const auto& row : count)
    for (int c : row)
      if (c) fail(Errc::ModelMismatch, "nonzero w2 on an infinite group is not supported");
  return xi;
}

Xi1Type make_xi_cocycle(const GroupPtr& g, const Character& w1, const std::vector<std::pair<Elem, Elem>>& support) {
  Xi1Type xi = make_xi(g, w1);
  if (support.empty()) return xi;
  if (!g->finite()) fail(Errc::ModelMismatch, "explicit w2 cocycles need a finite group");
  BarModel B(g);
  const size_t m = static_cast<size_t>(g->order());
  std::string text;
  for (const auto& [a, b] : support) {
    size_t ia = g->index(a), ib = g->index(b);
    if (ia == 0 || ib == 0) fail(Errc::InvalidArgument, "w2 cocycle is not normalized at (" + g->format(a) + ", " + g->format(b) + ")");
    xi.w2.v.flip(ia + m * ib);
    text += (text.empty() ? "" : ",") + std::string("[") + g->format(a) + "|" + g->format(b) + "]";
  }
  if (!B.is_cocycle(xi.w2)) fail(Errc::InvalidArgument, "w2 support does not define a 2-cocycle");
  xi.w2_zero = B.is_coboundary(xi.w2);
  xi.w2_text = "cocycle{" + text + "}";
  return xi;
}

std::string describe(const Xi1Type& xi) {
  return "xi(" + xi.group->describe() + ", " + xi.w1.describe() + ", " + xi.w2_text + ")";
}

const char* line_name(Line l) { return l == Line::Q0 ? "q0" : "q1"; }

int D2Matrix::rank() const { return static_cast<int>(gf2_rank(columns, rows())); }

Cochain theta(const BarModel& B, const Xi1Type& xi, const Cochain& alpha) {
  Cochain r = B.sq2(alpha);
  r = B.add(r, B.cup(B.sq1(alpha), B.from_character(xi.w1)));
  if (!xi.w2_zero || xi.w2.v.any()) r = B.add(r, B.cup(alpha, xi.w2));
  return r;
}

namespace {

D2Matrix d2_impl(const Xi1Type& xi, int r, Line line, const CochainOp* op) {
  if (xi.w2_infinite) fail(Errc::InvalidArgument, "d2 is not defined for w2 = infinity");
  const int top = line == Line::Q1 ? 4 : 5;
  if (r < 2 || r > top)
    fail(Errc::DegreeOutOfRange, "d2 on the " + std::string(line_name(line)) + " line needs 2 <= r <= " + std::to_string(top));
  const GroupPtr& g = xi.group;
  auto R = build_resolution(g, r + 1);
  D2Matrix D;
  D.r = r;
  D.line = line;
  D.source = homology(R, xi.w1, line == Line::Q0 ? Coeff::ZTwisted : Coeff::Z2, r);
  D.target = homology(R, xi.w1, Coeff::Z2, r - 2);
  D.columns.assign(D.source.ngens(), BitVec(D.target.ngens()));
  if (D.source.is_zero() || D.target.is_zero()) return D;
  if (!g->finite()) {
    if (!op && r == 2 && xi.w2_zero) return D;
    fail(Errc::ModelMismatch, "d2 with nonzero groups needs a finite group");
  }
  if (r - 2 > 2) fail(Errc::DegreeOutOfRange, "this d2 needs Sq2 on degree " + std::to_string(r - 2));
  BarModel B(g);
  auto phi = B.comparison(*R, r);
  const int nt = D.target.ngens();
  std::vector<BitVec> tcells;
  for (const auto& z : D.target.generators) tcells.push_back(B.map_chain(phi, r - 2, z));
  // dual basis of H^{r-2} against the target generators
  auto Z = B.cocycle_basis(r - 2);
  Gf2Echelon ech(nt);
  for (const auto& c : Z) {
    BitVec row(nt);
    for (int j = 0; j < nt; ++j)
      if (B.evaluate(c, tcells[j])) row.set(j);
    ech.insert(row);
  }
  std::vector<Cochain> kappa;
  for (int j = 0; j < nt; ++j) {
    BitVec e(nt);
    e.set(j);
    auto combo = ech.express(e);
    if (!combo) fail(Errc::ModelMismatch, "cocycles do not separate the homology generators");
    Cochain k = B.zero(r - 2);
    for (size_t z : combo->ones()) k = B.add(k, Z[z]);
    kappa.push_back(std::move(k));
  }
  std::vector<Cochain> images;
  for (const auto& k : kappa) images.push_back(op ? (*op)(B, k) : theta(B, xi, k));
  for (int i = 0; i < D.source.ngens(); ++i) {
    BitVec s = B.map_chain(phi, r, D.source.generators[i]);
    for (int j = 0; j < nt; ++j)
      if (B.evaluate(images[j], s)) D.columns[i].set(j);
  }
  return D;
}

}  // namespace

D2Matrix d2_matrix(const Xi1Type& xi, int r, Line line) { return d2_impl(xi, r, line, nullptr); }

D2Matrix d2_matrix_with(const Xi1Type& xi, int r, Line line, const CochainOp& op) { return d2_impl(xi, r, line, &op); }

}  // namespace bf
