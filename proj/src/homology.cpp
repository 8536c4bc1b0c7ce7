#include "bf/homology.hpp"

#include <map>

namespace bf {

const char* coeff_name(Coeff c) {
  switch (c) {
    case Coeff::Z: return "z";
    case Coeff::ZTwisted: return "z-twisted";
    case Coeff::Z2: return "z2";
    case Coeff::Zero: return "zero";
  }
  return "?";
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Periodic: return "periodic";
    case Strategy::Tensor: return "tensor";
    case Strategy::Bar: return "bar";
  }
  return "?";
}

namespace {

constexpr int64_t kBarRankBudget = 300000;
constexpr int64_t kDenseBudget = 4000000;

Resolution empty_res(const GroupPtr& g, int depth, const std::string& strategy) {
  Resolution R;
  R.group = g;
  R.depth = depth;
  R.strategy = strategy;
  R.rank.assign(depth + 1, 0);
  R.d.assign(depth + 1, {});
  R.labels.assign(depth + 1, {});
  return R;
}

Resolution trivial_res(const GroupPtr& g, int depth) {
  Resolution R = empty_res(g, depth, "trivial");
  R.rank[0] = 1;
  R.labels[0] = {"e0"};
  return R;
}

// Lambda -(t-1)- Lambda -N- Lambda -(t-1)- ...
Resolution periodic_res(const GroupPtr& g, int f, int depth) {
  Resolution R = empty_res(g, depth, "periodic");
  const int64_t n = g->factor(f).n;
  RingElem tm1 = RingElem::basis(g, g->embed(f, 1)) - RingElem::scalar(g, 1);
  RingElem norm(g);
  for (int64_t i = 0; i < n; ++i) norm.add_term(g->embed(f, i), 1);
  for (int k = 0; k <= depth; ++k) {
    R.rank[k] = 1;
    R.labels[k] = {"e" + std::to_string(k)};
    if (k > 0) R.d[k] = {SparseCol{{0, (k % 2) ? tm1 : norm}}};
  }
  return R;
}

Resolution integers_res(const GroupPtr& g, int f, int depth) {
  Resolution R = empty_res(g, depth, "integers");
  R.rank[0] = 1;
  R.labels[0] = {"e0"};
  if (depth >= 1) {
    R.rank[1] = 1;
    R.labels[1] = {"e1"};
    R.d[1] = {SparseCol{{0, RingElem::basis(g, g->embed(f, 1)) - RingElem::scalar(g, 1)}}};
  }
  return R;
}

// normalized bar resolution on the subgroup listed in elems (elems[0] = identity)
Resolution bar_res(const GroupPtr& g, const std::vector<Elem>& elems, int depth) {
  const int64_t m = static_cast<int64_t>(elems.size());
  int64_t top = 1;
  for (int k = 0; k < depth; ++k) {
    top *= (m - 1);
    if (top > kBarRankBudget)
      fail(Errc::OrderTooLarge, "bar resolution of a group of order " + std::to_string(m) + " to depth " +
                                    std::to_string(depth) + " exceeds the size budget");
  }
  Resolution R = empty_res(g, depth, "bar");
  std::map<Elem, int> idx;
  for (int64_t i = 0; i < m; ++i) idx[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> mt(m, std::vector<int>(m));
  for (int64_t a = 0; a < m; ++a)
    for (int64_t b = 0; b < m; ++b) mt[a][b] = idx.at(g->mul(elems[a], elems[b]));
  auto encode = [&](const std::vector<int>& t) {
    int64_t r = 0, s = 1;
    for (int a : t) {
      r += (a - 1) * s;
      s *= (m - 1);
    }
    return static_cast<int>(r);
  };
  std::vector<int64_t> pw(depth + 1, 1);
  for (int k = 1; k <= depth; ++k) pw[k] = pw[k - 1] * (m - 1);
  for (int k = 0; k <= depth; ++k) {
    R.rank[k] = static_cast<int>(pw[k]);
    R.labels[k].resize(pw[k]);
    R.d[k].resize(k ? pw[k] : 0);
    for (int64_t x = 0; x < pw[k]; ++x) {
      std::vector<int> t(k);
      int64_t y = x;
      for (int i = 0; i < k; ++i) {
        t[i] = static_cast<int>(y % (m - 1)) + 1;
        y /= (m - 1);
      }
      std::string lab = "[";
      for (int i = 0; i < k; ++i) lab += (i ? "|" : "") + g->format(elems[t[i]]);
      R.labels[k][x] = lab + "]";
      if (k == 0) continue;
      std::map<int, RingElem> acc;
      auto add = [&](const std::vector<int>& face, const RingElem& c) {
        for (int a : face)
          if (a == 0) return;
        auto it = acc.find(encode(face));
        if (it == acc.end())
          acc.emplace(encode(face), c);
        else
          it->second += c;
      };
      add(std::vector<int>(t.begin() + 1, t.end()), RingElem::basis(g, elems[t[0]]));
      for (int i = 0; i + 1 < k; ++i) {
        std::vector<int> face;
        for (int j = 0; j < i; ++j) face.push_back(t[j]);
        face.push_back(mt[t[i]][t[i + 1]]);
        for (int j = i + 2; j < k; ++j) face.push_back(t[j]);
        add(face, RingElem::scalar(g, (i + 1) % 2 ? -1 : 1));
      }
      add(std::vector<int>(t.begin(), t.end() - 1), RingElem::scalar(g, k % 2 ? -1 : 1));
      for (auto& [row, c] : acc)
        if (!c.is_zero()) R.d[k][x].emplace_back(row, c);
    }
  }
  return R;
}

Resolution tensor(const Resolution& P, const Resolution& Q, int depth) {
  Resolution R = empty_res(P.group, depth, "tensor");
  // index of (i, x, y) in degree i + j
  std::vector<std::map<std::pair<int, std::pair<int, int>>, int>> index(depth + 1);
  for (int k = 0; k <= depth; ++k) {
    int n = 0;
    for (int i = k; i >= 0; --i) {
      int j = k - i;
      if (i > P.depth || j > Q.depth) continue;
      for (int x = 0; x < P.rank[i]; ++x)
        for (int y = 0; y < Q.rank[j]; ++y) {
          index[k][{i, {x, y}}] = n++;
          R.labels[k].push_back(P.labels[i][x] + "x" + Q.labels[j][y]);
        }
    }
    R.rank[k] = n;
  }
  for (int k = 1; k <= depth; ++k) {
    R.d[k].resize(R.rank[k]);
    for (const auto& [key, col] : index[k]) {
      int i = key.first, x = key.second.first, y = key.second.second, j = k - i;
      std::map<int, RingElem> acc;
      auto add = [&](int row, const RingElem& c) {
        auto it = acc.find(row);
        if (it == acc.end())
          acc.emplace(row, c);
        else
          it->second += c;
      };
      if (i > 0)
        for (const auto& [xr, a] : P.d[i][x]) add(index[k - 1].at({i - 1, {xr, y}}), a);
      if (j > 0)
        for (const auto& [yr, b] : Q.d[j][y]) add(index[k - 1].at({i, {x, yr}}), (i % 2) ? -b : b);
      for (auto& [row, c] : acc)
        if (!c.is_zero()) R.d[k][col].emplace_back(row, c);
    }
  }
  return R;
}

Resolution factor_res(const GroupPtr& g, int f, int depth) {
  const Factor& F = g->factor(f);
  switch (F.kind) {
    case Factor::Kind::Cyclic: return periodic_res(g, f, depth);
    case Factor::Kind::Integers: return integers_res(g, f, depth);
    case Factor::Kind::Table: {
      std::vector<Elem> elems;
      for (int64_t c = 0; c < F.n; ++c) elems.push_back(g->embed(f, c));
      return bar_res(g, elems, depth);
    }
  }
  return trivial_res(g, depth);
}

}  // namespace

ResolutionPtr build_resolution(const GroupPtr& g, int depth, Strategy s) {
  if (depth < 0) fail(Errc::InvalidArgument, "negative depth");
  if (depth > kMaxDepth) fail(Errc::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds " + std::to_string(kMaxDepth));
  if (g->nfactors() == 0) return std::make_shared<const Resolution>(trivial_res(g, depth));
  switch (s) {
    case Strategy::Bar: {
      if (!g->finite()) fail(Errc::ModelMismatch, "bar resolution needs a finite group");
      return std::make_shared<const Resolution>(bar_res(g, g->elements(), depth));
    }
    case Strategy::Periodic:
      if (g->nfactors() != 1 || g->factor(0).kind != Factor::Kind::Cyclic)
        fail(Errc::InvalidArgument, "periodic resolution needs a finite cyclic group");
      return std::make_shared<const Resolution>(periodic_res(g, 0, depth));
    case Strategy::Tensor:
    case Strategy::Auto: {
      if (s == Strategy::Tensor)
        for (int f = 0; f < g->nfactors(); ++f)
          if (g->factor(f).kind == Factor::Kind::Table)
            fail(Errc::InvalidArgument, "tensor strategy needs cyclic or integer factors");
      Resolution R = factor_res(g, 0, depth);
      for (int f = 1; f < g->nfactors(); ++f) R = tensor(R, factor_res(g, f, depth), depth);
      return std::make_shared<const Resolution>(std::move(R));
    }
  }
  fail(Errc::InvalidArgument, "unknown strategy");
}

bool d_squared_zero(const Resolution& R) {
  for (int k = 2; k <= R.depth; ++k)
    for (int j = 0; j < R.rank[k]; ++j) {
      std::map<int, RingElem> acc;
      for (const auto& [r, a] : R.d[k][j])
        for (const auto& [r2, b] : R.d[k - 1][r]) {
          RingElem c = a * b;
          auto it = acc.find(r2);
          if (it == acc.end())
            acc.emplace(r2, c);
          else
            it->second += c;
        }
      for (const auto& [r2, c] : acc)
        if (!c.is_zero()) return false;
    }
  return true;
}

ZMatrix collapse(const Resolution& R, int k, const Character& w1, bool twisted) {
  if (k < 1 || k > R.depth) fail(Errc::DegreeOutOfRange, "boundary degree " + std::to_string(k) + " outside the model");
  ZMatrix M(R.rank[k - 1], R.rank[k]);
  for (int j = 0; j < R.rank[k]; ++j)
    for (const auto& [r, a] : R.d[k][j]) {
      int64_t s = 0;
      for (const auto& [e, c] : a.terms()) s = add_ck(s, (twisted && w1(e)) ? -c : c);
      M(r, j) = add_ck(M(r, j), s);
    }
  return M;
}

struct Mod2Homology {
  Gf2Echelon ech{0};
  std::vector<size_t> gen_slot;  // inserted index of each generator
};

namespace {

std::vector<BitVec> mod2_columns(const ZMatrix& M) {
  std::vector<BitVec> cols(M.cols(), BitVec(M.rows()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M(i, j) & 1) cols[j].set(i);
  return cols;
}

}  // namespace

HomologyPresentation homology(const ResolutionPtr& R, const Character& w1, Coeff coeff, int degree) {
  if (degree < 0) fail(Errc::DegreeOutOfRange, "negative degree");
  if (degree + 1 > R->depth)
    fail(Errc::DegreeOutOfRange, "degree " + std::to_string(degree) + " needs a model of depth " + std::to_string(degree + 1));
  HomologyPresentation h;
  h.degree = degree;
  h.coeff = coeff;
  h.model = R;
  h.w1 = w1;
  const int n = R->rank[degree];
  if (coeff == Coeff::Zero) {
    h.boundary = ZMatrix(0, n);
    return h;
  }
  if (static_cast<int64_t>(n) * R->rank[degree + 1] > kDenseBudget ||
      (degree > 0 && static_cast<int64_t>(n) * R->rank[degree - 1] > kDenseBudget))
    fail(Errc::OrderTooLarge, "chain complex in degree " + std::to_string(degree) + " exceeds the dense budget");
  const bool twisted = coeff == Coeff::ZTwisted;
  ZMatrix Dk = degree == 0 ? ZMatrix(0, n) : collapse(*R, degree, w1, twisted);
  ZMatrix Dk1 = collapse(*R, degree + 1, w1, twisted);
  h.boundary = Dk;
  if (coeff == Coeff::Z2) {
    auto m2 = std::make_shared<Mod2Homology>();
    m2->ech = Gf2Echelon(n);
    for (const auto& c : mod2_columns(Dk1)) m2->ech.insert(c);
    for (const auto& z : gf2_kernel(mod2_columns(Dk), Dk.rows())) {
      size_t slot = m2->ech.inserted();
      if (m2->ech.insert(z)) {
        m2->gen_slot.push_back(slot);
        ZVec g(n);
        for (size_t i : z.ones()) g[i] = 1;
        h.generators.push_back(std::move(g));
        h.factors.push_back(2);
      }
    }
    h.m2 = m2;
    return h;
  }
  Snf s = smith(Dk, SnfWant{false, false, true, true});
  const int r = s.rank, m = n - r;
  ZMatrix K = s.V.columns(r, n);
  ZMatrix C = s.Vinv.row_block(r, n);
  auto sq = std::make_shared<Subquotient>(std::move(K), std::move(C), ZVec(m, 1), Dk1);
  h.factors = sq->factors();
  for (int j = 0; j < sq->ngens(); ++j) h.generators.push_back(sq->generators().column(j));
  h.sq = sq;
  return h;
}

HomologyPresentation homology(const GroupPtr& g, const Character& w1, Coeff coeff, int degree, Strategy s) {
  if (degree < 0) fail(Errc::DegreeOutOfRange, "negative degree");
  return homology(build_resolution(g, degree + 1, s), w1, coeff, degree);
}

ZVec HomologyPresentation::coords(const ZVec& cycle) const {
  if (static_cast<int>(cycle.size()) != boundary.cols())
    fail(Errc::DimensionMismatch, "cycle has length " + std::to_string(cycle.size()) + ", the model has rank " +
                                      std::to_string(boundary.cols()) + " in degree " + std::to_string(degree));
  if (coeff == Coeff::Zero) return {};
  if (coeff == Coeff::Z2) {
    BitVec z(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i)
      if (cycle[i] & 1) z.set(i);
    ZVec dz = boundary.apply(cycle);
    for (int64_t v : dz)
      if (v & 1) fail(Errc::NotACycle, "vector is not a mod-2 cycle");
    auto combo = m2->ech.express(z);
    if (!combo) fail(Errc::NotACycle, "vector is not a cycle");
    ZVec out;
    for (size_t slot : m2->gen_slot) out.push_back(slot < combo->size() && combo->get(slot) ? 1 : 0);
    return out;
  }
  ZVec dz = boundary.apply(cycle);
  for (int64_t v : dz)
    if (v) fail(Errc::NotACycle, "vector is not a cycle");
  return sq->coords(cycle);
}

H1Class h1_of_cycle(const Resolution& R, const ZVec& cycle) {
  if (R.depth < 1 || static_cast<int>(cycle.size()) != R.rank[1]) fail(Errc::DimensionMismatch, "degree-1 chain length");
  H1Class r = h1_zero(*R.group);
  for (int j = 0; j < R.rank[1]; ++j) {
    if (!(cycle[j] & 1)) continue;
    for (const auto& [row, a] : R.d[1][j]) r += h1_class(a);
  }
  return r;
}

std::vector<H1Class> h1_dictionary(const HomologyPresentation& h1) {
  if (h1.degree != 1) fail(Errc::DegreeOutOfRange, "dictionary is for degree 1");
  std::vector<H1Class> out;
  for (const auto& g : h1.generators) out.push_back(h1_of_cycle(*h1.model, g));
  return out;
}

}  // namespace bf
