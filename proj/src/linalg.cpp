#include "bf/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace bf {

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_columns(int rows, const std::vector<ZVec>& cols) {
  ZMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) fail(Errc::DimensionMismatch, "column length");
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape");
  ZMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t a = (*this)(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) {
        int64_t b = o(k, j);
        if (b) r(i, j) = add_ck(r(i, j), mul_ck(a, b));
      }
    }
  return r;
}

ZVec ZMatrix::apply(const ZVec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(Errc::DimensionMismatch, "matrix-vector shape");
  ZVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      int64_t a = (*this)(i, j);
      if (a && v[j]) r[i] = add_ck(r[i], mul_ck(a, v[j]));
    }
  return r;
}

ZVec ZMatrix::column(int j) const {
  ZVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ZMatrix ZMatrix::columns(int from, int to) const {
  ZMatrix r(rows_, to - from);
  for (int i = 0; i < rows_; ++i)
    for (int j = from; j < to; ++j) r(i, j - from) = (*this)(i, j);
  return r;
}

ZMatrix ZMatrix::row_block(int from, int to) const {
  ZMatrix r(to - from, cols_);
  for (int i = from; i < to; ++i)
    for (int j = 0; j < cols_; ++j) r(i - from, j) = (*this)(i, j);
  return r;
}

bool ZMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

namespace {

struct SnfState {
  ZMatrix A;
  Snf& s;
  SnfWant want;
  int m, n;

  void row_add(int i, int j, int64_t q) {  // row_i += q row_j
    if (!q) return;
    for (int c = 0; c < n; ++c)
      if (A(j, c)) A(i, c) = add_ck(A(i, c), mul_ck(q, A(j, c)));
    if (want.U)
      for (int c = 0; c < m; ++c)
        if (s.U(j, c)) s.U(i, c) = add_ck(s.U(i, c), mul_ck(q, s.U(j, c)));
    if (want.Uinv)
      for (int r = 0; r < m; ++r)
        if (s.Uinv(r, i)) s.Uinv(r, j) = sub_ck(s.Uinv(r, j), mul_ck(q, s.Uinv(r, i)));
  }
  void col_add(int i, int j, int64_t q) {  // col_i += q col_j
    if (!q) return;
    for (int r = 0; r < m; ++r)
      if (A(r, j)) A(r, i) = add_ck(A(r, i), mul_ck(q, A(r, j)));
    if (want.V)
      for (int r = 0; r < n; ++r)
        if (s.V(r, j)) s.V(r, i) = add_ck(s.V(r, i), mul_ck(q, s.V(r, j)));
    if (want.Vinv)
      for (int c = 0; c < n; ++c)
        if (s.Vinv(i, c)) s.Vinv(j, c) = sub_ck(s.Vinv(j, c), mul_ck(q, s.Vinv(i, c)));
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
    if (want.U)
      for (int c = 0; c < m; ++c) std::swap(s.U(i, c), s.U(j, c));
    if (want.Uinv)
      for (int r = 0; r < m; ++r) std::swap(s.Uinv(r, i), s.Uinv(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
    if (want.V)
      for (int r = 0; r < n; ++r) std::swap(s.V(r, i), s.V(r, j));
    if (want.Vinv)
      for (int c = 0; c < n; ++c) std::swap(s.Vinv(i, c), s.Vinv(j, c));
  }
  void negate_row(int i) {
    for (int c = 0; c < n; ++c) A(i, c) = -A(i, c);
    if (want.U)
      for (int c = 0; c < m; ++c) s.U(i, c) = -s.U(i, c);
    if (want.Uinv)
      for (int r = 0; r < m; ++r) s.Uinv(r, i) = -s.Uinv(r, i);
  }
};

}  // namespace

Snf smith(const ZMatrix& A0, SnfWant want) {
  Snf s;
  const int m = A0.rows(), n = A0.cols();
  if (want.U) s.U = ZMatrix::identity(m);
  if (want.Uinv) s.Uinv = ZMatrix::identity(m);
  if (want.V) s.V = ZMatrix::identity(n);
  if (want.Vinv) s.Vinv = ZMatrix::identity(n);
  SnfState st{A0, s, want, m, n};
  ZMatrix& A = st.A;
  int t = 0;
  while (t < std::min(m, n)) {
    // pivot: smallest |entry| in the trailing block, first in (row, col) order on ties
    int pr = -1, pc = -1;
    int64_t best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        int64_t a = std::llabs(A(i, j));
        if (a && (pr < 0 || a < best)) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    st.swap_rows(t, pr);
    st.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i)
        if (A(i, t)) {
          st.row_add(i, t, -(A(i, t) / A(t, t)));
          if (A(i, t)) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (A(t, j)) {
          st.col_add(j, t, -(A(t, j) / A(t, t)));
          if (A(t, j)) clean = false;
        }
      if (!clean) {
        int bi = -1, bj = -1;
        int64_t b = std::llabs(A(t, t));
        for (int i = t + 1; i < m; ++i)
          if (A(i, t) && std::llabs(A(i, t)) < b) {
            b = std::llabs(A(i, t));
            bi = i;
            bj = t;
          }
        for (int j = t + 1; j < n; ++j)
          if (A(t, j) && std::llabs(A(t, j)) < b) {
            b = std::llabs(A(t, j));
            bi = t;
            bj = j;
          }
        if (bi >= 0) {
          st.swap_rows(t, bi);
          st.swap_cols(t, bj);
        }
        continue;
      }
      int di = -1;
      for (int i = t + 1; i < m && di < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t)) {
            di = i;
            break;
          }
      if (di < 0) break;
      st.row_add(t, di, 1);
    }
    if (A(t, t) < 0) st.negate_row(t);
    s.diag.push_back(A(t, t));
    ++t;
  }
  s.rank = t;
  return s;
}

Subquotient::Subquotient(ZMatrix K, ZMatrix Cnum, ZVec Cdiv, const ZMatrix& R)
    : K_(std::move(K)), Cnum_(std::move(Cnum)), Cdiv_(std::move(Cdiv)) {
  const int m = K_.cols();
  ZMatrix Y(m, R.cols());
  for (int j = 0; j < R.cols(); ++j) {
    auto y = lattice_coords(R.column(j));
    if (!y) fail(Errc::SubspaceMismatch, "relation not contained in the lattice");
    for (int i = 0; i < m; ++i) Y(i, j) = (*y)[i];
  }
  Snf s = smith(Y, SnfWant{true, true, false, false});
  P_ = s.U;
  std::vector<int> keepcols;
  for (int i = 0; i < m; ++i) {
    int64_t d = i < s.rank ? s.diag[i] : 0;
    if (d == 1) continue;
    keep_.push_back(i);
    factors_.push_back(d);
  }
  gens_ = ZMatrix(K_.rows(), static_cast<int>(keep_.size()));
  for (size_t q = 0; q < keep_.size(); ++q) {
    ZVec pc = s.Uinv.column(keep_[q]);
    ZVec g = K_.apply(pc);
    for (int i = 0; i < K_.rows(); ++i) gens_(i, static_cast<int>(q)) = g[i];
  }
}

Subquotient Subquotient::of_generators(const ZMatrix& Lgens, const ZMatrix& R) {
  Snf s = smith(Lgens, SnfWant{true, true, false, false});
  const int n = Lgens.rows(), r = s.rank;
  ZMatrix K(n, r), C(r, n);
  ZVec div(r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < n; ++i) K(i, j) = mul_ck(s.Uinv(i, j), s.diag[j]);
    for (int i = 0; i < n; ++i) C(j, i) = s.U(j, i);
    div[j] = s.diag[j];
  }
  return Subquotient(std::move(K), std::move(C), std::move(div), R);
}

std::optional<ZVec> Subquotient::lattice_coords(const ZVec& z) const {
  if (static_cast<int>(z.size()) != K_.rows()) fail(Errc::DimensionMismatch, "vector length does not match the ambient rank");
  ZVec y = Cnum_.apply(z);
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] % Cdiv_[i]) return std::nullopt;
    y[i] /= Cdiv_[i];
  }
  if (K_.apply(y) != z) return std::nullopt;
  return y;
}

ZVec Subquotient::coords(const ZVec& z) const {
  auto y = lattice_coords(z);
  if (!y) fail(Errc::SubspaceMismatch, "vector does not lie in the lattice");
  ZVec w = P_.apply(*y);
  ZVec out;
  for (size_t q = 0; q < keep_.size(); ++q) {
    int64_t v = w[keep_[q]], d = factors_[q];
    if (d > 0) v = ((v % d) + d) % d;
    out.push_back(v);
  }
  return out;
}

std::string factors_string(const std::vector<int64_t>& f) {
  if (f.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    out += f[i] == 0 ? "Z" : "Z/" + std::to_string(f[i]);
  }
  return out;
}

// ---- GF(2) ----

BitVec BitVec::from_bytes(const std::vector<uint8_t>& b) {
  BitVec v(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] & 1) v.set(i);
  return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (n_ != o.n_) fail(Errc::DimensionMismatch, "bit vector lengths differ");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

BitVec BitVec::operator^(const BitVec& o) const {
  BitVec r = *this;
  r ^= o;
  return r;
}

BitVec BitVec::operator&(const BitVec& o) const {
  if (n_ != o.n_) fail(Errc::DimensionMismatch, "bit vector lengths differ");
  BitVec r = *this;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
  return r;
}

bool BitVec::any() const {
  for (uint64_t x : w_)
    if (x) return true;
  return false;
}

size_t BitVec::popcount() const {
  size_t c = 0;
  for (uint64_t x : w_) c += static_cast<size_t>(__builtin_popcountll(x));
  return c;
}

int BitVec::dot(const BitVec& o) const {
  if (n_ != o.n_) fail(Errc::DimensionMismatch, "bit vector lengths differ");
  uint64_t acc = 0;
  for (size_t i = 0; i < w_.size(); ++i) acc ^= (w_[i] & o.w_[i]);
  return __builtin_parityll(acc);
}

long BitVec::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<long>(i * 64 + __builtin_ctzll(w_[i]));
  return -1;
}

std::vector<size_t> BitVec::ones() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t x = w_[i];
    while (x) {
      out.push_back(i * 64 + __builtin_ctzll(x));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<uint8_t> BitVec::to_bytes() const {
  std::vector<uint8_t> b(n_);
  for (size_t i = 0; i < n_; ++i) b[i] = get(i);
  return b;
}

namespace {
BitVec grown(const BitVec& v, size_t n) {
  BitVec r(n);
  for (size_t i : v.ones()) r.set(i);
  return r;
}
}  // namespace

BitVec Gf2Echelon::reduce(BitVec v, BitVec* combo) const {
  if (v.size() != dim_) fail(Errc::DimensionMismatch, "echelon dimension");
  if (combo) *combo = BitVec(count_);
  for (size_t r = 0; r < rows_.size(); ++r)
    if (v.get(piv_[r])) {
      v ^= rows_[r];
      if (combo) *combo ^= grown(combos_[r], count_);
    }
  return v;
}

bool Gf2Echelon::insert(const BitVec& v) {
  BitVec combo;
  BitVec red = reduce(v, &combo);
  ++count_;
  if (!red.any()) return false;
  combo = grown(combo, count_);
  combo.set(count_ - 1);
  piv_.push_back(static_cast<size_t>(red.first()));
  rows_.push_back(std::move(red));
  combos_.push_back(std::move(combo));
  return true;
}

bool Gf2Echelon::in_span(const BitVec& v) const { return !reduce(v).any(); }

std::optional<BitVec> Gf2Echelon::express(const BitVec& v) const {
  BitVec combo;
  BitVec red = reduce(v, &combo);
  if (red.any()) return std::nullopt;
  return combo;
}

std::vector<BitVec> Gf2Echelon::basis() const { return rows_; }

std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& cols, size_t nrows) {
  Gf2Echelon e(nrows);
  std::vector<BitVec> ker;
  for (size_t j = 0; j < cols.size(); ++j) {
    BitVec combo;
    BitVec red = e.reduce(cols[j], &combo);
    if (!red.any()) {
      BitVec k(cols.size());
      for (size_t i : combo.ones()) k.set(i);
      k.set(j);
      ker.push_back(std::move(k));
    }
    e.insert(cols[j]);
  }
  return ker;
}

size_t gf2_rank(const std::vector<BitVec>& vecs, size_t dim) {
  Gf2Echelon e(dim);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

std::vector<BitVec> gf2_span_basis(const std::vector<BitVec>& vecs, size_t dim) {
  Gf2Echelon e(dim);
  for (const auto& v : vecs) e.insert(v);
  // full reduction, ordered by pivot
  std::vector<BitVec> rows = e.basis();
  std::sort(rows.begin(), rows.end(), [](const BitVec& a, const BitVec& b) { return a.first() < b.first(); });
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j)
      if (i != j && rows[j].get(static_cast<size_t>(rows[i].first()))) rows[j] ^= rows[i];
  return rows;
}

}  // namespace bf
