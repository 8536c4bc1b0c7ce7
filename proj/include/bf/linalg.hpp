#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bf/error.hpp"

namespace bf {

using ZVec = std::vector<int64_t>;

class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static ZMatrix identity(int n);
  static ZMatrix from_columns(int rows, const std::vector<ZVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ZMatrix operator*(const ZMatrix& o) const;
  ZVec apply(const ZVec& v) const;
  ZVec column(int j) const;
  ZMatrix columns(int from, int to) const;  // [from, to)
  ZMatrix row_block(int from, int to) const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<int64_t> a_;
};

// U A V = diag(d_0, ..., d_{rank-1}, 0, ...), d_i > 0 and d_i | d_{i+1}
struct Snf {
  ZMatrix U, Uinv, V, Vinv;
  std::vector<int64_t> diag;
  int rank = 0;
};

struct SnfWant {
  bool U = true, Uinv = true, V = true, Vinv = true;
};

Snf smith(const ZMatrix& A, SnfWant want = {});

// L / R where L = span of basis K (n x m) and R is a set of generators inside L.
// Invariant factors come torsion first (ascending), then 0 for free summands.
class Subquotient {
 public:
  Subquotient() = default;
  // K basis; coordinates of z in L are (Cnum z)_i / Cdiv_i
  Subquotient(ZMatrix K, ZMatrix Cnum, ZVec Cdiv, const ZMatrix& R);
  static Subquotient of_generators(const ZMatrix& Lgens, const ZMatrix& R);

  const std::vector<int64_t>& factors() const { return factors_; }
  const ZMatrix& generators() const { return gens_; }  // n x ngens
  int ngens() const { return static_cast<int>(factors_.size()); }
  bool is_zero() const { return factors_.empty(); }
  int ambient() const { return K_.rows(); }
  std::optional<ZVec> lattice_coords(const ZVec& z) const;  // nullopt if z not in L
  // coordinates of z in L/R, reduced mod the invariant factors; throws if z not in L
  ZVec coords(const ZVec& z) const;

 private:
  ZMatrix K_, Cnum_;
  ZVec Cdiv_;
  ZMatrix P_;           // m x m
  std::vector<int> keep_;  // rows of P retained (nontrivial factors)
  std::vector<int64_t> factors_;
  ZMatrix gens_;
};

std::string factors_string(const std::vector<int64_t>& f);  // "Z/2 + Z/2", "0", "Z"

// ---- GF(2) ----

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static BitVec from_bytes(const std::vector<uint8_t>& b);
  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= (uint64_t{1} << (i & 63));
    else
      w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void flip(size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }
  BitVec& operator^=(const BitVec& o);
  BitVec operator^(const BitVec& o) const;
  BitVec operator&(const BitVec& o) const;
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool any() const;
  size_t popcount() const;
  int dot(const BitVec& o) const;  // parity of the intersection
  long first() const;              // lowest set bit, -1 if none
  std::vector<size_t> ones() const;
  std::vector<uint8_t> to_bytes() const;
  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// incremental row echelon form over GF(2), tracking which inserted vectors combine to each row
class Gf2Echelon {
 public:
  explicit Gf2Echelon(size_t dim) : dim_(dim) {}
  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  size_t inserted() const { return count_; }
  // returns true if v was independent; always counts as an inserted vector
  bool insert(const BitVec& v);
  bool in_span(const BitVec& v) const;
  // combination of inserted vectors equal to v, or nullopt
  std::optional<BitVec> express(const BitVec& v) const;
  // reduce v; the returned combination expresses (v - reduced) in inserted vectors
  BitVec reduce(BitVec v, BitVec* combo = nullptr) const;
  std::vector<BitVec> basis() const;  // reduced rows

 private:
  size_t dim_;
  size_t count_ = 0;
  std::vector<BitVec> rows_, combos_;
  std::vector<size_t> piv_;
};

// kernel of the GF(2) matrix given by its columns (each of length nrows), as vectors over ncols
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& cols, size_t nrows);
size_t gf2_rank(const std::vector<BitVec>& vecs, size_t dim);
// reduced row echelon basis of the span
std::vector<BitVec> gf2_span_basis(const std::vector<BitVec>& vecs, size_t dim);

}  // namespace bf
