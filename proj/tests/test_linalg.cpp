#include <doctest.h>

#include <functional>

#include "bf/linalg.hpp"
#include "support/gen.hpp"

using namespace bf;

namespace {

ZMatrix rand_matrix(bft::Rng& rng, int r, int c) {
  ZMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = bft::rand_int(rng, -4, 4);
  return m;
}

bool equal(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("Smith normal form of a known matrix") {
    ZMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    Snf s = smith(a);
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);
  }

  TEST_CASE("Smith normal form: U A V diagonal, divisibility, inverses") {
    bft::Rng rng(11);
    for (int k = 0; k < 60; ++k) {
      const int r = static_cast<int>(bft::rand_int(rng, 1, 6)), c = static_cast<int>(bft::rand_int(rng, 1, 6));
      ZMatrix a = rand_matrix(rng, r, c);
      Snf s = smith(a);
      ZMatrix d = s.U * a * s.V;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) CHECK(d(i, j) == (i == j && i < s.rank ? s.diag[i] : 0));
      for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
      CHECK(equal(s.U * s.Uinv, ZMatrix::identity(r)));
      CHECK(equal(s.V * s.Vinv, ZMatrix::identity(c)));
    }
  }

  TEST_CASE("subquotient of Z^2 by 2Z + 0") {
    ZMatrix gens = ZMatrix::identity(2);
    ZMatrix rel(2, 1);
    rel(0, 0) = 2;
    Subquotient q = Subquotient::of_generators(gens, rel);
    CHECK(factors_string(q.factors()) == "Z/2 + Z");
    CHECK(q.coords({3, 0}) == q.coords({1, 0}));
    CHECK_FALSE(q.coords({2, 0}) == q.coords({1, 0}));
  }

  TEST_CASE("GF(2) kernel and rank") {
    bft::Rng rng(5);
    for (int k = 0; k < 40; ++k) {
      const size_t rows = static_cast<size_t>(bft::rand_int(rng, 1, 70)), ncols = static_cast<size_t>(bft::rand_int(rng, 1, 20));
      std::vector<BitVec> cols;
      for (size_t j = 0; j < ncols; ++j) {
        BitVec v(rows);
        for (size_t i = 0; i < rows; ++i)
          if (bft::rand_int(rng, 0, 2) == 0) v.set(i);
        cols.push_back(v);
      }
      auto ker = gf2_kernel(cols, rows);
      CHECK(ker.size() + gf2_rank(cols, rows) == ncols);
      for (const auto& z : ker) {
        BitVec s(rows);
        for (size_t j : z.ones()) s ^= cols[j];
        CHECK_FALSE(s.any());
      }
    }
  }

  TEST_CASE("echelon expresses vectors in the span") {
    Gf2Echelon e(3);
    BitVec a = BitVec::from_bytes({1, 1, 0}), b = BitVec::from_bytes({0, 1, 1});
    CHECK(e.insert(a));
    CHECK(e.insert(b));
    CHECK_FALSE(e.insert(a ^ b));
    auto combo = e.express(BitVec::from_bytes({1, 0, 1}));
    REQUIRE(combo);
    CHECK(combo->get(0));
    CHECK(combo->get(1));
    CHECK_FALSE(e.in_span(BitVec::from_bytes({1, 0, 0})));
  }
}
