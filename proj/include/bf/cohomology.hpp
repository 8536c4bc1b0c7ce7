#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bf/group.hpp"
#include "bf/homology.hpp"
#include "bf/linalg.hpp"

namespace bf {

// normalized mod-2 cochain on the bar model; entry (g1,...,gk) at g1 + m g2 + ... + m^{k-1} gk
struct Cochain {
  int degree = 0;
  BitVec v;
};

class BarModel {
 public:
  explicit BarModel(GroupPtr g);  // finite groups only (ModelMismatch otherwise)

  const GroupPtr& group() const { return g_; }
  int order() const { return m_; }
  size_t cells(int k) const;  // m^k
  Cochain zero(int k) const;
  Cochain one() const { return unit_; }
  Cochain from_character(const Character& w) const;
  Cochain basis_class(int coord) const;  // x_{coord+1} on the mod-2 abelianization

  Cochain coboundary(const Cochain& f) const;
  bool is_cocycle(const Cochain& f) const;
  bool is_normalized(const Cochain& f) const;
  bool is_coboundary(const Cochain& f) const;
  bool same_class(const Cochain& a, const Cochain& b) const;

  Cochain add(const Cochain& a, const Cochain& b) const;
  Cochain cup(const Cochain& a, const Cochain& b) const;
  Cochain sq1(const Cochain& a) const;
  Cochain sq2(const Cochain& a) const;  // degrees 0, 1, 2 only
  std::vector<Cochain> cocycle_basis(int k) const;

  // Lambda-linear chain map R -> bar, reduced mod 2; phi[k][x] is the image of basis element x of R_k
  using Comparison = std::vector<std::vector<BitVec>>;
  Comparison comparison(const Resolution& R, int upto) const;
  BitVec map_chain(const Comparison& phi, int k, const ZVec& z) const;
  int evaluate(const Cochain& f, const BitVec& chain) const { return f.v.dot(chain); }

 private:
  bool nondegenerate(size_t idx, int k) const;
  const Gf2Echelon& coboundaries(int k) const;  // span of delta(C^{k-1}), cached
  GroupPtr g_;
  int m_ = 1;
  Cochain unit_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const Gf2Echelon>> cob_;
};

struct Xi1Type {
  GroupPtr group;
  Character w1;
  bool w2_infinite = false;
  bool w2_zero = true;
  Cochain w2;  // finite groups; degree 2
  std::string w2_text = "0";
};

Xi1Type make_xi(const GroupPtr& g, const Character& w1);  // w2 = 0
Xi1Type make_xi_infinite(const GroupPtr& g, const Character& w1);
// sum of products x_a x_b of abelianization classes (0-based coordinates)
Xi1Type make_xi_cup(const GroupPtr& g, const Character& w1, const std::vector<std::pair<int, int>>& monomials);
// normalized 2-cocycle given by the pairs (g, h) on which it is 1
Xi1Type make_xi_cocycle(const GroupPtr& g, const Character& w1, const std::vector<std::pair<Elem, Elem>>& support);
std::string describe(const Xi1Type& xi);

enum class Line { Q0, Q1 };
const char* line_name(Line l);

struct D2Matrix {
  int r = 0;
  Line line = Line::Q1;
  HomologyPresentation source;  // H_r(pi; Z^{w1}) on q0, H_r(pi; Z/2) on q1
  HomologyPresentation target;  // H_{r-2}(pi; Z/2)
  std::vector<BitVec> columns;  // columns[i] = image of source generator i in target coordinates
  int rows() const { return target.ngens(); }
  int cols() const { return static_cast<int>(columns.size()); }
  int entry(int i, int j) const { return columns[j].get(i); }
  int rank() const;
};

// alpha -> Sq^2 alpha + Sq^1 alpha w1 + alpha w2
Cochain theta(const BarModel& B, const Xi1Type& xi, const Cochain& alpha);
using CochainOp = std::function<Cochain(const BarModel&, const Cochain&)>;

D2Matrix d2_matrix(const Xi1Type& xi, int r, Line line);
// same pairing with an arbitrary operator in place of theta
D2Matrix d2_matrix_with(const Xi1Type& xi, int r, Line line, const CochainOp& op);

}  // namespace bf
