#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bf/group.hpp"
#include "bf/linalg.hpp"
#include "bf/ring.hpp"

namespace bf {

enum class Strategy { Auto, Periodic, Tensor, Bar };
enum class Coeff { Z, ZTwisted, Z2, Zero };

const char* coeff_name(Coeff c);
const char* strategy_name(Strategy s);

constexpr int kMaxDepth = 6;

using SparseCol = std::vector<std::pair<int, RingElem>>;

// free resolution of Z over Z[pi], truncated at `depth`
struct Resolution {
  GroupPtr group;
  int depth = 0;
  std::string strategy;
  std::vector<int> rank;                   // degrees 0..depth
  std::vector<std::vector<SparseCol>> d;   // d[k][j]: boundary of basis element j of P_k
  std::vector<std::vector<std::string>> labels;
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

ResolutionPtr build_resolution(const GroupPtr& g, int depth, Strategy s = Strategy::Auto);
// d_{k-1} d_k = 0 for every k
bool d_squared_zero(const Resolution& R);
// matrix of 1 (x) d_k on M (x)_Lambda P; twisted uses g -> (-1)^{w1(g)}
ZMatrix collapse(const Resolution& R, int k, const Character& w1, bool twisted);

struct Mod2Homology;

struct HomologyPresentation {
  int degree = 0;
  Coeff coeff = Coeff::Z;
  std::vector<int64_t> factors;  // 0 = free summand
  std::vector<ZVec> generators;  // cycles in the model basis
  ResolutionPtr model;
  Character w1;

  int ngens() const { return static_cast<int>(factors.size()); }
  bool is_zero() const { return factors.empty(); }
  // coordinates of a cycle in the generator basis; throws NotACycle
  ZVec coords(const ZVec& cycle) const;
  std::string describe() const { return factors_string(factors); }

  // internals
  ZMatrix boundary;                       // d_degree collapsed
  std::shared_ptr<const Subquotient> sq;  // integral coefficients
  std::shared_ptr<const Mod2Homology> m2; // Z/2 coefficients
};

HomologyPresentation homology(const ResolutionPtr& R, const Character& w1, Coeff coeff, int degree);
HomologyPresentation homology(const GroupPtr& g, const Character& w1, Coeff coeff, int degree,
                              Strategy s = Strategy::Auto);

// H_1(pi;Z/2) generator -> class in the mod-2 abelianization
H1Class h1_of_cycle(const Resolution& R, const ZVec& cycle);
std::vector<H1Class> h1_dictionary(const HomologyPresentation& h1);

}  // namespace bf
