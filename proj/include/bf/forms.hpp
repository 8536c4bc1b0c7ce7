#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bf/group.hpp"
#include "bf/ring.hpp"

namespace bf {

struct DoublePoint {
  Elem g;
  int sign = 1;
};

// an immersed sphere reduced to its ordered double points
struct DoublePointSphere {
  GroupPtr group;
  Character w1;
  std::vector<DoublePoint> points;
  int64_t euler = 0;
  std::string label;
};

struct MuPair {
  RingElem mu, mubar;
};

MuPair mu_from_sphere(const DoublePointSphere& s);
H1Class mubar_J(const DoublePointSphere& s);
H1Class mubar_J(const RingElem& rep);
// lambda(S, S) = mu + conj(mu) + e
RingElem wall_self_intersection(const DoublePointSphere& s);

using ModuleVector = std::vector<RingElem>;

ModuleVector zero_vector(const GroupPtr& g, int n);
ModuleVector basis_vector(const GroupPtr& g, int n, int i, const RingElem& coeff);
ModuleVector add(const ModuleVector& a, const ModuleVector& b);
ModuleVector scale(const RingElem& r, const ModuleVector& a);  // left multiplication

class LambdaMuForm {
 public:
  LambdaMuForm() = default;
  // validates: Hermitian, mubar in I, Wall identity on the diagonal, sphere data agreement
  LambdaMuForm(GroupPtr g, Character w1, std::vector<std::vector<RingElem>> lambda, std::vector<RingElem> mubar,
               std::vector<std::optional<DoublePointSphere>> spheres = {});

  const GroupPtr& group() const { return g_; }
  const Character& w1() const { return w1_; }
  int rank() const { return static_cast<int>(mubar_.size()); }
  const RingElem& lambda(int i, int j) const { return lambda_[i][j]; }
  const RingElem& mubar(int i) const { return mubar_[i]; }
  const std::optional<DoublePointSphere>& sphere(int i) const { return spheres_[i]; }
  const std::vector<std::vector<RingElem>>& lambda_matrix() const { return lambda_; }
  const std::vector<RingElem>& mubar_list() const { return mubar_; }

  // orthogonal sum with an embedded sphere of self-intersection 1
  LambdaMuForm stabilized() const;

 private:
  GroupPtr g_;
  Character w1_;
  std::vector<std::vector<RingElem>> lambda_;
  std::vector<RingElem> mubar_;
  std::vector<std::optional<DoublePointSphere>> spheres_;
};

enum class LambdaVariant { Lambda, LambdaBar, LambdaBarJ };

// lambda(a x, b y) = a lambda(x, y) conj(b)
RingElem lambda_value(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y);
RingElem lambda_bar(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y);
H1Class lambda_bar_J(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y);
std::variant<RingElem, H1Class> lambda_eval(const LambdaMuForm& f, const ModuleVector& x, const ModuleVector& y,
                                            LambdaVariant v);

enum class ExtendMode { Integer, RingModIJ };

// representative in I of mubar(x) for arbitrary ring coefficients
RingElem mubar_rep(const LambdaMuForm& f, const ModuleVector& x);
H1Class mubar_J(const LambdaMuForm& f, const ModuleVector& x);
std::variant<RingElem, H1Class> mubar_extend(const LambdaMuForm& f, const ModuleVector& x, ExtendMode mode);

bool s_characteristic_check(const LambdaMuForm& f, const ModuleVector& c);

struct KmCertificate {
  bool mubar_zero = false;
  std::vector<int64_t> disc_interior_counts;
  bool r_characteristic = false;
  bool has_algebraic_dual = false;
};

int km_invariant(const KmCertificate& cert);

}  // namespace bf
