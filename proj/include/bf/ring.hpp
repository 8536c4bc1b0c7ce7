#pragma once

#include <map>
#include <string>
#include <vector>

#include "bf/group.hpp"

namespace bf {

// element of Z[pi]; zero coefficients are never stored
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(GroupPtr g) : g_(std::move(g)) {}
  static RingElem scalar(const GroupPtr& g, int64_t n);
  static RingElem basis(const GroupPtr& g, const Elem& e, int64_t c = 1);
  // "2 - t + 3 t^-1 s", "ts - t - s + 1", "[3] - 1"
  static RingElem parse(const GroupPtr& g, const std::string& text);

  const GroupPtr& group() const { return g_; }
  const std::map<Elem, int64_t>& terms() const { return t_; }
  int64_t coeff(const Elem& e) const;
  bool is_zero() const { return t_.empty(); }
  void add_term(const Elem& e, int64_t c);

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator*(int64_t k) const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  bool operator==(const RingElem& o) const { return t_ == o.t_; }

  RingElem left_mul(const Elem& g) const;   // g * x
  RingElem right_mul(const Elem& g) const;  // x * g
  std::string str() const;

 private:
  void check_same(const RingElem& o) const;
  GroupPtr g_;
  std::map<Elem, int64_t> t_;
};

class Character;

RingElem involute(const RingElem& x, const Character& w1);
int64_t augment(const RingElem& x);
int augment2(const RingElem& x);
RingElem reduce_augmentation(const RingElem& x);  // x - eps(x)

struct H1Class {
  std::vector<uint8_t> v;
  bool is_zero() const;
  H1Class operator+(const H1Class& o) const;
  H1Class& operator+=(const H1Class& o);
  bool operator==(const H1Class& o) const { return v == o.v; }
};

H1Class h1_zero(const Group& g);
H1Class h1_of_element(const Group& g, const Elem& e);
H1Class h1_class(const RingElem& x);
bool is_in_IJ(const RingElem& x);
std::string format_h1(const Group& g, const H1Class& c);

// the quotient I / span{(g-1) - (-1)^{w1(g)} (g^-1 - 1)} in which mubar lives
RingElem mubar_normal_form(const RingElem& x, const Character& w1);
bool mubar_equivalent(const RingElem& a, const RingElem& b, const Character& w1);

}  // namespace bf
