#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bf/error.hpp"

namespace bf {

constexpr int kMaxFactors = 6;

// coordinates per factor: residue for finite factors, exponent for Z
struct Elem {
  std::array<int64_t, kMaxFactors> c{};
  auto operator<=>(const Elem&) const = default;
};

struct GroupSpec {
  enum class Kind { Trivial, Cyclic, Table, Integers, Product };
  Kind kind = Kind::Trivial;
  int64_t n = 1;
  std::vector<int> table;  // row-major, n*n
  std::vector<GroupSpec> factors;
  std::string gen;  // optional one-letter generator symbol

  static GroupSpec trivial();
  static GroupSpec cyclic(int64_t n, std::string gen = "");
  static GroupSpec integers(std::string gen = "");
  static GroupSpec from_table(std::vector<int> table);
  static GroupSpec product(std::vector<GroupSpec> factors);
};

struct Factor {
  enum class Kind { Cyclic, Table, Integers };
  Kind kind = Kind::Cyclic;
  int64_t n = 0;  // 0 for Integers
  std::vector<int> table, inverse;
  std::string gen;
  // mod-2 abelianization of the factor
  int ab_dim = 0;
  std::vector<std::vector<uint8_t>> ab_proj;  // table factors only
  std::vector<int> ab_basis;                  // table factors only

  bool operator==(const Factor& o) const {
    return kind == o.kind && n == o.n && table == o.table && gen == o.gen;
  }
};

class Group {
 public:
  enum class Kind { Trivial, Cyclic, Table, Integers, Product };

  explicit Group(std::vector<Factor> factors);

  Kind kind() const;
  int nfactors() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const { return factors_[i]; }
  bool finite() const { return finite_; }
  int64_t order() const;  // finite groups only

  Elem identity() const { return Elem{}; }
  bool is_identity(const Elem& a) const { return a == Elem{}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, int64_t k) const;

  // flat indexing of finite groups, first factor varies fastest
  int64_t index(const Elem& a) const;
  Elem element(int64_t i) const;
  std::vector<Elem> elements() const;
  int mul_idx(int a, int b) const { return mt_[static_cast<size_t>(a) * order_ + b]; }
  int inv_idx(int a) const { return it_[a]; }

  // pi^ab (x) Z/2
  int ab_dim() const { return ab_dim_; }
  std::vector<uint8_t> project(const Elem& a) const;
  std::string h1_name(int coord) const;

  Elem factor_generator(int f) const;  // cyclic / integer factors
  Elem embed(int f, int64_t c) const;
  std::string format(const Elem& a) const;
  Elem parse_word(const std::string& w) const;
  std::string describe() const;
  bool same_as(const Group& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Factor> factors_;
  bool finite_ = true;
  int64_t order_ = 1;
  int ab_dim_ = 0;
  std::vector<int> mt_, it_;
};

using GroupPtr = std::shared_ptr<const Group>;

int64_t default_order_cap();  // BF_MAX_GROUP_ORDER or 16
GroupPtr build_group(const GroupSpec& spec, int64_t cap = 0);

class Character {
 public:
  Character() = default;
  Character(GroupPtr g, std::vector<uint8_t> coeffs);
  const GroupPtr& group() const { return g_; }
  int operator()(const Elem& a) const;
  int at_index(int i) const { return by_index_[i]; }
  int sign(const Elem& a) const { return (*this)(a) ? -1 : 1; }
  bool is_trivial() const;
  const std::vector<uint8_t>& coeffs() const { return a_; }
  std::string describe() const;  // e.g. "x1+x2"

 private:
  GroupPtr g_;
  std::vector<uint8_t> a_;         // functional on the abelianization
  std::vector<uint8_t> by_index_;  // finite groups
};

Character build_character(const GroupPtr& g, const std::vector<std::pair<Elem, int>>& values);
Character trivial_character(const GroupPtr& g);

struct AbelianizationMod2 {
  GroupPtr group;
  int dimension = 0;
  std::vector<uint8_t> project(const Elem& a) const { return group->project(a); }
};

AbelianizationMod2 abelianization_mod2(const GroupPtr& g);

}  // namespace bf
