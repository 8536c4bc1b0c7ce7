#include "bf/ring.hpp"

#include <algorithm>
#include <cctype>

namespace bf {

RingElem RingElem::scalar(const GroupPtr& g, int64_t n) {
  RingElem r(g);
  r.add_term(Elem{}, n);
  return r;
}

RingElem RingElem::basis(const GroupPtr& g, const Elem& e, int64_t c) {
  RingElem r(g);
  r.add_term(e, c);
  return r;
}

int64_t RingElem::coeff(const Elem& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? 0 : it->second;
}

void RingElem::add_term(const Elem& e, int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second = add_ck(it->second, c);
    if (it->second == 0) t_.erase(it);
  }
}

void RingElem::check_same(const RingElem& o) const {
  if (g_ == o.g_) return;
  if (!g_ || !o.g_ || !g_->same_as(*o.g_)) fail(Errc::GroupMismatch, "ring elements over different groups");
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r = *this;
  r += o;
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
  RingElem r = *this;
  r -= o;
  return r;
}

RingElem RingElem::operator-() const { return *this * -1; }

RingElem& RingElem::operator+=(const RingElem& o) {
  check_same(o);
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  check_same(o);
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

RingElem RingElem::operator*(const RingElem& o) const {
  check_same(o);
  RingElem r(g_);
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) r.add_term(g_->mul(a, b), mul_ck(x, y));
  return r;
}

RingElem RingElem::operator*(int64_t k) const {
  RingElem r(g_);
  if (k == 0) return r;
  for (const auto& [a, x] : t_) r.t_.emplace(a, mul_ck(x, k));
  return r;
}

RingElem RingElem::left_mul(const Elem& g) const {
  RingElem r(g_);
  for (const auto& [a, x] : t_) r.t_.emplace(g_->mul(g, a), x);
  return r;
}

RingElem RingElem::right_mul(const Elem& g) const {
  RingElem r(g_);
  for (const auto& [a, x] : t_) r.t_.emplace(g_->mul(a, g), x);
  return r;
}

std::string RingElem::str() const {
  if (t_.empty()) return "0";
  // identity first, then by element order
  std::vector<std::pair<Elem, int64_t>> terms(t_.begin(), t_.end());
  std::stable_partition(terms.begin(), terms.end(), [](const auto& p) { return p.first == Elem{}; });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    int64_t mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == Elem{})
      out += std::to_string(mag);
    else {
      if (mag != 1) out += std::to_string(mag);
      out += g_->format(e);
    }
  }
  return out;
}

RingElem RingElem::parse(const GroupPtr& g, const std::string& text) {
  RingElem r(g);
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  std::string cur;
  int sign = 1;
  auto flush = [&]() {
    std::string body;
    for (char ch : cur)
      if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
    if (!body.empty()) terms.emplace_back(sign, body);
    else if (!cur.empty() || !terms.empty())
      fail(Errc::ParseError, "empty term in ring element '" + text + "'");
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if ((ch == '+' || ch == '-')) {
      size_t j = i;
      while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
      if (j > 0 && text[j - 1] == '^') {
        cur += ch;
        continue;
      }
      bool leading = true;
      for (char c : cur)
        if (!std::isspace(static_cast<unsigned char>(c))) leading = false;
      if (leading && terms.empty()) {
        sign = (ch == '-') ? -sign : sign;
        cur.clear();
        continue;
      }
      flush();
      sign = (ch == '-') ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  flush();
  if (terms.empty()) fail(Errc::ParseError, "empty ring element");
  for (auto& [s, body] : terms) {
    size_t k = 0;
    while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
    int64_t c = 1;
    if (k > 0) c = std::stoll(body.substr(0, k));
    std::string word = body.substr(k);
    if (!word.empty() && word[0] == '*') word = word.substr(1);
    Elem e = word.empty() ? Elem{} : g->parse_word(word);
    r.add_term(e, s * c);
  }
  return r;
}

RingElem involute(const RingElem& x, const Character& w1) {
  const Group& g = *x.group();
  if (w1.group() && !w1.group()->same_as(g)) fail(Errc::GroupMismatch, "character over a different group");
  RingElem r(x.group());
  for (const auto& [e, c] : x.terms()) r.add_term(g.inv(e), w1(e) ? -c : c);
  return r;
}

int64_t augment(const RingElem& x) {
  int64_t s = 0;
  for (const auto& [e, c] : x.terms()) s = add_ck(s, c);
  return s;
}

int augment2(const RingElem& x) {
  int s = 0;
  for (const auto& [e, c] : x.terms()) s ^= mod2(c);
  return s;
}

RingElem reduce_augmentation(const RingElem& x) { return x - RingElem::scalar(x.group(), augment(x)); }

bool H1Class::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](uint8_t b) { return b == 0; });
}

H1Class H1Class::operator+(const H1Class& o) const {
  H1Class r = *this;
  r += o;
  return r;
}

H1Class& H1Class::operator+=(const H1Class& o) {
  if (v.size() != o.v.size()) fail(Errc::DimensionMismatch, "H1 classes of different dimension");
  for (size_t i = 0; i < v.size(); ++i) v[i] ^= o.v[i];
  return *this;
}

H1Class h1_zero(const Group& g) { return H1Class{std::vector<uint8_t>(g.ab_dim(), 0)}; }

H1Class h1_of_element(const Group& g, const Elem& e) { return H1Class{g.project(e)}; }

H1Class h1_class(const RingElem& x) {
  if (augment(x) != 0) fail(Errc::NotInAugmentationIdeal, x.str() + " has nonzero augmentation");
  const Group& g = *x.group();
  H1Class r = h1_zero(g);
  // x = sum_{g != e} a_g (g - 1)
  for (const auto& [e, c] : x.terms()) {
    if (!mod2(c) || e == Elem{}) continue;
    auto p = g.project(e);
    for (size_t i = 0; i < p.size(); ++i) r.v[i] ^= p[i];
  }
  return r;
}

bool is_in_IJ(const RingElem& x) { return h1_class(x).is_zero(); }

std::string format_h1(const Group& g, const H1Class& c) {
  std::string out;
  for (size_t i = 0; i < c.v.size(); ++i)
    if (c.v[i]) out += (out.empty() ? "" : "+") + g.h1_name(static_cast<int>(i));
  return out.empty() ? "0" : out;
}

namespace {

// canonical member of {g, g^-1}: smaller key; Z exponents ordered 0, 1, -1, 2, -2, ...
std::array<int64_t, kMaxFactors> canon_key(const Group& g, const Elem& e) {
  std::array<int64_t, kMaxFactors> k{};
  for (int i = 0; i < g.nfactors(); ++i) {
    int64_t c = e.c[i];
    if (g.factor(i).kind == Factor::Kind::Integers)
      k[i] = c > 0 ? 2 * c - 1 : -2 * c;
    else
      k[i] = c;
  }
  return k;
}

}  // namespace

RingElem mubar_normal_form(const RingElem& x, const Character& w1) {
  if (augment(x) != 0) fail(Errc::NotInAugmentationIdeal, x.str() + " is not in I");
  const Group& g = *x.group();
  std::map<Elem, int64_t> b;
  for (const auto& [e, a] : x.terms()) {
    if (e == Elem{}) continue;
    Elem h = g.inv(e);
    if (h == e) {
      b[e] = add_ck(b[e], a);  // 2(g-1) ~ 0 when w1(g) = 1, reduced below
      continue;
    }
    bool canon = canon_key(g, e) < canon_key(g, h);
    if (canon)
      b[e] = add_ck(b[e], a);
    else
      b[h] = add_ck(b[h], w1(e) ? -a : a);
  }
  RingElem r(x.group());
  for (auto& [e, a] : b) {
    int64_t c = a;
    if (g.inv(e) == e && w1(e)) c = ((c % 2) + 2) % 2;
    r.add_term(e, c);
    r.add_term(Elem{}, -c);
  }
  return r;
}

bool mubar_equivalent(const RingElem& a, const RingElem& b, const Character& w1) {
  return mubar_normal_form(a - b, w1).is_zero();
}

}  // namespace bf
