#include "bf/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace bf {

GroupSpec GroupSpec::trivial() { return GroupSpec{}; }

GroupSpec GroupSpec::cyclic(int64_t n, std::string gen) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  s.gen = std::move(gen);
  return s;
}

GroupSpec GroupSpec::integers(std::string gen) {
  GroupSpec s;
  s.kind = Kind::Integers;
  s.n = 0;
  s.gen = std::move(gen);
  return s;
}

GroupSpec GroupSpec::from_table(std::vector<int> table) {
  GroupSpec s;
  s.kind = Kind::Table;
  s.table = std::move(table);
  int64_t n = 0;
  while (n * n < static_cast<int64_t>(s.table.size())) ++n;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

namespace {

const char* kDefaultGens[] = {"t", "s", "u", "v", "y", "z"};

// subgroup generated by squares and commutators, then a GF(2) basis of the quotient
void table_abelianization(Factor& f) {
  const int n = static_cast<int>(f.n);
  auto mul = [&](int a, int b) { return f.table[a * n + b]; };
  std::vector<uint8_t> inN(n, 0);
  std::vector<int> members{0};
  inN[0] = 1;
  auto add = [&](int x) {
    if (inN[x]) return;
    // close under multiplication by existing members
    std::vector<int> queue{x};
    inN[x] = 1;
    members.push_back(x);
    while (!queue.empty()) {
      int y = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < members.size(); ++i) {
        for (int z : {mul(members[i], y), mul(y, members[i])}) {
          if (!inN[z]) {
            inN[z] = 1;
            members.push_back(z);
            queue.push_back(z);
          }
        }
      }
    }
  };
  for (int g = 0; g < n; ++g) {
    add(mul(g, g));
    for (int h = 0; h < n; ++h) add(mul(mul(g, h), mul(f.inverse[g], f.inverse[h])));
  }
  // coset representative = smallest element of gN
  std::vector<int> coset(n);
  for (int g = 0; g < n; ++g) {
    int best = n;
    for (int m : members) best = std::min(best, mul(g, m));
    coset[g] = best;
  }
  std::map<int, std::vector<uint8_t>> coords;  // coset -> coordinates (dimension grows)
  coords[coset[0]] = {};
  f.ab_basis.clear();
  for (int g = 0; g < n; ++g) {
    if (coords.count(coset[g])) continue;
    f.ab_basis.push_back(g);
    std::map<int, std::vector<uint8_t>> next;
    for (auto& [c, v] : coords) {
      auto v0 = v;
      v0.push_back(0);
      next[c] = v0;
      auto v1 = v;
      v1.push_back(1);
      next[coset[mul(c, g)]] = v1;
    }
    coords.swap(next);
  }
  f.ab_dim = static_cast<int>(f.ab_basis.size());
  f.ab_proj.assign(n, {});
  for (int g = 0; g < n; ++g) f.ab_proj[g] = coords[coset[g]];
}

void validate_table(Factor& f) {
  const int64_t n = f.n;
  if (static_cast<int64_t>(f.table.size()) != n * n)
    fail(Errc::NotAGroup, "table size " + std::to_string(f.table.size()) + " is not a square");
  for (int64_t i = 0; i < n * n; ++i)
    if (f.table[i] < 0 || f.table[i] >= n)
      fail(Errc::NotAGroup, "table entry " + std::to_string(f.table[i]) + " out of range");
  auto mul = [&](int64_t a, int64_t b) { return f.table[a * n + b]; };
  for (int64_t g = 0; g < n; ++g)
    if (mul(0, g) != g || mul(g, 0) != g)
      fail(Errc::NotAGroup, "element 0 is not a two-sided identity (fails at element " +
                                std::to_string(g) + ")");
  f.inverse.assign(n, -1);
  for (int64_t g = 0; g < n; ++g) {
    for (int64_t h = 0; h < n; ++h)
      if (mul(g, h) == 0 && mul(h, g) == 0) {
        f.inverse[g] = static_cast<int>(h);
        break;
      }
    if (f.inverse[g] < 0)
      fail(Errc::NotAGroup, "element " + std::to_string(g) + " has no two-sided inverse");
  }
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b)
      for (int64_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(Errc::NotAGroup, "not associative on triple (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");
}

void flatten(const GroupSpec& s, std::vector<Factor>& out) {
  switch (s.kind) {
    case GroupSpec::Kind::Trivial:
      return;
    case GroupSpec::Kind::Cyclic: {
      if (s.n < 1) fail(Errc::InvalidArgument, "cyclic(n) needs n >= 1");
      if (s.n == 1) return;
      Factor f;
      f.kind = Factor::Kind::Cyclic;
      f.n = s.n;
      f.gen = s.gen;
      f.ab_dim = (s.n % 2 == 0) ? 1 : 0;
      out.push_back(std::move(f));
      return;
    }
    case GroupSpec::Kind::Integers: {
      Factor f;
      f.kind = Factor::Kind::Integers;
      f.gen = s.gen;
      f.ab_dim = 1;
      out.push_back(std::move(f));
      return;
    }
    case GroupSpec::Kind::Table: {
      Factor f;
      f.kind = Factor::Kind::Table;
      f.n = s.n;
      f.table = s.table;
      if (f.n == 0) fail(Errc::NotAGroup, "empty multiplication table");
      out.push_back(std::move(f));
      return;
    }
    case GroupSpec::Kind::Product:
      for (const auto& sub : s.factors) flatten(sub, out);
      return;
  }
}

}  // namespace

int64_t default_order_cap() {
  if (const char* env = std::getenv("BF_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 16;
}

GroupPtr build_group(const GroupSpec& spec, int64_t cap) {
  if (cap <= 0) cap = default_order_cap();
  std::vector<Factor> fs;
  flatten(spec, fs);
  if (static_cast<int>(fs.size()) > kMaxFactors)
    fail(Errc::UnsupportedSize, "at most " + std::to_string(kMaxFactors) + " factors");
  int64_t order = 1;
  for (auto& f : fs) {
    if (f.kind == Factor::Kind::Integers) continue;
    if (f.n > cap) fail(Errc::UnsupportedSize, "factor order " + std::to_string(f.n) + " exceeds cap " + std::to_string(cap));
    order *= f.n;
    if (order > cap)
      fail(Errc::UnsupportedSize, "finite order exceeds cap " + std::to_string(cap));
  }
  // table factors of order 1 are trivial
  std::vector<Factor> kept;
  for (auto& f : fs) {
    if (f.kind == Factor::Kind::Table) {
      validate_table(f);
      if (f.n == 1) continue;
      table_abelianization(f);
    }
    kept.push_back(std::move(f));
  }
  std::set<std::string> used;
  for (auto& f : kept)
    if (!f.gen.empty()) {
      if (f.gen.size() != 1 || !std::isalpha(static_cast<unsigned char>(f.gen[0])) || f.gen == "e" ||
          f.gen == "x" || !used.insert(f.gen).second)
        fail(Errc::InvalidArgument, "bad generator symbol '" + f.gen + "'");
    }
  size_t next = 0;
  for (auto& f : kept) {
    if (f.kind == Factor::Kind::Table || !f.gen.empty()) continue;
    while (next < std::size(kDefaultGens) && used.count(kDefaultGens[next])) ++next;
    f.gen = kDefaultGens[next++];
    used.insert(f.gen);
  }
  return std::make_shared<const Group>(std::move(kept));
}

Group::Group(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.kind == Factor::Kind::Integers)
      finite_ = false;
    else
      order_ *= f.n;
    ab_dim_ += f.ab_dim;
  }
  if (finite_) {
    mt_.resize(static_cast<size_t>(order_ * order_));
    it_.resize(order_);
    for (int64_t a = 0; a < order_; ++a) {
      Elem ea = element(a);
      it_[a] = static_cast<int>(index(inv(ea)));
      for (int64_t b = 0; b < order_; ++b) mt_[a * order_ + b] = static_cast<int>(index(mul(ea, element(b))));
    }
  }
}

Group::Kind Group::kind() const {
  if (factors_.empty()) return Kind::Trivial;
  if (factors_.size() > 1) return Kind::Product;
  switch (factors_[0].kind) {
    case Factor::Kind::Cyclic: return Kind::Cyclic;
    case Factor::Kind::Table: return Kind::Table;
    case Factor::Kind::Integers: return Kind::Integers;
  }
  return Kind::Product;
}

int64_t Group::order() const {
  if (!finite_) fail(Errc::InvalidArgument, "order of an infinite group");
  return order_;
}

Elem Group::mul(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < nfactors(); ++i) {
    const Factor& f = factors_[i];
    switch (f.kind) {
      case Factor::Kind::Cyclic: r.c[i] = (a.c[i] + b.c[i]) % f.n; break;
      case Factor::Kind::Integers: r.c[i] = add_ck(a.c[i], b.c[i]); break;
      case Factor::Kind::Table: r.c[i] = f.table[a.c[i] * f.n + b.c[i]]; break;
    }
  }
  return r;
}

Elem Group::inv(const Elem& a) const {
  Elem r;
  for (int i = 0; i < nfactors(); ++i) {
    const Factor& f = factors_[i];
    switch (f.kind) {
      case Factor::Kind::Cyclic: r.c[i] = (f.n - a.c[i]) % f.n; break;
      case Factor::Kind::Integers: r.c[i] = -a.c[i]; break;
      case Factor::Kind::Table: r.c[i] = f.inverse[a.c[i]]; break;
    }
  }
  return r;
}

Elem Group::pow(const Elem& a, int64_t k) const {
  Elem base = k < 0 ? inv(a) : a;
  if (k < 0) k = -k;
  Elem r;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int64_t Group::index(const Elem& a) const {
  if (!finite_) fail(Errc::InvalidArgument, "flat index on an infinite group");
  int64_t idx = 0, stride = 1;
  for (int i = 0; i < nfactors(); ++i) {
    idx += a.c[i] * stride;
    stride *= factors_[i].n;
  }
  return idx;
}

Elem Group::element(int64_t i) const {
  if (!finite_) fail(Errc::InvalidArgument, "flat index on an infinite group");
  if (i < 0 || i >= order_) fail(Errc::InvalidArgument, "element index " + std::to_string(i) + " out of range");
  Elem r;
  for (int k = 0; k < nfactors(); ++k) {
    r.c[k] = i % factors_[k].n;
    i /= factors_[k].n;
  }
  return r;
}

std::vector<Elem> Group::elements() const {
  std::vector<Elem> out;
  for (int64_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::vector<uint8_t> Group::project(const Elem& a) const {
  std::vector<uint8_t> v;
  v.reserve(ab_dim_);
  for (int i = 0; i < nfactors(); ++i) {
    const Factor& f = factors_[i];
    switch (f.kind) {
      case Factor::Kind::Cyclic:
        if (f.ab_dim) v.push_back(static_cast<uint8_t>(a.c[i] & 1));
        break;
      case Factor::Kind::Integers: v.push_back(static_cast<uint8_t>(a.c[i] & 1)); break;
      case Factor::Kind::Table:
        for (uint8_t b : f.ab_proj[a.c[i]]) v.push_back(b);
        break;
    }
  }
  return v;
}

std::string Group::h1_name(int coord) const {
  int base = 0;
  for (int i = 0; i < nfactors(); ++i) {
    const Factor& f = factors_[i];
    if (coord < base + f.ab_dim) {
      if (f.kind == Factor::Kind::Table) return format(embed(i, f.ab_basis[coord - base]));
      return f.gen;
    }
    base += f.ab_dim;
  }
  fail(Errc::InvalidArgument, "H1 coordinate out of range");
}

Elem Group::factor_generator(int f) const {
  if (factors_[f].kind == Factor::Kind::Table) fail(Errc::InvalidArgument, "table factors have no single generator");
  return embed(f, 1);
}

Elem Group::embed(int f, int64_t c) const {
  Elem r;
  r.c[f] = c;
  return r;
}

std::string Group::format(const Elem& a) const {
  std::string out;
  for (int i = 0; i < nfactors(); ++i) {
    const Factor& f = factors_[i];
    int64_t c = a.c[i];
    if (c == 0) continue;
    if (f.kind == Factor::Kind::Table) {
      out += "[" + std::to_string(c) + "]";
      continue;
    }
    out += f.gen;
    if (c != 1) out += "^" + std::to_string(c);
  }
  return out.empty() ? "e" : out;
}

Elem Group::parse_word(const std::string& w) const {
  Elem r;
  size_t i = 0;
  auto bad = [&](const std::string& why) {
    fail(Errc::ParseError, "cannot parse group element '" + w + "': " + why);
  };
  bool any = false;
  while (i < w.size()) {
    char ch = w[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    any = true;
    if (ch == 'e' || ch == '1') {
      ++i;
      continue;
    }
    if (ch == '[') {
      size_t j = w.find(']', i);
      if (j == std::string::npos) bad("unterminated '['");
      int64_t k = std::stoll(w.substr(i + 1, j - i - 1));
      int f = -1;
      for (int q = 0; q < nfactors(); ++q)
        if (factors_[q].kind == Factor::Kind::Table) {
          f = q;
          break;
        }
      if (f < 0) bad("no table factor");
      if (k < 0 || k >= factors_[f].n) bad("table element out of range");
      r = mul(r, embed(f, k));
      i = j + 1;
      continue;
    }
    int f = -1;
    for (int q = 0; q < nfactors(); ++q)
      if (factors_[q].kind != Factor::Kind::Table && factors_[q].gen.size() == 1 && factors_[q].gen[0] == ch) f = q;
    if (f < 0) bad(std::string("unknown generator '") + ch + "'");
    ++i;
    int64_t e = 1;
    if (i < w.size() && w[i] == '^') {
      ++i;
      size_t j = i;
      if (j < w.size() && (w[j] == '-' || w[j] == '+')) ++j;
      while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j]))) ++j;
      if (j == i || (j == i + 1 && !std::isdigit(static_cast<unsigned char>(w[i])))) bad("bad exponent");
      e = std::stoll(w.substr(i, j - i));
      i = j;
    }
    r = mul(r, pow(factor_generator(f), e));
  }
  if (!any) bad("empty word");
  return r;
}

std::string Group::describe() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (int i = 0; i < nfactors(); ++i) {
    if (i) out += " x ";
    const Factor& f = factors_[i];
    switch (f.kind) {
      case Factor::Kind::Cyclic: out += "Z/" + std::to_string(f.n); break;
      case Factor::Kind::Integers: out += "Z"; break;
      case Factor::Kind::Table: out += "G" + std::to_string(f.n); break;
    }
  }
  return out;
}

// ---- characters ----

Character::Character(GroupPtr g, std::vector<uint8_t> coeffs) : g_(std::move(g)), a_(std::move(coeffs)) {
  if (static_cast<int>(a_.size()) != g_->ab_dim()) fail(Errc::DimensionMismatch, "character coefficient length");
  if (g_->finite()) {
    by_index_.resize(g_->order());
    for (int64_t i = 0; i < g_->order(); ++i) by_index_[i] = static_cast<uint8_t>((*this)(g_->element(i)));
  }
}

int Character::operator()(const Elem& a) const {
  auto p = g_->project(a);
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s ^= (p[i] & a_[i]);
  return s;
}

bool Character::is_trivial() const {
  return std::all_of(a_.begin(), a_.end(), [](uint8_t b) { return b == 0; });
}

std::string Character::describe() const {
  std::string out;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i]) out += (out.empty() ? "" : "+") + std::string("x") + std::to_string(i + 1);
  return out.empty() ? "0" : out;
}

Character trivial_character(const GroupPtr& g) { return Character(g, std::vector<uint8_t>(g->ab_dim(), 0)); }

Character build_character(const GroupPtr& g, const std::vector<std::pair<Elem, int>>& values) {
  // every homomorphism to Z/2 factors through the mod-2 abelianization;
  // solve <a, project(g_i)> = v_i over GF(2)
  const int d = g->ab_dim();
  std::vector<std::vector<uint8_t>> rows;
  std::vector<std::string> labels;
  for (const auto& [e, v] : values) {
    auto p = g->project(e);
    p.push_back(static_cast<uint8_t>(v & 1));
    rows.push_back(std::move(p));
    labels.push_back(g->format(e));
  }
  std::vector<int> pivcol;
  size_t r = 0;
  for (int c = 0; c < d && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t q = 0; q < rows.size(); ++q)
      if (q != r && rows[q][c])
        for (int k = 0; k <= d; ++k) rows[q][k] ^= rows[r][k];
    pivcol.push_back(c);
    ++r;
  }
  for (size_t q = r; q < rows.size(); ++q)
    if (rows[q][d])
      fail(Errc::NotAHomomorphism, "the prescribed values violate a relation of the group");
  if (static_cast<int>(r) < d)
    fail(Errc::InvalidArgument, "values do not determine a character; give values on a generating set");
  std::vector<uint8_t> a(d, 0);
  for (size_t q = 0; q < r; ++q) a[pivcol[q]] = rows[q][d];
  return Character(g, std::move(a));
}

AbelianizationMod2 abelianization_mod2(const GroupPtr& g) { return AbelianizationMod2{g, g->ab_dim()}; }

}  // namespace bf
