#include "bf/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bf {

namespace fs = std::filesystem;

namespace {

struct Ctx {
  std::string file;
  std::string base_dir;
};

std::string where(const Ctx& c, const YAML::Node& n) {
  YAML::Mark m;
  try {
    m = n.Mark();
  } catch (...) {
  }
  if (m.line < 0) return c.file;
  return c.file + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
}

[[noreturn]] void perr(const Ctx& c, const YAML::Node& n, const std::string& msg) {
  fail(Errc::ParseError, where(c, n) + ": " + msg);
}

// attach the node position to errors raised while interpreting it
template <class F>
auto guard(const Ctx& c, const YAML::Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string& msg = e.message();
    if (msg.rfind(c.file + ":", 0) == 0) throw;
    throw Error(e.code(), where(c, n) + ": " + msg);
  } catch (const YAML::Exception& e) {
    perr(c, n, e.what());
  } catch (const std::invalid_argument&) {
    perr(c, n, "malformed number");
  } catch (const std::out_of_range&) {
    perr(c, n, "number out of range");
  }
}

YAML::Node req(const Ctx& c, const YAML::Node& parent, const std::string& key) {
  if (!parent.IsMap()) perr(c, parent, "expected a mapping with key '" + key + "'");
  YAML::Node n = parent[key];
  if (!n) perr(c, parent, "missing key '" + key + "'");
  return n;
}

std::string scalar(const Ctx& c, const YAML::Node& n) {
  if (!n.IsScalar()) perr(c, n, "expected a scalar");
  return n.Scalar();
}

int64_t integer(const Ctx& c, const YAML::Node& n) {
  std::string s = scalar(c, n);
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) perr(c, n, "expected an integer, got '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    perr(c, n, "expected an integer, got '" + s + "'");
  }
}

bool is_integer(const YAML::Node& n) {
  if (!n.IsScalar()) return false;
  const std::string& s = n.Scalar();
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

json to_json(const YAML::Node& n) {
  switch (n.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined: return nullptr;
    case YAML::NodeType::Scalar:
      if (is_integer(n)) return std::stoll(n.Scalar());
      return n.Scalar();
    case YAML::NodeType::Sequence: {
      json a = json::array();
      for (const auto& x : n) a.push_back(to_json(x));
      return a;
    }
    case YAML::NodeType::Map: {
      json o = json::object();
      for (const auto& kv : n) o[kv.first.as<std::string>()] = to_json(kv.second);
      return o;
    }
  }
  return nullptr;
}

YAML::Node load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return YAML::Load(ss.str());
  } catch (const YAML::ParserException& e) {
    fail(Errc::ParseError, path + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
}

YAML::Node load_string(const std::string& text, const std::string& name) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    fail(Errc::ParseError, name + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
}

Ctx ctx_for(const std::string& path) {
  fs::path p(path);
  return Ctx{path, p.has_parent_path() ? p.parent_path().string() : "."};
}

// ---- groups ----

GroupSpec group_spec(const Ctx& c, const YAML::Node& n) {
  if (n.IsScalar()) return guard(c, n, [&] { return parse_group_shorthand(n.Scalar()); });
  if (!n.IsMap()) perr(c, n, "a group is a shorthand string or a mapping");
  std::string kind = lower(scalar(c, req(c, n, "kind")));
  std::string gen = n["gen"] ? scalar(c, n["gen"]) : "";
  if (kind == "trivial") return GroupSpec::trivial();
  if (kind == "cyclic") {
    int64_t order = integer(c, req(c, n, "n"));
    return guard(c, n, [&] { return GroupSpec::cyclic(order, gen); });
  }
  if (kind == "integers" || kind == "infinite-cyclic" || kind == "z") return GroupSpec::integers(gen);
  if (kind == "table") {
    YAML::Node t = req(c, n, "table");
    if (!t.IsSequence()) perr(c, t, "table must be a list");
    std::vector<int> flat;
    for (const auto& row : t) {
      if (row.IsSequence())
        for (const auto& x : row) flat.push_back(static_cast<int>(integer(c, x)));
      else
        flat.push_back(static_cast<int>(integer(c, row)));
    }
    return GroupSpec::from_table(flat);
  }
  if (kind == "product" || kind == "direct-product") {
    YAML::Node f = req(c, n, "factors");
    if (!f.IsSequence()) perr(c, f, "factors must be a list");
    std::vector<GroupSpec> fs_;
    for (const auto& x : f) fs_.push_back(group_spec(c, x));
    return GroupSpec::product(std::move(fs_));
  }
  perr(c, n, "unknown group kind '" + kind + "'");
}

GroupPtr group_from(const Ctx& c, const YAML::Node& n) {
  GroupSpec s = group_spec(c, n);
  return guard(c, n, [&] { return build_group(s); });
}

Elem element(const Ctx& c, const GroupPtr& g, const YAML::Node& n) {
  return guard(c, n, [&]() -> Elem {
    if (is_integer(n)) {
      int64_t k = integer(c, n);
      if (g->finite()) {
        if (k < 0 || k >= g->order()) perr(c, n, "element index " + std::to_string(k) + " out of range");
        return g->element(k);
      }
      for (int f = 0; f < g->nfactors(); ++f)
        if (g->factor(f).kind == Factor::Kind::Integers) return g->embed(f, k);
      perr(c, n, "integer element on a group without a Z factor");
    }
    return g->parse_word(scalar(c, n));
  });
}

RingElem ring_elem(const Ctx& c, const GroupPtr& g, const YAML::Node& n) {
  return guard(c, n, [&]() -> RingElem {
    if (!n || n.IsNull()) return RingElem(g);
    if (is_integer(n)) return RingElem::scalar(g, integer(c, n));
    if (n.IsScalar()) return RingElem::parse(g, n.Scalar());
    if (n.IsSequence()) {
      RingElem r(g);
      for (const auto& t : n) {
        if (!t.IsSequence() || t.size() != 2) perr(c, t, "ring terms are [element, coefficient] pairs");
        r.add_term(element(c, g, t[0]), integer(c, t[1]));
      }
      return r;
    }
    perr(c, n, "cannot read a group ring element");
  });
}

Character character(const Ctx& c, const GroupPtr& g, const YAML::Node& n) {
  if (!n || n.IsNull()) return trivial_character(g);
  if (n.IsScalar()) return guard(c, n, [&] { return parse_character(g, n.Scalar()); });
  if (n.IsMap()) {
    std::vector<std::pair<Elem, int>> vals;
    for (const auto& kv : n) vals.emplace_back(element(c, g, kv.first), static_cast<int>(integer(c, kv.second)));
    return guard(c, n, [&] { return build_character(g, vals); });
  }
  perr(c, n, "cannot read a character");
}

int h1_coordinate(const Ctx& c, const GroupPtr& g, const YAML::Node& n) {
  std::string s = lower(trim(scalar(c, n)));
  if (s.size() < 2 || s[0] != 'x') perr(c, n, "expected a class name x1, x2, ...");
  int k = 0;
  try {
    k = std::stoi(s.substr(1));
  } catch (const std::logic_error&) {
    perr(c, n, "expected a class name x1, x2, ...");
  }
  if (k < 1 || k > g->ab_dim()) perr(c, n, "class " + s + " out of range (dimension " + std::to_string(g->ab_dim()) + ")");
  return k - 1;
}

Xi1Type xi_from(const Ctx& c, const YAML::Node& root) {
  YAML::Node n = root["xi"] && root["xi"].IsMap() ? root["xi"] : root;
  GroupPtr g = group_from(c, req(c, n, "group"));
  Character w1 = character(c, g, n["w1"]);
  YAML::Node w2 = n["w2"];
  if (!w2 || w2.IsNull()) return make_xi(g, w1);
  if (w2.IsScalar()) {
    std::string s = lower(trim(w2.Scalar()));
    if (s == "0") return make_xi(g, w1);
    if (s == "infinity" || s == "inf" || s == "oo") return make_xi_infinite(g, w1);
    perr(c, w2, "w2 is 0, infinity, {cup: ...} or {cocycle: ...}");
  }
  if (w2.IsMap() && w2["cup"]) {
    std::vector<std::pair<int, int>> mons;
    for (const auto& m : w2["cup"]) {
      if (!m.IsSequence() || m.size() != 2) perr(c, m, "cup monomials are pairs [xi, xj]");
      mons.emplace_back(h1_coordinate(c, g, m[0]), h1_coordinate(c, g, m[1]));
    }
    return guard(c, w2, [&] { return make_xi_cup(g, w1, mons); });
  }
  if (w2.IsMap() && w2["cocycle"]) {
    std::vector<std::pair<Elem, Elem>> sup;
    for (const auto& m : w2["cocycle"]) {
      if (!m.IsSequence() || m.size() != 2) perr(c, m, "cocycle entries are pairs [g, h]");
      sup.emplace_back(element(c, g, m[0]), element(c, g, m[1]));
    }
    return guard(c, w2, [&] { return make_xi_cocycle(g, w1, sup); });
  }
  perr(c, w2, "w2 is 0, infinity, {cup: ...} or {cocycle: ...}");
}

Xi1Type xi_in_record(const Ctx& c, const YAML::Node& root, const Xi1Type& fallback, json* resolved) {
  YAML::Node x = root["xi"];
  if (!x) return fallback;
  if (x.IsScalar()) {
    std::string p = (fs::path(c.base_dir) / x.Scalar()).string();
    auto l = load_xi(p);
    if (resolved) (*resolved)["xi"] = l.resolved;
    return l.xi;
  }
  return xi_from(c, root);
}

// ---- forms and records ----

DoublePointSphere sphere(const Ctx& c, const Xi1Type& xi, const YAML::Node& n) {
  if (!n.IsMap()) perr(c, n, "a sphere is a mapping with 'points'");
  DoublePointSphere s{xi.group, xi.w1, {}, 0, ""};
  if (n["points"]) {
    if (!n["points"].IsSequence()) perr(c, n["points"], "points must be a list");
    for (const auto& p : n["points"]) {
      if (!p.IsSequence() || p.size() != 2) perr(c, p, "double points are [element, sign] pairs");
      int64_t sg = integer(c, p[1]);
      if (sg != 1 && sg != -1) perr(c, p[1], "sign must be +1 or -1");
      s.points.push_back({element(c, xi.group, p[0]), static_cast<int>(sg)});
    }
  }
  if (n["euler"]) s.euler = integer(c, n["euler"]);
  if (n["label"]) s.label = scalar(c, n["label"]);
  return s;
}

ModuleVector module_vector(const Ctx& c, const Xi1Type& xi, const YAML::Node& n, int rank) {
  if (!n.IsSequence()) perr(c, n, "a module vector is a list of ring elements");
  if (rank >= 0 && static_cast<int>(n.size()) != rank)
    guard(c, n, [&]() -> int { fail(Errc::DimensionMismatch, "vector of length " + std::to_string(n.size()) + " for a rank " + std::to_string(rank) + " form"); });
  ModuleVector v;
  for (const auto& x : n) v.push_back(ring_elem(c, xi.group, x));
  return v;
}

LambdaMuForm form(const Ctx& c, const Xi1Type& xi, const YAML::Node& n) {
  if (!n.IsMap()) perr(c, n, "a form is a mapping with 'lambda'");
  YAML::Node lam = req(c, n, "lambda");
  if (!lam.IsSequence()) perr(c, lam, "lambda must be a list of rows");
  const int r = static_cast<int>(lam.size());
  std::vector<std::vector<RingElem>> L;
  for (const auto& row : lam) {
    if (!row.IsSequence()) perr(c, row, "lambda rows are lists");
    std::vector<RingElem> rr;
    for (const auto& x : row) rr.push_back(ring_elem(c, xi.group, x));
    L.push_back(std::move(rr));
  }
  std::vector<std::optional<DoublePointSphere>> sp(r);
  if (n["spheres"]) {
    YAML::Node s = n["spheres"];
    if (!s.IsSequence() || static_cast<int>(s.size()) != r) perr(c, s, "spheres must list one entry (or null) per basis element");
    for (int i = 0; i < r; ++i)
      if (!s[i].IsNull()) sp[i] = sphere(c, xi, s[i]);
  }
  std::vector<RingElem> mb;
  if (n["mubar"]) {
    YAML::Node m = n["mubar"];
    if (!m.IsSequence() || static_cast<int>(m.size()) != r) perr(c, m, "mubar must have one entry per basis element");
    for (const auto& x : m) mb.push_back(ring_elem(c, xi.group, x));
  } else {
    for (int i = 0; i < r; ++i) {
      if (!sp[i]) perr(c, n, "mubar is required unless every basis element has a sphere");
      mb.push_back(mu_from_sphere(*sp[i]).mubar);
    }
  }
  return guard(c, n, [&] { return LambdaMuForm(xi.group, xi.w1, L, mb, sp); });
}

SphericalRep spherical_rep(const Ctx& c, const Xi1Type& xi, const YAML::Node& n, int rank) {
  SphericalRep r;
  if (!n.IsMap()) perr(c, n, "spherical_rep is {vector: [...]} or {sphere: {...}}");
  if (n["vector"]) r.vector = module_vector(c, xi, n["vector"], rank);
  if (n["sphere"]) r.sphere = sphere(c, xi, n["sphere"]);
  if (!r.vector && !r.sphere) perr(c, n, "spherical_rep needs 'vector' or 'sphere'");
  return r;
}

ZVec int_list(const Ctx& c, const YAML::Node& n, int zero_len) {
  if (n.IsScalar() && lower(n.Scalar()) == "zero") return ZVec(zero_len, 0);
  if (!n.IsSequence()) perr(c, n, "expected a list of integers or 'zero'");
  ZVec v;
  for (const auto& x : n) v.push_back(integer(c, x));
  return v;
}

int model_rank(const GroupPtr& g, int k) { return build_resolution(g, k + 1)->rank[k]; }

FillingRecord filling_from(const Ctx& c, const YAML::Node& n, const XiThreeManifoldRecord& m) {
  if (!n.IsMap()) perr(c, n, "filling must be a mapping");
  FillingRecord f;
  f.manifold = m;
  const Xi1Type& xi = m.xi;
  f.label = n["label"] ? scalar(c, n["label"]) : "filling";
  if (n["secondary"]) {
    int len = guard(c, n, [&] { return homology(xi.group, xi.w1, Coeff::Z2, 2).ngens(); });
    f.secondary = int_list(c, n["secondary"], len);
  } else {
    perr(c, n, "missing key 'secondary'");
  }
  if (n["form"]) f.form = form(c, xi, n["form"]);
  const int rank = f.form ? f.form->rank() : -1;
  if (n["spherical_rep"]) f.spherical_rep = spherical_rep(c, xi, n["spherical_rep"], rank);
  if (n["serre_lifts"]) {
    for (const auto& l : n["serre_lifts"]) {
      SerreLift s;
      s.z_index = static_cast<int>(integer(c, req(c, l, "z")));
      s.v = module_vector(c, xi, req(c, l, "vector"), rank);
      f.serre_lifts.push_back(std::move(s));
    }
  }
  return f;
}

ClosedManifoldRecord closed_from(const Ctx& c, const YAML::Node& n, const Xi1Type& xi) {
  if (!n.IsMap()) perr(c, n, "closed_manifold must be a mapping");
  ClosedManifoldRecord r;
  r.xi = xi;
  r.label = n["label"] ? scalar(c, n["label"]) : "closed";
  r.fundamental = int_list(c, req(c, n, "fundamental"), guard(c, n, [&] { return model_rank(xi.group, 4); }));
  if (n["secondary"]) {
    int len = guard(c, n, [&] { return homology(xi.group, xi.w1, Coeff::Z2, 2).ngens(); });
    r.secondary = int_list(c, n["secondary"], len);
  }
  if (n["form"]) r.form = form(c, xi, n["form"]);
  if (n["spherical_rep"]) r.spherical_rep = spherical_rep(c, xi, n["spherical_rep"], r.form ? r.form->rank() : -1);
  return r;
}

LoadedY y_from(const Ctx& c, const YAML::Node& root, const Xi1Type& fallback) {
  LoadedY out;
  out.resolved = to_json(root);
  Xi1Type xi = xi_in_record(c, root, fallback, &out.resolved);
  if (root["three_manifold"]) {
    YAML::Node n = root["three_manifold"];
    XiThreeManifoldRecord r;
    r.xi = xi;
    r.label = n["label"] ? scalar(c, n["label"]) : "Y";
    r.primary = int_list(c, req(c, n, "primary"), guard(c, n, [&] { return model_rank(xi.group, 3); }));
    out.three = std::move(r);
  } else if (root["closed_manifold"]) {
    out.closed = closed_from(c, root["closed_manifold"], xi);
  } else {
    perr(c, root, "expected 'three_manifold' or 'closed_manifold'");
  }
  return out;
}

}  // namespace

GroupSpec parse_group_shorthand(const std::string& text) {
  std::string s = lower(trim(text));
  if (s.empty()) fail(Errc::ParseError, "empty group shorthand");
  if (s == "trivial" || s == "1") return GroupSpec::trivial();
  std::vector<GroupSpec> parts;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find('x', i);
    std::string p = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
    if (p == "z") {
      parts.push_back(GroupSpec::integers());
    } else if (p.size() > 1 && p[0] == 'z' && std::all_of(p.begin() + 1, p.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      parts.push_back(GroupSpec::cyclic(std::stoll(p.substr(1))));
    } else if (p == "trivial" || p == "1") {
      parts.push_back(GroupSpec::trivial());
    } else {
      fail(Errc::ParseError, "unknown group shorthand '" + text + "' (use trivial, z, zN or products like z2xz2)");
    }
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return parts.size() == 1 ? parts[0] : GroupSpec::product(std::move(parts));
}

GroupPtr load_group(const std::string& arg, json* resolved) {
  if (fs::exists(arg) && fs::is_regular_file(arg)) {
    Ctx c = ctx_for(arg);
    YAML::Node root = load_file(arg);
    if (resolved) *resolved = to_json(root);
    YAML::Node n = root.IsMap() && root["group"] ? root["group"] : root;
    return group_from(c, n);
  }
  if (resolved) *resolved = arg;
  return build_group(parse_group_shorthand(arg));
}

Character parse_character(const GroupPtr& g, const std::string& text) {
  std::string s = trim(text);
  if (s.empty() || s == "0") return trivial_character(g);
  if (s.find('=') != std::string::npos) {
    std::vector<std::pair<Elem, int>> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail(Errc::ParseError, "character entries look like t=1");
      std::string v = trim(item.substr(eq + 1));
      if (v != "0" && v != "1") fail(Errc::ParseError, "character values are 0 or 1");
      vals.emplace_back(g->parse_word(trim(item.substr(0, eq))), v == "1");
    }
    return build_character(g, vals);
  }
  std::vector<uint8_t> a(g->ab_dim(), 0);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    item = lower(trim(item));
    if (item.size() < 2 || item[0] != 'x') fail(Errc::ParseError, "cannot read character term '" + item + "'");
    int k = 0;
    try {
      k = std::stoi(item.substr(1));
    } catch (const std::logic_error&) {
      fail(Errc::ParseError, "cannot read character term '" + item + "'");
    }
    if (k < 1 || k > g->ab_dim())
      fail(Errc::InvalidArgument, "character term " + item + " outside H^1 of dimension " + std::to_string(g->ab_dim()));
    a[k - 1] ^= 1;
  }
  return Character(g, a);
}

LoadedXi load_xi(const std::string& path) {
  Ctx c = ctx_for(path);
  YAML::Node root = load_file(path);
  if (!root.IsMap()) perr(c, root, "expected a mapping with group, w1, w2");
  LoadedXi out{xi_from(c, root), to_json(root)};
  return out;
}

LoadedXi load_xi_text(const std::string& yaml, const std::string& name) {
  Ctx c{name, "."};
  YAML::Node root = load_string(yaml, name);
  if (!root.IsMap()) perr(c, root, "expected a mapping with group, w1, w2");
  return LoadedXi{xi_from(c, root), to_json(root)};
}

LoadedY load_y(const std::string& path, const Xi1Type& xi) {
  Ctx c = ctx_for(path);
  YAML::Node root = load_file(path);
  if (!root.IsMap()) perr(c, root, "expected a mapping");
  return y_from(c, root, xi);
}

LoadedY load_y_text(const std::string& yaml, const Xi1Type& xi, const std::string& name) {
  Ctx c{name, "."};
  YAML::Node root = load_string(yaml, name);
  if (!root.IsMap()) perr(c, root, "expected a mapping");
  return y_from(c, root, xi);
}

FillingRecord load_filling(const std::string& path, const XiThreeManifoldRecord& m, json* resolved) {
  Ctx c = ctx_for(path);
  YAML::Node root = load_file(path);
  if (resolved) *resolved = to_json(root);
  return filling_from(c, req(c, root, "filling"), m);
}

FillingRecord load_filling_text(const std::string& yaml, const XiThreeManifoldRecord& m, const std::string& name,
                                json* resolved) {
  Ctx c{name, "."};
  YAML::Node root = load_string(yaml, name);
  if (resolved) *resolved = to_json(root);
  return filling_from(c, req(c, root, "filling"), m);
}

Registry load_registry(const std::string& dir, const Xi1Type& xi, json* resolved) {
  if (!fs::is_directory(dir)) fail(Errc::ParseError, dir + ": registry is not a directory");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".yaml" || ext == ".yml")) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  Registry reg;
  json all = json::object();
  for (const auto& f : files) {
    auto y = load_y(f, xi);
    if (!y.closed) fail(Errc::ParseError, f + ": registry entries must be closed_manifold records");
    reg.records.push_back(*y.closed);
    all[fs::path(f).filename().string()] = y.resolved;
  }
  if (resolved) *resolved = all;
  return reg;
}

std::vector<H1Class> load_d3_image(const std::string& arg, const GroupPtr& g, json* resolved) {
  if (lower(trim(arg)) == "zero") {
    if (resolved) *resolved = "zero";
    return {};
  }
  Ctx c = ctx_for(arg);
  YAML::Node root = load_file(arg);
  if (resolved) *resolved = to_json(root);
  YAML::Node n = root.IsMap() ? req(c, root, "d3_image") : root;
  if (n.IsScalar() && lower(n.Scalar()) == "zero") return {};
  if (!n.IsSequence()) perr(c, n, "d3_image is 'zero' or a list of classes");
  std::vector<H1Class> out;
  for (const auto& x : n) {
    if (x.IsSequence()) {
      H1Class h = h1_zero(*g);
      if (static_cast<int>(x.size()) != g->ab_dim())
        guard(c, x, [&]() -> int { fail(Errc::SubspaceMismatch, "class has " + std::to_string(x.size()) + " coordinates, H_1 has dimension " + std::to_string(g->ab_dim())); });
      for (size_t i = 0; i < x.size(); ++i) h.v[i] = static_cast<uint8_t>(integer(c, x[i]) & 1);
      out.push_back(h);
    } else {
      out.push_back(guard(c, x, [&] { return h1_of_element(*g, element(c, g, x)); }));
    }
  }
  return out;
}

}  // namespace bf
