#include "nilmassey/json_io.hpp"

#include <cctype>
#include <cstdio>

namespace nilmassey {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int64_t>();
}

uint32_t residue(const Json& j, const Modulus& mod, const std::string& path) {
  int64_t v = integer(j, path);
  int64_t m = mod.value();
  return static_cast<uint32_t>(((v % m) + m) % m);
}

std::vector<uint32_t> residues(const Json& j, std::size_t len, const Modulus& mod, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  if (j.size() != len)
    throw ParseError(path, "expected " + std::to_string(len) + " values, got " + std::to_string(j.size()));
  std::vector<uint32_t> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(residue(j[i], mod, at(path, i)));
  return out;
}

void check_shape(const Json& j, int n, const Modulus& mod, const std::string& path) {
  if (j.contains("n") && integer(j["n"], at(path, "n")) != n)
    throw ParseError(at(path, "n"), "expected n = " + std::to_string(n));
  if (j.contains("m") && integer(j["m"], at(path, "m")) != mod.value())
    throw ParseError(at(path, "m"), "expected m = " + std::to_string(mod.value()));
}

class WordParser {
 public:
  WordParser(const std::string& s, int n, const Modulus& mod) : s_(s), n_(n), mod_(mod) {}

  GroupElt parse() {
    GroupElt g = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word \"" + s_ + "\" at " + std::to_string(pos_), what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupElt expr() {
    GroupElt g = GroupElt::identity(n_, mod_);
    while (peek('x') || peek('y') || peek('[') || peek('(')) g = g * factor();
    return g;
  }

  GroupElt factor() {
    GroupElt g = atom();
    if (!peek('^')) return g;
    ++pos_;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    uint64_t k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = (k * 10 + static_cast<uint64_t>(s_[pos_] - '0')) % mod_.value();
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent");
    return power(neg ? g.inverse() : g, static_cast<uint32_t>(k));
  }

  GroupElt atom() {
    skip();
    char c = s_[pos_++];
    if (c == 'x') return GroupElt::gen_x(n_, mod_);
    if (c == 'y') return GroupElt::gen_y(n_, mod_);
    if (c == '(') {
      GroupElt g = expr();
      expect(')');
      return g;
    }
    GroupElt a = expr();
    expect(',');
    GroupElt b = expr();
    expect(']');
    return commutator(a, b);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int n_;
  const Modulus& mod_;
};

}  // namespace

GroupElt parse_group_word(const std::string& word, int n, const Modulus& mod) {
  return WordParser(word, n, mod).parse();
}

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  auto data = s.data();
  for (int len = 0; len <= s.degree(); ++len)
    for (uint64_t bits = 0; bits < block_size(len); ++bits) {
      Word w{len, bits};
      if (uint32_t v = data[w.index()]) coeffs.push_back(Json{{"word", w.str()}, {"value", v}});
    }
  return Json{{"n", s.degree()}, {"m", s.m()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const GroupElt& g) { return to_json(g.series()); }

Json to_json(const UniMatrix& u) {
  Json rows = Json::array();
  for (int i = 1; i <= u.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= u.size(); ++j) row.push_back(u.entry(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"n", u.n()}, {"m", u.modulus().value()}, {"entries", std::move(rows)}};
}

Json to_json(const Cochain1& c) { return Json{{"weight", c.weight}, {"values", c.values}}; }
Json to_json(const Cochain2& c) { return Json{{"weight", c.weight}, {"values", c.values}}; }

Json to_json(const NACocycle& q) {
  Json values = Json::array();
  for (const auto& v : q.values) values.push_back(to_json(v));
  return Json{{"level", q.level}, {"values", std::move(values)}};
}

Json to_json(const DefiningSystem& ds) {
  Json entries = Json::object();
  for (int i = 1; i <= ds.n() + 1; ++i)
    for (int j = i + 1; j <= ds.n() + 1; ++j)
      if (DefiningSystem::valid_index(ds.n(), i, j))
        entries[std::to_string(i) + "," + std::to_string(j)] = to_json(ds.entry(i, j));
  return Json{{"n", ds.n()}, {"entries", std::move(entries)}};
}

Json to_json(const ActionSpec& spec) {
  Json frak = Json::array();
  for (const auto& f : spec.frak_f()) frak.push_back(to_json(f));
  return Json{{"n", spec.n()},
              {"m", spec.modulus().value()},
              {"group", Json{{"order", spec.order()}, {"table", spec.group().table()}}},
              {"chi", spec.twisted().chi()},
              {"frak_f", std::move(frak)}};
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations()) v.push_back(Json{{"check", x.check}, {"witness", x.witness}});
  return Json{{"ok", r.ok()}, {"total", r.total()}, {"violations", std::move(v)}};
}

Series series_from_json(const Json& j, int n, const Modulus& mod, const std::string& path) {
  check_shape(j, n, mod, path);
  Series s(n, mod);
  const Json& coeffs = field(j, "coeffs", path);
  if (!coeffs.is_array()) throw ParseError(at(path, "coeffs"), "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string p = at(at(path, "coeffs"), i);
    const Json& w = field(coeffs[i], "word", p);
    if (!w.is_string()) throw ParseError(at(p, "word"), "expected a string");
    Word word;
    try {
      word = Word::parse(w.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(at(p, "word"), e.what());
    }
    if (word.length > n) throw ParseError(at(p, "word"), "word longer than n");
    s.set(word, mod.add(s.coeff(word), residue(field(coeffs[i], "value", p), mod, at(p, "value"))));
  }
  return s;
}

GroupElt group_elt_from_json(const Json& j, int n, const Modulus& mod, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_group_word(j.get<std::string>(), n, mod);
    } catch (const ParseError& e) {
      throw ParseError(path, e.what());
    }
  }
  Series s = series_from_json(j, n, mod, path);
  if (s.constant() != 1) throw ParseError(path, "group element needs constant term 1");
  return GroupElt(std::move(s));
}

UniMatrix unimatrix_from_json(const Json& j, const std::string& path) {
  int n = static_cast<int>(integer(field(j, "n", path), at(path, "n")));
  int64_t m = integer(field(j, "m", path), at(path, "m"));
  if (n < 1 || m < 2 || m > (int64_t{1} << 31)) throw ParseError(path, "bad n or m");
  Modulus mod(static_cast<uint32_t>(m));
  const Json& rows = field(j, "entries", path);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n + 1))
    throw ParseError(at(path, "entries"), "expected " + std::to_string(n + 1) + " rows");
  std::vector<uint32_t> flat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto row = residues(rows[i], static_cast<std::size_t>(n + 1), mod, at(at(path, "entries"), i));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  try {
    return UniMatrix::from_entries(n, mod, std::move(flat));
  } catch (const InvalidArgument& e) {
    throw ParseError(at(path, "entries"), e.what());
  }
}

Cochain1 cochain1_from_json(const Json& j, const TwistedGroup& tg, int weight, const std::string& path) {
  const Json* values = &j;
  if (j.is_object()) {
    if (j.contains("weight") && integer(j["weight"], at(path, "weight")) != weight)
      throw ParseError(at(path, "weight"), "expected weight " + std::to_string(weight));
    values = &field(j, "values", path);
  }
  return Cochain1{weight, residues(*values, tg.order(), tg.modulus(), j.is_object() ? at(path, "values") : path)};
}

Cochain2 cochain2_from_json(const Json& j, const TwistedGroup& tg, int weight, const std::string& path) {
  if (j.contains("weight") && integer(j["weight"], at(path, "weight")) != weight)
    throw ParseError(at(path, "weight"), "expected weight " + std::to_string(weight));
  std::size_t len = static_cast<std::size_t>(tg.order()) * tg.order();
  return Cochain2{weight, residues(field(j, "values", path), len, tg.modulus(), at(path, "values"))};
}

DefiningSystem defining_system_from_json(const Json& j, const TwistedGroup& tg, const std::string& path) {
  int n = static_cast<int>(integer(field(j, "n", path), at(path, "n")));
  if (n < 2) throw ParseError(at(path, "n"), "need n >= 2");
  DefiningSystem ds(n, tg);
  const Json& entries = field(j, "entries", path);
  if (!entries.is_object()) throw ParseError(at(path, "entries"), "expected an object");
  for (const auto& [key, value] : entries.items()) {
    std::string p = at(at(path, "entries"), key);
    int i = 0, jj = 0;
    if (std::sscanf(key.c_str(), "%d,%d", &i, &jj) != 2 || !DefiningSystem::valid_index(n, i, jj))
      throw ParseError(p, "bad entry index");
    ds.entry(i, jj) = cochain1_from_json(value, tg, jj - i, p);
  }
  return ds;
}

FiniteGroup group_from_json(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("cyclic")) {
    const Json& c = j["cyclic"];
    std::vector<int64_t> orders;
    if (c.is_array()) {
      for (std::size_t i = 0; i < c.size(); ++i) orders.push_back(integer(c[i], at(at(path, "cyclic"), i)));
    } else {
      orders.push_back(integer(c, at(path, "cyclic")));
    }
    if (orders.empty()) throw ParseError(at(path, "cyclic"), "empty product");
    int64_t total = 1;
    for (int64_t d : orders) {
      if (d < 1 || d > 4096) throw ParseError(at(path, "cyclic"), "cyclic order out of range");
      total *= d;
      if (total > 4096) throw ParseError(at(path, "cyclic"), "group too large");
    }
    FiniteGroup g = FiniteGroup::cyclic(static_cast<uint32_t>(orders[0]));
    for (std::size_t i = 1; i < orders.size(); ++i)
      g = FiniteGroup::product(g, FiniteGroup::cyclic(static_cast<uint32_t>(orders[i])));
    return g;
  }
  int64_t order = integer(field(j, "order", path), at(path, "order"));
  if (order < 1 || order > 4096) throw ParseError(at(path, "order"), "order out of range");
  const Json& table = field(j, "table", path);
  if (!table.is_array() || table.size() != static_cast<std::size_t>(order))
    throw ParseError(at(path, "table"), "expected " + std::to_string(order) + " rows");
  FiniteGroup::Table t;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string p = at(at(path, "table"), i);
    if (!table[i].is_array() || table[i].size() != static_cast<std::size_t>(order))
      throw ParseError(p, "expected " + std::to_string(order) + " entries");
    std::vector<uint32_t> row;
    for (std::size_t k = 0; k < table[i].size(); ++k) {
      int64_t v = integer(table[i][k], at(p, k));
      if (v < 0 || v >= order) throw ParseError(at(p, k), "entry out of range");
      row.push_back(static_cast<uint32_t>(v));
    }
    t.push_back(std::move(row));
  }
  try {
    return FiniteGroup(std::move(t));
  } catch (const ValidationError& e) {
    throw ParseError(at(path, "table"), e.what());
  }
}

ActionSpec action_from_json(const Json& j, int n, const Modulus& mod, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  check_shape(j, n, mod, path);
  if (j.contains("cyclic")) {
    std::string p = at(path, "cyclic");
    const Json& c = j["cyclic"];
    int64_t d = integer(field(c, "d", p), at(p, "d"));
    if (d < 1 || d > 4096) throw ParseError(at(p, "d"), "order out of range");
    uint32_t chi = residue(field(c, "c", p), mod, at(p, "c"));
    GroupElt gamma = group_elt_from_json(field(c, "gamma", p), n, mod, at(p, "gamma"));
    return make_cyclic_action(static_cast<uint32_t>(d), chi, gamma, n, mod);
  }
  if (j.contains("graded")) {
    std::string p = at(path, "graded");
    const Json& c = j["graded"];
    FiniteGroup g = group_from_json(field(c, "group", p), at(p, "group"));
    std::vector<uint32_t> chi = c.contains("chi") ? residues(c["chi"], g.order(), mod, at(p, "chi"))
                                                  : std::vector<uint32_t>(g.order(), 1);
    TwistedGroup tg(std::move(g), mod, std::move(chi));
    Cochain1 h = cochain1_from_json(field(c, "h", p), tg, n - 1, at(p, "h"));
    return make_graded_action(std::move(tg), h, n);
  }
  FiniteGroup g = group_from_json(field(j, "group", path), at(path, "group"));
  std::vector<uint32_t> chi = residues(field(j, "chi", path), g.order(), mod, at(path, "chi"));
  const Json& frak = field(j, "frak_f", path);
  if (!frak.is_array() || frak.size() != g.order())
    throw ParseError(at(path, "frak_f"), "expected " + std::to_string(g.order()) + " elements");
  std::vector<GroupElt> f;
  for (std::size_t i = 0; i < frak.size(); ++i)
    f.push_back(group_elt_from_json(frak[i], n, mod, at(at(path, "frak_f"), i)));
  return ActionSpec(n, TwistedGroup(std::move(g), mod, std::move(chi)), std::move(f));
}

}  // namespace nilmassey
