#include "oidforge/io.hpp"

#include <fstream>
#include <sstream>

#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

Json matrix_to_json(const FreeModuleMap& m) {
  Json cols = Json::array();
  for (int j = 0; j < m.cols(); ++j) {
    Json c = Json::array();
    for (int i = 0; i < m.rows(); ++i) c.push_back(m.at(i, j).str());
    cols.push_back(std::move(c));
  }
  return Json{{"rows", m.rows()}, {"columns", std::move(cols)}};
}

FreeModuleMap matrix_from_json(const Json& j, const RingPtr& r, int src, int tgt) {
  const int rows = j.at("rows").get<int>();
  const Json& cols = j.at("columns");
  FreeModuleMap m(r, rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw ParseError("matrix column has the wrong length");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(c)) = Poly::parse(r, cols[c][i].get<std::string>());
  }
  m.source_level = src;
  m.target_level = tgt;
  return m;
}

Json element_to_json(const Element& v) {
  Json out = Json::object();
  for (const auto& [g, c] : v)
    if (!c.is_zero()) out[gen_name(g.level, g.index)] = c.str();
  return out;
}

}  // namespace

Json ring_to_json(const RingPtr& r) {
  Json ideal = Json::array();
  for (const auto& g : r->ideal_basis()) ideal.push_back(g.str());
  return Json{{"vars", r->vars()}, {"order", r->order().name()}, {"ideal", std::move(ideal)}};
}

RingPtr ring_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  if (vars.empty()) throw ParseError("ring needs at least one variable");
  MonomialOrder order = MonomialOrder::parse(j.value("order", std::string("grevlex")));
  RingPtr base = Ring::make(vars, order);
  if (!j.contains("ideal") || j["ideal"].empty()) return base;
  std::vector<Poly> ideal;
  for (const auto& p : j["ideal"]) ideal.push_back(Poly::parse(base, p.get<std::string>()));
  return Ring::quotient(base, ideal);
}

Json resolution_to_json(const FreeResolution& res) {
  Json diffs = Json::array();
  for (const auto& d : res.diffs) diffs.push_back(matrix_to_json(d));
  return Json{{"ring", ring_to_json(res.ring)},
              {"ranks", res.ranks},
              {"anchor", matrix_to_json(res.anchor)},
              {"differentials", std::move(diffs)}};
}

FreeResolution resolution_from_json(const Json& j) {
  FreeResolution res;
  res.ring = ring_from_json(j.at("ring"));
  res.ranks = j.at("ranks").get<std::vector<int>>();
  res.anchor = matrix_from_json(j.at("anchor"), res.ring, 1, 0);
  const Json& diffs = j.at("differentials");
  if (diffs.size() + 1 != std::max<std::size_t>(res.ranks.size(), 1))
    throw ParseError("expected one differential per level above 1");
  for (std::size_t i = 0; i < diffs.size(); ++i)
    res.diffs.push_back(matrix_from_json(diffs[i], res.ring, static_cast<int>(i) + 2, static_cast<int>(i) + 1));
  if (!res.ranks.empty() && res.anchor.cols() != res.ranks[0]) throw ParseError("anchor width differs from rank 1");
  if (res.anchor.rows() != res.ring->nvars()) throw ParseError("anchor height differs from the number of variables");
  for (std::size_t i = 0; i < res.diffs.size(); ++i)
    if (res.diffs[i].rows() != res.ranks[i] || res.diffs[i].cols() != res.ranks[i + 1])
      throw ParseError("differential " + std::to_string(i + 2) + " has the wrong shape");
  return res;
}

Json algebroid_to_json(const LieInftyAlgebroid& alg) {
  Json j = resolution_to_json(alg.res);
  Json brackets = Json::object();
  for (const auto& [k, t] : alg.brackets) {
    Json table = Json::object();
    for (const auto& [w, v] : t.values)
      if (!is_zero(v)) table[word_str(w)] = element_to_json(v);
    brackets[std::to_string(k)] = std::move(table);
  }
  j["brackets"] = std::move(brackets);
  j["max_arity"] = alg.max_arity;
  j["partial"] = alg.partial;
  return j;
}

LieInftyAlgebroid algebroid_from_json(const Json& j) {
  LieInftyAlgebroid alg;
  alg.res = resolution_from_json(j);
  alg.max_arity = j.value("max_arity", alg.arity_bound());
  alg.partial = j.value("partial", false);
  const RingPtr& r = alg.ring();
  if (j.contains("brackets"))
    for (const auto& [key, table] : j["brackets"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("bracket arity '" + key + "' is not an integer");
      }
      if (k < 2) throw ParseError("bracket arity must be at least 2");
      TaylorMap& t = alg.mutable_table(k);
      for (const auto& [ws, value] : table.items()) {
        Word w = parse_word(ws);
        if (static_cast<int>(w.size()) != k) throw ParseError("word " + ws + " has the wrong arity");
        for (const auto& g : w)
          if (g.level < 1 || g.level > alg.length() || g.index >= alg.res.rank(g.level))
            throw ParseError("word " + ws + " uses an unknown generator");
        GradedWord cw = GradedWord::canonical(w);
        if (cw.sign == 0) continue;
        Element v;
        for (const auto& [gs, poly] : value.items()) {
          Gen g = parse_gen(gs);
          if (g.level < 1 || g.level > alg.length() || g.index >= alg.res.rank(g.level))
            throw ParseError("value uses unknown generator " + gs);
          add_term(v, g, Poly::parse(r, poly.get<std::string>()));
        }
        t.set(cw.letters, cw.sign == 1 ? v : negate(v));
      }
    }
  return alg;
}

Gen parse_gen(const std::string& s) {
  int level = 0, index = 0;
  char letter = 0, open = 0, comma = 0, close = 0;
  std::istringstream is(s);
  if (!(is >> letter >> open >> level >> comma >> index >> close) || open != '[' || comma != ',' ||
      close != ']' || index < 1 || level < 1)
    throw ParseError("cannot parse generator '" + s + "'");
  char extra;
  if (is >> extra) throw ParseError("trailing characters in generator '" + s + "'");
  if (gen_name(level, index - 1)[0] != letter) throw ParseError("generator letter does not match its level in '" + s + "'");
  return Gen{level, index - 1};
}

Word parse_word(const std::string& s) {
  static const std::string sep = "\xe2\x8a\x99";
  Word w;
  if (s == "1") return w;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    w.push_back(parse_gen(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return w;
}

Json report_to_json(const CheckReport& r) {
  Json j{{"ok", r.ok}, {"words_checked", r.words_checked}};
  if (!r.ok) {
    j["identity"] = r.identity;
    j["witness"] = word_str(r.witness);
    j["detail"] = r.detail;
  }
  return j;
}

Json isotropy_to_json(const IsotropyAlgebra& g, bool regular) {
  auto vec = [](const QVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  Json basis = Json::array();
  for (const auto& b : g.basis) basis.push_back(vec(b));
  Json structure = Json::array();
  for (const auto& row : g.structure) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(vec(v));
    structure.push_back(std::move(r));
  }
  return Json{{"point", vec(g.point)},
              {"dimension", g.dimension()},
              {"basis", std::move(basis)},
              {"structure_constants", std::move(structure)},
              {"regular", regular}};
}

Session session_from_json(const Json& j, const std::string& order_override) {
  Json ring = j.contains("ring") ? j["ring"] : Json{{"vars", j.at("vars")}};
  if (!j.contains("ring")) {
    if (j.contains("order")) ring["order"] = j["order"];
    if (j.contains("ideal")) ring["ideal"] = j["ideal"];
  }
  if (!order_override.empty()) ring["order"] = order_override;
  Session s;
  s.ring = ring_from_json(ring);
  const int d = s.ring->nvars();
  int kinds = j.contains("generators") + j.contains("vanishing") + j.contains("tangent");
  if (kinds != 1) throw ParseError("session needs exactly one of generators, vanishing, tangent");
  auto polys = [&](const Json& a) {
    std::vector<Poly> out;
    for (const auto& p : a) out.push_back(Poly::parse(s.ring, p.get<std::string>()));
    return out;
  };
  if (j.contains("generators")) {
    for (const auto& g : j["generators"]) {
      if (static_cast<int>(g.size()) != d) throw ParseError("generator has the wrong number of coefficients");
      s.generators.emplace_back(polys(g));
    }
  } else if (j.contains("vanishing")) {
    s.generators = vanishing_generators(polys(j["vanishing"]));
  } else {
    s.generators = tangent_generators(polys(j["tangent"]));
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << dump(j);
}

std::vector<Q> parse_point(const std::string& text) {
  std::vector<Q> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("empty coordinate in point '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace oidforge
