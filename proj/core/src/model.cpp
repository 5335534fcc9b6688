#include "folcoh/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "folcoh/errors.hpp"

namespace folcoh {

using json = nlohmann::ordered_json;

TwoForm normalize_two_form(TwoForm t) {
  TwoForm out;
  for (WedgeTerm w : t) {
    if (w.i == w.j || w.coeff.is_zero()) continue;
    if (w.i > w.j) {
      std::swap(w.i, w.j);
      w.coeff = -w.coeff;
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [](const WedgeTerm& a, const WedgeTerm& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
  TwoForm merged;
  for (const WedgeTerm& w : out) {
    if (!merged.empty() && merged.back().i == w.i && merged.back().j == w.j) {
      merged.back().coeff += w.coeff;
    } else {
      merged.push_back(w);
    }
  }
  std::erase_if(merged, [](const WedgeTerm& w) { return w.coeff.is_zero(); });
  return merged;
}

int ModelSpec::count(GenType t) const {
  return int(std::count_if(generators.begin(), generators.end(),
                           [&](const Generator& g) { return g.type == t; }));
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::optional<std::pair<int, Monomial>> wedge_monomials(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.insert(m.end(), b.begin(), b.end());
  int sign = 1;
  // Insertion sort with inversion parity; dims are tiny.
  for (size_t i = 1; i < m.size(); ++i) {
    for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
      std::swap(m[j], m[j - 1]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1]) return std::nullopt;
  return std::pair(sign, m);
}

std::vector<std::pair<Scalar, Monomial>> differentiate(const ModelSpec& spec, const Monomial& m) {
  std::vector<std::pair<Scalar, Monomial>> acc;
  for (size_t pos = 0; pos < m.size(); ++pos) {
    int leibniz_sign = (pos % 2 == 0) ? 1 : -1;
    Monomial rest;  // m with position pos removed
    for (size_t t = 0; t < m.size(); ++t)
      if (t != pos) rest.push_back(m[t]);
    for (const WedgeTerm& w : spec.d[m[pos]]) {
      auto wedged = wedge_monomials({w.i, w.j}, rest);
      if (!wedged) continue;
      Scalar c = w.coeff * Scalar(leibniz_sign * wedged->first);
      acc.emplace_back(c, wedged->second);
    }
  }
  // Collect duplicates.
  std::map<Monomial, Scalar> collected;
  for (auto& [c, mono] : acc) collected[mono] += c;
  std::vector<std::pair<Scalar, Monomial>> out;
  for (auto& [mono, c] : collected)
    if (!c.is_zero()) out.emplace_back(c, mono);
  return out;
}

namespace {

std::pair<int, int> bidegree_of(const ModelSpec& spec, const Monomial& m) {
  int p = 0, q = 0;
  for (int idx : m) (spec.generators[idx].type == GenType::Antiholo ? q : p)++;
  return {p, q};
}

void enumerate_subsets(int n, int k, std::vector<Monomial>& out) {
  Monomial cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - int(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

int find_monomial(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) return -1;
  return int(it - basis.begin());
}

}  // namespace

std::vector<Monomial> total_basis(const ModelSpec& spec, int k) {
  std::vector<Monomial> out;
  if (k < 0 || k > spec.num_generators()) return out;
  enumerate_subsets(spec.num_generators(), k, out);
  return out;
}

std::vector<Monomial> monomial_basis(const ModelSpec& spec, int p, int q) {
  std::vector<Monomial> out;
  if (p < 0 || q < 0) return out;
  for (const Monomial& m : total_basis(spec, p + q))
    if (bidegree_of(spec, m) == std::pair(p, q)) out.push_back(m);
  return out;
}

Matrix total_operator_matrix(const ModelSpec& spec, int k) {
  auto src = total_basis(spec, k);
  auto dst = total_basis(spec, k + 1);
  Matrix m(int(dst.size()), int(src.size()));
  for (int j = 0; j < int(src.size()); ++j) {
    for (auto& [c, mono] : differentiate(spec, src[j])) {
      int i = find_monomial(dst, mono);
      if (i >= 0) m.at(i, j) = c;
    }
  }
  return m;
}

Matrix operator_matrix(const ModelSpec& spec, Op which, int p, int q) {
  if (!spec.is_complex()) {
    if (which != Op::D) throw NotComplexModel("partial/bar operators need a complex model");
    return total_operator_matrix(spec, p);
  }
  auto src = monomial_basis(spec, p, q);
  auto emit = [&](int tp, int tq) {
    auto dst = monomial_basis(spec, tp, tq);
    Matrix m(int(dst.size()), int(src.size()));
    for (int j = 0; j < int(src.size()); ++j) {
      for (auto& [c, mono] : differentiate(spec, src[j])) {
        if (bidegree_of(spec, mono) != std::pair(tp, tq)) continue;
        int i = find_monomial(dst, mono);
        if (i >= 0) m.at(i, j) = c;
      }
    }
    return m;
  };
  switch (which) {
    case Op::Partial: return emit(p + 1, q);
    case Op::Bar: return emit(p, q + 1);
    case Op::D: return Matrix::vstack(emit(p + 1, q), emit(p, q + 1));
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void rethrow_with_position(const std::string& text, size_t byte, const std::string& what) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
  }
  throw ParseError(what, line, col);
}

int gen_index(const std::map<std::string, int>& by_symbol, const std::string& s) {
  auto it = by_symbol.find(s);
  if (it == by_symbol.end()) throw UnknownGenerator("unknown generator '" + s + "'");
  return it->second;
}

TwoForm parse_two_form(const json& arr, const std::map<std::string, int>& by_symbol) {
  TwoForm t;
  for (const auto& term : arr) {
    WedgeTerm w;
    w.coeff = parse_scalar(term.at("coeff").get<std::string>());
    const auto& wedge = term.at("wedge");
    if (wedge.size() != 2) throw ParseError("wedge must list exactly two generators");
    w.i = gen_index(by_symbol, wedge[0].get<std::string>());
    w.j = gen_index(by_symbol, wedge[1].get<std::string>());
    t.push_back(w);
  }
  return normalize_two_form(std::move(t));
}

}  // namespace

ModelSpec parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_with_position(text, e.byte, e.what());
  }
  ModelSpec spec;
  try {
    spec.name = doc.at("name").get<std::string>();
    std::string field = doc.at("field").get<std::string>();
    if (field == "rational") spec.field = CoeffField::Rational;
    else if (field == "gaussian") spec.field = CoeffField::Gaussian;
    else throw ParseError("field must be 'rational' or 'gaussian'");

    std::map<std::string, int> by_symbol;
    for (const auto& g : doc.at("generators")) {
      Generator gen;
      gen.symbol = g.at("symbol").get<std::string>();
      std::string type = g.at("type").get<std::string>();
      if (type == "holo") gen.type = GenType::Holo;
      else if (type == "antiholo") gen.type = GenType::Antiholo;
      else if (type == "real") gen.type = GenType::Real;
      else throw ParseError("generator type must be holo|antiholo|real");
      if (by_symbol.count(gen.symbol))
        throw DuplicateGenerator("duplicate generator '" + gen.symbol + "'");
      by_symbol[gen.symbol] = int(spec.generators.size());
      spec.generators.push_back(gen);
    }
    bool has_real = spec.count(GenType::Real) > 0;
    bool has_cplx = spec.count(GenType::Holo) + spec.count(GenType::Antiholo) > 0;
    if (has_real && has_cplx)
      throw ParseError("a model mixes real with holo/antiholo generators");

    spec.d.assign(spec.generators.size(), {});
    if (doc.contains("d")) {
      for (const auto& [sym, terms] : doc.at("d").items()) {
        spec.d[gen_index(by_symbol, sym)] = parse_two_form(terms, by_symbol);
      }
    }
    if (doc.contains("conjugation")) {
      spec.conjugation.assign(spec.generators.size(), -1);
      for (const auto& pair : doc.at("conjugation")) {
        if (pair.size() != 2) throw ParseError("conjugation entries must be pairs");
        int a = gen_index(by_symbol, pair[0].get<std::string>());
        int b = gen_index(by_symbol, pair[1].get<std::string>());
        spec.conjugation[a] = b;
        spec.conjugation[b] = a;
      }
      for (int c : spec.conjugation)
        if (c < 0) throw ParseError("conjugation does not cover all generators");
    }
    if (doc.contains("omega")) {
      spec.omega = parse_two_form(doc.at("omega"), by_symbol);
    }
    spec.half_codim = doc.at("half_codim").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what());
  }
  return spec;
}

std::string to_model_json(const ModelSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["field"] = spec.field == CoeffField::Gaussian ? "gaussian" : "rational";
  doc["generators"] = json::array();
  for (const auto& g : spec.generators) {
    const char* t = g.type == GenType::Holo ? "holo" : g.type == GenType::Antiholo ? "antiholo" : "real";
    doc["generators"].push_back({{"symbol", g.symbol}, {"type", t}});
  }
  auto form_json = [&](const TwoForm& t) {
    json arr = json::array();
    for (const auto& w : t) {
      arr.push_back({{"coeff", w.coeff.str()},
                     {"wedge", {spec.generators[w.i].symbol, spec.generators[w.j].symbol}}});
    }
    return arr;
  };
  json d = json::object();
  for (int g = 0; g < spec.num_generators(); ++g)
    if (!spec.d[g].empty()) d[spec.generators[g].symbol] = form_json(spec.d[g]);
  doc["d"] = d;
  if (!spec.conjugation.empty()) {
    json conj = json::array();
    for (int g = 0; g < spec.num_generators(); ++g)
      if (spec.conjugation[g] > g)
        conj.push_back({spec.generators[g].symbol, spec.generators[spec.conjugation[g]].symbol});
    doc["conjugation"] = conj;
  }
  if (spec.omega) doc["omega"] = form_json(*spec.omega);
  doc["half_codim"] = spec.half_codim;
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

// omega^q as a coordinate vector in the top total basis; empty if zero.
std::vector<std::pair<Scalar, Monomial>> wedge_power(const TwoForm& omega, int power) {
  std::map<Monomial, Scalar> acc{{Monomial{}, Scalar(1)}};
  for (int it = 0; it < power; ++it) {
    std::map<Monomial, Scalar> next;
    for (const auto& [mono, c] : acc) {
      for (const WedgeTerm& w : omega) {
        auto wedged = wedge_monomials(mono, {w.i, w.j});
        if (!wedged) continue;
        next[wedged->second] += c * w.coeff * Scalar(wedged->first);
      }
    }
    acc = std::move(next);
  }
  std::vector<std::pair<Scalar, Monomial>> out;
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) out.emplace_back(c, mono);
  return out;
}

TwoForm conjugate_two_form(const ModelSpec& spec, const TwoForm& t) {
  TwoForm out;
  for (const WedgeTerm& w : t)
    out.push_back({w.coeff.conj(), spec.conjugation[w.i], spec.conjugation[w.j]});
  return normalize_two_form(std::move(out));
}

}  // namespace

ValidationReport validate(const ModelSpec& spec) {
  ValidationReport rep;
  int n = spec.num_generators();
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = true;
    std::string where;
    for (int k = 0; k <= n && ok; ++k) {
      if (!(total_operator_matrix(spec, k + 1) * total_operator_matrix(spec, k)).is_zero()) {
        ok = false;
        where = "degree " + std::to_string(k);
      }
    }
    add("d_squared_zero", ok, ok ? "" : "d^2 != 0 at " + where);
  }

  if (spec.is_complex()) {
    {
      // d of a generator may only have the (2,0)/(1,1) components (holo)
      // or (1,1)/(0,2) (antiholo): d = partial + bar.
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) {
        for (const WedgeTerm& w : spec.d[g]) {
          auto [p, q] = bidegree_of(spec, {w.i, w.j});
          bool holo = spec.generators[g].type == GenType::Holo;
          if ((holo && q > 1) || (!holo && p > 1)) ok = false;
        }
      }
      add("bidegree_additivity", ok, ok ? "" : "d has a component of bad order");
    }
    {
      bool ok = true;
      std::string where;
      for (int p = 0; p <= n && ok; ++p) {
        for (int q = 0; q <= n && ok; ++q) {
          Matrix dp = operator_matrix(spec, Op::Partial, p, q);
          Matrix db = operator_matrix(spec, Op::Bar, p, q);
          Matrix pp = operator_matrix(spec, Op::Partial, p + 1, q) * dp;
          Matrix bb = operator_matrix(spec, Op::Bar, p, q + 1) * db;
          Matrix anti = operator_matrix(spec, Op::Bar, p + 1, q) * dp +
                        operator_matrix(spec, Op::Partial, p, q + 1) * db;
          if (!pp.is_zero() || !bb.is_zero() || !anti.is_zero()) {
            ok = false;
            where = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
          }
        }
      }
      add("dolbeault_identities", ok, ok ? "" : "fails at " + where);
    }
    {
      bool ok = true;
      for (int g = 0; g < n; ++g) {
        int c = spec.conjugation[g];
        if (spec.conjugation[c] != g) ok = false;
        if (spec.generators[g].type == GenType::Holo &&
            spec.generators[c].type != GenType::Antiholo)
          ok = false;
        if (ok && conjugate_two_form(spec, spec.d[g]) != spec.d[c]) ok = false;
      }
      add("conjugation_compatible", ok, ok ? "" : "conj d != d conj");
    }
  }

  if (spec.omega) {
    {
      bool closed = true;
      // d(omega) via derivation on each wedge term.
      std::map<Monomial, Scalar> acc;
      for (const WedgeTerm& w : *spec.omega) {
        for (auto& [c, mono] : differentiate(spec, Monomial{w.i, w.j}))
          acc[mono] += w.coeff * c;
      }
      for (auto& [mono, c] : acc)
        if (!c.is_zero()) closed = false;
      add("omega_closed", closed, closed ? "" : "d(omega) != 0");
    }
    {
      bool codim_ok = n == 2 * spec.half_codim;
      bool nondeg = codim_ok && !wedge_power(*spec.omega, spec.half_codim).empty();
      add("omega_maximal_rank", codim_ok && nondeg,
          !codim_ok ? "generator count != 2q" : (nondeg ? "" : "omega^q = 0"));
    }
  }

  if (spec.is_complex()) {
    bool ok = spec.count(GenType::Holo) == spec.half_codim &&
              spec.count(GenType::Antiholo) == spec.half_codim;
    add("codimension", ok, ok ? "" : "holo/antiholo counts != half_codim");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in models
// ---------------------------------------------------------------------------

namespace {

ModelSpec torus_model(int q) {
  if (q < 1) throw UnknownModel("torus2q needs half_codim >= 1");
  json doc;
  doc["name"] = "torus2q(q=" + std::to_string(q) + ")";
  doc["field"] = "rational";
  doc["generators"] = json::array();
  for (int i = 1; i <= 2 * q; ++i)
    doc["generators"].push_back({{"symbol", "a" + std::to_string(i)}, {"type", "real"}});
  doc["d"] = json::object();
  json omega = json::array();
  for (int i = 1; i <= q; ++i)
    omega.push_back({{"coeff", "1"},
                     {"wedge", {"a" + std::to_string(2 * i - 1), "a" + std::to_string(2 * i)}}});
  doc["omega"] = omega;
  doc["half_codim"] = q;
  return parse_model(doc.dump());
}

const char* kHeisenbergSymplectic = R"({
  "name": "heisenberg_symplectic",
  "field": "rational",
  "generators": [
    {"symbol": "a1", "type": "real"},
    {"symbol": "a2", "type": "real"},
    {"symbol": "a3", "type": "real"},
    {"symbol": "a4", "type": "real"}
  ],
  "d": {
    "a3": [{"coeff": "-1", "wedge": ["a1", "a2"]}]
  },
  "omega": [
    {"coeff": "1", "wedge": ["a1", "a3"]},
    {"coeff": "1", "wedge": ["a2", "a4"]}
  ],
  "half_codim": 2
})";

const char* kComplexNonlemma = R"({
  "name": "complex_nonlemma",
  "field": "gaussian",
  "generators": [
    {"symbol": "t1", "type": "holo"},
    {"symbol": "t2", "type": "holo"},
    {"symbol": "t3", "type": "holo"},
    {"symbol": "c1", "type": "antiholo"},
    {"symbol": "c2", "type": "antiholo"},
    {"symbol": "c3", "type": "antiholo"}
  ],
  "d": {
    "t3": [{"coeff": "-1", "wedge": ["t1", "t2"]}],
    "c3": [{"coeff": "-1", "wedge": ["c1", "c2"]}]
  },
  "conjugation": [["t1", "c1"], ["t2", "c2"], ["t3", "c3"]],
  "half_codim": 3
})";

const char* kComplexLemma = R"({
  "name": "complex_lemma",
  "field": "gaussian",
  "generators": [
    {"symbol": "t1", "type": "holo"},
    {"symbol": "t2", "type": "holo"},
    {"symbol": "c1", "type": "antiholo"},
    {"symbol": "c2", "type": "antiholo"}
  ],
  "d": {
    "t2": [{"coeff": "-1", "wedge": ["t1", "c1"]}],
    "c2": [{"coeff": "1", "wedge": ["t1", "c1"]}]
  },
  "conjugation": [["t1", "c1"], ["t2", "c2"]],
  "omega": [
    {"coeff": "1", "wedge": ["t1", "t2"]},
    {"coeff": "1", "wedge": ["c1", "c2"]}
  ],
  "half_codim": 2
})";

}  // namespace

ModelSpec builtin(const std::string& name, int half_codim) {
  if (name == "torus2q") return torus_model(half_codim);
  if (name == "heisenberg_symplectic") return parse_model(kHeisenbergSymplectic);
  if (name == "complex_nonlemma") return parse_model(kComplexNonlemma);
  if (name == "complex_lemma") return parse_model(kComplexLemma);
  throw UnknownModel("unknown builtin model '" + name + "'");
}

ModelSpec complex_torus(int q) {
  if (q < 1) throw UnknownModel("complex_torus needs q >= 1");
  json doc;
  doc["name"] = "complex_torus(q=" + std::to_string(q) + ")";
  doc["field"] = "gaussian";
  doc["generators"] = json::array();
  for (int i = 1; i <= q; ++i)
    doc["generators"].push_back({{"symbol", "z" + std::to_string(i)}, {"type", "holo"}});
  for (int i = 1; i <= q; ++i)
    doc["generators"].push_back({{"symbol", "w" + std::to_string(i)}, {"type", "antiholo"}});
  doc["d"] = json::object();
  json conj = json::array();
  for (int i = 1; i <= q; ++i)
    conj.push_back({"z" + std::to_string(i), "w" + std::to_string(i)});
  doc["conjugation"] = conj;
  json omega = json::array();
  for (int i = 1; i <= q; ++i)
    omega.push_back({{"coeff", "i"},
                     {"wedge", {"z" + std::to_string(i), "w" + std::to_string(i)}}});
  doc["omega"] = omega;
  doc["half_codim"] = q;
  return parse_model(doc.dump());
}

ModelSpec complexify(ModelSpec spec) {
  spec.field = CoeffField::Gaussian;
  return spec;
}

}  // namespace folcoh
