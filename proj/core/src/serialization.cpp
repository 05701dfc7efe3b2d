#include "fll/serialization.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <stdexcept>

namespace fll {

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys,
                  const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string(what) + ": unknown key '" + key + "'");
  }
}

}  // namespace

nlohmann::json fuzzy_set_to_json(const FiniteFuzzySet& s) {
  nlohmann::json universe = nlohmann::json::array();
  nlohmann::json membership = nlohmann::json::object();
  for (const auto& [k, v] : s.entries()) {
    universe.push_back(k);
    membership[k] = rational_str(v.value());
  }
  return {{"universe", universe}, {"membership", membership}};
}

FiniteFuzzySet fuzzy_set_from_json(const nlohmann::json& j) {
  require_keys(j, {"universe", "membership"}, "fuzzy set");
  if (!j.contains("universe") || !j.contains("membership"))
    throw std::invalid_argument("fuzzy set: missing 'universe' or 'membership'");
  std::map<Label, UnitValue> mu;
  for (const auto& e : j.at("universe")) {
    const Label label = e.get<Label>();
    const auto& m = j.at("membership");
    if (!m.contains(label))
      throw std::invalid_argument("fuzzy set: no membership for element '" + label + "'");
    if (!mu.emplace(label, parse_unit(m.at(label).get<std::string>())).second)
      throw std::invalid_argument("fuzzy set: duplicate element '" + label + "'");
  }
  if (mu.size() != j.at("membership").size())
    throw std::invalid_argument("fuzzy set: membership mentions elements outside the universe");
  return FiniteFuzzySet(std::move(mu));
}

nlohmann::json space_to_json(const FuzzyTopSpace& space) {
  nlohmann::json family = nlohmann::json::array();
  for (const auto& u : space.family()) family.push_back(fuzzy_set_to_json(u));
  return {{"carrier", fuzzy_set_to_json(space.carrier())},
          {"family", family},
          {"grid_q", space.grid_q()}};
}

FuzzyTopSpace space_from_json(const nlohmann::json& j) {
  require_keys(j, {"carrier", "family", "grid_q"}, "space");
  FiniteFuzzySet carrier = fuzzy_set_from_json(j.at("carrier"));
  std::vector<FiniteFuzzySet> family;
  for (const auto& f : j.at("family")) family.push_back(fuzzy_set_from_json(f));
  const unsigned q = j.contains("grid_q") ? j.at("grid_q").get<unsigned>() : 10;
  return FuzzyTopSpace(std::move(carrier), std::move(family), q);
}

nlohmann::json algebra_to_json(const LieAlgebraSpec& algebra) {
  const std::size_t n = algebra.dim();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      nlohmann::json terms = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (algebra.c(i, j, k) != 0)
          terms.push_back({k, rational_str(algebra.c(i, j, k))});
      rows.push_back(terms);
    }
  return {{"dim", n}, {"labels", algebra.basis_labels()}, {"c", rows}};
}

LieAlgebraSpec algebra_from_json(const nlohmann::json& j) {
  require_keys(j, {"dim", "labels", "c", "name"}, "algebra");
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw std::invalid_argument("algebra: labels do not match dim");
  const auto& rows = j.at("c");
  if (!rows.is_array() || rows.size() != n * n)
    throw std::invalid_argument("algebra: 'c' must list all dim*dim bracket rows");
  std::vector<std::vector<std::vector<Rational>>> c(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (std::size_t flat = 0; flat < rows.size(); ++flat) {
    const std::size_t i = flat / n, jj = flat % n;
    for (const auto& term : rows[flat]) {
      if (!term.is_array() || term.size() != 2)
        throw std::invalid_argument("algebra: sparse entries must be [k, coeff] pairs");
      const std::size_t k = term[0].get<std::size_t>();
      if (k >= n) throw std::invalid_argument("algebra: basis index out of range");
      c[i][jj][k] = parse_rational(term[1].get<std::string>());
    }
  }
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
  return LieAlgebraSpec(name, std::move(labels), std::move(c));
}

const LieAlgebraSpec& intern_algebra(LieAlgebraSpec spec) {
  static std::deque<LieAlgebraSpec> interned;
  interned.push_back(std::move(spec));
  return interned.back();
}

const LieAlgebraSpec& resolve_algebra(const nlohmann::json& j) {
  if (j.is_string()) {
    const LieAlgebraSpec* builtin = LieAlgebraSpec::builtin(j.get<std::string>());
    if (!builtin)
      throw std::invalid_argument("unknown built-in algebra '" + j.get<std::string>() + "'");
    return *builtin;
  }
  return intern_algebra(algebra_from_json(j));
}

std::vector<const LieAlgebraSpec*> select_algebras(const std::string& selector) {
  if (selector.empty())
    return {&LieAlgebraSpec::so3_cross(), &LieAlgebraSpec::sl2(),
            &LieAlgebraSpec::heisenberg()};
  if (const LieAlgebraSpec* builtin = LieAlgebraSpec::builtin(selector)) return {builtin};

  static std::map<std::string, const LieAlgebraSpec*> loaded;
  auto it = loaded.find(selector);
  if (it != loaded.end()) return {it->second};
  std::ifstream in(selector);
  if (!in)
    throw std::invalid_argument("algebra '" + selector +
                                "' is neither a built-in nor a readable JSON file");
  nlohmann::json j;
  in >> j;
  const LieAlgebraSpec& spec = intern_algebra(algebra_from_json(j));
  loaded.emplace(selector, &spec);
  return {&spec};
}

FuzzyLieSet fuzzy_lie_from_json(const nlohmann::json& j) {
  require_keys(j, {"algebra", "rule", "grid", "scalars"}, "fuzzy Lie set");
  const LieAlgebraSpec& algebra = resolve_algebra(j.at("algebra"));
  const std::size_t n = algebra.dim();

  struct Piece {
    std::vector<int> pattern;  // 0 = zero, 1 = nonzero, 2 = any
    UnitValue value;
  };
  std::vector<Piece> pieces;
  const auto& rule = j.at("rule");
  require_keys(rule, {"pieces", "default"}, "rule");
  for (const auto& pj : rule.at("pieces")) {
    require_keys(pj, {"pattern", "value"}, "rule piece");
    Piece piece;
    for (const auto& pat : pj.at("pattern")) {
      const std::string p = pat.get<std::string>();
      if (p == "zero")
        piece.pattern.push_back(0);
      else if (p == "nonzero")
        piece.pattern.push_back(1);
      else if (p == "any")
        piece.pattern.push_back(2);
      else
        throw std::invalid_argument("rule pattern entries must be zero|nonzero|any");
    }
    if (piece.pattern.size() != n)
      throw std::invalid_argument("rule pattern length must equal the algebra dimension");
    piece.value = parse_unit(pj.at("value").get<std::string>());
    pieces.push_back(std::move(piece));
  }
  const UnitValue fallback = parse_unit(rule.at("default").get<std::string>());

  SampledFuzzySet::Rule eval = [pieces, fallback](const RatPoint& p) -> UnitValue {
    for (const auto& piece : pieces) {
      bool match = true;
      for (std::size_t i = 0; i < p.size() && match; ++i) {
        if (piece.pattern[i] == 0 && p[i] != 0) match = false;
        if (piece.pattern[i] == 1 && p[i] == 0) match = false;
      }
      if (match) return piece.value;
    }
    return fallback;
  };

  std::vector<RatPoint> grid;
  for (const auto& gp : j.at("grid")) {
    RatPoint point;
    for (const auto& coord : gp) point.push_back(parse_rational(coord.get<std::string>()));
    grid.push_back(std::move(point));
  }
  std::vector<Rational> scalars;
  for (const auto& s : j.at("scalars")) scalars.push_back(parse_rational(s.get<std::string>()));

  return FuzzyLieSet(algebra, SampledFuzzySet(n, std::move(eval), std::move(grid)),
                     std::move(scalars));
}

nlohmann::json env_to_json(const EnvElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back({{"word", w}, {"coeff", rational_str(c)}});
  return {{"algebra", a.algebra().name()}, {"terms", terms}};
}

EnvElement env_from_json(const nlohmann::json& j) {
  require_keys(j, {"algebra", "terms"}, "enveloping element");
  const LieAlgebraSpec& algebra = resolve_algebra(j.at("algebra"));
  EnvElement out(algebra);
  for (const auto& t : j.at("terms")) {
    require_keys(t, {"word", "coeff"}, "term");
    out.add_term(t.at("word").get<Word>(), parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

nlohmann::json sym_to_json(const SymPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"word", word_of_exponents(e)}, {"coeff", rational_str(c)}});
  return {{"algebra", p.algebra().name()}, {"terms", terms}};
}

SymPoly sym_from_json(const nlohmann::json& j) {
  require_keys(j, {"algebra", "terms"}, "symmetric element");
  const LieAlgebraSpec& algebra = resolve_algebra(j.at("algebra"));
  SymPoly out(algebra);
  for (const auto& t : j.at("terms")) {
    require_keys(t, {"word", "coeff"}, "term");
    const Word w = t.at("word").get<Word>();
    out.add_term(exponents_of_word(w, algebra.dim()),
                 parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace fll
