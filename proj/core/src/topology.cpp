#include "fll/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fll {

namespace {

nlohmann::json set_json(const FiniteFuzzySet& s) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : s.entries()) j[k] = rational_str(v.value());
  return j;
}

}  // namespace

bool point_in(const FuzzyPoint& p, const FiniteFuzzySet& u) {
  return u.contains(p.support) && p.height <= u.membership(p.support);
}

FuzzyTopSpace::FuzzyTopSpace(FiniteFuzzySet carrier, std::vector<FiniteFuzzySet> family,
                             unsigned grid_q)
    : carrier_(std::move(carrier)), family_(std::move(family)), grid_q_(grid_q) {
  if (grid_q_ == 0) throw std::domain_error("grid denominator must be positive");
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (!family_[i].leq(carrier_))
      throw std::domain_error("family member " + std::to_string(i) +
                              " is not a fuzzy subset of the carrier");
    for (std::size_t j = i + 1; j < family_.size(); ++j)
      if (family_[i] == family_[j])
        throw std::domain_error("family contains duplicate members");
  }
}

bool FuzzyTopSpace::in_family(const FiniteFuzzySet& u) const {
  return std::find(family_.begin(), family_.end(), u) != family_.end();
}

std::vector<UnitValue> FuzzyTopSpace::height_grid() const {
  std::vector<UnitValue> grid;
  grid.reserve(grid_q_ + 1);
  for (unsigned k = 0; k <= grid_q_; ++k) grid.emplace_back(Rational(k, grid_q_));
  return grid;
}

CheckReport is_fuzzy_topology(const FuzzyTopSpace& space) {
  CheckReport report = CheckReport::pass("fuzzy-topology-axioms");
  report.params["family_size"] = space.family().size();
  report.params["grid_q"] = space.grid_q();

  // (i) constant intersections over the height grid
  for (const UnitValue& kappa : space.height_grid()) {
    const FiniteFuzzySet cut = constant_intersection(kappa, space.carrier());
    if (!space.in_family(cut)) {
      report.status = CheckStatus::Fail;
      report.witness = {{"axiom", "constant-intersection"},
                        {"kappa", rational_str(kappa.value())},
                        {"missing", set_json(cut)}};
      return report;
    }
  }

  // (ii) unions; the union of any finite subfamily is an iterated binary
  // union, so pairwise closure settles the general case
  const auto& fam = space.family();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const FiniteFuzzySet u = fuzzy_union(fam[i], fam[j]);
      if (!space.in_family(u)) {
        report.status = CheckStatus::Fail;
        report.witness = {{"axiom", "union"}, {"i", i}, {"j", j}, {"missing", set_json(u)}};
        return report;
      }
    }

  // (iii) pairwise intersections
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const FiniteFuzzySet u = fuzzy_intersection(fam[i], fam[j]);
      if (!space.in_family(u)) {
        report.status = CheckStatus::Fail;
        report.witness = {{"axiom", "intersection"}, {"i", i}, {"j", j},
                          {"missing", set_json(u)}};
        return report;
      }
    }
  return report;
}

FuzzyTopSpace generate_topology(const FiniteFuzzySet& carrier,
                                const std::vector<FiniteFuzzySet>& base, unsigned grid_q,
                                std::size_t max_family) {
  std::set<FiniteFuzzySet> family;
  for (unsigned k = 0; k <= grid_q; ++k)
    family.insert(constant_intersection(UnitValue(Rational(k, grid_q)), carrier));
  for (const auto& b : base) {
    if (!b.leq(carrier))
      throw std::domain_error("base member is not a fuzzy subset of the carrier");
    family.insert(b);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FiniteFuzzySet> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= family.insert(fuzzy_union(snapshot[i], snapshot[j])).second;
        grew |= family.insert(fuzzy_intersection(snapshot[i], snapshot[j])).second;
        if (family.size() > max_family)
          throw std::length_error("generated topology exceeds the family size cap");
      }
  }
  return FuzzyTopSpace(carrier, std::vector<FiniteFuzzySet>(family.begin(), family.end()),
                       grid_q);
}

CheckReport is_open_base(const std::vector<FiniteFuzzySet>& base, const FuzzyTopSpace& space) {
  for (const auto& b : base)
    if (!space.in_family(b)) throw std::domain_error("base is not a subfamily of the topology");

  CheckReport report = CheckReport::pass("open-base");
  report.params["base_size"] = base.size();

  const std::vector<Label> universe = space.carrier().universe();
  for (std::size_t t = 0; t < space.family().size(); ++t) {
    const FiniteFuzzySet& target = space.family()[t];
    // maximal generating subfamily: every base member below the target
    FiniteFuzzySet acc = FiniteFuzzySet::zero(universe);
    for (const auto& b : base)
      if (b.leq(target)) acc = fuzzy_union(acc, b);
    if (acc != target) {
      report.status = CheckStatus::Fail;
      report.witness = {{"member", t},
                        {"target", set_json(target)},
                        {"best_union", set_json(acc)}};
      return report;
    }
  }
  return report;
}

CheckReport is_hausdorff(const FuzzyTopSpace& space) {
  CheckReport report = CheckReport::pass("hausdorff");
  const auto grid = space.height_grid();
  const auto& fam = space.family();

  const auto max_grid_height = [&](const Label& s) -> UnitValue {
    const UnitValue cap = space.carrier().membership(s);
    UnitValue best = UnitValue::zero();
    for (const auto& h : grid)
      if (h <= cap) best = unit_max(best, h);
    return best;
  };

  const std::vector<Label> universe = space.carrier().universe();
  for (const Label& x : universe)
    for (const Label& y : universe) {
      if (x >= y) continue;
      const UnitValue px = max_grid_height(x);
      const UnitValue py = max_grid_height(y);
      if (px == UnitValue::zero() || py == UnitValue::zero()) continue;
      // Separating the highest grid points separates all lower ones too.
      bool separated = false;
      for (std::size_t i = 0; i < fam.size() && !separated; ++i) {
        if (fam[i].membership(x) < px) continue;
        for (std::size_t j = 0; j < fam.size() && !separated; ++j) {
          if (fam[j].membership(y) < py) continue;
          if (fuzzy_intersection(fam[i], fam[j]).is_zero()) separated = true;
        }
      }
      if (!separated) {
        report.status = CheckStatus::Fail;
        report.witness = {{"x", x},
                          {"height_x", rational_str(px.value())},
                          {"y", y},
                          {"height_y", rational_str(py.value())}};
        return report;
      }
    }
  return report;
}

CheckReport is_compact(const FuzzyTopSpace& space, const UnitValue& epsilon,
                       const std::vector<std::vector<std::size_t>>* covers) {
  const auto& fam = space.family();
  if (fam.size() > 12 && covers == nullptr)
    throw std::length_error(
        "exhaustive subfamily search capped at family size 12; supply candidate covers");
  CheckReport report = CheckReport::pass("compact");
  report.params["epsilon"] = rational_str(epsilon.value());

  const std::vector<Label> universe = space.carrier().universe();
  // gamma_eps: gamma - eps where gamma exceeds eps, else 0
  std::map<Label, UnitValue> eps_mu;
  for (const auto& [k, g] : space.carrier().entries()) {
    Rational v = g.value() > epsilon.value() ? g.value() - epsilon.value() : Rational(0);
    eps_mu.emplace(k, UnitValue(v));
  }
  const FiniteFuzzySet gamma_eps(std::move(eps_mu));

  const auto union_of_indices = [&](const std::vector<std::size_t>& indices) {
    FiniteFuzzySet acc = FiniteFuzzySet::zero(universe);
    for (std::size_t i : indices) acc = fuzzy_union(acc, fam.at(i));
    return acc;
  };

  // smallest subcollection of `within` dominating gamma_eps
  const auto minimal_subcover = [&](const std::vector<std::size_t>& within)
      -> std::optional<std::vector<std::size_t>> {
    const unsigned long all = 1ul << within.size();
    std::optional<std::vector<std::size_t>> best;
    for (unsigned long mask = 0; mask < all; ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < within.size(); ++i)
        if (mask & (1ul << i)) subset.push_back(within[i]);
      if (best && subset.size() >= best->size()) continue;
      if (gamma_eps.leq(union_of_indices(subset))) best = std::move(subset);
    }
    return best;
  };

  std::vector<std::vector<std::size_t>> candidate_covers;
  if (covers != nullptr) {
    for (const auto& c : *covers)
      if (union_of_indices(c) == space.carrier()) candidate_covers.push_back(c);
  } else {
    const unsigned long all = 1ul << fam.size();
    for (unsigned long mask = 0; mask < all; ++mask) {
      std::vector<std::size_t> indices;
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (mask & (1ul << i)) indices.push_back(i);
      if (union_of_indices(indices) == space.carrier())
        candidate_covers.push_back(std::move(indices));
    }
  }
  report.params["covers_checked"] = candidate_covers.size();

  // existence first: the cover itself is a finite subcollection and its
  // union is gamma >= gamma_eps, but verify literally
  const std::vector<std::size_t>* reported = nullptr;
  for (const auto& cover : candidate_covers) {
    if (!gamma_eps.leq(union_of_indices(cover))) {
      report.status = CheckStatus::Fail;
      report.witness = {{"cover", cover}};
      return report;
    }
    if (reported == nullptr || cover.size() > reported->size()) reported = &cover;
  }
  // report the smallest subcover inside the widest cover found
  if (reported != nullptr) {
    const auto sub = minimal_subcover(*reported);
    if (sub) report.params["minimal_subcover"] = *sub;
  }
  return report;
}

CheckReport is_separated(const FiniteFuzzySet& u, const FuzzyTopSpace& space) {
  // Pass = a separation exists (witness carries it); fail = none found.
  CheckReport report;
  report.name = "separated";
  report.status = CheckStatus::Fail;
  const auto& fam = space.family();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (fam[j].is_zero()) continue;
      if (fuzzy_union(fam[i], fam[j]) != u) continue;
      if (!fuzzy_intersection(fam[i], fam[j]).is_zero()) continue;
      report.status = CheckStatus::Pass;
      report.witness = {{"part_a", i}, {"part_b", j}};
      return report;
    }
  }
  return report;
}

CheckReport is_connected(const FuzzyTopSpace& space) {
  CheckReport report = CheckReport::pass("connected");
  for (std::size_t w = 0; w < space.family().size(); ++w) {
    const FiniteFuzzySet closed = relative_complement(space.carrier(), space.family()[w]);
    const CheckReport sep = is_separated(closed, space);
    if (sep.passed()) {
      report.status = CheckStatus::Fail;
      report.witness = {{"closed_complement_of", w}, {"separation", sep.witness}};
      return report;
    }
  }
  return report;
}

ProperFunction::ProperFunction(const FuzzyTopSpace& source, const FuzzyTopSpace& target,
                               std::map<Label, Label> point_map)
    : source_(&source), target_(&target), map_(std::move(point_map)) {
  for (const Label& x : source.carrier().universe()) {
    auto it = map_.find(x);
    if (it == map_.end()) throw std::domain_error("point map not total on the source");
    if (!target.carrier().contains(it->second))
      throw std::domain_error("point map leaves the target universe");
    if (source.carrier().membership(x) > target.carrier().membership(it->second))
      throw std::domain_error(
          "induced relation would exceed the target carrier (not a proper function)");
  }
}

Label ProperFunction::apply(const Label& x) const { return map_.at(x); }

bool ProperFunction::bijective() const {
  std::vector<Label> image;
  for (const auto& [x, y] : map_) image.push_back(y);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  return image == target_->carrier().universe();
}

CheckReport is_fuzzy_continuous(const ProperFunction& f) {
  CheckReport report = CheckReport::pass("fuzzy-continuous");
  const std::vector<Label> domain = f.source().carrier().universe();
  const std::function<Label(const Label&)> phi = [&f](const Label& x) { return f.apply(x); };
  for (std::size_t i = 0; i < f.target().family().size(); ++i) {
    const FiniteFuzzySet pre = preimage(phi, f.target().family()[i], domain);
    if (!f.source().in_family(pre)) {
      report.status = CheckStatus::Fail;
      report.witness = {{"open_set", i},
                        {"target_open", set_json(f.target().family()[i])},
                        {"preimage", set_json(pre)}};
      return report;
    }
  }
  return report;
}

CheckReport is_fuzzy_open(const ProperFunction& f) {
  CheckReport report = CheckReport::pass("fuzzy-open");
  const std::vector<Label> codomain = f.target().carrier().universe();
  const std::function<Label(const Label&)> phi = [&f](const Label& x) { return f.apply(x); };
  for (std::size_t i = 0; i < f.source().family().size(); ++i) {
    const FiniteFuzzySet img = zadeh_image(phi, f.source().family()[i], &codomain);
    if (!f.target().in_family(img)) {
      report.status = CheckStatus::Fail;
      report.witness = {{"open_set", i},
                        {"source_open", set_json(f.source().family()[i])},
                        {"image", set_json(img)}};
      return report;
    }
  }
  return report;
}

CheckReport is_fuzzy_homeomorphism(const ProperFunction& f) {
  CheckReport report = CheckReport::pass("fuzzy-homeomorphism");
  if (!f.bijective()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"reason", "point map is not bijective"}};
    return report;
  }
  const CheckReport cont = is_fuzzy_continuous(f);
  if (!cont.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"reason", "not continuous"}, {"detail", cont.witness}};
    return report;
  }
  const CheckReport open = is_fuzzy_open(f);
  if (!open.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"reason", "not open"}, {"detail", open.witness}};
    return report;
  }
  return report;
}

GroupTable::GroupTable(std::vector<Label> elements,
                       std::map<std::pair<Label, Label>, Label> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  std::sort(elements_.begin(), elements_.end());
  const auto known = [&](const Label& e) {
    return std::binary_search(elements_.begin(), elements_.end(), e);
  };
  for (const auto& a : elements_)
    for (const auto& b : elements_) {
      auto it = table_.find({a, b});
      if (it == table_.end() || !known(it->second))
        throw std::domain_error("multiplication table is not total/closed");
    }
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      for (const auto& c : elements_)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::domain_error("multiplication table is not associative");
  bool have_identity = false;
  for (const auto& e : elements_) {
    bool ok = true;
    for (const auto& a : elements_)
      if (mul(e, a) != a || mul(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity_ = e;
      have_identity = true;
      break;
    }
  }
  if (!have_identity) throw std::domain_error("no identity element");
  for (const auto& a : elements_) {
    bool has_inverse = false;
    for (const auto& b : elements_)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw std::domain_error("element without inverse");
  }
}

Label GroupTable::mul(const Label& a, const Label& b) const { return table_.at({a, b}); }

Label GroupTable::inverse(const Label& a) const {
  for (const auto& b : elements_)
    if (mul(a, b) == identity_) return b;
  throw std::logic_error("validated group lost an inverse");
}

GroupTable GroupTable::cyclic(unsigned n) {
  if (n == 0) throw std::domain_error("cyclic group order must be positive");
  std::vector<Label> elems;
  for (unsigned i = 0; i < n; ++i) elems.push_back("g" + std::to_string(i));
  std::map<std::pair<Label, Label>, Label> table;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      table[{elems[i], elems[j]}] = elems[(i + j) % n];
  return GroupTable(std::move(elems), std::move(table));
}

CheckReport is_compatible_group_topology(const GroupTable& group, const FuzzyTopSpace& space) {
  CheckReport report = CheckReport::pass("compatible-group-topology");
  if (space.carrier().universe() != group.elements())
    throw std::domain_error("carrier universe must be the group element set");

  const auto& fam = space.family();
  const std::vector<Label>& elems = group.elements();

  // base of the product topology: min-products of pairs of opens
  std::vector<FuzzySet<std::vector<Label>>> base;
  base.reserve(fam.size() * fam.size());
  for (const auto& v : fam)
    for (const auto& w : fam) base.push_back(min_product<Label>({v, w}));

  std::vector<std::vector<Label>> product_universe;
  for (const auto& a : elems)
    for (const auto& b : elems) product_universe.push_back({a, b});

  for (std::size_t i = 0; i < fam.size(); ++i) {
    // multiplication preimage on G x G
    std::map<std::vector<Label>, UnitValue> mu;
    for (const auto& pair : product_universe)
      mu.emplace(pair, fam[i].membership(group.mul(pair[0], pair[1])));
    const FuzzySet<std::vector<Label>> pre(std::move(mu));

    FuzzySet<std::vector<Label>> acc =
        FuzzySet<std::vector<Label>>::zero(product_universe);
    for (const auto& b : base)
      if (b.leq(pre)) acc = fuzzy_union(acc, b);
    if (acc != pre) {
      report.status = CheckStatus::Fail;
      report.witness = {{"map", "multiplication"},
                        {"open_set", i},
                        {"open", set_json(fam[i])}};
      return report;
    }
  }

  const std::function<Label(const Label&)> inv = [&group](const Label& x) {
    return group.inverse(x);
  };
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const FiniteFuzzySet pre = preimage(inv, fam[i], elems);
    if (!space.in_family(pre)) {
      report.status = CheckStatus::Fail;
      report.witness = {{"map", "inversion"}, {"open_set", i}, {"open", set_json(fam[i])}};
      return report;
    }
  }
  return report;
}

}  // namespace fll
