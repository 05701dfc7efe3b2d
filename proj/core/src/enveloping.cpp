#include "fll/enveloping.hpp"

#include <cmath>

namespace fll {

EnvElement symmetrize(const SymPoly& p, unsigned degree_cap) {
  const LieAlgebraSpec& algebra = p.algebra();
  EnvElement out(algebra);
  for (const auto& [exponents, coeff] : p.terms()) {
    unsigned deg = 0;
    for (unsigned k : exponents) deg += k;
    if (deg > degree_cap)
      throw std::length_error("symmetrization degree exceeds cap (factorial blowup)");

    // orbit weight: k_1!...k_n!/p!, so that distinct arrangements of the
    // multiset sum to the full permutation average.
    Rational weight = coeff;
    for (unsigned k : exponents) weight *= rational_factorial(k);
    weight /= rational_factorial(deg);

    Word arrangement = word_of_exponents(exponents);
    do {
      out += EnvElement::normal_form(algebra, arrangement, weight);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return out;
}

SymPoly graded_symbol(const EnvElement& a) {
  SymPoly out(a.algebra());
  const std::size_t top = a.degree();
  for (const auto& [w, c] : a.terms())
    if (w.size() == top) out.add_term(exponents_of_word(w, a.algebra().dim()), c);
  return out;
}

std::vector<Exponents> exponents_of_degree(std::size_t dim, unsigned degree) {
  std::vector<Exponents> out;
  Exponents current(dim, 0);
  // lexicographic enumeration by recursive distribution of the degree
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == dim) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      current[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    current[pos] = 0;
  };
  if (dim == 0) return out;
  rec(rec, 0, degree);
  return out;
}

CheckReport symmetrization_bijectivity_check(const LieAlgebraSpec& algebra, unsigned max_degree) {
  CheckReport report = CheckReport::pass("pbw-bijectivity/" + algebra.name());
  const std::size_t n = algebra.dim();

  std::size_t basis_size = 0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const Exponents& e : exponents_of_degree(n, d)) {
      ++basis_size;
      const EnvElement image =
          symmetrize(SymPoly::monomial(algebra, e, Rational(1)), max_degree);
      const Word diagonal_word = word_of_exponents(e);
      bool diagonal_seen = false;
      for (const auto& [w, c] : image.terms()) {
        if (w.size() > d) {
          report.status = CheckStatus::Fail;
          report.witness = {{"monomial", e}, {"word", w}, {"reason", "degree raised"}};
          return report;
        }
        if (w.size() == d) {
          if (w != diagonal_word || c != 1) {
            report.status = CheckStatus::Fail;
            report.witness = {{"monomial", e},
                              {"word", w},
                              {"coeff", rational_str(c)},
                              {"reason", "top block is not the identity"}};
            return report;
          }
          diagonal_seen = true;
        }
      }
      if (!diagonal_seen) {
        report.status = CheckStatus::Fail;
        report.witness = {{"monomial", e}, {"reason", "missing diagonal term"}};
        return report;
      }
      // Degree-1 rows must be exactly the generators.
      if (d == 1 && image.terms().size() != 1) {
        report.status = CheckStatus::Fail;
        report.witness = {{"monomial", e}, {"reason", "generator not mapped to itself"}};
        return report;
      }
    }
  }
  report.params["max_degree"] = max_degree;
  report.params["basis_size"] = basis_size;
  report.witness = nullptr;
  return report;
}

EnvElement exp_ad_operator(const RatVec& x, const EnvElement& d, unsigned trunc) {
  if (trunc < 1) throw std::domain_error("truncation must be >= 1");
  EnvElement sum(d.algebra());
  EnvElement term = d;
  Rational inv_factorial(1);
  for (unsigned m = 0; m < trunc; ++m) {
    if (m > 0) {
      term = ad_operator(x, term);
      inv_factorial /= m;
    }
    if (term.is_zero()) break;  // nilpotent termination: the series is exact
    EnvElement scaled = term;
    scaled.scale(inv_factorial);
    sum += scaled;
  }
  return sum;
}

EnvElementD env_to_double(const EnvElement& a) {
  EnvElementD out(a.algebra());
  for (const auto& [w, c] : a.terms()) out.add_term(w, to_double(c));
  return out;
}

namespace {

double max_abs_diff_impl(const std::map<Word, double>& a, const std::map<Word, double>& b) {
  double m = 0.0;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    m = std::max(m, std::abs(c - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [w, c] : b)
    if (!a.count(w)) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

double env_max_abs_diff(const EnvElement& a, const EnvElementD& b) {
  return max_abs_diff_impl(env_to_double(a).terms(), b.terms());
}

double env_max_abs_diff(const EnvElementD& a, const EnvElementD& b) {
  return max_abs_diff_impl(a.terms(), b.terms());
}

}  // namespace fll
