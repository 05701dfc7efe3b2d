#include "fll/lie_algebra.hpp"

#include <stdexcept>

namespace fll {

namespace {

std::vector<std::vector<std::vector<Rational>>> zero_table(std::size_t n) {
  return std::vector<std::vector<std::vector<Rational>>>(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::vector<std::string> basis_labels,
                               std::vector<std::vector<std::vector<Rational>>> c)
    : name_(std::move(name)), labels_(std::move(basis_labels)), c_(std::move(c)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::domain_error("algebra dimension must be positive");
  if (c_.size() != n) throw std::domain_error("structure constant table has wrong shape");
  for (const auto& row : c_) {
    if (row.size() != n) throw std::domain_error("structure constant table has wrong shape");
    for (const auto& cell : row)
      if (cell.size() != n) throw std::domain_error("structure constant table has wrong shape");
  }
}

RatVec LieAlgebraSpec::bracket(const RatVec& x, const RatVec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::domain_error("coordinate length mismatch");
  RatVec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) out[k] += xy * c_[i][j][k];
    }
  }
  return out;
}

RatMat LieAlgebraSpec::ad_matrix(const RatVec& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::domain_error("coordinate length mismatch");
  RatMat m(n, RatVec(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0 && c_[i][j][k] != 0) m[k][j] += x[i] * c_[i][j][k];
  return m;
}

const LieAlgebraSpec& LieAlgebraSpec::so3_cross() {
  static const LieAlgebraSpec spec = [] {
    auto c = zero_table(3);
    // [e_i, e_j] = e_i x e_j
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    c[1][2][0] = 1;
    c[2][1][0] = -1;
    c[2][0][1] = 1;
    c[0][2][1] = -1;
    return LieAlgebraSpec("so3_cross", {"X1", "X2", "X3"}, c);
  }();
  return spec;
}

const LieAlgebraSpec& LieAlgebraSpec::sl2() {
  static const LieAlgebraSpec spec = [] {
    auto c = zero_table(3);
    // Basis order H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H.
    c[0][1][1] = 2;
    c[1][0][1] = -2;
    c[0][2][2] = -2;
    c[2][0][2] = 2;
    c[1][2][0] = 1;
    c[2][1][0] = -1;
    return LieAlgebraSpec("sl2", {"H", "E", "F"}, c);
  }();
  return spec;
}

const LieAlgebraSpec& LieAlgebraSpec::heisenberg() {
  static const LieAlgebraSpec spec = [] {
    auto c = zero_table(3);
    // [X,Y] = Z, Z central.
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    return LieAlgebraSpec("heisenberg", {"X", "Y", "Z"}, c);
  }();
  return spec;
}

const LieAlgebraSpec* LieAlgebraSpec::builtin(const std::string& name) {
  if (name == "so3_cross") return &so3_cross();
  if (name == "sl2") return &sl2();
  if (name == "heisenberg") return &heisenberg();
  return nullptr;
}

CheckReport jacobi_check(const LieAlgebraSpec& algebra) {
  const std::size_t n = algebra.dim();
  CheckReport report = CheckReport::pass("jacobi/" + algebra.name());
  report.params["dim"] = n;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (algebra.c(i, j, k) != -algebra.c(j, i, k)) {
          report.status = CheckStatus::Fail;
          report.witness = {{"axiom", "antisymmetry"},
                            {"i", i},
                            {"j", j},
                            {"k", k},
                            {"c_ijk", rational_str(algebra.c(i, j, k))},
                            {"c_jik", rational_str(algebra.c(j, i, k))}};
          return report;
        }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum = 0;
          for (std::size_t m = 0; m < n; ++m) {
            sum += algebra.c(i, j, m) * algebra.c(m, k, l);
            sum += algebra.c(j, k, m) * algebra.c(m, i, l);
            sum += algebra.c(k, i, m) * algebra.c(m, j, l);
          }
          if (sum != 0) {
            report.status = CheckStatus::Fail;
            report.witness = {{"axiom", "jacobi"}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                              {"residual", rational_str(sum)}};
            return report;
          }
        }
  return report;
}

RatVec rat_vec(std::initializer_list<long> entries) {
  RatVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rational(0)); }

RatVec mat_apply(const RatMat& m, const RatVec& x) {
  RatVec out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  return out;
}

}  // namespace fll
