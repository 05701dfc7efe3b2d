#include "fll/group_models.hpp"

#include <cmath>

namespace fll {

namespace {

using DMat = std::vector<std::vector<double>>;

DMat to_dmat(const RatMat& m) {
  DMat out(m.size(), std::vector<double>(m.empty() ? 0 : m[0].size(), 0.0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = to_double(m[i][j]);
  return out;
}

DMat dmat_mul(const DMat& a, const DMat& b) {
  const std::size_t n = a.size();
  DMat out(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

double dmat_max_abs_diff(const DMat& a, const DMat& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

}  // namespace

std::vector<std::vector<double>> su2_adjoint_matrix(const SU2Element& g) {
  const Mat3d r = su2_adjoint(g);
  DMat out(3, std::vector<double>(3, 0.0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = r[i][j];
  return out;
}

std::vector<std::vector<double>> exp_ad_matrix(const LieAlgebraSpec& algebra, const RatVec& x,
                                               unsigned trunc) {
  const std::size_t n = algebra.dim();
  const DMat ad = to_dmat(algebra.ad_matrix(x));
  DMat sum(n, std::vector<double>(n, 0.0));
  DMat term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) term[i][i] = 1.0;
  for (unsigned m = 0; m < trunc; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
    term = dmat_mul(term, ad);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<double>(m + 1);
  }
  return sum;
}

CheckReport exp_ad_check(const LieAlgebraSpec& algebra, const RatVec& x, unsigned trunc,
                         double tol) {
  if (trunc < 1) throw std::domain_error("truncation must be >= 1");
  CheckReport report = CheckReport::pass("exp-ad/" + algebra.name());
  report.params["trunc"] = trunc;
  report.params["tol"] = tol;

  DMat group_side;
  if (algebra.name() == "so3_cross") {
    group_side = su2_adjoint_matrix(su2_exp(to_vec3d(x)));
  } else if (algebra.name() == "heisenberg") {
    const HeisPoint<double> g =
        heis_exp<double>({to_double(x[0]), to_double(x[1]), to_double(x[2])});
    group_side = heisenberg_adjoint(g);
  } else {
    throw std::domain_error("no matrix group model for algebra '" + algebra.name() + "'");
  }

  const DMat series_side = exp_ad_matrix(algebra, x, trunc);
  const double dev = dmat_max_abs_diff(group_side, series_side);
  report.max_error = dev;
  if (dev > tol) {
    report.status = CheckStatus::Fail;
    report.witness = {{"deviation", dev}, {"trunc", trunc}};
  }

  // Crude series remainder for the report: |ad X|^trunc / trunc!.
  double norm = 0.0;
  for (const auto& xi : x) norm += to_double(xi) * to_double(xi);
  norm = std::sqrt(norm);
  double remainder = 1.0;
  for (unsigned m = 1; m <= trunc; ++m) remainder *= norm / m;
  report.params["series_remainder_bound"] = remainder;
  return report;
}

}  // namespace fll
