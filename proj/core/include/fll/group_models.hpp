#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fll/lie_algebra.hpp"
#include "fll/rational.hpp"
#include "fll/report.hpp"

namespace fll {

// ---------------------------------------------------------------------------
// SU(2) as unit quaternions. The algebra coordinates (x1,x2,x3) correspond to
// the generators normalized so that exp(t*e_k) = (cos(t/2), sin(t/2)*e_k);
// with that choice the bracket of coordinate vectors is the cross product,
// matching the so3_cross structure constants.
// ---------------------------------------------------------------------------

struct SU2Element {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  SU2Element() = default;
  SU2Element(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(n > 0.5) || !std::isfinite(n))
      throw std::domain_error("quaternion too far from the unit sphere to renormalize");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
  }

  static SU2Element identity() { return SU2Element(); }
};

inline SU2Element su2_mul(const SU2Element& a, const SU2Element& b) {
  return SU2Element(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                    a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                    a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                    a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
}

inline SU2Element su2_inv(const SU2Element& g) { return SU2Element(g.w, -g.x, -g.y, -g.z); }

using Vec3d = std::array<double, 3>;

inline SU2Element su2_exp(const Vec3d& coords) {
  const double n = std::sqrt(coords[0] * coords[0] + coords[1] * coords[1] + coords[2] * coords[2]);
  if (n == 0.0) return SU2Element::identity();
  const double half = 0.5 * n;
  const double s = std::sin(half) / n;
  return SU2Element(std::cos(half), s * coords[0], s * coords[1], s * coords[2]);
}

inline SU2Element su2_exp_scaled(const Vec3d& dir, double t) {
  return su2_exp({dir[0] * t, dir[1] * t, dir[2] * t});
}

using Mat3d = std::array<Vec3d, 3>;

/// Conjugation pulled back to algebra coordinates: the rotation matrix of the
/// unit quaternion, acting on (x1,x2,x3).
inline Mat3d su2_adjoint(const SU2Element& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  return Mat3d{Vec3d{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
               Vec3d{2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
               Vec3d{2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

// ---------------------------------------------------------------------------
// Heisenberg group as upper unitriangular 3x3 matrices [[1,a,c],[0,1,b],[0,0,1]],
// parametrized by (a,b,c). Everything here is polynomial, so the same code
// serves an exact rational instantiation and a floating one.
// ---------------------------------------------------------------------------

template <class T>
struct HeisPoint {
  T a{}, b{}, c{};
};

template <class T>
HeisPoint<T> heis_mul(const HeisPoint<T>& g, const HeisPoint<T>& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

template <class T>
HeisPoint<T> heis_inv(const HeisPoint<T>& g) {
  return {-g.a, -g.b, g.a * g.b - g.c};
}

/// exp(x*E12 + y*E23 + z*E13); the matrix square of the argument is x*y*E13,
/// so the series terminates after the quadratic term.
template <class T>
HeisPoint<T> heis_exp(const std::array<T, 3>& coords) {
  return {coords[0], coords[1], coords[2] + coords[0] * coords[1] / 2};
}

/// Ad(g) on algebra coordinates (v1,v2,v3) -> (v1, v2, v3 + a*v2 - b*v1).
template <class T>
std::vector<std::vector<T>> heisenberg_adjoint(const HeisPoint<T>& g) {
  std::vector<std::vector<T>> m(3, std::vector<T>(3, T{}));
  m[0][0] = T{1};
  m[1][1] = T{1};
  m[2][2] = T{1};
  m[2][0] = -g.b;
  m[2][1] = g.a;
  return m;
}

// ---------------------------------------------------------------------------
// Model wrappers consumed by the finite-difference operator machinery.
// ---------------------------------------------------------------------------

struct Su2Model {
  using Element = SU2Element;
  const LieAlgebraSpec& algebra() const { return LieAlgebraSpec::so3_cross(); }
  Element identity() const { return SU2Element::identity(); }
  Element mul(const Element& a, const Element& b) const { return su2_mul(a, b); }
  Element exp(const Vec3d& dir, double t) const { return su2_exp_scaled(dir, t); }
};

struct HeisenbergModel {
  using Element = HeisPoint<double>;
  const LieAlgebraSpec& algebra() const { return LieAlgebraSpec::heisenberg(); }
  Element identity() const { return Element{}; }
  Element mul(const Element& a, const Element& b) const { return heis_mul(a, b); }
  Element exp(const Vec3d& dir, double t) const {
    return heis_exp<double>({dir[0] * t, dir[1] * t, dir[2] * t});
  }
};

inline Vec3d to_vec3d(const RatVec& x) {
  if (x.size() != 3) throw std::domain_error("expected 3 coordinates");
  return {to_double(x[0]), to_double(x[1]), to_double(x[2])};
}

/// Compares Ad(exp X) computed in the matrix model against the truncated
/// series sum_{m<trunc} (ad X)^m / m!. Supported algebras: so3_cross (unit
/// quaternions) and heisenberg (unipotent matrices).
CheckReport exp_ad_check(const LieAlgebraSpec& algebra, const RatVec& x, unsigned trunc,
                         double tol = 1e-10);

/// Ad(g) for the quaternion model as a plain double matrix in basis order.
std::vector<std::vector<double>> su2_adjoint_matrix(const SU2Element& g);

/// Truncated matrix exponential of ad X (doubles).
std::vector<std::vector<double>> exp_ad_matrix(const LieAlgebraSpec& algebra, const RatVec& x,
                                               unsigned trunc);

}  // namespace fll
