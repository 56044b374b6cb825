#pragma once

#include <array>
#include <limits>
#include <stdexcept>

#include "aristotle/algebra.hpp"
#include "aristotle/group.hpp"

namespace aristotle {

/// Scalar for coordinates on the dual of the algebra.
///
/// The chart q = -e/(m g) has to invert exactly: a point (p, q) sent to the
/// dual space and back must come out bit-identical. The product m g q is not
/// representable in a double, so e is held with at least 11 extra mantissa
/// bits, which makes the final rounding of -e/(m g) to double land on q.
using DualReal = long double;
static_assert(std::numeric_limits<DualReal>::digits >= 64,
              "exact chart inversion needs an extended-precision long double");

/// Point (m, e, p) of the dual space: mass, energy, linear momentum.
struct CoadjointPoint {
  DualReal m = 0.0L;
  DualReal e = 0.0L;
  DualReal p = 0.0L;

  friend constexpr bool operator==(const CoadjointPoint&, const CoadjointPoint&) = default;
};

/// <(m, e, p), (dxi, dt, dx)> = m dxi + e dt + p dx.
DualReal pairing(const CoadjointPoint& f, const AlgebraElement& x);

/// (m, e - m g h, p + m g t). Points with m = 0 are fixed.
CoadjointPoint coadjoint_act(double g, const BaseElement& a, const CoadjointPoint& f);

/// Ad_a x = (dxi + g (h dt - t dx), dt, dx), computed as the group
/// conjugation a x a^-1 with a lifted to (0, t, h).
AlgebraElement adjoint_act(double g, const BaseElement& a, const AlgebraElement& x);

/// Raised when m = 0 or g = 0: the orbit is a single point and has no
/// (p, q) chart.
class DegenerateOrbitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a dual point is read through the chart of a different orbit.
class OrbitMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orbit parameters (m, g); both are nonzero for a valid context.
class OrbitContext {
 public:
  /// Throws DegenerateOrbitError if m or g is zero, std::invalid_argument if
  /// either is not finite.
  OrbitContext(double m, double g);

  double m() const { return m_; }
  double g() const { return g_; }
  /// m g, rounded once.
  double mg() const { return m_ * g_; }

 private:
  double m_;
  double g_;
};

/// Canonical coordinates on the orbit; sigma = dp ^ dq.
struct OrbitPoint {
  double p = 0.0;
  double q = 0.0;

  friend constexpr bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

/// Tangent vector dp d/dp + dq d/dq. Every field used here is constant on the
/// chart, so one value describes it everywhere.
struct OrbitTangent {
  double dp = 0.0;
  double dq = 0.0;

  friend constexpr bool operator==(const OrbitTangent&, const OrbitTangent&) = default;
};

/// a_p p + a_q q + c.
struct AffineObservable {
  double a_p = 0.0;
  double a_q = 0.0;
  double c = 0.0;

  double operator()(const OrbitPoint& pt) const { return a_p * pt.p + a_q * pt.q + c; }

  friend constexpr bool operator==(const AffineObservable&, const AffineObservable&) = default;
};

OrbitPoint to_chart(const OrbitContext& ctx, const CoadjointPoint& f);
CoadjointPoint from_chart(const OrbitContext& ctx, const OrbitPoint& pt);

/// (p + m g t, q + h).
OrbitPoint canonical_act(const OrbitContext& ctx, const BaseElement& a, const OrbitPoint& pt);

/// Jacobian d(p', q')/d(p, q) of canonical_act; row-major.
std::array<std::array<double, 2>, 2> canonical_act_jacobian(const OrbitContext& ctx,
                                                            const BaseElement& a);

/// Linear extension of P -> p, E -> -m g q, M -> m.
AffineObservable comomentum(const OrbitContext& ctx, const AlgebraElement& x);

/// X_f with i_{X_f} sigma = df: (dp, dq) = (a_q, -a_p).
OrbitTangent hamiltonian_vector_field(const AffineObservable& f);

/// sigma(u, v) for sigma = dp ^ dq.
double symplectic_form(const OrbitTangent& u, const OrbitTangent& v);

/// {f, h} = sigma(X_f, X_h), a constant for affine observables.
AffineObservable poisson_bracket(const AffineObservable& f, const AffineObservable& h);

}  // namespace aristotle
