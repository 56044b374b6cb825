#include "aristotle/coadjoint.hpp"

#include <cmath>

namespace aristotle {

DualReal pairing(const CoadjointPoint& f, const AlgebraElement& x) {
  return f.m * x.m + f.e * x.e + f.p * x.p;
}

CoadjointPoint coadjoint_act(double g, const BaseElement& a, const CoadjointPoint& f) {
  const DualReal mg = f.m * g;
  return {f.m, f.e - mg * a.h, f.p + mg * a.t};
}

AlgebraElement adjoint_act(double g, const BaseElement& a, const AlgebraElement& x) {
  const Gravity grav{g};
  const ExtendedElement conj = conjugate(grav, {0.0, a.t, a.h}, {x.m, x.e, x.p});
  return {conj.h, conj.t, conj.xi};
}

OrbitContext::OrbitContext(double m, double g) : m_(m), g_(g) {
  if (!std::isfinite(m) || !std::isfinite(g))
    throw std::invalid_argument("orbit parameters must be finite");
  if (m == 0.0) throw DegenerateOrbitError("degenerate orbit: m = 0, the orbit is a single point");
  if (g == 0.0) throw DegenerateOrbitError("degenerate orbit: g = 0, the orbit is a single point");
}

namespace {

DualReal extended_mg(const OrbitContext& ctx) {
  return static_cast<DualReal>(ctx.m()) * static_cast<DualReal>(ctx.g());
}

}  // namespace

OrbitPoint to_chart(const OrbitContext& ctx, const CoadjointPoint& f) {
  if (f.m == 0.0L) throw DegenerateOrbitError("degenerate orbit: point has m = 0");
  if (f.m != static_cast<DualReal>(ctx.m()))
    throw OrbitMismatchError("dual point does not lie on the orbit of the given context");
  return {static_cast<double>(f.p), static_cast<double>(-f.e / extended_mg(ctx))};
}

CoadjointPoint from_chart(const OrbitContext& ctx, const OrbitPoint& pt) {
  return {ctx.m(), -(extended_mg(ctx) * pt.q), pt.p};
}

OrbitPoint canonical_act(const OrbitContext& ctx, const BaseElement& a, const OrbitPoint& pt) {
  return {pt.p + ctx.mg() * a.t, pt.q + a.h};
}

std::array<std::array<double, 2>, 2> canonical_act_jacobian(const OrbitContext&, const BaseElement&) {
  // Every group element acts by a translation of the chart.
  return {{{1.0, 0.0}, {0.0, 1.0}}};
}

AffineObservable comomentum(const OrbitContext& ctx, const AlgebraElement& x) {
  return {x.p, -ctx.mg() * x.e, ctx.m() * x.m};
}

OrbitTangent hamiltonian_vector_field(const AffineObservable& f) { return {f.a_q, -f.a_p}; }

double symplectic_form(const OrbitTangent& u, const OrbitTangent& v) {
  return u.dp * v.dq - u.dq * v.dp;
}

AffineObservable poisson_bracket(const AffineObservable& f, const AffineObservable& h) {
  return {0.0, 0.0, symplectic_form(hamiltonian_vector_field(f), hamiltonian_vector_field(h))};
}

}  // namespace aristotle
