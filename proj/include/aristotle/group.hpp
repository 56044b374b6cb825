#pragma once

#include <cmath>

namespace aristotle {

/// Element (t, h) of the one-dimensional space-time translation group.
/// Time shift t in T, space shift h in L.
struct BaseElement {
  double t = 0.0;
  double h = 0.0;

  friend constexpr bool operator==(const BaseElement&, const BaseElement&) = default;
};

/// Element (xi, t, h) of the central extension; xi is in L^2 T^-1.
///
/// Coordinates are polarized: (xi, t, h) stands for exp(xi M) exp(t E) exp(h P),
/// the ordering under which the product picks up the cocycle g h t'.
struct ExtendedElement {
  double xi = 0.0;
  double t = 0.0;
  double h = 0.0;

  constexpr BaseElement base() const { return {t, h}; }
  friend constexpr bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

/// Gravitational acceleration g (L T^-2), the extension parameter.
class Gravity {
 public:
  constexpr explicit Gravity(double g) : g_(g) {}
  constexpr double value() const { return g_; }

 private:
  double g_;
};

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;

  friend constexpr bool operator==(const SpacetimePoint&, const SpacetimePoint&) = default;
};

BaseElement multiply_base(const BaseElement& a, const BaseElement& b);
BaseElement inverse_base(const BaseElement& a);

/// Action on an event (t0, x0): t0 -> t0 + t, x0 -> x0 + h.
SpacetimePoint spacetime_act(const BaseElement& a, const SpacetimePoint& event);

/// The extension 2-cocycle c(a, b) = g a.h b.t.
double cocycle(Gravity g, const BaseElement& a, const BaseElement& b);

/// (xi + xi' + g h t', t + t', h + h').
ExtendedElement multiply_extended(Gravity g, const ExtendedElement& a, const ExtendedElement& b);

/// (-xi + g h t, -t, -h).
ExtendedElement inverse_extended(Gravity g, const ExtendedElement& a);

/// a b a^-1.
ExtendedElement conjugate(Gravity g, const ExtendedElement& a, const ExtendedElement& b);

/// beta(t, h) = g t h / 2, the coboundary relating polarized and canonical
/// coordinates.
double polarization_coboundary(Gravity g, const BaseElement& a);

/// Symmetric cocycle g (h t' - t h') / 2 of the single-exponential chart.
double symmetric_cocycle(Gravity g, const BaseElement& a, const BaseElement& b);

/// Polarized -> canonical: exp(xi M) exp(t E) exp(h P) = exp((xi - g t h / 2) M + t E + h P).
ExtendedElement to_canonical_coords(Gravity g, const ExtendedElement& a);
ExtendedElement from_canonical_coords(Gravity g, const ExtendedElement& a);

/// Group product written directly in canonical coordinates.
ExtendedElement multiply_canonical(Gravity g, const ExtendedElement& a, const ExtendedElement& b);

}  // namespace aristotle
