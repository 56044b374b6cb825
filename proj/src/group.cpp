#include "aristotle/group.hpp"

namespace aristotle {

BaseElement multiply_base(const BaseElement& a, const BaseElement& b) {
  return {a.t + b.t, a.h + b.h};
}

BaseElement inverse_base(const BaseElement& a) { return {-a.t, -a.h}; }

SpacetimePoint spacetime_act(const BaseElement& a, const SpacetimePoint& event) {
  return {event.t + a.t, event.x + a.h};
}

double cocycle(Gravity g, const BaseElement& a, const BaseElement& b) {
  return g.value() * a.h * b.t;
}

ExtendedElement multiply_extended(Gravity g, const ExtendedElement& a, const ExtendedElement& b) {
#ifdef ARISTOTLE_DROP_COCYCLE
  // Mutation build for the verification suite: the extension degenerates to
  // a direct product.
  (void)g;
  return {a.xi + b.xi, a.t + b.t, a.h + b.h};
#else
  return {a.xi + b.xi + cocycle(g, a.base(), b.base()), a.t + b.t, a.h + b.h};
#endif
}

ExtendedElement inverse_extended(Gravity g, const ExtendedElement& a) {
  return {-a.xi + cocycle(g, a.base(), a.base()), -a.t, -a.h};
}

ExtendedElement conjugate(Gravity g, const ExtendedElement& a, const ExtendedElement& b) {
  return multiply_extended(g, multiply_extended(g, a, b), inverse_extended(g, a));
}

double polarization_coboundary(Gravity g, const BaseElement& a) {
  return 0.5 * g.value() * a.t * a.h;
}

double symmetric_cocycle(Gravity g, const BaseElement& a, const BaseElement& b) {
  return 0.5 * g.value() * (a.h * b.t - a.t * b.h);
}

ExtendedElement to_canonical_coords(Gravity g, const ExtendedElement& a) {
  return {a.xi - polarization_coboundary(g, a.base()), a.t, a.h};
}

ExtendedElement from_canonical_coords(Gravity g, const ExtendedElement& a) {
  return {a.xi + polarization_coboundary(g, a.base()), a.t, a.h};
}

ExtendedElement multiply_canonical(Gravity g, const ExtendedElement& a, const ExtendedElement& b) {
  return {a.xi + b.xi + symmetric_cocycle(g, a.base(), b.base()), a.t + b.t, a.h + b.h};
}

}  // namespace aristotle
