#include "aristotle/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aristotle/algebra.hpp"
#include "aristotle/coadjoint.hpp"
#include "aristotle/dimension.hpp"
#include "aristotle/dynamics.hpp"
#include "aristotle/format.hpp"
#include "aristotle/group.hpp"

namespace aristotle {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kFiniteDifferenceTolerance = 1e-5;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

double diff(double a, double b) { return std::abs(a - b); }
double diff(long double a, long double b) { return static_cast<double>(std::abs(a - b)); }

double diff(const AlgebraElement& a, const AlgebraElement& b) {
  return std::max({diff(a.p, b.p), diff(a.e, b.e), diff(a.m, b.m)});
}
double diff(const ExtendedElement& a, const ExtendedElement& b) {
  return std::max({diff(a.xi, b.xi), diff(a.t, b.t), diff(a.h, b.h)});
}
double diff(const SpacetimePoint& a, const SpacetimePoint& b) {
  return std::max(diff(a.t, b.t), diff(a.x, b.x));
}
double diff(const CoadjointPoint& a, const CoadjointPoint& b) {
  return std::max({diff(a.m, b.m), diff(a.e, b.e), diff(a.p, b.p)});
}
double diff(const OrbitPoint& a, const OrbitPoint& b) {
  return std::max(diff(a.p, b.p), diff(a.q, b.q));
}
double diff(const OrbitTangent& a, const OrbitTangent& b) {
  return std::max(diff(a.dp, b.dp), diff(a.dq, b.dq));
}

double magnitude(const AlgebraElement& a) {
  return std::max({std::abs(a.p), std::abs(a.e), std::abs(a.m)});
}

AlgebraElement random_algebra(SampleStream& s) {
  return {s.uniform(-10, 10), s.uniform(-10, 10), s.uniform(-10, 10)};
}
BaseElement random_base(SampleStream& s) { return {s.uniform(-10, 10), s.uniform(-10, 10)}; }
ExtendedElement random_extended(SampleStream& s) {
  return {s.uniform(-10, 10), s.uniform(-10, 10), s.uniform(-10, 10)};
}
CoadjointPoint random_dual(SampleStream& s) {
  return {s.mass(), s.uniform(-100, 100), s.uniform(-100, 100)};
}
OrbitPoint random_orbit_point(SampleStream& s) { return {s.uniform(-10, 10), s.uniform(-10, 10)}; }
AffineObservable random_observable(SampleStream& s) {
  return {s.uniform(-10, 10), s.uniform(-10, 10), s.uniform(-10, 10)};
}

SimulationConfig random_config(SampleStream& s, Integrator integrator) {
  SimulationConfig cfg;
  cfg.m = s.mass();
  cfg.g = s.gravity();
  cfg.p0 = s.uniform(-10, 10);
  cfg.q0 = s.uniform(-10, 10);
  cfg.dt = s.uniform(0.05, 1.0);
  cfg.t_max = s.uniform(0.0, 1.0) < 0.1 ? 0.0 : s.uniform(cfg.dt, 10.0);
  cfg.integrator = integrator;
  return cfg;
}

template <typename Fn>
double worst_over(int cases, Fn&& fn) {
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const double v = fn();
    // NaN counts as an infinite violation.
    worst = std::isnan(v) ? kInfinity : std::max(worst, v);
  }
  return worst;
}

std::vector<Property> build_properties() {
  std::vector<Property> props;

  // Algebra.
  props.push_back({"bracket_antisymmetry", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto table = BracketTable::aristotle(s.gravity());
                       const auto a = random_algebra(s);
                       const auto b = random_algebra(s);
                       return diff(bracket(table, a, b), -bracket(table, b, a));
                     });
                   }});
  props.push_back({"bracket_bilinearity", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto table = BracketTable::aristotle(s.gravity());
                       const double alpha = s.uniform(-10, 10);
                       const auto a = random_algebra(s);
                       const auto b = random_algebra(s);
                       const auto c = random_algebra(s);
                       const auto lhs = bracket(table, alpha * a + b, c);
                       const auto rhs = alpha * bracket(table, a, c) + bracket(table, b, c);
                       return diff(lhs, rhs) / std::max(1.0, magnitude(rhs));
                     });
                   }});
  props.push_back({"jacobi_identity", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto table = BracketTable::aristotle(s.gravity());
                       const auto sum =
                           jacobi_sum(table, random_algebra(s), random_algebra(s), random_algebra(s));
                       return std::max(magnitude(sum), jacobi_violation(table));
                     });
                   }});
  props.push_back({"pairing_dimensions", [](SampleStream&, int) {
                     return pairing_dimension_check() ? 0.0 : 1.0;
                   }});

  // Group law.
  props.push_back({"group_associativity", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_extended(s);
                       const auto b = random_extended(s);
                       const auto c = random_extended(s);
                       return diff(multiply_extended(g, multiply_extended(g, a, b), c),
                                   multiply_extended(g, a, multiply_extended(g, b, c)));
                     });
                   }});
  props.push_back({"group_identity", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_extended(s);
                       return std::max(diff(multiply_extended(g, ExtendedElement{}, a), a),
                                       diff(multiply_extended(g, a, ExtendedElement{}), a));
                     });
                   }});
  props.push_back({"group_inverse", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_extended(s);
                       const auto inv = inverse_extended(g, a);
                       return std::max(diff(multiply_extended(g, a, inv), ExtendedElement{}),
                                       diff(multiply_extended(g, inv, a), ExtendedElement{}));
                     });
                   }});
  props.push_back({"cocycle_identity", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_base(s);
                       const auto b = random_base(s);
                       const auto c = random_base(s);
                       return diff(cocycle(g, a, b) + cocycle(g, multiply_base(a, b), c),
                                   cocycle(g, a, multiply_base(b, c)) + cocycle(g, b, c));
                     });
                   }});
  props.push_back({"cocycle_coboundary", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_base(s);
                       const auto b = random_base(s);
                       const double delta = polarization_coboundary(g, multiply_base(a, b)) -
                                            polarization_coboundary(g, a) -
                                            polarization_coboundary(g, b);
                       return diff(cocycle(g, a, b) - symmetric_cocycle(g, a, b), delta);
                     });
                   }});
  props.push_back({"canonical_coordinates", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const auto a = random_extended(s);
                       const auto b = random_extended(s);
                       const auto via_polarized = to_canonical_coords(
                           g, multiply_extended(g, from_canonical_coords(g, a),
                                                from_canonical_coords(g, b)));
                       return diff(via_polarized, multiply_canonical(g, a, b));
                     });
                   }});
  props.push_back({"spacetime_action", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto a = random_base(s);
                       const auto b = random_base(s);
                       const SpacetimePoint pt{s.uniform(-10, 10), s.uniform(-10, 10)};
                       return std::max(diff(spacetime_act(multiply_base(a, b), pt),
                                            spacetime_act(a, spacetime_act(b, pt))),
                                       diff(spacetime_act(BaseElement{}, pt), pt));
                     });
                   }});
  props.push_back({"central_subgroup", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const Gravity g{s.gravity()};
                       const ExtendedElement z{s.uniform(-10, 10), 0.0, 0.0};
                       const auto a = random_extended(s);
                       return diff(multiply_extended(g, z, a), multiply_extended(g, a, z));
                     });
                   }});

  // Coadjoint orbit.
  props.push_back({"coadjoint_mass_invariance", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const double g = s.gravity();
                       const auto f = random_dual(s);
                       return diff(coadjoint_act(g, random_base(s), f).m, f.m);
                     });
                   }});
  props.push_back({"coadjoint_action_law", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const double g = s.gravity();
                       const auto a = random_base(s);
                       const auto b = random_base(s);
                       const auto f = random_dual(s);
                       return diff(coadjoint_act(g, a, coadjoint_act(g, b, f)),
                                   coadjoint_act(g, multiply_base(a, b), f));
                     });
                   }});
  props.push_back({"pairing_equivariance", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const double g = s.gravity();
                       const auto a = random_base(s);
                       const auto f = random_dual(s);
                       const auto x = random_algebra(s);
                       return diff(pairing(coadjoint_act(g, a, f), x),
                                   pairing(f, adjoint_act(g, inverse_base(a), x)));
                     });
                   }});
  props.push_back({"chart_roundtrip", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto pt = random_orbit_point(s);
                       const auto back = to_chart(ctx, from_chart(ctx, pt));
                       // Any difference at all is a failure.
                       return back == pt ? 0.0 : std::max(1.0, diff(back, pt));
                     });
                   }});
  props.push_back({"chart_equivariance", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const double g = s.gravity();
                       auto f = random_dual(s);
                       const OrbitContext ctx{static_cast<double>(f.m), g};
                       const auto a = random_base(s);
                       return diff(to_chart(ctx, coadjoint_act(g, a, f)),
                                   canonical_act(ctx, a, to_chart(ctx, f)));
                     });
                   }});
  props.push_back({"symplectic_jacobian",
                   [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto a = random_base(s);
                       const auto pt = random_orbit_point(s);
                       const auto jac = canonical_act_jacobian(ctx, a);
                       const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
                       // Central differences of an affine map recover its
                       // linear part up to rounding.
                       constexpr double step = 1e-3;
                       double fd_error = 0.0;
                       for (int col = 0; col < 2; ++col) {
                         OrbitPoint lo = pt;
                         OrbitPoint hi = pt;
                         (col == 0 ? lo.p : lo.q) -= step;
                         (col == 0 ? hi.p : hi.q) += step;
                         const auto flo = canonical_act(ctx, a, lo);
                         const auto fhi = canonical_act(ctx, a, hi);
                         fd_error = std::max(
                             {fd_error, diff((fhi.p - flo.p) / (2 * step), jac[0][col]),
                              diff((fhi.q - flo.q) / (2 * step), jac[1][col])});
                       }
                       return std::max(diff(det, 1.0), fd_error);
                     });
                   },
                   kFiniteDifferenceTolerance});
  props.push_back({"poisson_antisymmetry", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto f = random_observable(s);
                       const auto h = random_observable(s);
                       const auto fh = poisson_bracket(f, h);
                       const auto hf = poisson_bracket(h, f);
                       return std::max(diff(fh.c, -hf.c), diff(poisson_bracket(f, f).c, 0.0));
                     });
                   }});
  props.push_back({"poisson_jacobi", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto f = random_observable(s);
                       const auto h = random_observable(s);
                       const auto k = random_observable(s);
                       const double sum = poisson_bracket(poisson_bracket(f, h), k).c +
                                          poisson_bracket(poisson_bracket(h, k), f).c +
                                          poisson_bracket(poisson_bracket(k, f), h).c;
                       return std::abs(sum);
                     });
                   }});
  props.push_back({"comomentum_bracket_sign", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto table = BracketTable::aristotle(ctx.g());
                       const auto x = random_algebra(s);
                       const auto y = random_algebra(s);
                       const double basis_violation =
                           diff(poisson_bracket(comomentum(ctx, AlgebraElement::P()),
                                                comomentum(ctx, AlgebraElement::E()))
                                    .c,
                                -ctx.g() * ctx.m());
                       // {lambda(x), lambda(y)} = -lambda([x, y]).
                       const auto lhs = poisson_bracket(comomentum(ctx, x), comomentum(ctx, y));
                       const auto rhs = -1.0 * comomentum(ctx, bracket(table, x, y)).c;
                       return std::max(basis_violation,
                                       diff(lhs.c, rhs) / std::max(1.0, std::abs(rhs)));
                     });
                   }});
  props.push_back({"hamiltonian_vector_fields", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto field_p = hamiltonian_vector_field(comomentum(ctx, AlgebraElement::P()));
                       const auto field_e = hamiltonian_vector_field(comomentum(ctx, AlgebraElement::E()));
                       return std::max({diff(field_p, OrbitTangent{0.0, -1.0}),
                                        diff(field_e, OrbitTangent{-ctx.m() * ctx.g(), 0.0}),
                                        diff(field_p, generator_left(ctx, Generator::P)),
                                        diff(field_e, generator_left(ctx, Generator::E))});
                     });
                   }});

  // Dynamics.
  props.push_back({"static_particle", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       double worst = 0.0;
                       for (auto integ : {Integrator::exact, Integrator::symplectic_euler}) {
                         const auto cfg = random_config(s, integ);
                         for (const auto& sample : simulate(cfg))
                           worst = std::max(worst, diff(sample.q, cfg.q0));
                       }
                       return worst;
                     });
                   }});
  props.push_back({"energy_conservation", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       double worst = 0.0;
                       for (auto integ : {Integrator::exact, Integrator::symplectic_euler}) {
                         const auto traj = simulate(random_config(s, integ));
                         worst = std::max(worst, energy_drift(traj));
                       }
                       return worst;
                     });
                   }});
  props.push_back({"momentum_law", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const auto cfg = random_config(s, Integrator::exact);
                       const double mg = cfg.m * cfg.g;
                       double worst = 0.0;
                       for (const auto& sample : simulate(cfg)) {
                         const double expected = mg * sample.t;
                         worst = std::max(worst, diff(sample.p - cfg.p0, expected) /
                                                     std::max(1.0, std::abs(sample.p)));
                       }
                       return worst;
                     });
                   }});
  props.push_back({"euler_matches_exact", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       auto cfg = random_config(s, Integrator::exact);
                       const auto exact = simulate(cfg);
                       cfg.integrator = Integrator::symplectic_euler;
                       const auto euler = simulate(cfg);
                       if (exact.size() != euler.size()) return kInfinity;
                       double worst = 0.0;
                       for (std::size_t i = 0; i < exact.size(); ++i) {
                         const double scale = std::max(1.0, std::abs(exact[i].p));
                         worst = std::max({worst, diff(exact[i].t, euler[i].t),
                                           diff(exact[i].p, euler[i].p) / scale,
                                           diff(exact[i].q, euler[i].q), diff(exact[i].H, euler[i].H)});
                       }
                       return worst;
                     });
                   }});
  props.push_back({"generator_finite_difference",
                   [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto pt = random_orbit_point(s);
                       const double step = kFiniteDifferenceStep;
                       auto central = [&](const OrbitPoint& plus, const OrbitPoint& minus) {
                         return OrbitTangent{(plus.p - minus.p) / (2 * step),
                                             (plus.q - minus.q) / (2 * step)};
                       };
                       const auto forward = central(evolve_exact(ctx, pt, step), evolve_exact(ctx, pt, -step));
                       const auto left_e = central(canonical_act(ctx, {-step, 0.0}, pt),
                                                   canonical_act(ctx, {step, 0.0}, pt));
                       const auto left_p = central(canonical_act(ctx, {0.0, -step}, pt),
                                                   canonical_act(ctx, {0.0, step}, pt));
                       const auto gen_e = generator_left(ctx, Generator::E);
                       return std::max({diff(forward, physical_drift(ctx)),
                                        diff(forward, OrbitTangent{-gen_e.dp, -gen_e.dq}),
                                        diff(left_e, generator_left(ctx, Generator::E)),
                                        diff(left_p, generator_left(ctx, Generator::P))});
                     });
                   },
                   kFiniteDifferenceTolerance});
  props.push_back({"hamilton_equations", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const auto H = hamiltonian_observable(ctx);
                       const AffineObservable p_obs{1.0, 0.0, 0.0};
                       const AffineObservable q_obs{0.0, 1.0, 0.0};
                       const OrbitTangent from_brackets{poisson_bracket(p_obs, H).c,
                                                        poisson_bracket(q_obs, H).c};
                       const auto pt = random_orbit_point(s);
                       return std::max({diff(from_brackets, physical_drift(ctx)),
                                        diff(hamiltonian_vector_field(H), physical_drift(ctx)),
                                        diff(H(pt), hamiltonian(ctx, pt))});
                     });
                   }});
  props.push_back({"no_kinetic_term", [](SampleStream& s, int n) {
                     return worst_over(n, [&] {
                       const OrbitContext ctx{s.mass(), s.gravity()};
                       const double q = s.uniform(-10, 10);
                       const double reference = hamiltonian(ctx, {0.0, q});
                       return diff(hamiltonian(ctx, {s.uniform(-1e3, 1e3), q}), reference);
                     });
                   }});

  return props;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::string_view property)
    : engine_(splitmix64(seed ^ fnv1a(property))) {}

double SampleStream::uniform(double lo, double hi) {
  const double unit = std::ldexp(static_cast<double>(engine_() >> 11), -53);
  return lo + (hi - lo) * unit;
}

double SampleStream::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return static_cast<double>(lo + static_cast<int>(engine_() % span));
}

double SampleStream::gravity() {
  static constexpr std::array<double, 5> kValues{1.0, -1.0, 2.0, -2.0, 9.81};
  return kValues[engine_() % kValues.size()];
}

double SampleStream::mass() {
  const double magnitude = uniform(0.1, 10.0);
  return (engine_() & 1U) ? magnitude : -magnitude;
}

bool VerifyReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

const std::vector<Property>& verification_properties() {
  static const std::vector<Property> props = build_properties();
  return props;
}

VerifyReport run_verify(std::uint64_t seed, int cases, double tol) {
  if (cases < 1) throw std::invalid_argument("cases must be at least 1");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be positive");

  VerifyReport report;
  report.seed = seed;
  report.cases = cases;
  report.tol = tol;
  for (const auto& prop : verification_properties()) {
    SampleStream stream(seed, prop.name);
    const double violation = prop.run(stream, cases);
    const double limit = prop.tolerance.value_or(tol);
    report.entries.push_back({prop.name, violation <= limit, violation, limit});
  }
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
  for (const auto& entry : report.entries)
    os << (entry.passed ? "PASS " : "FAIL ") << entry.name
       << " max_violation=" << format_real(entry.max_violation) << '\n';
}

}  // namespace aristotle
