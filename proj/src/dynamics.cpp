#include "aristotle/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aristotle {

Integrator parse_integrator(std::string_view name) {
  if (name == "exact") return Integrator::exact;
  if (name == "symplectic_euler") return Integrator::symplectic_euler;
  throw std::invalid_argument("unknown integrator: " + std::string(name));
}

std::string_view to_string(Integrator integrator) {
  switch (integrator) {
    case Integrator::exact:
      return "exact";
    case Integrator::symplectic_euler:
      return "symplectic_euler";
  }
  return "unknown";
}

void SimulationConfig::validate() const {
  for (double v : {m, g, p0, q0, t_max, dt})
    if (!std::isfinite(v)) throw ConfigError("simulation parameters must be finite");
  if (dt <= 0.0) throw ConfigError("dt must be positive");
  if (t_max < 0.0) throw ConfigError("t_max must be non-negative");
  if (t_max > 0.0 && dt > t_max) throw ConfigError("dt must not exceed t_max");
  if (t_max / dt > 1e8) throw ConfigError("t_max / dt exceeds the sample limit of 1e8");
  OrbitContext{m, g};
}

double hamiltonian(const OrbitContext& ctx, const OrbitPoint& pt) { return ctx.mg() * pt.q; }

AffineObservable hamiltonian_observable(const OrbitContext& ctx) { return {0.0, ctx.mg(), 0.0}; }

OrbitPoint evolve_exact(const OrbitContext& ctx, const OrbitPoint& pt, double t) {
  return canonical_act(ctx, {t, 0.0}, pt);
}

OrbitTangent generator_left(const OrbitContext& ctx, Generator which) {
  switch (which) {
    case Generator::E:
      return {-ctx.mg(), 0.0};
    case Generator::P:
      return {0.0, -1.0};
  }
  return {};
}

OrbitTangent physical_drift(const OrbitContext& ctx) {
  const OrbitTangent left = generator_left(ctx, Generator::E);
  return {-left.dp, -left.dq + 0.0};
}

std::vector<double> sample_times(double t_max, double dt) {
  auto steps = static_cast<long long>(std::floor(t_max / dt));
  if (static_cast<double>(steps) * dt > t_max) --steps;

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(steps) + 2);
  for (long long i = 0; i <= steps; ++i) times.push_back(static_cast<double>(i) * dt);
  if (times.back() < t_max) times.push_back(t_max);
  return times;
}

std::vector<TrajectorySample> simulate(const SimulationConfig& cfg) {
  cfg.validate();
  const OrbitContext ctx{cfg.m, cfg.g};
  const OrbitPoint start{cfg.p0, cfg.q0};
  const std::vector<double> times = sample_times(cfg.t_max, cfg.dt);

  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  auto emit = [&](double t, const OrbitPoint& pt) {
    out.push_back({t, pt.p, pt.q, hamiltonian(ctx, pt)});
  };

  switch (cfg.integrator) {
    case Integrator::exact:
      for (double t : times) emit(t, evolve_exact(ctx, start, t));
      break;
    case Integrator::symplectic_euler: {
      const OrbitTangent drift = physical_drift(ctx);
      OrbitPoint pt = start;
      emit(times.front(), pt);
      for (std::size_t i = 1; i < times.size(); ++i) {
        const double h = times[i] - times[i - 1];
        // Kick then drift. The drift reads the updated momentum, which
        // H = m g q never uses.
        pt.p += drift.dp * h;
        pt.q += drift.dq * h;
        emit(times[i], pt);
      }
      break;
    }
  }
  return out;
}

double energy_drift(std::span<const TrajectorySample> samples) {
  if (samples.empty()) throw std::invalid_argument("energy_drift needs at least one sample");
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(s.H - samples.front().H));
  return worst;
}

}  // namespace aristotle
