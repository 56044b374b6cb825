#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aristotle/coadjoint.hpp"

namespace aristotle {

enum class Integrator { exact, symplectic_euler };

/// Parses "exact" / "symplectic_euler"; throws std::invalid_argument otherwise.
Integrator parse_integrator(std::string_view name);
std::string_view to_string(Integrator integrator);

enum class Generator { E, P };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SimulationConfig {
  double m = 1.0;
  double g = 1.0;
  double p0 = 0.0;
  double q0 = 0.0;
  double t_max = 0.0;
  double dt = 1.0;
  Integrator integrator = Integrator::exact;

  /// Throws ConfigError (or DegenerateOrbitError for m = 0 / g = 0).
  void validate() const;
};

struct TrajectorySample {
  double t = 0.0;
  double p = 0.0;
  double q = 0.0;
  double H = 0.0;

  friend constexpr bool operator==(const TrajectorySample&, const TrajectorySample&) = default;
};

/// H = m g q. There is no term depending on p.
double hamiltonian(const OrbitContext& ctx, const OrbitPoint& pt);

/// H as an observable on the chart.
AffineObservable hamiltonian_observable(const OrbitContext& ctx);

/// Time translation by t: (p + m g t, q).
OrbitPoint evolve_exact(const OrbitContext& ctx, const OrbitPoint& pt, double t);

/// d/ds phi_{exp(-s X)} at s = 0: E -> (-m g, 0), P -> (0, -1).
OrbitTangent generator_left(const OrbitContext& ctx, Generator which);

/// Forward-time velocity (dp/dt, dq/dt) = (m g, 0) = -generator_left(E).
OrbitTangent physical_drift(const OrbitContext& ctx);

/// Grid times 0, dt, 2 dt, ... up to t_max, with t_max appended when it is
/// not itself a grid point.
std::vector<double> sample_times(double t_max, double dt);

std::vector<TrajectorySample> simulate(const SimulationConfig& cfg);

/// max_i |H_i - H_0|. Throws std::invalid_argument on an empty trajectory.
double energy_drift(std::span<const TrajectorySample> samples);

}  // namespace aristotle
