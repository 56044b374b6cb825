#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>

#include "aristotle/dynamics.hpp"

namespace aristotle {

enum class TrajectoryFormat { csv, json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
TrajectoryFormat parse_trajectory_format(std::string_view name);

/// Header `t,p,q,H`, then one row per sample, shortest round-trip numbers.
void write_csv(std::ostream& os, std::span<const TrajectorySample> samples);

/// Array of {"t", "p", "q", "H"} records.
void write_json(std::ostream& os, std::span<const TrajectorySample> samples);

void write_trajectory(std::ostream& os, std::span<const TrajectorySample> samples,
                      TrajectoryFormat format);

}  // namespace aristotle
