#include "aristotle/trajectory_io.hpp"

#include <string>

#include "aristotle/format.hpp"
#include "json.hpp"

namespace aristotle {

TrajectoryFormat parse_trajectory_format(std::string_view name) {
  if (name == "csv") return TrajectoryFormat::csv;
  if (name == "json") return TrajectoryFormat::json;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

void write_csv(std::ostream& os, std::span<const TrajectorySample> samples) {
  os << "t,p,q,H\n";
  for (const auto& s : samples)
    os << format_real(s.t) << ',' << format_real(s.p) << ',' << format_real(s.q) << ','
       << format_real(s.H) << '\n';
}

void write_json(std::ostream& os, std::span<const TrajectorySample> samples) {
  auto plain = [](double v) { return v == 0.0 ? 0.0 : v; };
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : samples)
    out.push_back({{"t", plain(s.t)}, {"p", plain(s.p)}, {"q", plain(s.q)}, {"H", plain(s.H)}});
  os << out.dump(2) << '\n';
}

void write_trajectory(std::ostream& os, std::span<const TrajectorySample> samples,
                      TrajectoryFormat format) {
  switch (format) {
    case TrajectoryFormat::csv:
      write_csv(os, samples);
      break;
    case TrajectoryFormat::json:
      write_json(os, samples);
      break;
  }
}

}  // namespace aristotle
