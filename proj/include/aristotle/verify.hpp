#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace aristotle {

/// Deterministic input stream for one property. The stream depends only on
/// (seed, property name), so properties can run in any order or in parallel.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::string_view property);

  double uniform(double lo, double hi);
  /// Integer-valued double in [lo, hi]; products and sums of these stay exact.
  double integer(int lo, int hi);
  /// One of the test accelerations {+-1, +-2, 9.81}.
  double gravity();
  /// Nonzero mass of random sign, |m| in [0.1, 10].
  double mass();

 private:
  std::mt19937_64 engine_;
};

struct Property {
  std::string name;
  /// Returns the largest violation seen over `cases` draws.
  std::function<double(SampleStream&, int cases)> run;
  /// Overrides the suite tolerance for checks with their own error model
  /// (finite differences).
  std::optional<double> tolerance{};
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<PropertyResult> entries;
  std::uint64_t seed = 0;
  int cases = 0;
  double tol = 0.0;

  bool passed() const;
};

/// Every identity checked by `verify`, in report order.
const std::vector<Property>& verification_properties();

/// Throws std::invalid_argument when cases < 1 or tol is not a positive
/// finite number.
VerifyReport run_verify(std::uint64_t seed, int cases, double tol);

/// One line per property: `PASS|FAIL <name> max_violation=<value>`.
void print_report(std::ostream& os, const VerifyReport& report);

}  // namespace aristotle
