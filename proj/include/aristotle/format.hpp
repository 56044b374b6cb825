#pragma once

#include <string>

namespace aristotle {

/// Shortest decimal string that reads back to the same double (at most 17
/// significant digits). Negative zero prints as "0".
std::string format_real(double value);

}  // namespace aristotle
