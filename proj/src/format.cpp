#include "aristotle/format.hpp"

#include <array>
#include <charconv>

namespace aristotle {

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

}  // namespace aristotle
