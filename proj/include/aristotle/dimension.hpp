#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aristotle {

/// Physical dimension M^mass L^length T^time.
struct Dimension {
  int mass = 0;
  int length = 0;
  int time = 0;

  friend constexpr Dimension operator*(Dimension a, Dimension b) {
    return {a.mass + b.mass, a.length + b.length, a.time + b.time};
  }
  friend constexpr Dimension operator/(Dimension a, Dimension b) {
    return {a.mass - b.mass, a.length - b.length, a.time - b.time};
  }
  constexpr Dimension inverse() const { return {-mass, -length, -time}; }
  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Dimension& d) {
    return os << "M^" << d.mass << " L^" << d.length << " T^" << d.time;
  }
};

namespace dim {
inline constexpr Dimension dimensionless{0, 0, 0};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension action{1, 2, -1};
}  // namespace dim

class UnknownSymbolError : public std::invalid_argument {
 public:
  explicit UnknownSymbolError(std::string_view symbol)
      : std::invalid_argument("unknown dimensional symbol: " + std::string(symbol)) {}
};

/// Dimensions assigned to the group coordinates, the dual coordinates and g.
///
/// The generators P, E, M get the inverse dimension of their coordinate
/// (x, t, xi) so that x P + t E + xi M is dimensionless.
struct DimensionTable {
  Dimension xi{0, 2, -1};
  Dimension t = dim::time;
  Dimension x = dim::length;
  Dimension m = dim::mass;
  Dimension e{1, 2, -2};
  Dimension p{1, 1, -1};
  Dimension g{0, 1, -2};
  Dimension action = dim::action;

  /// Throws UnknownSymbolError for anything outside
  /// {xi, t, x, m, e, p, g, action}.
  Dimension lookup(std::string_view symbol) const;

  Dimension generator_P() const { return x.inverse(); }
  Dimension generator_E() const { return t.inverse(); }
  Dimension generator_M() const { return xi.inverse(); }
};

/// Dimension of a named quantity under the default table.
Dimension dimension_of(std::string_view symbol);

/// True iff every term of the pairing m dxi + e dt + p dx is an action and
/// the relation [P,E] = g M balances dimensionally.
bool pairing_dimension_check(const DimensionTable& table = {});

}  // namespace aristotle
