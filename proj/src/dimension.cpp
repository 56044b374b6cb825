#include "aristotle/dimension.hpp"

namespace aristotle {

Dimension DimensionTable::lookup(std::string_view symbol) const {
  if (symbol == "xi") return xi;
  if (symbol == "t") return t;
  if (symbol == "x") return x;
  if (symbol == "m") return m;
  if (symbol == "e") return e;
  if (symbol == "p") return p;
  if (symbol == "g") return g;
  if (symbol == "action") return action;
  throw UnknownSymbolError(symbol);
}

Dimension dimension_of(std::string_view symbol) { return DimensionTable{}.lookup(symbol); }

bool pairing_dimension_check(const DimensionTable& table) {
  const bool pairing = table.m * table.xi == table.action && table.e * table.t == table.action &&
                       table.p * table.x == table.action;
  const bool bracket =
      table.generator_P() * table.generator_E() == table.g * table.generator_M();
  return pairing && bracket;
}

}  // namespace aristotle
