#include "aristotle/dimension.hpp"

#include "doctest.h"

using namespace aristotle;

TEST_CASE("dimension_of") {
  CHECK(dimension_of("xi") == Dimension{0, 2, -1});
  CHECK(dimension_of("t") == Dimension{0, 0, 1});
  CHECK(dimension_of("x") == Dimension{0, 1, 0});
  CHECK(dimension_of("m") == Dimension{1, 0, 0});
  CHECK(dimension_of("e") == Dimension{1, 2, -2});
  CHECK(dimension_of("p") == Dimension{1, 1, -1});
  CHECK(dimension_of("g") == Dimension{0, 1, -2});
  CHECK(dimension_of("action") == Dimension{1, 2, -1});
  CHECK_THROWS_AS(dimension_of("velocity"), UnknownSymbolError);
  CHECK_THROWS_AS(dimension_of(""), UnknownSymbolError);
}

TEST_CASE("g is forced by [P,E] = g M") {
  const DimensionTable table;
  // P ~ L^-1, E ~ T^-1, M ~ T L^-2.
  CHECK(table.generator_P() == Dimension{0, -1, 0});
  CHECK(table.generator_E() == Dimension{0, 0, -1});
  CHECK(table.generator_M() == Dimension{0, -2, 1});
  CHECK(table.generator_P() * table.generator_E() / table.generator_M() == dimension_of("g"));
}

TEST_CASE("every pairing term is an action") {
  CHECK(dimension_of("m") * dimension_of("xi") == dim::action);
  CHECK(dimension_of("e") * dimension_of("t") == dim::action);
  CHECK(dimension_of("p") * dimension_of("x") == dim::action);
  CHECK(pairing_dimension_check());
}

TEST_CASE("pairing_dimension_check detects mismatches") {
  DimensionTable energy_as_mass;
  energy_as_mass.e = dim::mass;
  CHECK_FALSE(pairing_dimension_check(energy_as_mass));

  DimensionTable dimensionless_g;
  dimensionless_g.g = dim::dimensionless;
  CHECK_FALSE(pairing_dimension_check(dimensionless_g));
}

TEST_CASE("exponent arithmetic") {
  const Dimension a{1, 2, -1};
  const Dimension b{0, -1, 3};
  CHECK(a * b == Dimension{1, 1, 2});
  CHECK(a / a == dim::dimensionless);
  CHECK(a.inverse() == Dimension{-1, -2, 1});
}
