#include "aristotle/group.hpp"

#include <random>

#include "doctest.h"
#include "matrix_oracle.hpp"

using namespace aristotle;

namespace {

void check_close(const ExtendedElement& a, const ExtendedElement& b, double tol = 1e-9) {
  CHECK(std::abs(a.xi - b.xi) <= tol);
  CHECK(std::abs(a.t - b.t) <= tol);
  CHECK(std::abs(a.h - b.h) <= tol);
}

struct Sampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> coord{-10.0, 10.0};
  std::uniform_int_distribution<int> small{-10, 10};
  std::uniform_int_distribution<std::size_t> pick{0, 4};

  explicit Sampler(unsigned seed) : rng(seed) {}
  double gravity() {
    static constexpr double kValues[] = {1.0, -1.0, 2.0, -2.0, 9.81};
    return kValues[pick(rng)];
  }
  ExtendedElement element() { return {coord(rng), coord(rng), coord(rng)}; }
  ExtendedElement integer_element() {
    return {double(small(rng)), double(small(rng)), double(small(rng))};
  }
  BaseElement base() { return {coord(rng), coord(rng)}; }
};

}  // namespace

TEST_CASE("base group is additive and abelian") {
  CHECK(multiply_base({2, 3}, {4, 5}) == BaseElement{6, 8});
  CHECK(multiply_base({0, 0}, {7.5, -1}) == BaseElement{7.5, -1});
  CHECK(multiply_base({2, 3}, {4, 5}) == multiply_base({4, 5}, {2, 3}));
  CHECK(multiply_base({2, 3}, inverse_base({2, 3})) == BaseElement{});
}

TEST_CASE("spacetime_act") {
  CHECK(spacetime_act({1, 2}, {10, 20}) == SpacetimePoint{11, 22});
  CHECK(spacetime_act({}, {10, 20}) == SpacetimePoint{10, 20});
  CHECK(spacetime_act({1, 2}, spacetime_act({3, 4}, {0, 0})) == SpacetimePoint{4, 6});
  CHECK(spacetime_act(multiply_base({1, 2}, {3, 4}), {0, 0}) == SpacetimePoint{4, 6});
}

TEST_CASE("multiply_extended worked values") {
  const Gravity g{2.0};
  CHECK(multiply_extended(g, {1, 2, 3}, {4, 5, 6}) == ExtendedElement{35, 7, 9});
  CHECK(multiply_extended(g, {4, 5, 6}, {1, 2, 3}) == ExtendedElement{29, 7, 9});
  CHECK(multiply_extended(g, {}, {1, 2, 3}) == ExtendedElement{1, 2, 3});
  CHECK(multiply_extended(g, {1, 2, 3}, {}) == ExtendedElement{1, 2, 3});
}

TEST_CASE("inverse_extended worked values") {
  const Gravity g{2.0};
  CHECK(inverse_extended(g, {1, 2, 3}) == ExtendedElement{11, -2, -3});
  CHECK(inverse_extended(g, {0, 4, 0}) == ExtendedElement{0, -4, 0});
  CHECK(inverse_extended(g, {5, 0, 0}) == ExtendedElement{-5, 0, 0});
  CHECK(multiply_extended(g, {1, 2, 3}, {11, -2, -3}) == ExtendedElement{});
  CHECK(multiply_extended(g, {11, -2, -3}, {1, 2, 3}) == ExtendedElement{});
}

TEST_CASE("cocycle worked values") {
  const Gravity g{2.0};
  CHECK(cocycle(g, {2, 3}, {5, 6}) == 30.0);
  CHECK(cocycle(g, {2, 3}, {}) == 0.0);
  const BaseElement a{1, 2}, b{3, 4}, c{5, 6};
  CHECK(cocycle(g, a, b) + cocycle(g, multiply_base(a, b), c) == 72.0);
  CHECK(cocycle(g, a, multiply_base(b, c)) + cocycle(g, b, c) == 72.0);
}

TEST_CASE("canonical coordinates worked values") {
  const Gravity g{2.0};
  CHECK(to_canonical_coords(g, {10, 3, 4}) == ExtendedElement{-2, 3, 4});
  CHECK(to_canonical_coords(g, {10, 3, 0}) == ExtendedElement{10, 3, 0});
  CHECK(from_canonical_coords(g, to_canonical_coords(g, {10, 3, 4})) == ExtendedElement{10, 3, 4});
}

TEST_CASE("group law matches the matrix model") {
  Sampler s(1);
  for (int i = 0; i < 300; ++i) {
    const double gv = s.gravity();
    const Gravity g{gv};
    const auto a = s.element();
    const auto b = s.element();
    const auto prod = oracle::read_polarized(
        gv, oracle::mul(oracle::polarized(gv, a.xi, a.t, a.h), oracle::polarized(gv, b.xi, b.t, b.h)));
    check_close(multiply_extended(g, a, b), {prod.xi, prod.t, prod.h});

    const auto inv = oracle::read_polarized(
        gv, oracle::inverse_unipotent(oracle::polarized(gv, a.xi, a.t, a.h)));
    check_close(inverse_extended(g, a), {inv.xi, inv.t, inv.h});

    // exp(xi_c M + t E + h P) read in polarized coordinates.
    const auto c = to_canonical_coords(g, a);
    const auto via_exp = oracle::read_polarized(gv, oracle::canonical(gv, c.xi, c.t, c.h));
    check_close(a, {via_exp.xi, via_exp.t, via_exp.h});
  }
}

TEST_CASE("group axioms on random triples") {
  Sampler s(2);
  for (int i = 0; i < 1000; ++i) {
    const Gravity g{s.gravity()};
    const auto a = s.element();
    const auto b = s.element();
    const auto c = s.element();
    check_close(multiply_extended(g, multiply_extended(g, a, b), c),
                multiply_extended(g, a, multiply_extended(g, b, c)));
    check_close(multiply_extended(g, a, inverse_extended(g, a)), {});
    check_close(multiply_extended(g, inverse_extended(g, a), a), {});
  }
}

TEST_CASE("group axioms hold exactly on integer coordinates") {
  Sampler s(3);
  for (int i = 0; i < 1000; ++i) {
    const Gravity g{double(s.small(s.rng))};
    const auto a = s.integer_element();
    const auto b = s.integer_element();
    const auto c = s.integer_element();
    CHECK(multiply_extended(g, multiply_extended(g, a, b), c) ==
          multiply_extended(g, a, multiply_extended(g, b, c)));
    CHECK(multiply_extended(g, a, inverse_extended(g, a)) == ExtendedElement{});
    CHECK(multiply_extended(g, inverse_extended(g, a), a) == ExtendedElement{});
    const ExtendedElement z{a.xi, 0, 0};
    CHECK(multiply_extended(g, z, b) == multiply_extended(g, b, z));
  }
}

TEST_CASE("cocycle identity and coboundary") {
  Sampler s(4);
  for (int i = 0; i < 1000; ++i) {
    const Gravity g{s.gravity()};
    const auto a = s.base();
    const auto b = s.base();
    const auto c = s.base();
    CHECK(std::abs(cocycle(g, a, b) + cocycle(g, multiply_base(a, b), c) -
                   cocycle(g, a, multiply_base(b, c)) - cocycle(g, b, c)) <= 1e-9);
    const double lhs = cocycle(g, a, b) - symmetric_cocycle(g, a, b);
    const double rhs = polarization_coboundary(g, multiply_base(a, b)) -
                       polarization_coboundary(g, a) - polarization_coboundary(g, b);
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("canonical product equals conjugated polarized product") {
  Sampler s(5);
  for (int i = 0; i < 1000; ++i) {
    const Gravity g{s.gravity()};
    const auto a = s.element();
    const auto b = s.element();
    const auto via = to_canonical_coords(
        g, multiply_extended(g, from_canonical_coords(g, a), from_canonical_coords(g, b)));
    check_close(via, multiply_canonical(g, a, b));
  }
}

TEST_CASE("extension is noncommutative, central subgroup commutes") {
  const Gravity g{9.81};
  const ExtendedElement a{0, 1, 0}, b{0, 0, 1};
  CHECK(multiply_extended(g, a, b) != multiply_extended(g, b, a));
  const ExtendedElement z{3.5, 0, 0};
  CHECK(multiply_extended(g, z, a) == multiply_extended(g, a, z));
  CHECK(conjugate(g, {1, 2, 3}, z) == z);
}
