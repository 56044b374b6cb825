#include "aristotle/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace aristotle {

namespace {

constexpr std::size_t idx(Basis b) { return static_cast<std::size_t>(b); }

double norm(const AlgebraElement& a) { return std::sqrt(a.p * a.p + a.e * a.e + a.m * a.m); }

}  // namespace

bool AlgebraElement::is_finite() const {
  return std::isfinite(p) && std::isfinite(e) && std::isfinite(m);
}

BracketTable BracketTable::aristotle(double g) {
  return BracketTable{}.with_bracket(Basis::P, Basis::E, Basis::M, g);
}

double BracketTable::at(Basis i, Basis j, Basis k) const {
  return constants_[idx(i)][idx(j)][idx(k)];
}

BracketTable BracketTable::with_bracket(Basis i, Basis j, Basis k, double value) const {
  BracketTable out = *this;
  out.constants_[idx(i)][idx(j)][idx(k)] = value;
  out.constants_[idx(j)][idx(i)][idx(k)] = i == j ? 0.0 : -value;
  return out;
}

BracketTable BracketTable::with_entry(Basis i, Basis j, Basis k, double value) const {
  BracketTable out = *this;
  out.constants_[idx(i)][idx(j)][idx(k)] = value;
  return out;
}

bool BracketTable::is_antisymmetric() const {
  for (std::size_t i = 0; i < kAlgebraDimension; ++i)
    for (std::size_t j = 0; j < kAlgebraDimension; ++j)
      for (std::size_t k = 0; k < kAlgebraDimension; ++k)
        if (constants_[i][j][k] != -constants_[j][i][k]) return false;
  return true;
}

AlgebraElement bracket(const BracketTable& table, const AlgebraElement& a, const AlgebraElement& b) {
  std::array<double, kAlgebraDimension> out{};
  for (std::size_t i = 0; i < kAlgebraDimension; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < kAlgebraDimension; ++j) {
      if (b[j] == 0.0) continue;
      const double w = a[i] * b[j];
      for (std::size_t k = 0; k < kAlgebraDimension; ++k) out[k] += w * table.at(i, j, k);
    }
  }
  return {out[0], out[1], out[2]};
}

AlgebraElement jacobi_sum(const BracketTable& table, const AlgebraElement& x,
                          const AlgebraElement& y, const AlgebraElement& z) {
  return bracket(table, bracket(table, x, y), z) + bracket(table, bracket(table, y, z), x) +
         bracket(table, bracket(table, z, x), y);
}

double jacobi_violation(const BracketTable& table) {
  if (!table.is_antisymmetric())
    throw AntisymmetryError("structure constants are not antisymmetric");

  const std::array<AlgebraElement, kAlgebraDimension> basis{AlgebraElement::P(), AlgebraElement::E(),
                                                             AlgebraElement::M()};
  double worst = 0.0;
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) worst = std::max(worst, norm(jacobi_sum(table, x, y, z)));
  return worst;
}

}  // namespace aristotle
