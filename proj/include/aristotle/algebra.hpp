#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace aristotle {

/// Element of the centrally extended algebra, written p*P + e*E + m*M.
///
/// When used as the logarithm of a group element the coefficients carry the
/// units of the group coordinates: p is a length x, e a time t and m the
/// central coordinate xi (L^2 T^-1).
struct AlgebraElement {
  double p = 0.0;
  double e = 0.0;
  double m = 0.0;

  static constexpr AlgebraElement P() { return {1.0, 0.0, 0.0}; }
  static constexpr AlgebraElement E() { return {0.0, 1.0, 0.0}; }
  static constexpr AlgebraElement M() { return {0.0, 0.0, 1.0}; }

  constexpr double operator[](std::size_t i) const { return i == 0 ? p : (i == 1 ? e : m); }

  friend constexpr AlgebraElement operator+(AlgebraElement a, AlgebraElement b) {
    return {a.p + b.p, a.e + b.e, a.m + b.m};
  }
  friend constexpr AlgebraElement operator-(AlgebraElement a, AlgebraElement b) {
    return {a.p - b.p, a.e - b.e, a.m - b.m};
  }
  friend constexpr AlgebraElement operator-(AlgebraElement a) { return {-a.p, -a.e, -a.m}; }
  friend constexpr AlgebraElement operator*(double s, AlgebraElement a) {
    return {s * a.p, s * a.e, s * a.m};
  }
  friend constexpr bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  bool is_finite() const;
};

/// Index of each basis vector inside a BracketTable.
enum class Basis : std::size_t { P = 0, E = 1, M = 2 };

inline constexpr std::size_t kAlgebraDimension = 3;

/// Thrown by jacobi_violation when c[i][j][k] != -c[j][i][k] somewhere.
class AntisymmetryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
class BracketTable {
 public:
  using Constants = std::array<std::array<std::array<double, kAlgebraDimension>, kAlgebraDimension>,
                               kAlgebraDimension>;

  BracketTable() = default;

  /// The abelian algebra.
  static BracketTable zero() { return {}; }

  /// The extension with the single nontrivial relation [P,E] = g M.
  static BracketTable aristotle(double g);

  std::size_t dimension() const { return kAlgebraDimension; }

  double at(Basis i, Basis j, Basis k) const;
  double at(std::size_t i, std::size_t j, std::size_t k) const { return constants_[i][j][k]; }

  /// Sets [e_i, e_j] to have coefficient `value` on e_k and [e_j, e_i] to
  /// have -value, so the table stays antisymmetric.
  BracketTable with_bracket(Basis i, Basis j, Basis k, double value) const;

  /// Raw single-entry write; may break antisymmetry (used to build broken
  /// tables for the checker).
  BracketTable with_entry(Basis i, Basis j, Basis k, double value) const;

  bool is_antisymmetric() const;

  const Constants& constants() const { return constants_; }

 private:
  Constants constants_{};
};

/// Bilinear extension of the table.
AlgebraElement bracket(const BracketTable& table, const AlgebraElement& a, const AlgebraElement& b);

/// Largest Euclidean norm of [[x,y],z] + [[y,z],x] + [[z,x],y] over all basis
/// triples. Throws AntisymmetryError if the table is not antisymmetric.
double jacobi_violation(const BracketTable& table);

/// Cyclic Jacobi sum for arbitrary elements.
AlgebraElement jacobi_sum(const BracketTable& table, const AlgebraElement& x,
                          const AlgebraElement& y, const AlgebraElement& z);

}  // namespace aristotle
