#pragma once

#include "sofic/core/rational.hpp"
#include "sofic/metric/permutation.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sofic {

/// Either a prime field F_p (p <= 97) or the rationals (p == 0).
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  /// Canonical representative: a reduced rational, or an integer in [0, p).
  Rational normalize(const Rational& x) const;
  Rational inverse(const Rational& x) const;
  /// Nonzero elements of a prime field; throws for Q.
  std::vector<Rational> units() const;
  std::string name() const;

  bool operator==(const Field&) const = default;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t dim, Field field);
  static FieldMatrix identity(std::size_t dim, Field field);
  static FieldMatrix scalar(std::size_t dim, Field field, const Rational& c);
  static FieldMatrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static FieldMatrix diagonal(Field field, const std::vector<std::int64_t>& diag);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v) { entries_[i * dim_ + j] = field_.normalize(v); }

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix scaled(const Rational& c) const;

  std::size_t rank() const;
  Rational determinant() const;
  bool invertible() const { return determinant() != 0; }
  FieldMatrix inverse() const;

  bool operator==(const FieldMatrix& o) const = default;

 private:
  void check_compatible(const FieldMatrix& o) const;
  std::size_t dim_ = 0;
  Field field_;
  std::vector<Rational> entries_;
};

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix block_diagonal(const std::vector<FieldMatrix>& blocks);
/// diag(A, I_m), the padding used by the linear product map.
FieldMatrix hat(const FieldMatrix& a);
/// P(sigma)_{ij} = 1 iff i = sigma(j).
FieldMatrix permutation_matrix(const Permutation& sigma, Field field);

/// rk(M - N) / n.
Rational rank_distance(const FieldMatrix& m, const FieldMatrix& n);
/// min over nonzero lambda of rk(M - lambda N) / n.
Rational pseudo_rank_distance(const FieldMatrix& m, const FieldMatrix& n);

/// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) over Q.
std::vector<Rational> characteristic_polynomial(const FieldMatrix& m);
/// Distinct rational roots of a polynomial with rational coefficients
/// (c_0 first). Throws std::domain_error when the cleared coefficients are
/// too large to factor by trial division.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// All of GL_n(F_p) for tiny n and p.
std::vector<FieldMatrix> general_linear_group(std::size_t n, Field field);

void to_json(nlohmann::json& j, const Field& f);
void from_json(const nlohmann::json& j, Field& f);
void to_json(nlohmann::json& j, const FieldMatrix& m);
/// Expects {"field": ..., "rows": [[...], ...]} with integer or rational entries.
FieldMatrix field_matrix_from_json(const nlohmann::json& j);

struct GeneralLinearGroup {
  using Element = FieldMatrix;
  using Distance = Rational;
  std::size_t dim;
  Field field;

  Element identity() const { return FieldMatrix::identity(dim, field); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  Distance distance(const Element& a, const Element& b) const { return rank_distance(a, b); }
};

}  // namespace sofic
