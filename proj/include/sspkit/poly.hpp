#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sspkit/scalar.hpp"

namespace ssp {

/// Dense univariate polynomial over exact scalars, ascending degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  /// Integer coefficients, ascending.
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);
  /// 1 + u^s + u^(2s) + ... + u^((l-1)s)
  static Poly geometric(unsigned s, unsigned l);
  static Poly from_integers(const std::vector<mpz_class>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Scalar eval(const Scalar& x) const;
  /// p(-u)
  Poly negated_argument() const;
  /// u^k p(u)
  Poly shifted(std::size_t k) const;
  /// Order of vanishing at u = 0.
  std::size_t low_degree() const;

  bool has_integer_coeffs() const;
  std::vector<mpz_class> integer_coeffs() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

enum class PolyOp { Add, Mul };

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);
Poly power(const Poly& p, unsigned e);

/// Quotient and remainder; q must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
/// r with q*r == p; throws NotDivisible otherwise.
Poly exact_div(const Poly& p, const Poly& q);
/// Largest m with (1+u)^m dividing p; throws ZeroPolynomial for p == 0.
unsigned val_at_minus_one(const Poly& p);

/// One factor (1 + u^s + ... + u^((l-1)s))^multiplicity.
struct ShapeFactor {
  unsigned s = 1;
  unsigned l = 2;
  unsigned multiplicity = 1;

  friend bool operator==(const ShapeFactor&, const ShapeFactor&) = default;
};

/// An arbitrary polynomial factor, used where the coefficients leave Q.
struct GeneralFactor {
  Poly poly;
  unsigned multiplicity = 1;

  friend bool operator==(const GeneralFactor&, const GeneralFactor&) = default;
};

/// constant * prod shape factors * prod general factors.
class FactoredPoly {
 public:
  FactoredPoly() : constant_(1) {}
  explicit FactoredPoly(Scalar constant, std::vector<ShapeFactor> shape = {}, std::vector<GeneralFactor> general = {});

  const Scalar& constant() const { return constant_; }
  const std::vector<ShapeFactor>& shape() const { return shape_; }
  const std::vector<GeneralFactor>& general() const { return general_; }
  bool is_pure_shape() const { return general_.empty(); }

  /// Degree of the expansion, sum multiplicity * s * (l-1) plus general degrees.
  unsigned degree() const;
  Poly expand() const;

  FactoredPoly operator*(const FactoredPoly& o) const;
  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

  std::string to_string() const;

 private:
  void normalize();
  Scalar constant_;
  std::vector<ShapeFactor> shape_;
  std::vector<GeneralFactor> general_;
};

Poly expand(const FactoredPoly& f);

/// Writes p (integer coefficients, constant term 1) as a product of
/// 1 + u^s + ... + u^((l-1)s) with every l a prime dividing 2c.
/// Among valid factorizations, the factor covering the largest outstanding
/// cyclotomic index prefers the smallest s (equivalently the largest l).
/// Throws NoShapeFactorization when none exists.
FactoredPoly shape_factorize(const Poly& p, const Scalar& c);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace ssp
