#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace ssp {

/// Coefficient domains. Integer and Rational embed into every other kind;
/// QuadRoot5 and RealCyclotomic(p) do not embed into each other.
enum class ScalarKind { Integer, Rational, QuadRoot5, RealCyclotomic };

const char* to_string(ScalarKind kind);

/// Data for the real cyclotomic field Q(theta), theta = 2cos(2*pi/p).
/// Elements are stored in the power basis 1, theta, ..., theta^(d-1).
struct RealCyclotomicField {
  unsigned p = 0;
  unsigned degree = 0;
  /// Monic minimal polynomial of theta, ascending coefficients, length degree+1.
  std::vector<mpq_class> minpoly;
};

/// Shared, lazily built field data. Thread-safe.
const RealCyclotomicField& real_cyclotomic_field(unsigned p);

/// An exact number from Z, Q, Q(sqrt5) or Q(zeta_p + zeta_p^-1).
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT: integers convert implicitly

  static Scalar integer(const mpz_class& value);
  static Scalar rational(const mpq_class& value);
  static Scalar rational(long num, long den);
  /// a + b*sqrt(5)
  static Scalar quad_root5(const mpq_class& a, const mpq_class& b);
  /// Golden ratio (1 + sqrt5)/2.
  static Scalar golden_ratio();
  /// sum coords[i] * theta^i, reduced modulo the minimal polynomial.
  static Scalar real_cyclotomic(unsigned p, std::vector<mpq_class> coords);
  /// theta = zeta_p + zeta_p^-1 = 2cos(2*pi/p).
  static Scalar cyclotomic_generator(unsigned p);

  ScalarKind kind() const { return kind_; }
  /// p for RealCyclotomic, 0 otherwise.
  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  /// Throws ScalarKindMismatch if the value is irrational.
  mpq_class to_rational() const;
  mpz_class to_integer() const;

  /// Exact sign: -1, 0 or +1 in the real embedding where sqrt5 > 0 and
  /// theta = 2cos(2*pi/p).
  int sign() const;
  Scalar inverse() const;
  double to_double() const;
  std::string to_string() const;

  /// Same value re-expressed in a wider kind. Throws ScalarKindMismatch.
  Scalar embedded(ScalarKind kind, unsigned order) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(ScalarKind kind, unsigned order, std::vector<mpq_class> coords);
  void normalize();

  ScalarKind kind_;
  unsigned order_;
  std::vector<mpq_class> coords_;
};

/// Smallest kind containing both; throws ScalarKindMismatch when there is none.
std::pair<ScalarKind, unsigned> join_kinds(ScalarKind a, unsigned pa, ScalarKind b, unsigned pb);

/// "5", "-3/4", ["a","b"] for a + b*sqrt5, {"p":p,"theta_coords":[...]}.
nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace ssp
