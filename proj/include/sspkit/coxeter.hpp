#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sspkit/poly.hpp"

namespace ssp {

enum class Family { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 };

/// An irreducible finite Coxeter type. A(n-1) is stored by the symmetric
/// group degree n; I2(p) by p.
class WeylType {
 public:
  static WeylType A(unsigned n);
  static WeylType B(unsigned n);
  static WeylType D(unsigned n);
  static WeylType E6();
  static WeylType E7();
  static WeylType E8();
  static WeylType F4();
  static WeylType G2();
  static WeylType H3();
  static WeylType H4();
  static WeylType I2(unsigned p);

  /// Accepts "B6", "A4", "E8", "I2(8)", or a bare family ("B", "I2") together
  /// with `subscript` (Cartan subscript; p for I2).
  static WeylType parse(std::string_view name, std::optional<unsigned> subscript = std::nullopt);

  Family family() const { return family_; }
  /// n for A(n-1), B(n), D(n); p for I2(p); 0 for the exceptional types.
  unsigned param() const { return param_; }
  /// Number of simple reflections.
  unsigned rank() const;
  /// Subscript in Cartan notation: n-1 for A(n-1), p for I2(p).
  unsigned subscript() const;
  /// "A", "B", ..., "I2".
  std::string family_name() const;
  /// "A2", "B6", "E8", "I2(8)".
  std::string name() const;

  bool crystallographic() const;
  bool simply_laced() const;
  bool classical() const;

  friend auto operator<=>(const WeylType&, const WeylType&) = default;
  friend bool operator==(const WeylType&, const WeylType&) = default;

 private:
  WeylType(Family f, unsigned param) : family_(f), param_(param) {}
  Family family_;
  unsigned param_;
};

struct GroupData {
  unsigned simple_reflection_count = 0;
  std::vector<unsigned> exponents;
  /// Number of orbits of the opposition involution on the simple reflections.
  unsigned op_orbit_count = 0;
  mpz_class order;
};

GroupData group_data(const WeylType& t);

/// prod over all exponents e of (u^(e+1) - 1).
Poly poincare_numerator(const WeylType& t);

/// Representative registry entries for dumps and property checks:
/// A(n-1) for n <= max_n, B/D up to max_n, the exceptional types, H3, H4,
/// and I2(p) for p in {5, 7, ..., max_p}.
std::vector<WeylType> registry_types(unsigned max_n = 10, unsigned max_p = 31);

}  // namespace ssp
