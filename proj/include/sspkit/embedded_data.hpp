#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sspkit/coxeter.hpp"
#include "sspkit/poly.hpp"
#include "sspkit/scalar.hpp"

// Tabulated data that cannot be recomputed from the rank alone: the
// superspecial representation of each exceptional and noncrystallographic
// type, the explicit cell lists, the class descriptors for the minimal-length
// searches, and the non-special gamma exceptions. Everything quoted from the
// literature lives in embedded_data.cpp and nowhere else.

namespace ssp {

struct EmbeddedSsp {
  WeylType type;
  std::string label;
  unsigned dim = 0;
  unsigned a = 0;
  /// b_E from the label subscript (crystallographic exceptional types only).
  std::optional<unsigned> b;
  Scalar c;
  FactoredPoly P;
};

/// E6, E7, E8, F4, G2, H3, H4 and I2(p); nullopt for the classical families.
std::optional<EmbeddedSsp> embedded_ssp(const WeylType& t);

struct EmbeddedComponent {
  std::string label;
  unsigned c = 1;
  /// Parity source: the b_E subscript.
  unsigned b = 0;
  /// Set on a component that shares its label with a different object of
  /// the other cell.
  bool twin = false;
};

enum class CellVariant { Z, Zprime };

/// Components of Z_W / Z'_W for E6, E7, E8, F4 and G2.
std::optional<std::vector<EmbeddedComponent>> embedded_cell(const WeylType& t, CellVariant v);

/// Minimal-length class data for the exceptional types.
struct EmbeddedClass {
  WeylType type;
  /// Characteristic polynomial in the reflection representation; empty for
  /// the Coxeter class.
  std::optional<Poly> char_poly;
  bool coxeter_class = false;
  unsigned M = 0;
  std::optional<unsigned> size;
};

std::optional<EmbeddedClass> embedded_class(const WeylType& t);

struct GammaException {
  std::string label;
  bool special = false;
};

/// Non-special E with gamma_E = r (types E8 and F4); empty elsewhere.
std::vector<GammaException> gamma_exceptions(const WeylType& t);

/// Test hook: when set, one embedded datum (the c of 60_8 in the E6 cell)
/// is deliberately wrong, so every suite that touches it must fail.
void set_embedded_corruption(bool on);
bool embedded_corruption();

}  // namespace ssp
