#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sspkit/coxeter.hpp"
#include "sspkit/poly.hpp"
#include "sspkit/report.hpp"
#include "sspkit/scalar.hpp"
#include "sspkit/symbols.hpp"

namespace ssp {

struct SuperspecialCheck {
  bool superspecial = false;
  /// k with n = (k^2+k)/2 (A), k^2+k (B), k^2 (D).
  std::optional<unsigned> k;
};

SuperspecialCheck is_superspecial(const WeylType& t);

/// The superspecial representation E_W with the data of its generic degree
/// D(u) = c^-1 u^a P(u)-shaped factorization.
struct SspDatum {
  WeylType type;
  std::string label;
  std::optional<TypeAIndex> a_index;
  std::optional<SymbolPair> symbol;
  mpz_class dim;
  unsigned a = 0;
  std::optional<unsigned> b;
  Scalar c;
  FactoredPoly P;
  std::optional<unsigned> k;
};

/// Throws NotSuperspecial.
SspDatum superspecial_datum(const WeylType& t);

struct ReconstructedDegree {
  Poly D;
  unsigned gamma = 0;
};

/// D = u^a * prod(u^(e+1) - 1) / ((-1)^deg P * c * P(-u)) by exact division.
ReconstructedDegree reconstruct_degree(const SspDatum& d);

/// q-hook formula u^n(lambda) [n]!_u / prod over cells [h]_u.
Poly generic_degree_a(const std::vector<unsigned>& partition);

/// Exceptions list re-exported for reports.
std::vector<std::string> gamma_exception_labels(const WeylType& t);

struct ProductDatum {
  bool superspecial = false;
  unsigned a = 0;
  Scalar c{1};
  FactoredPoly P;
  unsigned r = 0;
  unsigned gamma = 0;
  mpz_class dim{1};
};

/// Componentwise data for W = W_1 x ... x W_e.
ProductDatum product_rule(const std::vector<WeylType>& factors);

/// Checks of the inequality gamma <= r, uniqueness of the maximizer and the
/// shape of P for one type. Classical types need n <= guard.
VerificationReport theorem_1_3_suite(const WeylType& t, unsigned guard = 12);
/// A(n-1) for n <= max_n, B and D up to max_n, and the five exceptional types.
VerificationReport theorem_1_3_all(unsigned max_n = 12);
/// H3, H4 and I2(p) for p <= max_p.
VerificationReport theorem_3_2_suite(unsigned max_p = 31);

/// prod over t = 2..p-2 of (1 - xi^t), xi = exp(2 pi i/p), evaluated in
/// Q(xi + xi^-1).
Scalar dihedral_c_product(unsigned p);

/// "B(6)" style id fragment: family plus zero-padded subscript.
std::string case_prefix(const WeylType& t);

}  // namespace ssp
