#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sspkit/coxeter.hpp"
#include "sspkit/embedded_data.hpp"
#include "sspkit/report.hpp"
#include "sspkit/symbols.hpp"

namespace ssp {

struct CellComponent {
  std::string label;
  std::optional<SymbolPair> index;
  mpz_class c;
  /// 0 even, 1 odd. Classical: parity of the sum of Y; exceptional: parity
  /// of the b subscript.
  unsigned b_parity = 0;
  bool twin = false;
  bool normal_form = true;

  friend bool operator==(const CellComponent&, const CellComponent&) = default;
};

struct CellDatum {
  WeylType type;
  CellVariant variant;
  std::vector<CellComponent> components;
};

/// Z_W (any superspecial W) or Z'_W (B, F4, G2). Throws NotSuperspecial,
/// VariantUnavailable, UnsupportedType.
CellDatum cell(const WeylType& t, CellVariant v);

struct IdentitySums {
  mpq_class inverse_sum;
  mpq_class signed_sum;
};

IdentitySums identity_sums(const CellDatum& d);

/// sum 1/c = 1 and (outside type A) sum (-1)^b / c = 0, plus structural
/// checks for the classical recipes.
VerificationReport verify_identities(const CellDatum& d);

/// Every cell of the standard sample: B2, G2, F4 (both variants), E6, E7, E8,
/// A at superspecial n <= 10, B for k <= 3 (both variants), D for k <= 4.
VerificationReport cells_suite();

std::string variant_name(CellVariant v);

}  // namespace ssp
