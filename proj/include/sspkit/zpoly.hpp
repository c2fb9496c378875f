#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

/// Dense integer polynomials used for cyclotomic bookkeeping and matrix
/// characteristic polynomials. Ascending coefficients, trailing zeros trimmed.
namespace ssp::zpoly {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// Quotient when the divisor (leading coefficient +-1) divides p exactly.
std::optional<ZPoly> divide_exact(const ZPoly& p, const ZPoly& divisor);

unsigned euler_phi(unsigned n);
bool is_prime(unsigned n);

/// The d-th cyclotomic polynomial. Cached; safe to call concurrently.
const ZPoly& cyclotomic(unsigned d);

}  // namespace ssp::zpoly
