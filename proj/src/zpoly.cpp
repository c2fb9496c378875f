#include "sspkit/zpoly.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "sspkit/errors.hpp"

namespace ssp::zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& p, const ZPoly& divisor) {
  if (divisor.empty()) throw Error(ErrorCode::DivisionByZero, "integer polynomial division by zero");
  const mpz_class& lead = divisor.back();
  if (lead != 1 && lead != -1) throw Error(ErrorCode::NotDivisible, "divisor must have unit leading coefficient");
  if (p.empty()) return ZPoly{};
  if (p.size() < divisor.size()) return std::nullopt;
  ZPoly rem = p;
  const std::size_t dq = p.size() - divisor.size();
  ZPoly quot(dq + 1, 0);
  for (std::size_t k = dq + 1; k-- > 0;) {
    mpz_class c = rem[k + divisor.size() - 1] * lead;  // lead is its own inverse
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[k + j] -= c * divisor[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  trim(quot);
  return quot;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

const ZPoly& cyclotomic(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<ZPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  if (d == 0) throw Error(ErrorCode::InvalidRank, "cyclotomic index must be positive");
  // u^d - 1 = prod_{e | d} Phi_e(u)
  ZPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = divide_exact(p, cyclotomic(e));
    p = std::move(*q);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(d, std::make_unique<ZPoly>(std::move(p)));
  return *it->second;
}

}  // namespace ssp::zpoly
