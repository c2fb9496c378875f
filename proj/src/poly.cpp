#include "sspkit/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sspkit/errors.hpp"
#include "sspkit/zpoly.hpp"

namespace ssp {

namespace {

// Fast paths: polynomials whose coefficients are all Integer (or at most
// Rational) are handled on raw GMP vectors instead of Scalar objects.
bool integer_kind(std::span<const Scalar> c) {
  return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.kind() == ScalarKind::Integer; });
}

bool rational_kind(std::span<const Scalar> c) {
  return std::all_of(c.begin(), c.end(), [](const Scalar& x) {
    return x.kind() == ScalarKind::Integer || x.kind() == ScalarKind::Rational;
  });
}

std::vector<mpz_class> to_mpz(std::span<const Scalar> c) {
  std::vector<mpz_class> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(x.coords()[0].get_num());
  return v;
}

std::vector<mpq_class> to_mpq(std::span<const Scalar> c) {
  std::vector<mpq_class> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(x.coords()[0]);
  return v;
}

std::vector<Scalar> from_mpz(const std::vector<mpz_class>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Scalar::integer(x));
  return out;
}

std::vector<Scalar> from_mpq(const std::vector<mpq_class>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Scalar::rational(x));
  return out;
}

}  // namespace

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::geometric(unsigned s, unsigned l) {
  std::vector<Scalar> v((l - 1) * s + 1, Scalar(0));
  for (unsigned i = 0; i < l; ++i) v[i * s] = Scalar(1);
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(Scalar::integer(c));
  return Poly(std::move(v));
}

Scalar Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

Scalar Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::negated_argument() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Scalar> v(k, Scalar(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

std::size_t Poly::low_degree() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "valuation of zero polynomial");
  std::size_t i = 0;
  while (coeffs_[i].is_zero()) ++i;
  return i;
}

bool Poly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_integer(); });
}

std::vector<mpz_class> Poly::integer_coeffs() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_integer());
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size() && i < b.coeffs_.size()) v[i] = a.coeffs_[i] + b.coeffs_[i];
    else v[i] = i < a.coeffs_.size() ? a.coeffs_[i] : b.coeffs_[i];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (integer_kind(a.coeffs_) && integer_kind(b.coeffs_))
    return Poly(from_mpz(zpoly::mul(to_mpz(a.coeffs_), to_mpz(b.coeffs_))));
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Scalar& c, const Poly& p) {
  std::vector<Scalar> v(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : v) x = c * x;
  return Poly(std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string c = coeffs_[i].to_string();
    const bool simple = coeffs_[i].is_rational();
    if (!first) os << " + ";
    if (i == 0) os << (simple ? c : "(" + c + ")");
    else {
      if (!(coeffs_[i] == Scalar(1))) os << (simple ? c : "(" + c + ")") << '*';
      os << 'u';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  // Force the kind check even when one side is zero.
  if (!p.is_zero() && !q.is_zero()) (void)join_kinds(p.leading().kind(), p.leading().order(), q.leading().kind(), q.leading().order());
  return op == PolyOp::Add ? p + q : p * q;
}

Poly power(const Poly& p, unsigned e) {
  Poly result{1};
  Poly base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly{}, p};
  const auto pc = p.coeffs(), qc0 = q.coeffs();
  if (integer_kind(pc) && integer_kind(qc0) && abs(qc0.back().coords()[0]) == 1) {
    auto rem = to_mpz(pc);
    const auto d = to_mpz(qc0);
    const bool neg = d.back() < 0;
    const std::size_t dq = rem.size() - d.size();
    std::vector<mpz_class> quot(dq + 1);
    for (std::size_t k = dq + 1; k-- > 0;) {
      mpz_class c = rem[k + d.size() - 1];
      if (neg) c = -c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
      quot[k] = std::move(c);
    }
    return {Poly(from_mpz(quot)), Poly(from_mpz(rem))};
  }
  if (rational_kind(pc) && rational_kind(qc0)) {
    auto rem = to_mpq(pc);
    const auto d = to_mpq(qc0);
    const mpq_class lead_inv = 1 / d.back();
    const std::size_t dq = rem.size() - d.size();
    std::vector<mpq_class> quot(dq + 1);
    for (std::size_t k = dq + 1; k-- > 0;) {
      mpq_class c = rem[k + d.size() - 1] * lead_inv;
      if (c == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
      quot[k] = std::move(c);
    }
    return {Poly(from_mpq(quot)), Poly(from_mpq(rem))};
  }
  std::vector<Scalar> rem(p.coeffs().begin(), p.coeffs().end());
  const auto qc = q.coeffs();
  const Scalar lead_inv = qc.back().inverse();
  const std::size_t dq = rem.size() - qc.size();
  std::vector<Scalar> quot(dq + 1, Scalar(0));
  for (std::size_t k = dq + 1; k-- > 0;) {
    Scalar c = rem[k + qc.size() - 1] * lead_inv;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < qc.size(); ++j) rem[k + j] -= c * qc[j];
    quot[k] = std::move(c);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero())
    throw Error(ErrorCode::NotDivisible, "(" + p.to_string() + ") / (" + q.to_string() + "), remainder " + rem.to_string());
  return quot;
}

unsigned val_at_minus_one(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "(1+u)-adic valuation of zero");
  // Synthetic division by u + 1.
  if (rational_kind(p.coeffs())) {
    auto c = to_mpq(p.coeffs());
    unsigned m = 0;
    while (c.size() > 1) {
      std::vector<mpq_class> q(c.size() - 1);
      mpq_class carry = 0;
      for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] - carry;
        q[i - 1] = carry;
      }
      if (c[0] != carry) break;
      c = std::move(q);
      ++m;
    }
    return m;
  }
  std::vector<Scalar> c(p.coeffs().begin(), p.coeffs().end());
  unsigned m = 0;
  while (c.size() > 1) {
    std::vector<Scalar> q(c.size() - 1, Scalar(0));
    Scalar carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] - carry;
      q[i - 1] = carry;
    }
    if (!(c[0] - carry).is_zero()) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

FactoredPoly::FactoredPoly(Scalar constant, std::vector<ShapeFactor> shape, std::vector<GeneralFactor> general)
    : constant_(std::move(constant)), shape_(std::move(shape)), general_(std::move(general)) {
  normalize();
}

void FactoredPoly::normalize() {
  for (const auto& f : shape_)
    if (f.s == 0 || f.l < 2) throw Error(ErrorCode::ParseError, "shape factor needs s >= 1 and l >= 2");
  std::map<std::pair<unsigned, unsigned>, unsigned> merged;
  for (const auto& f : shape_)
    if (f.multiplicity) merged[{f.s, f.l}] += f.multiplicity;
  shape_.clear();
  for (const auto& [key, mult] : merged) shape_.push_back({key.first, key.second, mult});
  std::erase_if(general_, [](const GeneralFactor& g) { return g.multiplicity == 0; });
}

unsigned FactoredPoly::degree() const {
  unsigned d = 0;
  for (const auto& f : shape_) d += f.multiplicity * f.s * (f.l - 1);
  for (const auto& g : general_) d += g.multiplicity * static_cast<unsigned>(g.poly.degree());
  return d;
}

Poly FactoredPoly::expand() const {
  Poly acc = Poly::constant(constant_);
  for (const auto& f : shape_) acc = acc * power(Poly::geometric(f.s, f.l), f.multiplicity);
  for (const auto& g : general_) acc = acc * power(g.poly, g.multiplicity);
  return acc;
}

FactoredPoly FactoredPoly::operator*(const FactoredPoly& o) const {
  auto shape = shape_;
  shape.insert(shape.end(), o.shape_.begin(), o.shape_.end());
  auto general = general_;
  general.insert(general.end(), o.general_.begin(), o.general_.end());
  return FactoredPoly(constant_ * o.constant_, std::move(shape), std::move(general));
}

std::string FactoredPoly::to_string() const {
  std::ostringstream os;
  os << constant_.to_string();
  for (const auto& f : shape_) {
    os << " * (" << Poly::geometric(f.s, f.l).to_string() << ')';
    if (f.multiplicity > 1) os << '^' << f.multiplicity;
  }
  for (const auto& g : general_) {
    os << " * (" << g.poly.to_string() << ')';
    if (g.multiplicity > 1) os << '^' << g.multiplicity;
  }
  return os.str();
}

Poly expand(const FactoredPoly& f) { return f.expand(); }

FactoredPoly shape_factorize(const Poly& p, const Scalar& c) {
  if (!c.is_integer() || c.sign() <= 0) throw Error(ErrorCode::NoShapeFactorization, "c must be a positive integer");
  if (p.is_zero() || !p.has_integer_coeffs() || !(p.coeff(0) == Scalar(1)))
    throw Error(ErrorCode::NoShapeFactorization, "need integer coefficients and constant term 1: " + p.to_string());
  const unsigned n = static_cast<unsigned>(p.degree());
  if (n == 0) return FactoredPoly(Scalar(1));

  std::vector<unsigned> primes;
  const mpz_class two_c = 2 * c.to_integer();
  for (unsigned l = 2; l <= n + 1; ++l)
    if (zpoly::is_prime(l) && mpz_divisible_ui_p(two_c.get_mpz_t(), l)) primes.push_back(l);

  // Multiplicity of each cyclotomic factor. A candidate factor with
  // s(l-1) <= n only involves Phi_d with d <= sl <= 2n.
  auto rest = p.integer_coeffs();
  std::vector<unsigned> target(2 * n + 1, 0);
  for (unsigned d = 2; d <= 2 * n && rest.size() > 1; ++d) {
    if (zpoly::euler_phi(d) > n) continue;
    while (auto q = zpoly::divide_exact(rest, zpoly::cyclotomic(d))) {
      rest = std::move(*q);
      ++target[d];
    }
  }
  if (rest.size() != 1 || rest[0] != 1)
    throw Error(ErrorCode::NoShapeFactorization, "not a product of cyclotomic factors 1+u^s+...: " + p.to_string());

  // 1 + u^s + ... + u^((l-1)s) = prod over d | sl, d not dividing s, of Phi_d.
  struct Candidate {
    unsigned s, l;
    std::vector<unsigned> divisors;
  };
  std::map<unsigned, std::vector<Candidate>> by_top;  // keyed by sl
  for (unsigned l : primes)
    for (unsigned s = 1; s * (l - 1) <= n; ++s) {
      Candidate cand{s, l, {}};
      for (unsigned d = 2; d <= s * l; ++d)
        if ((s * l) % d == 0 && s % d != 0) cand.divisors.push_back(d);
      by_top[s * l].push_back(std::move(cand));
    }
  for (auto& [top, list] : by_top)
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) { return a.s < b.s; });

  // Any factor containing the largest outstanding Phi_d must have sl == d.
  std::vector<ShapeFactor> chosen;
  std::function<bool()> search = [&]() -> bool {
    unsigned d = 0;
    for (unsigned i = static_cast<unsigned>(target.size()); i-- > 2;)
      if (target[i]) {
        d = i;
        break;
      }
    if (d == 0) return true;
    auto it = by_top.find(d);
    if (it == by_top.end()) return false;
    for (const auto& cand : it->second) {
      if (!std::all_of(cand.divisors.begin(), cand.divisors.end(), [&](unsigned e) { return target[e] > 0; })) continue;
      for (unsigned e : cand.divisors) --target[e];
      chosen.push_back({cand.s, cand.l, 1});
      if (search()) return true;
      chosen.pop_back();
      for (unsigned e : cand.divisors) ++target[e];
    }
    return false;
  };
  if (!search())
    throw Error(ErrorCode::NoShapeFactorization,
                "no factorization into 1+u^s+... with l prime dividing " + two_c.get_str() + ": " + p.to_string());
  FactoredPoly f(Scalar(1), chosen);
  if (!(f.expand() == p)) throw Error(ErrorCode::VerificationFailure, "shape factorization does not expand back");
  return f;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a JSON array");
  std::vector<Scalar> v;
  for (const auto& c : j) v.push_back(scalar_from_json(c));
  return Poly(std::move(v));
}

}  // namespace ssp
