#include "sspkit/scalar.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "sspkit/errors.hpp"
#include "sspkit/zpoly.hpp"

namespace ssp {

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  qtrim(out);
  return out;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  qtrim(out);
  return out;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  qtrim(a);
  qtrim(q);
  return {q, a};
}

/// p mod minpoly, padded to `degree` coordinates.
QPoly reduce(QPoly p, const RealCyclotomicField& f) {
  qtrim(p);
  if (p.size() > f.degree) p = qdivmod(std::move(p), f.minpoly).second;
  p.resize(f.degree, 0);
  return p;
}

/// Inverse of a modulo the (irreducible) minimal polynomial via extended Euclid.
QPoly inverse_mod(const QPoly& a, const RealCyclotomicField& f) {
  QPoly r0 = f.minpoly, r1 = a;
  QPoly s0, s1{1};
  qtrim(r1);
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  for (auto& c : s1) c /= r1[0];
  return reduce(s1, f);
}

RealCyclotomicField build_field(unsigned p) {
  if (p < 3) throw Error(ErrorCode::InvalidRank, "real cyclotomic field needs p >= 3");
  const auto& phi = zpoly::cyclotomic(p);
  const unsigned d = static_cast<unsigned>((phi.size() - 1) / 2);
  // z^-d Phi_p(z) = a_d + sum_j a_{d+j} (z^j + z^-j), and z^j + z^-j = V_j(theta)
  // with V_0 = 2, V_1 = x, V_j = x V_{j-1} - V_{j-2}.
  std::vector<QPoly> v{{2}, {0, 1}};
  for (unsigned j = 2; j <= d; ++j) v.push_back(qsub(qmul({0, 1}, v[j - 1]), v[j - 2]));
  QPoly psi{mpq_class(phi[d])};
  psi.resize(d + 1, 0);
  for (unsigned j = 1; j <= d; ++j) {
    const mpq_class a(phi[d + j]);
    for (std::size_t i = 0; i < v[j].size(); ++i) psi[i] += a * v[j][i];
  }
  qtrim(psi);
  RealCyclotomicField f;
  f.p = p;
  f.degree = d;
  f.minpoly = std::move(psi);
  return f;
}

struct Interval {
  mpq_class lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  mpq_class c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{c[0], c[0]};
  for (const auto& x : c) {
    if (x < r.lo) r.lo = x;
    if (x > r.hi) r.hi = x;
  }
  return r;
}

Interval horner(const QPoly& coeffs, const Interval& x) {
  Interval acc{0, 0};
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = imul(acc, x);
    acc.lo += coeffs[i];
    acc.hi += coeffs[i];
  }
  return acc;
}

int qsign_at(const QPoly& coeffs, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return sgn(acc);
}

/// Certified sign of sum coords[i] theta^i with theta = 2cos(2*pi/p): isolate
/// theta (the largest root of the minimal polynomial) in a rational interval and
/// bisect until interval evaluation excludes zero. Terminates because a nonzero
/// reduced element cannot vanish at theta.
int cyclotomic_sign(const QPoly& coords, const RealCyclotomicField& f) {
  const double theta = 2.0 * std::cos(2.0 * std::numbers::pi / f.p);
  // Roots of the minimal polynomial are 2cos(2*pi*k/p); the nearest one to theta
  // is at least 2cos(2pi/p) - 2cos(4pi/p) away, far more than this radius.
  const mpq_class radius(1, 1 << 30);
  Interval box{mpq_class(theta) - radius, mpq_class(theta) + radius};
  const int s_lo = qsign_at(f.minpoly, box.lo);
  const int s_hi = qsign_at(f.minpoly, box.hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
    throw Error(ErrorCode::VerificationFailure, "failed to isolate 2cos(2pi/p)");
  for (int iter = 0; iter < 4000; ++iter) {
    Interval v = horner(coords, box);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    mpq_class mid = (box.lo + box.hi) / 2;
    const int s_mid = qsign_at(f.minpoly, mid);
    if (s_mid == 0) return qsign_at(coords, mid);  // mid is theta itself (rational theta)
    if (s_mid == s_lo) box.lo = mid;
    else box.hi = mid;
  }
  throw Error(ErrorCode::VerificationFailure, "sign refinement did not terminate");
}

}  // namespace

const char* to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Integer: return "Integer";
    case ScalarKind::Rational: return "Rational";
    case ScalarKind::QuadRoot5: return "QuadRoot5";
    case ScalarKind::RealCyclotomic: return "RealCyclotomic";
  }
  return "?";
}

const RealCyclotomicField& real_cyclotomic_field(unsigned p) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<RealCyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, std::make_unique<RealCyclotomicField>(build_field(p))).first;
  return *it->second;
}

std::pair<ScalarKind, unsigned> join_kinds(ScalarKind a, unsigned pa, ScalarKind b, unsigned pb) {
  auto rank = [](ScalarKind k) { return k == ScalarKind::Integer ? 0 : k == ScalarKind::Rational ? 1 : 2; };
  if (rank(a) < 2 && rank(b) < 2) return {rank(a) >= rank(b) ? a : b, 0};
  if (rank(a) < 2) return {b, pb};
  if (rank(b) < 2) return {a, pa};
  if (a == b && pa == pb) return {a, pa};
  throw Error(ErrorCode::ScalarKindMismatch,
              std::string(to_string(a)) + (pa ? "(" + std::to_string(pa) + ")" : "") + " vs " + to_string(b) +
                  (pb ? "(" + std::to_string(pb) + ")" : ""));
}

Scalar::Scalar() : Scalar(0L) {}

Scalar::Scalar(long value) : kind_(ScalarKind::Integer), order_(0), coords_{mpq_class(value)} {}

Scalar::Scalar(ScalarKind kind, unsigned order, std::vector<mpq_class> coords)
    : kind_(kind), order_(order), coords_(std::move(coords)) {
  normalize();
}

void Scalar::normalize() {
  for (auto& c : coords_) c.canonicalize();
  switch (kind_) {
    case ScalarKind::Integer:
    case ScalarKind::Rational: coords_.resize(1, 0); break;
    case ScalarKind::QuadRoot5: coords_.resize(2, 0); break;
    case ScalarKind::RealCyclotomic: coords_ = reduce(std::move(coords_), real_cyclotomic_field(order_)); break;
  }
  if (kind_ == ScalarKind::Integer && coords_[0].get_den() != 1)
    throw Error(ErrorCode::ScalarKindMismatch, "non-integral value in Integer scalar");
}

Scalar Scalar::integer(const mpz_class& value) { return Scalar(ScalarKind::Integer, 0, {mpq_class(value)}); }
Scalar Scalar::rational(const mpq_class& value) { return Scalar(ScalarKind::Rational, 0, {value}); }
Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return Scalar(ScalarKind::Rational, 0, {mpq_class(num, den)});
}
Scalar Scalar::quad_root5(const mpq_class& a, const mpq_class& b) { return Scalar(ScalarKind::QuadRoot5, 0, {a, b}); }
Scalar Scalar::golden_ratio() { return quad_root5(mpq_class(1, 2), mpq_class(1, 2)); }
Scalar Scalar::real_cyclotomic(unsigned p, std::vector<mpq_class> coords) {
  return Scalar(ScalarKind::RealCyclotomic, p, std::move(coords));
}
Scalar Scalar::cyclotomic_generator(unsigned p) { return real_cyclotomic(p, {0, 1}); }

bool Scalar::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool Scalar::is_integer() const { return is_rational() && coords_[0].get_den() == 1; }

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::ScalarKindMismatch, "irrational value " + to_string());
  return coords_[0];
}

mpz_class Scalar::to_integer() const {
  if (!is_integer()) throw Error(ErrorCode::ScalarKindMismatch, "non-integral value " + to_string());
  return coords_[0].get_num();
}

int Scalar::sign() const {
  if (is_rational()) return sgn(coords_[0]);
  if (kind_ == ScalarKind::QuadRoot5) {
    const int sa = sgn(coords_[0]), sb = sgn(coords_[1]);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt5 have opposite signs: compare a^2 with 5 b^2
    const int c = cmp(coords_[0] * coords_[0], 5 * coords_[1] * coords_[1]);
    return c > 0 ? sa : sb;
  }
  return cyclotomic_sign(coords_, real_cyclotomic_field(order_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case ScalarKind::Integer:
    case ScalarKind::Rational: return rational(1 / coords_[0]);
    case ScalarKind::QuadRoot5: {
      const mpq_class norm = coords_[0] * coords_[0] - 5 * coords_[1] * coords_[1];
      return quad_root5(coords_[0] / norm, -coords_[1] / norm);
    }
    case ScalarKind::RealCyclotomic: {
      const auto& f = real_cyclotomic_field(order_);
      return Scalar(kind_, order_, inverse_mod(coords_, f));
    }
  }
  return {};
}

double Scalar::to_double() const {
  switch (kind_) {
    case ScalarKind::Integer:
    case ScalarKind::Rational: return coords_[0].get_d();
    case ScalarKind::QuadRoot5: return coords_[0].get_d() + coords_[1].get_d() * std::sqrt(5.0);
    case ScalarKind::RealCyclotomic: {
      const double theta = 2.0 * std::cos(2.0 * std::numbers::pi / order_);
      double acc = 0;
      for (std::size_t i = coords_.size(); i-- > 0;) acc = acc * theta + coords_[i].get_d();
      return acc;
    }
  }
  return 0;
}

std::string Scalar::to_string() const {
  if (kind_ == ScalarKind::Integer || kind_ == ScalarKind::Rational) return coords_[0].get_str();
  std::ostringstream os;
  const char* basis = kind_ == ScalarKind::QuadRoot5 ? "sqrt5" : "t";
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    std::string c = coords_[i].get_str();
    if (!first && coords_[i] > 0) os << '+';
    if (i == 0) os << c;
    else if (coords_[i] == 1) os << basis;
    else if (coords_[i] == -1) os << '-' << basis;
    else os << c << '*' << basis;
    if (i > 1) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  if (kind_ == ScalarKind::RealCyclotomic) os << " [t=2cos(2pi/" << order_ << ")]";
  return os.str();
}

Scalar Scalar::embedded(ScalarKind kind, unsigned order) const {
  if (kind == kind_ && order == order_) return *this;
  auto [k, p] = join_kinds(kind_, order_, kind, order);
  if (k != kind || p != order)
    throw Error(ErrorCode::ScalarKindMismatch, "cannot embed " + to_string() + " into " + ssp::to_string(kind));
  return Scalar(kind, order, coords_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  auto [k, p] = join_kinds(a.kind_, a.order_, b.kind_, b.order_);
  std::vector<mpq_class> c = a.embedded(k, p).coords_;
  const auto& bc = b.embedded(k, p).coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += bc[i];
  return Scalar(k, p, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  auto [k, p] = join_kinds(a.kind_, a.order_, b.kind_, b.order_);
  const auto& x = a.kind_ == k && a.order_ == p ? a.coords_ : a.embedded(k, p).coords_;
  const auto& y = b.kind_ == k && b.order_ == p ? b.coords_ : b.embedded(k, p).coords_;
  switch (k) {
    case ScalarKind::Integer:
    case ScalarKind::Rational: return Scalar(k, p, {x[0] * y[0]});
    case ScalarKind::QuadRoot5:
      return Scalar(k, p, {x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0]});
    case ScalarKind::RealCyclotomic:
      if (a.is_rational() || b.is_rational()) {
        const mpq_class s = a.is_rational() ? x[0] : y[0];
        std::vector<mpq_class> c = a.is_rational() ? y : x;
        for (auto& v : c) v *= s;
        return Scalar(k, p, std::move(c));
      }
      return Scalar(k, p, qmul(x, y));
  }
  return {};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  auto [k, p] = join_kinds(a.kind_, a.order_, b.kind_, b.order_);
  if (k == ScalarKind::Integer) k = ScalarKind::Rational;
  if (b.is_rational()) {
    std::vector<mpq_class> c = a.embedded(k, p).coords_;
    for (auto& v : c) v /= b.coords_[0];
    return Scalar(k, p, std::move(c));
  }
  return a.embedded(k, p) * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto [k, p] = join_kinds(a.kind_, a.order_, b.kind_, b.order_);
  if (k == ScalarKind::Integer || k == ScalarKind::Rational) return a.coords_[0] == b.coords_[0];
  return a.embedded(k, p).coords_ == b.embedded(k, p).coords_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

nlohmann::json to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::Integer:
    case ScalarKind::Rational: return s.coords()[0].get_str();
    case ScalarKind::QuadRoot5: return nlohmann::json::array({s.coords()[0].get_str(), s.coords()[1].get_str()});
    case ScalarKind::RealCyclotomic: {
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& c : s.coords()) coords.push_back(c.get_str());
      return {{"p", s.order()}, {"theta_coords", coords}};
    }
  }
  return nullptr;
}

namespace {
mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}
}  // namespace

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const mpq_class q = parse_rational(text);
    if (text.find('/') == std::string::npos) return Scalar::integer(q.get_num());
    return Scalar::rational(q);
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_array() && j.size() == 2)
    return Scalar::quad_root5(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
  if (j.is_object() && j.contains("p") && j.contains("theta_coords")) {
    std::vector<mpq_class> coords;
    for (const auto& c : j.at("theta_coords")) coords.push_back(parse_rational(c.get<std::string>()));
    return Scalar::real_cyclotomic(j.at("p").get<unsigned>(), std::move(coords));
  }
  throw Error(ErrorCode::ParseError, "unrecognised scalar JSON " + j.dump());
}

}  // namespace ssp
