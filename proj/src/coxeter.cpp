#include "sspkit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sspkit/errors.hpp"

namespace ssp {

WeylType WeylType::A(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "A(n-1) needs n >= 1");
  return {Family::A, n};
}
WeylType WeylType::B(unsigned n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "B(n) needs n >= 2");
  return {Family::B, n};
}
WeylType WeylType::D(unsigned n) {
  if (n < 4) throw Error(ErrorCode::InvalidRank, "D(n) needs n >= 4");
  return {Family::D, n};
}
WeylType WeylType::E6() { return {Family::E6, 0}; }
WeylType WeylType::E7() { return {Family::E7, 0}; }
WeylType WeylType::E8() { return {Family::E8, 0}; }
WeylType WeylType::F4() { return {Family::F4, 0}; }
WeylType WeylType::G2() { return {Family::G2, 0}; }
WeylType WeylType::H3() { return {Family::H3, 0}; }
WeylType WeylType::H4() { return {Family::H4, 0}; }
WeylType WeylType::I2(unsigned p) {
  if (p != 5 && p < 7) throw Error(ErrorCode::InvalidRank, "I2(p) needs p = 5 or p >= 7");
  return {Family::I2, p};
}

namespace {
std::optional<unsigned> parse_unsigned(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}
}  // namespace

WeylType WeylType::parse(std::string_view name, std::optional<unsigned> subscript) {
  std::string upper;
  for (char c : name)
    if (c != ' ') upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  auto bad = [&](const std::string& why) { return Error(ErrorCode::InvalidRank, "type '" + std::string(name) + "': " + why); };

  if (upper.rfind("I2", 0) == 0) {
    std::string_view rest = std::string_view(upper).substr(2);
    if (!rest.empty() && (rest.front() == '(' || rest.front() == '_')) {
      rest.remove_prefix(1);
      if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
      auto p = parse_unsigned(rest);
      if (!p) throw bad("cannot read p");
      return I2(*p);
    }
    if (!rest.empty()) throw bad("use I2(p)");
    if (!subscript) throw bad("I2 needs p (--rank)");
    return I2(*subscript);
  }
  if (upper == "E6") return E6();
  if (upper == "E7") return E7();
  if (upper == "E8") return E8();
  if (upper == "F4") return F4();
  if (upper == "G2") return G2();
  if (upper == "H3") return H3();
  if (upper == "H4") return H4();
  if (upper.empty()) throw bad("empty");
  const char fam = upper[0];
  if (fam != 'A' && fam != 'B' && fam != 'D') throw bad("unknown family");
  std::optional<unsigned> sub = subscript;
  if (upper.size() > 1) {
    std::string_view digits = std::string_view(upper).substr(1);
    if (!digits.empty() && (digits.front() == '(' || digits.front() == '_')) {
      digits.remove_prefix(1);
      if (!digits.empty() && digits.back() == ')') digits.remove_suffix(1);
    }
    auto v = parse_unsigned(digits);
    if (!v) throw bad("cannot read subscript");
    if (subscript && *subscript != *v) throw bad("conflicting subscripts");
    sub = v;
  }
  if (!sub) throw bad("missing rank");
  switch (fam) {
    case 'A': return A(*sub + 1);
    case 'B': return B(*sub);
    default: return D(*sub);
  }
}

unsigned WeylType::rank() const {
  switch (family_) {
    case Family::A: return param_ - 1;
    case Family::B:
    case Family::D: return param_;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2:
    case Family::I2: return 2;
    case Family::H3: return 3;
    case Family::H4: return 4;
  }
  return 0;
}

unsigned WeylType::subscript() const {
  return family_ == Family::I2 ? param_ : rank();
}

std::string WeylType::family_name() const {
  switch (family_) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2";
  }
  return "?";
}

std::string WeylType::name() const {
  switch (family_) {
    case Family::A:
    case Family::B:
    case Family::D: return family_name() + std::to_string(subscript());
    case Family::I2: return "I2(" + std::to_string(param_) + ")";
    default: return family_name();
  }
}

bool WeylType::crystallographic() const {
  return family_ != Family::H3 && family_ != Family::H4 && family_ != Family::I2;
}

bool WeylType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E6 || family_ == Family::E7 ||
         family_ == Family::E8;
}

bool WeylType::classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::D;
}

GroupData group_data(const WeylType& t) {
  GroupData g;
  g.simple_reflection_count = t.rank();
  const unsigned n = t.param();
  auto& e = g.exponents;
  switch (t.family()) {
    case Family::A:
      for (unsigned i = 1; i < n; ++i) e.push_back(i);
      g.op_orbit_count = n / 2;  // ceil((n-1)/2)
      break;
    case Family::B:
      for (unsigned i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      g.op_orbit_count = n;
      break;
    case Family::D:
      for (unsigned i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      g.op_orbit_count = n % 2 ? n - 1 : n;
      break;
    case Family::E6:
      e = {1, 4, 5, 7, 8, 11};
      g.op_orbit_count = 4;
      break;
    case Family::E7:
      e = {1, 5, 7, 9, 11, 13, 17};
      g.op_orbit_count = 7;
      break;
    case Family::E8:
      e = {1, 7, 11, 13, 17, 19, 23, 29};
      g.op_orbit_count = 8;
      break;
    case Family::F4:
      e = {1, 5, 7, 11};
      g.op_orbit_count = 4;
      break;
    case Family::G2:
      e = {1, 5};
      g.op_orbit_count = 2;
      break;
    case Family::H3:
      e = {1, 5, 9};
      g.op_orbit_count = 3;
      break;
    case Family::H4:
      e = {1, 11, 19, 29};
      g.op_orbit_count = 4;
      break;
    case Family::I2:
      e = {1, n - 1};
      g.op_orbit_count = n % 2 ? 1 : 2;
      break;
  }
  g.order = 1;
  for (unsigned x : e) g.order *= x + 1;
  return g;
}

Poly poincare_numerator(const WeylType& t) {
  Poly p{1};
  for (unsigned e : group_data(t).exponents) p = p * (Poly::monomial(Scalar(1), e + 1) - Poly{1});
  return p;
}

std::vector<WeylType> registry_types(unsigned max_n, unsigned max_p) {
  std::vector<WeylType> out;
  for (unsigned n = 1; n <= max_n + 1; ++n) out.push_back(WeylType::A(n));
  for (unsigned n = 2; n <= max_n; ++n) out.push_back(WeylType::B(n));
  for (unsigned n = 4; n <= max_n; ++n) out.push_back(WeylType::D(n));
  for (auto t : {WeylType::E6(), WeylType::E7(), WeylType::E8(), WeylType::F4(), WeylType::G2(), WeylType::H3(),
                 WeylType::H4()})
    out.push_back(t);
  for (unsigned p = 5; p <= max_p; ++p)
    if (p != 6) out.push_back(WeylType::I2(p));
  return out;
}

}  // namespace ssp
