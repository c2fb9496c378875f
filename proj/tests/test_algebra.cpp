#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sspkit/errors.hpp"
#include "sspkit/poly.hpp"
#include "sspkit/zpoly.hpp"

using namespace ssp;

namespace {

Poly ipoly(const std::vector<long long>& c) {
  std::vector<Scalar> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return Poly(std::move(v));
}

std::vector<long long> ivec(const Poly& p) {
  std::vector<long long> v;
  for (const auto& c : p.coeffs()) v.push_back(c.to_integer().get_si());
  return v;
}

std::vector<mpq_class> qvec(const Poly& p) {
  std::vector<mpq_class> v;
  for (const auto& c : p.coeffs()) v.push_back(c.to_rational());
  return v;
}

Scalar random_scalar(std::mt19937_64& rng, ScalarKind kind, unsigned p = 0) {
  std::uniform_int_distribution<long> d(-9, 9), den(1, 6);
  switch (kind) {
    case ScalarKind::Integer: return Scalar(d(rng));
    case ScalarKind::Rational: return Scalar::rational(d(rng), den(rng));
    case ScalarKind::QuadRoot5: return Scalar::quad_root5(mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng)));
    case ScalarKind::RealCyclotomic: {
      const unsigned deg = real_cyclotomic_field(p).degree;
      std::vector<mpq_class> c;
      for (unsigned i = 0; i < deg; ++i) c.emplace_back(d(rng), den(rng));
      return Scalar::real_cyclotomic(p, c);
    }
  }
  return Scalar(0);
}

Poly random_poly(std::mt19937_64& rng, ScalarKind kind, unsigned p = 0, int max_deg = 6) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Scalar> c;
  const int n = deg(rng);
  for (int i = 0; i <= n; ++i) c.push_back(random_scalar(rng, kind, p));
  return Poly(std::move(c));
}

}  // namespace

TEST_SUITE("exact-algebra") {
  TEST_CASE("poly_arith examples") {
    const Poly a{1, 1};
    CHECK(poly_arith(a, a, PolyOp::Mul) == Poly{1, 2, 1});
    CHECK(poly_arith(poly_arith(a, a, PolyOp::Mul), Poly{1, 1, 1}, PolyOp::Mul) == Poly{1, 3, 4, 3, 1});
    CHECK(ivec(poly_arith(Poly{1, 2, 1}, Poly{1, 1, 1}, PolyOp::Mul)) == oracle::convolve({1, 2, 1}, {1, 1, 1}));
    CHECK(poly_arith(a, Poly{}, PolyOp::Mul).is_zero());
    CHECK(poly_arith(a, Poly{-1, -1}, PolyOp::Add).is_zero());
    CHECK(poly_arith(a, a, PolyOp::Mul).degree() == 2);
  }

  TEST_CASE("kind mismatch between sqrt5 and cyclotomic coefficients") {
    const Poly q5 = Poly::constant(Scalar::golden_ratio());
    const Poly q7 = Poly::constant(Scalar::cyclotomic_generator(7));
    CHECK_THROWS_AS(poly_arith(q5, q7, PolyOp::Mul), Error);
    try {
      (void)poly_arith(q5, q7, PolyOp::Add);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ScalarKindMismatch);
    }
    // Z and Q embed automatically
    CHECK(poly_arith(q5, Poly::constant(Scalar::rational(1, 2)), PolyOp::Add) ==
          Poly::constant(Scalar::quad_root5(1, mpq_class(1, 2))));
  }

  TEST_CASE("exact_div examples") {
    CHECK(exact_div(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{1, 1});
    // u (u^2-1)(u^6-1) / (6 (1-u)^2 (u^2-u+1))
    const Poly num = Poly{0, 1} * Poly{-1, 0, 1} * Poly{-1, 0, 0, 0, 0, 0, 1};
    const Poly den = Scalar(6) * (Poly{1, -1} * Poly{1, -1} * Poly{1, -1, 1});
    const Poly q = exact_div(num, den);
    std::vector<Scalar> expect{0, Scalar::rational(1, 6), Scalar::rational(3, 6), Scalar::rational(4, 6),
                               Scalar::rational(3, 6), Scalar::rational(1, 6)};
    CHECK(q == Poly(expect));
    try {
      (void)exact_div(Poly{1, 0, 1}, Poly{1, 1});
      FAIL("expected NotDivisible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotDivisible);
    }
  }

  TEST_CASE("val_at_minus_one examples") {
    const Poly g2 = Poly{1, 1} * Poly{1, 1} * Poly{1, 1, 1};
    CHECK(val_at_minus_one(g2) == 2);
    CHECK(val_at_minus_one(Poly{1, 0, 1}) == 0);
    CHECK(val_at_minus_one(Poly{-1, 0, 1} * Poly{-1, 0, 0, 0, 0, 0, 1}) == 2);
    CHECK(oracle::minus_one_multiplicity(qvec(Poly{-1, 0, 1} * Poly{-1, 0, 0, 0, 0, 0, 1})) == 2);
    try {
      (void)val_at_minus_one(Poly{});
      FAIL("expected ZeroPolynomial");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroPolynomial);
    }
  }

  TEST_CASE("expand examples") {
    CHECK(expand(FactoredPoly(Scalar(1), {{1, 2, 1}, {1, 3, 2}})) == Poly{1, 3, 5, 5, 3, 1});
    CHECK(expand(FactoredPoly(Scalar(1))) == Poly{1});
    CHECK(expand(FactoredPoly(Scalar(1), {{2, 2, 1}})) == Poly{1, 0, 1});
    const FactoredPoly f(Scalar(3), {{1, 2, 2}, {3, 2, 1}, {1, 5, 1}});
    const Poly fe = expand(f);
    CHECK(f.degree() == static_cast<unsigned>(fe.degree()));
    for (const auto& c : fe.coeffs()) CHECK(c.sign() >= 0);
  }

  TEST_CASE("shape_factorize examples") {
    const auto b2 = shape_factorize(Poly{1, 1} * Poly{1, 1} * Poly{1, 0, 1}, Scalar(2));
    CHECK(b2.shape() == std::vector<ShapeFactor>{{1, 2, 2}, {2, 2, 1}});
    CHECK(shape_factorize(Poly{1}, Scalar(7)).shape().empty());
    const FactoredPoly e8(Scalar(1), {{1, 2, 4}, {2, 2, 4}, {3, 2, 4}, {1, 3, 4}, {1, 5, 2}});
    const auto f = shape_factorize(expand(e8), Scalar(120));
    CHECK(expand(f) == expand(e8));
    for (const auto& s : f.shape()) CHECK(240 % s.l == 0);
    // l must divide 2c: (1+u+u^2) is unavailable when c = 1
    try {
      (void)shape_factorize(Poly{1, 1, 1}, Scalar(1));
      FAIL("expected NoShapeFactorization");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoShapeFactorization);
    }
    CHECK_THROWS_AS(shape_factorize(Poly{1, 2}, Scalar(1)), Error);
  }

  TEST_CASE("shape_factorize round trip on random shape products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned> s(1, 5), mult(0, 3), which(0, 2);
    const unsigned primes[] = {2, 3, 5};
    for (int it = 0; it < 200; ++it) {
      std::vector<ShapeFactor> f;
      for (int j = 0; j < 4; ++j) f.push_back({s(rng), primes[which(rng)], mult(rng)});
      const Poly p = expand(FactoredPoly(Scalar(1), f));
      const auto g = shape_factorize(p, Scalar(30));
      CHECK(expand(g) == p);
    }
  }

  TEST_CASE("valuation is additive (1000 random pairs)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> extra(0, 3);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      Poly p = random_poly(rng, ScalarKind::Integer), q = random_poly(rng, ScalarKind::Rational);
      if (p.is_zero()) p = Poly{1};
      if (q.is_zero()) q = Poly{2};
      p = p * power(Poly{1, 1}, extra(rng));
      q = q * power(Poly{1, 1}, extra(rng));
      if (val_at_minus_one(p * q) != val_at_minus_one(p) + val_at_minus_one(q)) ++failures;
      if (val_at_minus_one(p) != oracle::minus_one_multiplicity(qvec(p))) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("exact_div inverts multiplication for every scalar kind") {
    std::mt19937_64 rng(3);
    struct K {
      ScalarKind kind;
      unsigned p;
    };
    for (K k : {K{ScalarKind::Integer, 0}, K{ScalarKind::Rational, 0}, K{ScalarKind::QuadRoot5, 0},
                K{ScalarKind::RealCyclotomic, 7}, K{ScalarKind::RealCyclotomic, 12}}) {
      int failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const Poly p = random_poly(rng, k.kind, k.p, 5);
        Poly q = random_poly(rng, k.kind, k.p, 4);
        if (q.is_zero()) q = Poly{1, 1};
        if (!(exact_div(p * q, q) == p)) ++failures;
      }
      CHECK(failures == 0);
    }
  }
}

TEST_SUITE("exact-algebra scalars") {
  TEST_CASE("rational normal form") {
    const Scalar r = Scalar::rational(6, -4);
    CHECK(r.coords()[0].get_num() == -3);
    CHECK(r.coords()[0].get_den() == 2);
    CHECK((Scalar(3) / Scalar(6)) == Scalar::rational(1, 2));
    CHECK((Scalar(3) / Scalar(6)).kind() == ScalarKind::Rational);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  }

  TEST_CASE("sqrt5 sign agrees with floating point (1000 samples)") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-2000, 2000), den(1, 900);
    int checked = 0, failures = 0;
    while (checked < 1000) {
      const mpq_class a(d(rng), den(rng)), b(d(rng), den(rng));
      const double v = a.get_d() + b.get_d() * std::sqrt(5.0);
      if (std::fabs(v) <= 1e-6) continue;
      ++checked;
      if (Scalar::quad_root5(a, b).sign() != (v > 0 ? 1 : -1)) ++failures;
    }
    CHECK(failures == 0);
    // exact zero and a close call
    CHECK(Scalar::quad_root5(0, 0).sign() == 0);
    CHECK(Scalar::quad_root5(mpq_class(-2207, 987), 1).sign() < 0);  // 2207/987 is just above sqrt5
  }

  TEST_CASE("golden ratio identities") {
    const Scalar lam = Scalar::golden_ratio();
    CHECK(lam * lam == lam + Scalar(1));
    CHECK((Scalar(13) - Scalar(8) * lam) * (Scalar(5) + Scalar(8) * lam) == Scalar(1));
    CHECK((Scalar(13) - Scalar(8) * lam).sign() > 0);
    CHECK(std::fabs(lam.to_double() - (1 + std::sqrt(5.0)) / 2) < 1e-12);
  }

  TEST_CASE("real cyclotomic field data") {
    for (unsigned p : {5u, 7u, 8u, 9u, 12u, 31u}) {
      const auto& f = real_cyclotomic_field(p);
      CHECK(f.degree == zpoly::euler_phi(p) / 2);
      const double theta = 2 * std::cos(2 * M_PI / p);
      double v = 0;
      for (std::size_t i = f.minpoly.size(); i-- > 0;) v = v * theta + f.minpoly[i].get_d();
      CHECK(std::fabs(v) < 1e-9);
      CHECK(std::fabs(Scalar::cyclotomic_generator(p).to_double() - theta) < 1e-12);
    }
  }

  TEST_CASE("real cyclotomic sign and inverse") {
    std::mt19937_64 rng(9);
    for (unsigned p : {5u, 7u, 11u, 16u, 31u}) {
      int failures = 0;
      for (int i = 0; i < 200; ++i) {
        const Scalar x = random_scalar(rng, ScalarKind::RealCyclotomic, p);
        const double v = x.to_double();
        if (std::fabs(v) > 1e-6 && x.sign() != (v > 0 ? 1 : -1)) ++failures;
        if (!x.is_zero() && !(x * x.inverse() == Scalar(1))) ++failures;
      }
      CHECK(failures == 0);
    }
  }

  TEST_CASE("json round trips") {
    for (const Scalar& s : {Scalar(5), Scalar::rational(-3, 4), Scalar::quad_root5(1080, 480),
                            Scalar::cyclotomic_generator(9) + Scalar::rational(1, 3)}) {
      const Scalar back = scalar_from_json(to_json(s));
      CHECK(back == s);
      CHECK(back.kind() == s.kind());
    }
    CHECK(to_json(Scalar::rational(-3, 4)) == "-3/4");
    CHECK(to_json(Scalar::quad_root5(1, 2)) == nlohmann::json::array({"1", "2"}));
    const Poly p{1, 3, 5, 5, 3, 1};
    CHECK(to_json(p) == nlohmann::json::array({"1", "3", "5", "5", "3", "1"}));
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(scalar_from_json("1/0"), Error);
    CHECK_THROWS_AS(scalar_from_json("abc"), Error);
  }
}
