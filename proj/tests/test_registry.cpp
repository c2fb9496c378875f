#include <doctest.h>

#include "sspkit/coxeter.hpp"
#include "sspkit/errors.hpp"

using namespace ssp;

namespace {
std::vector<unsigned> ex(const WeylType& t) { return group_data(t).exponents; }
}  // namespace

TEST_SUITE("coxeter-registry") {
  TEST_CASE("group_data examples") {
    const auto g2 = group_data(WeylType::G2());
    CHECK(g2.exponents == std::vector<unsigned>{1, 5});
    CHECK(g2.order == 12);
    CHECK(g2.op_orbit_count == 2);
    const auto a2 = group_data(WeylType::A(3));
    CHECK(a2.exponents == std::vector<unsigned>{1, 2});
    CHECK(a2.op_orbit_count == 1);
    const auto a0 = group_data(WeylType::A(1));
    CHECK(a0.exponents.empty());
    CHECK(a0.order == 1);
    CHECK(a0.op_orbit_count == 0);
  }

  TEST_CASE("exponent tables") {
    CHECK(ex(WeylType::B(4)) == std::vector<unsigned>{1, 3, 5, 7});
    CHECK(ex(WeylType::D(4)) == std::vector<unsigned>{1, 3, 3, 5});
    CHECK(ex(WeylType::D(5)) == std::vector<unsigned>{1, 3, 4, 5, 7});
    CHECK(ex(WeylType::E6()) == std::vector<unsigned>{1, 4, 5, 7, 8, 11});
    CHECK(ex(WeylType::E7()) == std::vector<unsigned>{1, 5, 7, 9, 11, 13, 17});
    CHECK(ex(WeylType::E8()) == std::vector<unsigned>{1, 7, 11, 13, 17, 19, 23, 29});
    CHECK(ex(WeylType::F4()) == std::vector<unsigned>{1, 5, 7, 11});
    CHECK(ex(WeylType::H3()) == std::vector<unsigned>{1, 5, 9});
    CHECK(ex(WeylType::H4()) == std::vector<unsigned>{1, 11, 19, 29});
    CHECK(ex(WeylType::I2(9)) == std::vector<unsigned>{1, 8});
  }

  TEST_CASE("orders") {
    CHECK(group_data(WeylType::F4()).order == 1152);
    CHECK(group_data(WeylType::E8()).order == 696729600);
    CHECK(group_data(WeylType::E7()).order == 2903040);
    CHECK(group_data(WeylType::H4()).order == 14400);
    for (unsigned p = 5; p <= 40; ++p)
      if (p != 6) CHECK(group_data(WeylType::I2(p)).order == 2 * p);
  }

  TEST_CASE("poincare numerator examples") {
    CHECK(poincare_numerator(WeylType::G2()) == Poly{-1, 0, 1} * Poly{-1, 0, 0, 0, 0, 0, 1});
    CHECK(poincare_numerator(WeylType::A(1)) == Poly{1});
    CHECK(poincare_numerator(WeylType::B(2)) == Poly{-1, 0, 1} * Poly{-1, 0, 0, 0, 1});
  }

  TEST_CASE("opposition orbits equal odd exponents and the valuation") {
    for (const auto& t : registry_types(14, 40)) {
      const auto g = group_data(t);
      unsigned odd = 0;
      mpz_class order = 1;
      for (unsigned e : g.exponents) {
        odd += e % 2;
        order *= e + 1;
      }
      INFO(t.name());
      CHECK(g.op_orbit_count == odd);
      CHECK(g.order == order);
      CHECK(g.exponents.size() == t.rank());
      CHECK(g.simple_reflection_count == t.rank());
      CHECK(val_at_minus_one(poincare_numerator(t)) == g.op_orbit_count);
    }
  }

  TEST_CASE("stated orbit counts") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(group_data(WeylType::A(n)).op_orbit_count == n / 2);
    CHECK(group_data(WeylType::D(5)).op_orbit_count == 4);
    CHECK(group_data(WeylType::D(6)).op_orbit_count == 6);
    CHECK(group_data(WeylType::E6()).op_orbit_count == 4);
    CHECK(group_data(WeylType::I2(7)).op_orbit_count == 1);
    CHECK(group_data(WeylType::I2(8)).op_orbit_count == 2);
  }

  TEST_CASE("rank bounds") {
    auto code = [](auto f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::VerificationFailure;
    };
    CHECK(code([] { WeylType::A(0); }) == ErrorCode::InvalidRank);
    CHECK(code([] { WeylType::B(1); }) == ErrorCode::InvalidRank);
    CHECK(code([] { WeylType::D(3); }) == ErrorCode::InvalidRank);
    CHECK(code([] { WeylType::I2(6); }) == ErrorCode::InvalidRank);
    CHECK(code([] { WeylType::I2(4); }) == ErrorCode::InvalidRank);
    CHECK_NOTHROW(WeylType::I2(5));
  }

  TEST_CASE("parse") {
    CHECK(WeylType::parse("B6") == WeylType::B(6));
    CHECK(WeylType::parse("b", 6) == WeylType::B(6));
    CHECK(WeylType::parse("A", 2) == WeylType::A(3));
    CHECK(WeylType::parse("A2").rank() == 2);
    CHECK(WeylType::parse("I2(8)") == WeylType::I2(8));
    CHECK(WeylType::parse("I2", 7) == WeylType::I2(7));
    CHECK(WeylType::parse("E8") == WeylType::E8());
    CHECK(WeylType::parse("D4").name() == "D4");
    CHECK(WeylType::I2(8).name() == "I2(8)");
    CHECK_THROWS_AS(WeylType::parse("X3"), Error);
    CHECK_THROWS_AS(WeylType::parse("B"), Error);
    CHECK_THROWS_AS(WeylType::parse("B6", 5), Error);
  }

  TEST_CASE("classification flags") {
    CHECK(WeylType::E6().simply_laced());
    CHECK_FALSE(WeylType::F4().simply_laced());
    CHECK_FALSE(WeylType::H3().crystallographic());
    CHECK(WeylType::G2().crystallographic());
    CHECK(WeylType::D(5).classical());
  }
}
