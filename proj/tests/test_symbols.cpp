#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sspkit/errors.hpp"
#include "sspkit/symbols.hpp"

using namespace ssp;

namespace {

std::set<oracle::PairKey> keys(const std::vector<SymbolPair>& v) {
  std::set<oracle::PairKey> out;
  for (const auto& s : v) {
    int spin = 0;
    if (s.spin()) spin = *s.spin() == Spin::Plus ? 1 : -1;
    out.insert({s.x(), s.y(), spin});
  }
  return out;
}

// Direct evaluation of the type-A alpha formula over Q.
mpq_class alpha_a_oracle(const std::vector<unsigned>& x, long n) {
  long m0 = 0, m1 = 0;
  mpq_class s = 0;
  for (unsigned v : x) {
    (v % 2 ? m1 : m0)++;
    s += mpq_class(v, 2);
    s.canonicalize();
  }
  mpq_class half_m1(m1, 2);
  half_m1.canonicalize();
  s.canonicalize();
  mpq_class r = mpq_class(m0 * (m0 - 1) / 2 + m1 * (m1 - 1) / 2) - s + half_m1 + (n / 2);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("symbol-combinatorics") {
  TEST_CASE("rank_a examples") {
    CHECK(rank_a(TypeAIndex({1, 3, 5})) == 6);
    CHECK(rank_a(TypeAIndex({1})) == 1);
    CHECK(rank_a(TypeAIndex({2, 5})) == 6);
    CHECK_THROWS_AS(TypeAIndex({0, 1}), Error);
  }

  TEST_CASE("alpha_a examples") {
    CHECK(alpha_a(TypeAIndex({1, 3, 5})) == 3);
    CHECK(alpha_a(TypeAIndex({2})) == 0);
    CHECK(alpha_a(TypeAIndex({1})) == 0);
  }

  TEST_CASE("alpha_bd examples") {
    CHECK(alpha_bd(SymbolPair({0, 2}, {1})) == 2);
    CHECK(alpha_bd(SymbolPair({2}, {})) == 0);
    CHECK(alpha_bd(SymbolPair({0, 1}, {2})) == 0);
    CHECK(rank_bd(SymbolPair({0, 2}, {1})) == 2);
    const auto p = parity_split(SymbolPair({0, 1, 2}, {1, 2}));
    CHECK(p == ParitySplit{2, 1, 1, 1});
  }

  TEST_CASE("enumerate_a examples and partition counts") {
    CHECK(enumerate_a(1) == std::vector<TypeAIndex>{TypeAIndex({1})});
    const auto e3 = enumerate_a(3);
    CHECK(e3.size() == 3);
    CHECK(std::find(e3.begin(), e3.end(), TypeAIndex({3})) != e3.end());
    CHECK(std::find(e3.begin(), e3.end(), TypeAIndex({1, 3})) != e3.end());
    CHECK(std::find(e3.begin(), e3.end(), TypeAIndex({1, 2, 3})) != e3.end());
    CHECK(enumerate_a(6).size() == 11);
    const auto p = oracle::partition_counts(14);
    for (unsigned n = 1; n <= 14; ++n) {
      const auto e = enumerate_a(n);
      CHECK(static_cast<long long>(e.size()) == p[n]);
      std::set<std::vector<unsigned>> parts;
      for (const auto& x : e) {
        CHECK(rank_a(x) == n);
        parts.insert(x.partition());
        CHECK(TypeAIndex::from_partition(x.partition()) == x);
      }
      CHECK(parts.size() == e.size());
    }
  }

  TEST_CASE("hook partitions agree with the partition oracle") {
    for (unsigned n = 1; n <= 9; ++n) {
      std::set<std::vector<unsigned>> from_enum, from_oracle;
      for (const auto& x : enumerate_a(n)) from_enum.insert(x.partition());
      for (auto lam : oracle::partitions(n, n)) {
        std::sort(lam.begin(), lam.end());
        from_oracle.insert(lam);
      }
      CHECK(from_enum == from_oracle);
    }
  }

  TEST_CASE("enumerate_bd examples") {
    const auto b2 = enumerate_bd(2, 1);
    const std::vector<SymbolPair> expect{SymbolPair({2}, {}), SymbolPair({0, 2}, {1}), SymbolPair({0, 1}, {2}),
                                         SymbolPair({0, 1, 2}, {1, 2})};
    CHECK(b2.size() == 4);
    for (const auto& s : expect) CHECK(std::find(b2.begin(), b2.end(), s) != b2.end());
    const auto d4 = enumerate_bd(4, 0);
    CHECK(std::find(d4.begin(), d4.end(), SymbolPair({0, 2}, {1, 3})) != d4.end());
    for (const auto& s : d4) {
      CHECK_FALSE((s.x() == std::vector<unsigned>{0, 2} && s.y() == s.x()));
      CHECK_FALSE((s.x() == std::vector<unsigned>{1, 3} && s.y() == s.x()));
    }
  }

  TEST_CASE("enumerations match exhaustive search") {
    // entries of a symbol of rank n <= 4 stay below 10
    for (unsigned n = 1; n <= 4; ++n) {
      INFO("n = " << n);
      if (n >= 2) CHECK(keys(enumerate_bd(n, 1)) == oracle::brute_symbols(n, 1, 10, 0));
      CHECK(keys(enumerate_bd_reduced(n, 1)) == oracle::brute_symbols(n, 1, 10, 1));
      CHECK(keys(enumerate_bd_reduced(n, 0)) == oracle::brute_symbols(n, 0, 10, 1));
      CHECK(keys(enumerate_bd(n, 0)) == oracle::brute_symbols(n, 0, 10, 0));
    }
  }

  TEST_CASE("reduced enumeration counts irreducible characters") {
    for (unsigned n = 1; n <= 14; ++n) {
      INFO("n = " << n);
      const auto b = enumerate_bd_reduced(n, 1);
      CHECK(static_cast<long long>(b.size()) == oracle::bipartition_count(static_cast<int>(n)));
      for (const auto& s : b) {
        CHECK(rank_bd(s) == static_cast<long>(n));
        CHECK(s.reduced());
      }
      const auto d = enumerate_bd_reduced(n, 0);
      CHECK(static_cast<long long>(d.size()) == oracle::d_index_count(static_cast<int>(n)));
    }
  }

  TEST_CASE("normal-form enumeration misses classes from n = 2") {
    // B2 has five irreducible characters; only four are written with 0 not in Y
    CHECK(enumerate_bd(2, 1).size() == 4);
    CHECK(enumerate_bd_reduced(2, 1).size() == 5);
    for (unsigned n = 2; n <= 10; ++n)
      for (const auto& s : enumerate_bd(n, 1)) CHECK(s.normal_form());
  }

  TEST_CASE("alpha formulas agree with direct evaluation") {
    for (unsigned n = 1; n <= 10; ++n)
      for (const auto& x : enumerate_a(n)) CHECK(mpq_class(alpha_a(x)) == alpha_a_oracle(x.elements(), n));
  }

  TEST_CASE("alpha certificate examples") {
    const auto a6 = max_alpha_certificate(ClassicalFamily::A, 6);
    CHECK(a6.max_alpha == 3);
    CHECK(a6.maximizers == std::vector<std::string>{"{1,3,5}"});
    CHECK(a6.shape_matches);
    const auto a5 = max_alpha_certificate(ClassicalFamily::A, 5);
    CHECK(a5.max_alpha <= 2);
    CHECK_FALSE(a5.bound_attained);
    CHECK(a5.shape_matches);
    CHECK(a5.candidates == 7);
    const auto b6 = max_alpha_certificate(ClassicalFamily::B, 6);
    CHECK(b6.max_alpha == 6);
    CHECK(b6.maximizers == std::vector<std::string>{"({0,2,4},{1,3})"});
    const auto d4 = max_alpha_certificate(ClassicalFamily::D, 4);
    CHECK(d4.max_alpha == 4);
    CHECK(d4.maximizers == std::vector<std::string>{"({0,2},{1,3})"});
  }

  TEST_CASE("alpha boundedness with equality exactly on the alternating shapes") {
    for (auto fam : {ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D})
      for (unsigned n = 1; n <= 12; ++n) {
        if (fam == ClassicalFamily::B && n < 2) continue;
        if (fam == ClassicalFamily::D && n < 4) continue;
        const auto c = max_alpha_certificate(fam, n);
        INFO("family " << static_cast<int>(fam) << " n " << n);
        CHECK(c.bound_respected);
        CHECK(c.shape_matches);
        CHECK(c.bound_attained == alternating_witness(fam, n).has_value());
      }
  }

  TEST_CASE("serial and parallel certificates agree") {
    for (auto fam : {ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D})
      for (unsigned n : {4u, 9u, 12u, 16u}) {
        const auto p = max_alpha_certificate(fam, n), s = max_alpha_certificate_serial(fam, n);
        CHECK(p.max_alpha == s.max_alpha);
        CHECK(p.maximizers == s.maximizers);
        CHECK(p.candidates == s.candidates);
        CHECK(p.shape_matches == s.shape_matches);
      }
  }

  TEST_CASE("guard") {
    try {
      (void)max_alpha_certificate(ClassicalFamily::B, 41);
      FAIL("expected GuardExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GuardExceeded);
    }
  }

  TEST_CASE("shift examples") {
    const SymbolPair s({2}, {});
    CHECK(shift(s) == SymbolPair({0, 3}, {0}));
    CHECK(rank_bd(shift(s)) == 2);
    CHECK(alpha_bd(shift(s)) == 0);
  }

  TEST_CASE("shift preserves rank and alpha (1000 random symbols)") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 12) - 1);
    std::uniform_int_distribution<int> defect(0, 1), times(1, 3);
    int tried = 0, failures = 0;
    while (tried < 1000) {
      auto x = oracle::bits_to_set(mask(rng)), y = oracle::bits_to_set(mask(rng));
      const int d = defect(rng);
      if (static_cast<int>(x.size()) - static_cast<int>(y.size()) != d) continue;
      const SymbolPair s(x, y);
      if (rank_bd(s) <= 0) continue;
      ++tried;
      SymbolPair t = s;
      for (int i = times(rng); i > 0; --i) t = shift(t);
      if (rank_bd(t) != rank_bd(s) || alpha_bd(t) != alpha_bd(s) || t.defect() != s.defect()) ++failures;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("rank offset identity for m <= 1000") {
    int failures = 0;
    for (long m = 0; m <= 1000; ++m)
      if (symbol_rank_offset(static_cast<unsigned>(m)) != oracle::integer_part_offset(m)) ++failures;
    CHECK(failures == 0);
  }

  TEST_CASE("alternating shapes") {
    CHECK(staircase_index(3) == TypeAIndex({1, 3, 5}));
    CHECK(alternating_symbol(5) == SymbolPair({0, 2, 4}, {1, 3}));
    CHECK(alternating_symbol(4) == SymbolPair({0, 2}, {1, 3}));
    CHECK(alternating_witness(ClassicalFamily::B, 12) == 3u);
    CHECK(alternating_witness(ClassicalFamily::D, 9) == 3u);
    CHECK_FALSE(alternating_witness(ClassicalFamily::A, 5).has_value());
  }
}
