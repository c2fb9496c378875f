#include "sspkit/symbols.hpp"

#include <algorithm>
#include <functional>
#include <limits>


#include "sspkit/errors.hpp"

namespace ssp {

namespace {

bool strictly_increasing(const std::vector<unsigned>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

std::vector<unsigned> sorted_set(std::vector<unsigned> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (!strictly_increasing(v)) throw Error(ErrorCode::ParseError, std::string(what) + " has repeated entries");
  return v;
}

long sum_of(const std::vector<unsigned>& v) {
  long s = 0;
  for (unsigned x : v) s += x;
  return s;
}

std::string set_string(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

long choose2(long m) { return m * (m - 1) / 2; }

// All strictly increasing sequences of `size` naturals >= lo summing to `sum`.
void sets_with_sum(unsigned size, long sum, unsigned lo, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  if (size == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  // smallest element e, the rest at least e+1, ..., e+size-1
  const long tail = choose2(size);
  for (long e = lo; static_cast<long>(size) * e + tail <= sum; ++e) {
    cur.push_back(static_cast<unsigned>(e));
    sets_with_sum(size - 1, sum - e, static_cast<unsigned>(e + 1), cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> sets_with_sum(unsigned size, long sum, unsigned lo) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  if (sum >= 0) sets_with_sum(size, sum, lo, cur, out);
  return out;
}

long min_sum(unsigned size, unsigned lo) { return static_cast<long>(size) * lo + choose2(size); }

std::vector<TypeAIndex> enumerate_a_slice(unsigned n, unsigned m) {
  std::vector<TypeAIndex> out;
  for (auto& x : sets_with_sum(m, static_cast<long>(n) + choose2(m), 1)) out.emplace_back(std::move(x));
  return out;
}

}  // namespace

TypeAIndex::TypeAIndex(std::vector<unsigned> elements) : x_(sorted_set(std::move(elements), "X")) {
  if (x_.empty()) throw Error(ErrorCode::ParseError, "X must be nonempty");
  if (x_.front() == 0) throw Error(ErrorCode::ParseError, "X must consist of positive integers");
}

std::vector<unsigned> TypeAIndex::partition() const {
  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < x_.size(); ++i) parts.push_back(x_[i] - static_cast<unsigned>(i));
  return parts;
}

TypeAIndex TypeAIndex::from_partition(std::vector<unsigned> parts) {
  std::erase(parts, 0u);
  std::sort(parts.begin(), parts.end());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += static_cast<unsigned>(i);
  return TypeAIndex(std::move(parts));
}

std::string TypeAIndex::to_string() const { return set_string(x_); }

SymbolPair::SymbolPair(std::vector<unsigned> x, std::vector<unsigned> y, std::optional<Spin> spin)
    : x_(sorted_set(std::move(x), "X")), y_(sorted_set(std::move(y), "Y")), spin_(spin) {
  if (spin_ && x_ != y_) throw Error(ErrorCode::ParseError, "spin tag only applies when X = Y");
}

SymbolPair SymbolPair::unordered(std::vector<unsigned> a, std::vector<unsigned> b, std::optional<Spin> spin) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  return SymbolPair(std::move(a), std::move(b), spin);
}

bool SymbolPair::normal_form() const { return y_.empty() || y_.front() != 0; }

bool SymbolPair::reduced() const {
  return x_.empty() || y_.empty() || x_.front() != 0 || y_.front() != 0;
}

std::string SymbolPair::to_string() const {
  std::string s = "(" + set_string(x_) + "," + set_string(y_) + ")";
  if (spin_) s += *spin_ == Spin::Plus ? "+" : "-";
  return s;
}

ParitySplit parity_split(const SymbolPair& s) {
  ParitySplit p;
  for (unsigned v : s.x()) (v % 2 ? p.x1 : p.x0)++;
  for (unsigned v : s.y()) (v % 2 ? p.y1 : p.y0)++;
  return p;
}

unsigned rank_a(const TypeAIndex& x) {
  return static_cast<unsigned>(sum_of(x.elements()) - choose2(static_cast<long>(x.elements().size())));
}

long alpha_a(const TypeAIndex& x) {
  long m0 = 0, m1 = 0, s0 = 0, s1 = 0;
  for (unsigned v : x.elements()) {
    if (v % 2) {
      ++m1;
      s1 += v;
    } else {
      ++m0;
      s0 += v;
    }
  }
  // twice the value, to keep the half-integer terms exact
  const long twice = 2 * choose2(m0) - s0 + 2 * choose2(m1) - s1 + m1;
  if (twice % 2) throw Error(ErrorCode::VerificationFailure, "alpha_a not integral for " + x.to_string());
  return twice / 2 + static_cast<long>(rank_a(x)) / 2;
}

long symbol_rank_offset(unsigned m) {
  const long k = static_cast<long>(m) - 1;
  return k * k / 4;
}

long rank_bd(const SymbolPair& s) {
  const auto m = static_cast<unsigned>(s.x().size() + s.y().size());
  return sum_of(s.x()) + sum_of(s.y()) - symbol_rank_offset(m);
}

long alpha_bd(const SymbolPair& s) {
  const ParitySplit p = parity_split(s);
  const long n = rank_bd(s);
  return choose2(p.x0) + choose2(p.x1) + choose2(p.y0) + choose2(p.y1) + static_cast<long>(p.x0) * p.y1 +
         static_cast<long>(p.x1) * p.y0 - sum_of(s.x()) - sum_of(s.y()) + 2 * half_floor(n);
}

SymbolPair shift(const SymbolPair& s) {
  auto up = [](const std::vector<unsigned>& v) {
    std::vector<unsigned> r{0};
    for (unsigned x : v) r.push_back(x + 1);
    return r;
  };
  return SymbolPair(up(s.x()), up(s.y()));
}

std::vector<TypeAIndex> enumerate_a(unsigned n) {
  std::vector<TypeAIndex> out;
  // #X = m forces n >= m
  for (unsigned m = 1; m <= n; ++m) {
    auto slice = enumerate_a_slice(n, m);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SymbolPair> enumerate_bd_slice(unsigned n, unsigned defect, unsigned y, bool reduced_only) {
  if (defect > 1) throw Error(ErrorCode::InvalidRank, "defect must be 0 or 1");
  const unsigned a = y + defect;
  const long target = static_cast<long>(n) + symbol_rank_offset(a + y);
  std::vector<SymbolPair> out;
  const long lo_x = min_sum(a, 0);
  const long lo_y = min_sum(y, 0);
  for (long sx = lo_x; sx + lo_y <= target; ++sx) {
    auto xs = sets_with_sum(a, sx, 0);
    if (xs.empty()) continue;
    auto ys = sets_with_sum(y, target - sx, 0);
    for (const auto& x : xs) {
      const bool x0 = !x.empty() && x.front() == 0;
      for (const auto& yy : ys) {
        const bool y0 = !yy.empty() && yy.front() == 0;
        if (defect == 0) {
          // unordered: keep the lexicographically smaller row first
          if (yy < x) continue;
          if (x0 && y0) continue;  // both contain 0: a shift of a smaller symbol
          if (x == yy) {
            out.emplace_back(x, yy, Spin::Plus);
            out.emplace_back(x, yy, Spin::Minus);
          } else {
            out.emplace_back(x, yy);
          }
        } else if (reduced_only ? !(x0 && y0) : !y0) {
          out.emplace_back(x, yy);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Minimal rank over the slice is at least y in every mode, so y <= n.
std::vector<SymbolPair> enumerate_all(unsigned n, unsigned defect, bool reduced_only) {
  std::vector<SymbolPair> out;
  for (unsigned y = 0; y <= n; ++y) {
    auto slice = enumerate_bd_slice(n, defect, y, reduced_only);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SymbolPair> enumerate_bd(unsigned n, unsigned defect) { return enumerate_all(n, defect, false); }

std::vector<SymbolPair> enumerate_bd_reduced(unsigned n, unsigned defect) { return enumerate_all(n, defect, true); }

TypeAIndex staircase_index(unsigned k) {
  std::vector<unsigned> x;
  for (unsigned i = 0; i < k; ++i) x.push_back(2 * i + 1);
  return TypeAIndex(std::move(x));
}

SymbolPair alternating_symbol(unsigned m) {
  std::vector<unsigned> x, y;
  if (m % 2) {
    for (unsigned v = 0; v < m; v += 2) x.push_back(v);
    for (unsigned v = 1; v + 1 < m; v += 2) y.push_back(v);
  } else {
    for (unsigned v = 0; v + 1 < m; v += 2) x.push_back(v);
    for (unsigned v = 1; v < m; v += 2) y.push_back(v);
  }
  return SymbolPair(std::move(x), std::move(y));
}

std::optional<unsigned> alternating_witness(ClassicalFamily family, unsigned n) {
  for (unsigned k = 1;; ++k) {
    unsigned v = 0;
    switch (family) {
      case ClassicalFamily::A: v = k * (k + 1) / 2; break;
      case ClassicalFamily::B: v = k * k + k; break;
      case ClassicalFamily::D: v = k * k; break;
    }
    if (v == n) return k;
    if (v > n) return std::nullopt;
  }
}

namespace {

constexpr unsigned kAlphaGuard = 40;

struct SliceResult {
  long best = std::numeric_limits<long>::min();
  std::vector<std::string> at_best;
  std::vector<std::string> at_bound;
  std::size_t count = 0;
};

template <class Index, class Alpha>
void scan(const std::vector<Index>& items, Alpha alpha, long bound, SliceResult& r) {
  for (const auto& it : items) {
    const long a = alpha(it);
    ++r.count;
    if (a > r.best) {
      r.best = a;
      r.at_best.clear();
    }
    if (a == r.best) r.at_best.push_back(it.to_string());
    if (a == bound) r.at_bound.push_back(it.to_string());
  }
}

SliceResult slice_for(ClassicalFamily family, unsigned n, unsigned j, long bound) {
  SliceResult r;
  if (family == ClassicalFamily::A)
    scan(enumerate_a_slice(n, j + 1), alpha_a, bound, r);
  else
    scan(enumerate_bd_slice(n, family == ClassicalFamily::B ? 1 : 0, j, true), alpha_bd, bound, r);
  return r;
}

AlphaCertificate certificate(ClassicalFamily family, unsigned n, bool parallel) {
  if (n > kAlphaGuard)
    throw Error(ErrorCode::GuardExceeded, "alpha certificate limited to n <= " + std::to_string(kAlphaGuard));
  if (n == 0) throw Error(ErrorCode::InvalidRank, "n must be positive");
  AlphaCertificate c;
  c.family = family;
  c.n = n;
  c.bound = family == ClassicalFamily::A ? half_floor(n) : 2 * half_floor(n);

  // type A slices by #X = 1..n, types B/D by #Y = 0..n
  const unsigned slices = family == ClassicalFamily::A ? n : n + 1;
  std::vector<SliceResult> parts(slices);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j < static_cast<int>(slices); ++j)
      parts[j] = slice_for(family, n, static_cast<unsigned>(j), c.bound);
  } else {
    for (unsigned j = 0; j < slices; ++j) parts[j] = slice_for(family, n, j, c.bound);
  }

  long best = std::numeric_limits<long>::min();
  for (const auto& p : parts) best = std::max(best, p.best);
  std::vector<std::string> at_bound;
  for (const auto& p : parts) {
    c.candidates += p.count;
    if (p.best == best) c.maximizers.insert(c.maximizers.end(), p.at_best.begin(), p.at_best.end());
    at_bound.insert(at_bound.end(), p.at_bound.begin(), p.at_bound.end());
  }
  std::sort(c.maximizers.begin(), c.maximizers.end());
  std::sort(at_bound.begin(), at_bound.end());
  c.max_alpha = best;
  c.bound_respected = best <= c.bound;
  c.bound_attained = !at_bound.empty();

  std::vector<std::string> expected;
  if (auto k = alternating_witness(family, n)) {
    switch (family) {
      case ClassicalFamily::A: expected.push_back(staircase_index(*k).to_string()); break;
      case ClassicalFamily::B: expected.push_back(alternating_symbol(2 * *k + 1).to_string()); break;
      case ClassicalFamily::D: expected.push_back(alternating_symbol(2 * *k).to_string()); break;
    }
  }
  c.shape_matches = at_bound == expected;
  return c;
}

}  // namespace

AlphaCertificate max_alpha_certificate(ClassicalFamily family, unsigned n) { return certificate(family, n, true); }

AlphaCertificate max_alpha_certificate_serial(ClassicalFamily family, unsigned n) {
  return certificate(family, n, false);
}

}  // namespace ssp
