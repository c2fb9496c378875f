#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssp {

/// A finite set of positive integers X indexing an irreducible character of
/// the symmetric group of degree n(X) = sum X - C(#X, 2). Stored sorted.
class TypeAIndex {
 public:
  explicit TypeAIndex(std::vector<unsigned> elements);

  const std::vector<unsigned>& elements() const { return x_; }
  /// Parts ascending: lambda_i = x_i - (i - 1).
  std::vector<unsigned> partition() const;
  static TypeAIndex from_partition(std::vector<unsigned> parts);

  std::string to_string() const;
  friend auto operator<=>(const TypeAIndex&, const TypeAIndex&) = default;

 private:
  std::vector<unsigned> x_;
};

enum class Spin : std::uint8_t { Plus, Minus };

/// A pair of finite sets of naturals (X, Y). Defect #X - #Y is 1 for type B
/// and 0 for type D. For D the pair is unordered and stored with the
/// lexicographically smaller row first; `spin` separates the two
/// representations attached to X == Y.
class SymbolPair {
 public:
  SymbolPair(std::vector<unsigned> x, std::vector<unsigned> y, std::optional<Spin> spin = std::nullopt);

  /// Unordered (type D) pair, rows swapped into canonical order.
  static SymbolPair unordered(std::vector<unsigned> a, std::vector<unsigned> b, std::optional<Spin> spin = std::nullopt);

  const std::vector<unsigned>& x() const { return x_; }
  const std::vector<unsigned>& y() const { return y_; }
  std::optional<Spin> spin() const { return spin_; }
  int defect() const { return static_cast<int>(x_.size()) - static_cast<int>(y_.size()); }
  /// 0 not in Y.
  bool normal_form() const;
  /// 0 lies in at most one row, so the symbol is not a shift of a smaller one.
  bool reduced() const;

  std::string to_string() const;
  friend auto operator<=>(const SymbolPair&, const SymbolPair&) = default;

 private:
  std::vector<unsigned> x_, y_;
  std::optional<Spin> spin_;
};

/// Cardinalities of the even/odd parts of X and Y.
struct ParitySplit {
  unsigned x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

ParitySplit parity_split(const SymbolPair& s);

/// [n/2] with the floor convention for odd n (n >= 0 here).
inline long half_floor(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

unsigned rank_a(const TypeAIndex& x);
long alpha_a(const TypeAIndex& x);

/// floor((m-1)^2 / 4), m = #X + #Y.
long symbol_rank_offset(unsigned m);
long rank_bd(const SymbolPair& s);
long alpha_bd(const SymbolPair& s);

/// ({0} + (X+1), {0} + (Y+1)); rank and defect are unchanged.
SymbolPair shift(const SymbolPair& s);

/// All X with rank_a(X) == n, sorted.
std::vector<TypeAIndex> enumerate_a(unsigned n);

/// All normal-form pairs (0 not in Y) of the given defect and rank, sorted.
/// Defect 0 pairs are unordered; X == Y pairs appear once per spin.
std::vector<SymbolPair> enumerate_bd(unsigned n, unsigned defect);

/// All reduced symbols (0 in at most one row) of the given defect and rank;
/// one per shift class, so for defect 1 this indexes every bipartition of n.
std::vector<SymbolPair> enumerate_bd_reduced(unsigned n, unsigned defect);

/// Symbols with exactly `y` entries in the second row; the building block
/// of both enumerations above. `reduced_only` selects the shift-reduced set,
/// otherwise the normal-form set.
std::vector<SymbolPair> enumerate_bd_slice(unsigned n, unsigned defect, unsigned y, bool reduced_only);

/// X = {1, 3, ..., 2k-1}
TypeAIndex staircase_index(unsigned k);
/// ({0, 2, ..., m-1}, {1, 3, ..., m-2}) for odd m, ({0, ..., m-2}, {1, ..., m-1}) for even m.
SymbolPair alternating_symbol(unsigned m);

enum class ClassicalFamily { A, B, D };

/// Whether n admits the alternating maximizer: triangular for A, k^2+k for
/// B, a square for D. Returns k.
std::optional<unsigned> alternating_witness(ClassicalFamily family, unsigned n);

struct AlphaCertificate {
  ClassicalFamily family = ClassicalFamily::A;
  unsigned n = 0;
  long max_alpha = 0;
  /// [n/2] for A, 2[n/2] for B and D.
  long bound = 0;
  std::vector<std::string> maximizers;
  std::size_t candidates = 0;
  /// max_alpha <= bound.
  bool bound_respected = false;
  /// Some index attains the bound.
  bool bound_attained = false;
  /// The indices attaining the bound are exactly the alternating shape (or
  /// there are none and no alternating shape exists at this n).
  bool shape_matches = false;
};

/// Brute-force maximum of alpha over the enumeration of rank n, fanned out
/// over the second-row size with OpenMP. Throws GuardExceeded for n > 40.
AlphaCertificate max_alpha_certificate(ClassicalFamily family, unsigned n);
/// Single-threaded reference for the same computation.
AlphaCertificate max_alpha_certificate_serial(ClassicalFamily family, unsigned n);

}  // namespace ssp
