#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sspkit/coxeter.hpp"
#include "sspkit/poly.hpp"
#include "sspkit/report.hpp"

namespace ssp {

/// Group elements packed for hashing: a signed-permutation window or a
/// row-major integer matrix of size at most 8x8.
using PackedElement = std::array<std::int8_t, 64>;

struct PackedHash {
  std::size_t operator()(const PackedElement& e) const noexcept;
};

/// Element of the hyperoctahedral group: window w(1), ..., w(n) with |w| a
/// permutation of 1..n. Composition (v*w)(i) = v(w(i)).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(unsigned n);

  unsigned size() const { return static_cast<unsigned>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  int operator()(int i) const;
  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;

  unsigned sign_changes() const;
  bool in_type_d() const { return sign_changes() % 2 == 0; }

  /// Cycle lengths on |.|, split by the sign of the traversal; each sorted.
  std::vector<unsigned> positive_cycles() const;
  std::vector<unsigned> negative_cycles() const;

  /// Matrix in the natural n-dimensional representation, e_j -> sign e_|w(j)|.
  std::vector<std::vector<long>> matrix() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> w_;
};

/// Product of u^l - 1 over positive cycles and u^l + 1 over negative cycles.
Poly char_poly_reflection(const SignedPermutation& w);
/// Characteristic polynomial det(u I - m), exact (Faddeev-LeVerrier).
Poly char_poly_matrix(const std::vector<std::vector<long>>& m);
bool is_elliptic(const Poly& char_poly);
bool is_elliptic(const SignedPermutation& w);

/// Cartan matrix (Bourbaki labelling) for the crystallographic exceptional
/// types and for B(n)/D(n).
std::vector<std::vector<long>> cartan_matrix(const WeylType& t);
/// Simple reflections in the root basis: s_i = I with row i reduced by row i
/// of the Cartan matrix.
std::vector<std::vector<std::vector<long>>> simple_reflection_matrices(const WeylType& t);
/// Positive roots as coordinate vectors in the simple-root basis.
std::vector<std::vector<long>> positive_roots(const WeylType& t);
/// Number of positive roots sent to negative roots by m.
unsigned root_length(const std::vector<std::vector<long>>& m, const std::vector<std::vector<long>>& roots);

enum class DescriptorKind { NegativeCycles, CharPoly, CoxeterClass };

struct ClassDesc {
  WeylType type;
  DescriptorKind kind;
  std::vector<unsigned> negative_cycles;
  std::optional<Poly> char_poly;
  unsigned M = 0;
  std::optional<unsigned long> expected_size;
};

/// Throws OppositionNontrivial (A, E6, D(k^2) with k odd), NotSuperspecial,
/// UnsupportedType (H3, H4, I2).
ClassDesc ssp_class(const WeylType& t);

struct SearchResult {
  std::optional<unsigned> M_found;
  /// Generator indices of a matched element of minimal length.
  std::vector<unsigned> witness;
  /// Matched elements over the whole group.
  std::size_t size_found = 0;
  /// Matched elements of minimal length.
  std::size_t at_minimum = 0;
  std::size_t visited = 0;
  bool all_elliptic = true;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

constexpr unsigned long kDefaultBudget = 10'000'000;

/// Breadth-first enumeration of W by word length from the identity with
/// right multiplication by simple reflections; the frontier of each level is
/// expanded with OpenMP and merged in a fixed order. Throws BudgetExceeded
/// when |W| > budget and UnsupportedType when there is no concrete model.
SearchResult min_length_search(const ClassDesc& desc, unsigned long budget = kDefaultBudget);
/// Single-threaded reference.
SearchResult min_length_search_serial(const ClassDesc& desc, unsigned long budget = kDefaultBudget);

/// Applies the generators of the model for t to a word, returning the
/// signed permutation (B, D only).
SignedPermutation signed_permutation_from_word(const WeylType& t, const std::vector<unsigned>& word);

VerificationReport coxeter_check_e7();
VerificationReport e8_numeric_checks();
/// Searches for B2, B6, D4, G2, F4 plus the E7 and E8 checks.
VerificationReport conjugacy_suite(unsigned long budget = kDefaultBudget);

}  // namespace ssp
