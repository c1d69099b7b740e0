#pragma once

// Hyperoctahedral groups W_n (type C_n Weyl groups), the symmetric groups
// S_n inside them, reduced words, and partitions.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spschub {

/// Letters are indices of simple reflections: 0 is the sign change s_0,
/// a >= 1 swaps positions a and a+1.
using Word = std::vector<int>;

/// A barred permutation w = (w_1, ..., w_n). Barred entries are stored as
/// negative integers. Elements act as maps on {±1, ..., ±n} with
/// w(-i) = -w(i), and products compose on the left: (uv)(i) = u(v(i)).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);
  /// The simple reflection s_a of W_n.
  static SignedPermutation generator(int a, int n);
  /// w_0 = (1̄, 2̄, ..., n̄).
  static SignedPermutation longest(int n);
  /// ϖ_0 = (n, n-1, ..., 1).
  static SignedPermutation longest_unsigned(int n);
  /// Evaluates s_{a_1} ... s_{a_r} as ((e s_{a_1}) s_{a_2}) ... .
  static SignedPermutation from_word(const Word& word, int n);

  /// Accepts "-2 1 3" (bars as minus signs) or "s1 s0" / "s1s0".
  static SignedPermutation parse(std::string_view text, int n);

  int rank() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  /// w(i) for i in ±1..±n.
  int apply(int i) const;

  SignedPermutation inverse() const;
  SignedPermutation operator*(const SignedPermutation& rhs) const;
  /// w s_a, i.e. right multiplication by a generator.
  SignedPermutation times_generator(int a) const;

  bool is_unsigned() const;
  /// Number of negative entries.
  int bar_count() const;

  /// "-2 1 3".
  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Type C length: inversions i<j with w_i > w_j plus pairs i <= j with
/// -w_i > w_j.
int length(const SignedPermutation& w);

/// Length of the element spelled by the word, without building it twice.
bool is_reduced(const Word& word, int n);

/// All reduced words in lexicographic order, optionally truncated.
std::vector<Word> reduced_words(const SignedPermutation& w,
                                std::optional<std::size_t> limit = {});

/// Lexicographically smallest reduced word.
Word first_reduced_word(const SignedPermutation& w);

std::string word_to_string(const Word& word);

/// The monomorphism W_n -> S_{2n}; one-line notation of phi(w).
std::vector<int> embed_phi(const SignedPermutation& w);

/// i_{m,n}: pads w with fixed points m+1..n.
SignedPermutation embed(const SignedPermutation& w, int n);

/// All 2^n n! elements, sorted by (length, first reduced word).
std::vector<SignedPermutation> hyperoctahedral_group(int n);
/// S_n as unsigned elements of W_n, sorted by (length, one-line notation).
std::vector<SignedPermutation> symmetric_group(int n);

class Partition {
 public:
  Partition() = default;
  /// Parts must be weakly decreasing and nonnegative; zeros are dropped.
  explicit Partition(std::vector<int> parts);

  /// "3,1"; the empty string gives the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool is_strict() const;
  /// The strict partition whose parts complement ours in {1..n}.
  Partition complement(int n) const;
  /// Largest part occurring at least twice, or 0.
  int largest_repeated_part() const;
  /// Deletes two copies of the given part.
  Partition remove_pair(int part) const;
  /// Inserts (k, k).
  Partition add_pair(int part) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of `weight` with largest part <= n, in reverse lexicographic
/// order.
std::vector<Partition> partitions_bounded(int weight, int n);
/// Strict partitions with largest part <= n (the set D_n), by weight then
/// reverse lexicographic order.
std::vector<Partition> strict_partitions(int n);

/// w_λ = (λ̄_1, ..., λ̄_ℓ, λ'_k, ..., λ'_1).
SignedPermutation max_grassmannian(const Partition& lambda, int n);

}  // namespace spschub
