/// Combinatorial label families (partitions, compositions, permutations,
/// chain levels, binary words) with descent machinery, shuffle enumeration
/// and the theta statistic. These are the vertex/basis indices used by every
/// skeleton and graph in the library.
///
/// Enumeration orders are fixed and documented so that emitted files are
/// reproducible byte for byte:
///   - compositions_of(n): lexicographic by parts, (1,1,1) < (1,2) < (2,1) < (3)
///   - partitions_of(n):   descending lexicographic, (4) > (3,1) > ... > (1,1,1,1)
///   - permutations_of(n): lexicographic by one-line word
///
/// String forms (the vertex identifiers in DOT/JSON): partition "[3,1]",
/// composition "(2,1,1)", permutation one-line "3142" (the empty permutation
/// renders "e"), chain level "5", binary word "AB" ("e" when empty).
#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace dgg {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, every part >= 1

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // sum of parts
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct Composition {
  std::vector<int> parts;  // every part >= 1

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int size() const;
  std::string to_string() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

struct Permutation {
  std::vector<int> word;  // one-line form, a bijection on {1..n}

  Permutation() = default;
  explicit Permutation(std::vector<int> w);

  int size() const { return static_cast<int>(word.size()); }
  std::string to_string() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct ChainLevel {
  int n = 0;

  ChainLevel() = default;
  explicit ChainLevel(int level);

  std::string to_string() const { return std::to_string(n); }
  friend auto operator<=>(const ChainLevel&, const ChainLevel&) = default;
};

/// A word over the two-letter alphabet {A,B}; the label family of the
/// synthetic differential-coefficient-2 instance used in tests.
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string w);

  int size() const { return static_cast<int>(letters.size()); }
  std::string to_string() const { return letters.empty() ? "e" : letters; }
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// A vertex/basis index from any of the label families.
struct Label {
  std::variant<Partition, Composition, Permutation, ChainLevel, Word> value;

  Label() = default;
  Label(Partition p) : value(std::move(p)) {}
  Label(Composition c) : value(std::move(c)) {}
  Label(Permutation w) : value(std::move(w)) {}
  Label(ChainLevel l) : value(l) {}
  Label(Word w) : value(std::move(w)) {}

  int degree() const;
  std::string to_string() const;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// All compositions of n in lexicographic order; 2^{n-1} of them for n >= 1,
/// just the empty composition for n = 0.
std::vector<Composition> compositions_of(int n);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All n! permutations in lexicographic order. Enumeration is capped (40320
/// elements at the default cap of 8); exceeding the cap throws.
std::vector<Permutation> permutations_of(int n, int cap = 8);

/// Descent set {i : w_i > w_{i+1}}, positions in {1..n-1}, ascending.
std::vector<int> descent_set(const Permutation& w);

/// Des(I) = {i_1, i_1+i_2, ...}: the proper partial sums of I, ascending.
std::vector<int> descent_set(const Composition& I);

/// The composition of n with the given descent set.
Composition composition_from_descents(int n, const std::vector<int>& descents);

/// The unique composition whose partial sums are the descent set of u.
Composition composition_of_word(const Permutation& u);

/// The lexicographically smallest permutation with descent set Des(I).
Permutation canonical_rep(const Composition& I);

/// Number of inversions of w (the Coxeter length).
int inversions(const Permutation& w);

struct Shuffle {
  Permutation word;
  int theta = 0;  // # of pairs (small-block letter, big-block letter) with
                  // the small-block letter occurring after the big one
};

/// All C(m+n, n) interleavings of w (letters 1..m) and v shifted up by m
/// (letters m+1..m+n), in lexicographic order of the small-block position
/// sets. Each comes with its theta statistic.
std::vector<Shuffle> shuffles(const Permutation& w, const Permutation& v);

/// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

}  // namespace dgg
