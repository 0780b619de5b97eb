#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbibraid {

struct Syllable {
  std::string generator;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Single generator occurrence with sign +1 or -1.
struct Letter {
  std::string generator;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Word over signed generators, stored as syllables g^e with e != 0.
/// A Word need not be freely reduced; `freely_reduced()` returns the
/// reduced representative.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::string name, std::int64_t exponent = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  /// Parses "x1 x2^-1 x1^3". Exponent zero is rejected.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }
  std::int64_t length() const noexcept;  // number of letters

  std::vector<Letter> letters() const;

  Word freely_reduced() const;
  Word cyclically_reduced() const;  // freely and cyclically reduced
  Word inverse() const;
  Word power(std::int64_t k) const;

  /// Replaces every occurrence of `name` by `replacement`, then reduces.
  Word substitute(const std::string& name, const Word& replacement) const;

  std::int64_t exponent_sum(const std::string& name) const;
  /// Number of letters equal to `name` or its inverse.
  std::int64_t occurrences(const std::string& name) const;

  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Least element of all cyclic rotations of w and of w^-1, after free and
/// cyclic reduction. Two relators define the same normal closure generator
/// iff their canonical forms coincide.
Word canonical_relator(const Word& w);

bool relators_equivalent(const Word& a, const Word& b);

/// Writes a cyclically reduced word as root^exponent with the root as short
/// as possible. Exponent 1 means the word is not a proper power.
struct RootDecomposition {
  Word root;
  std::int64_t exponent = 1;
};

RootDecomposition maximal_root(const Word& w);

}  // namespace orbibraid
