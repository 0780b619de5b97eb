#pragma once

#include <string>
#include <vector>

namespace orbibraid {

/// Permutation of {0, ..., n-1}; printed 1-based. Products compose left to
/// right: (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvariantViolation("bijective") unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps the adjacent points i and i+1 (0-based).
  static Permutation adjacent_transposition(int n, int i);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Disjoint cycle notation, 1-based, fixed points omitted; "()" for the
  /// identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Image in S_n of a braid word given as crossing indices in 1..n-1 (signs
/// are ignored). Maps each strand's start position to its end position.
Permutation permutation_of_braid(int n, const std::vector<int>& crossings);

bool is_pure_braid(int n, const std::vector<int>& crossings);

/// Center of S_n by enumerating S_n (n <= 8).
std::vector<Permutation> symmetric_center_elements(int n);

}  // namespace orbibraid
