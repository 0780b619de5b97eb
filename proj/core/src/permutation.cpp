#include "orbibraid/permutation.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "orbibraid/error.hpp"

namespace orbibraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw InvariantViolation("bijective", "image array is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 0 || i + 1 >= n)
    throw InvariantViolation("crossing_index_range",
                             "crossing " + std::to_string(i + 1) + " outside 1.." +
                                 std::to_string(n - 1));
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(i + 1)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> out(p.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q(p.images_[i]);
  return Permutation(std::move(out));
}

Permutation permutation_of_braid(int n, const std::vector<int>& crossings) {
  if (n < 1) throw InvariantViolation("strings_ge_1", "braid needs at least one string");
  Permutation p = Permutation::identity(n);
  for (int c : crossings) p = p * Permutation::adjacent_transposition(n, (c < 0 ? -c : c) - 1);
  return p;
}

bool is_pure_braid(int n, const std::vector<int>& crossings) {
  return permutation_of_braid(n, crossings).is_identity();
}

namespace {

std::vector<Permutation> enumerate_center(int n) {
  // S_n is generated by (1 2) and (1 2 ... n).
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::adjacent_transposition(n, 0));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.emplace_back(std::move(cycle));
  }
  std::vector<Permutation> center;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation z(images);
    if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return z * g == g * z; }))
      center.push_back(std::move(z));
  } while (std::next_permutation(images.begin(), images.end()));
  return center;
}

}  // namespace

std::vector<Permutation> symmetric_center_elements(int n) {
  if (n < 1 || n > 8)
    throw InvariantViolation("brute_force_degree", "brute force covers 1 <= n <= 8");
  // Enumerating S_8 costs milliseconds and braid queries ask repeatedly.
  static const std::array<std::vector<Permutation>, 9> cache = [] {
    std::array<std::vector<Permutation>, 9> all;
    for (int k = 1; k <= 8; ++k) all[static_cast<std::size_t>(k)] = enumerate_center(k);
    return all;
  }();
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace orbibraid
