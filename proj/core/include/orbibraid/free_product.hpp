#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbibraid/word.hpp"

namespace orbibraid {

/// Order of a cyclic factor or of an element; nullopt is infinite.
using Order = std::optional<std::int64_t>;
inline constexpr Order kInfinite = std::nullopt;

std::string to_string(const Order& order);

/// Free product of cyclic groups <x1> * ... * <xk>.
class FreeProductContext {
 public:
  explicit FreeProductContext(std::vector<Order> factor_orders);

  const std::vector<Order>& factor_orders() const noexcept { return orders_; }
  std::size_t factor_count() const noexcept { return orders_.size(); }

  /// Generator names are "x1", ..., "xk".
  std::string generator_name(std::size_t factor) const;
  std::size_t factor_of(const std::string& generator) const;

  /// Least-absolute residue of e modulo the factor order, ties to positive.
  std::int64_t reduce_exponent(std::size_t factor, std::int64_t e) const;

 private:
  std::vector<Order> orders_;
};

struct FactorSyllable {
  std::size_t factor = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const FactorSyllable&, const FactorSyllable&) = default;
  friend auto operator<=>(const FactorSyllable&, const FactorSyllable&) = default;
};

/// Alternating product of nontrivial factor elements. Empty is the identity.
struct NormalWord {
  std::vector<FactorSyllable> syllables;

  std::size_t length() const noexcept { return syllables.size(); }
  bool identity() const noexcept { return syllables.empty(); }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
};

NormalWord normal_form(const FreeProductContext& ctx, const Word& w);
NormalWord normal_form(const FreeProductContext& ctx, const std::vector<FactorSyllable>& w);

NormalWord multiply(const FreeProductContext& ctx, const NormalWord& a, const NormalWord& b);
NormalWord inverse(const NormalWord& w);

/// Conjugates away equal first and last factors until they differ.
NormalWord cyclically_reduce(const FreeProductContext& ctx, const NormalWord& w);

Order element_order(const FreeProductContext& ctx, const Word& w);
Order element_order(const FreeProductContext& ctx, const NormalWord& w);

Word to_word(const FreeProductContext& ctx, const NormalWord& w);
std::string to_string(const FreeProductContext& ctx, const NormalWord& w);

struct CentralizerSearchOptions {
  std::size_t max_syllables = 6;
  /// Exponent range 1..bound (both signs) enumerated for infinite factors.
  std::int64_t infinite_exponent_bound = 2;
  /// Refuse enumerations larger than this many words.
  std::uint64_t cap = 10'000'000;
};

/// Number of normal words of length <= max_syllables under `opts`.
std::uint64_t count_normal_words(const FreeProductContext& ctx,
                                 const CentralizerSearchOptions& opts);

/// All normal words of length <= opts.max_syllables in lexicographic order.
std::vector<NormalWord> enumerate_normal_words(const FreeProductContext& ctx,
                                               const CentralizerSearchOptions& opts);

/// Normal words of syllable length <= max_syllables commuting with w, in
/// lexicographic order. Throws SearchTooLarge above the cap.
std::vector<NormalWord> bounded_centralizer_search(const FreeProductContext& ctx, const Word& w,
                                                   const CentralizerSearchOptions& opts = {});

/// Words of length <= opts.max_syllables commuting with every generator.
std::vector<NormalWord> bounded_center_search(const FreeProductContext& ctx,
                                              const CentralizerSearchOptions& opts = {});

}  // namespace orbibraid
