#include "orbibraid/free_product.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

std::string to_string(const Order& order) {
  return order ? std::to_string(*order) : std::string("infinite");
}

FreeProductContext::FreeProductContext(std::vector<Order> factor_orders)
    : orders_(std::move(factor_orders)) {
  if (orders_.empty())
    throw InvariantViolation("at_least_one_factor", "free product needs a factor");
  for (const auto& q : orders_)
    if (q && *q < 2)
      throw InvariantViolation("factor_order_ge_2",
                               "finite factor order " + std::to_string(*q) + " is below 2");
}

std::string FreeProductContext::generator_name(std::size_t factor) const {
  return "x" + std::to_string(factor + 1);
}

std::size_t FreeProductContext::factor_of(const std::string& generator) const {
  if (generator.size() >= 2 && generator[0] == 'x') {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < generator.size(); ++i) {
      if (generator[i] < '0' || generator[i] > '9') throw UnknownGenerator(generator);
      idx = idx * 10 + static_cast<std::size_t>(generator[i] - '0');
      if (idx > orders_.size()) throw UnknownGenerator(generator);
    }
    if (idx >= 1 && generator[1] != '0') return idx - 1;
  }
  throw UnknownGenerator(generator);
}

std::int64_t FreeProductContext::reduce_exponent(std::size_t factor, std::int64_t e) const {
  const Order& q = orders_[factor];
  if (!q) return e;
  std::int64_t r = ((e % *q) + *q) % *q;
  if (2 * r > *q) r -= *q;
  return r;
}

namespace {

void push(const FreeProductContext& ctx, std::vector<FactorSyllable>& out, std::size_t f,
          std::int64_t e) {
  if (!out.empty() && out.back().factor == f) {
    const std::int64_t merged = ctx.reduce_exponent(f, out.back().exponent + e);
    if (merged == 0) out.pop_back();
    else out.back().exponent = merged;
    return;
  }
  const std::int64_t r = ctx.reduce_exponent(f, e);
  if (r != 0) out.push_back({f, r});
}

}  // namespace

NormalWord normal_form(const FreeProductContext& ctx, const std::vector<FactorSyllable>& w) {
  NormalWord out;
  for (const auto& s : w) {
    if (s.factor >= ctx.factor_count())
      throw UnknownGenerator("x" + std::to_string(s.factor + 1));
    push(ctx, out.syllables, s.factor, s.exponent);
  }
  return out;
}

NormalWord normal_form(const FreeProductContext& ctx, const Word& w) {
  std::vector<FactorSyllable> s;
  s.reserve(w.syllable_count());
  for (const auto& syl : w.syllables()) s.push_back({ctx.factor_of(syl.generator), syl.exponent});
  return normal_form(ctx, s);
}

NormalWord multiply(const FreeProductContext& ctx, const NormalWord& a, const NormalWord& b) {
  NormalWord out = a;
  for (const auto& s : b.syllables) push(ctx, out.syllables, s.factor, s.exponent);
  return out;
}

NormalWord inverse(const NormalWord& w) {
  NormalWord out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->factor, -it->exponent});
  return out;
}

NormalWord cyclically_reduce(const FreeProductContext& ctx, const NormalWord& w) {
  NormalWord cur = w;
  while (cur.length() >= 2 && cur.syllables.front().factor == cur.syllables.back().factor) {
    // s1 m sn is conjugate to m (sn s1).
    const FactorSyllable first = cur.syllables.front();
    NormalWord rest;
    rest.syllables.assign(cur.syllables.begin() + 1, cur.syllables.end());
    cur = multiply(ctx, rest, NormalWord{{first}});
  }
  return cur;
}

Order element_order(const FreeProductContext& ctx, const NormalWord& w) {
  const NormalWord c = cyclically_reduce(ctx, w);
  if (c.identity()) return 1;
  if (c.length() >= 2) return kInfinite;
  const auto& s = c.syllables.front();
  const Order& q = ctx.factor_orders()[s.factor];
  if (!q) return kInfinite;
  return *q / std::gcd(*q, s.exponent < 0 ? -s.exponent : s.exponent);
}

Order element_order(const FreeProductContext& ctx, const Word& w) {
  return element_order(ctx, normal_form(ctx, w));
}

Word to_word(const FreeProductContext& ctx, const NormalWord& w) {
  std::vector<Syllable> s;
  for (const auto& syl : w.syllables) s.push_back({ctx.generator_name(syl.factor), syl.exponent});
  return Word(std::move(s));
}

std::string to_string(const FreeProductContext& ctx, const NormalWord& w) {
  return to_word(ctx, w).to_string();
}

namespace {

// Nontrivial exponent representatives of one factor, ascending.
std::vector<std::int64_t> factor_values(const FreeProductContext& ctx, std::size_t f,
                                        std::int64_t infinite_bound) {
  std::vector<std::int64_t> v;
  const Order& q = ctx.factor_orders()[f];
  if (q) {
    for (std::int64_t e = 1; e < *q; ++e) v.push_back(ctx.reduce_exponent(f, e));
  } else {
    for (std::int64_t e = 1; e <= infinite_bound; ++e) {
      v.push_back(e);
      v.push_back(-e);
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::uint64_t count_normal_words(const FreeProductContext& ctx,
                                 const CentralizerSearchOptions& opts) {
  const std::size_t k = ctx.factor_count();
  std::vector<std::uint64_t> width(k);
  for (std::size_t f = 0; f < k; ++f)
    width[f] = factor_values(ctx, f, opts.infinite_exponent_bound).size();

  // ending[f] = number of normal words of the current length ending in f.
  std::vector<std::uint64_t> ending(width);
  std::uint64_t total = 1;
  auto add = [&](std::uint64_t& acc, std::uint64_t v) {
    acc = (acc > UINT64_MAX - v) ? UINT64_MAX : acc + v;
  };
  for (std::size_t len = 1; len <= opts.max_syllables; ++len) {
    std::uint64_t level = 0;
    for (auto v : ending) add(level, v);
    add(total, level);
    if (total > opts.cap) return total;
    std::vector<std::uint64_t> next(k, 0);
    for (std::size_t f = 0; f < k; ++f) {
      const std::uint64_t others = level - ending[f];
      next[f] = (width[f] && others > UINT64_MAX / width[f]) ? UINT64_MAX : others * width[f];
    }
    ending = std::move(next);
  }
  return total;
}

std::vector<NormalWord> enumerate_normal_words(const FreeProductContext& ctx,
                                               const CentralizerSearchOptions& opts) {
  if (opts.max_syllables < 1)
    throw InvariantViolation("max_syllables_ge_1", "search bound must be at least 1");
  const std::uint64_t total = count_normal_words(ctx, opts);
  if (total > opts.cap)
    throw SearchTooLarge("enumeration of " + std::to_string(total) +
                         "+ normal words exceeds cap " + std::to_string(opts.cap));

  std::vector<std::vector<std::int64_t>> values(ctx.factor_count());
  for (std::size_t f = 0; f < ctx.factor_count(); ++f)
    values[f] = factor_values(ctx, f, opts.infinite_exponent_bound);

  std::vector<NormalWord> out;
  out.reserve(static_cast<std::size_t>(total));
  NormalWord cur;
  // Preorder DFS with children in (factor, exponent) order is lexicographic.
  auto dfs = [&](auto&& self) -> void {
    out.push_back(cur);
    if (cur.length() == opts.max_syllables) return;
    for (std::size_t f = 0; f < ctx.factor_count(); ++f) {
      if (!cur.identity() && cur.syllables.back().factor == f) continue;
      for (std::int64_t e : values[f]) {
        cur.syllables.push_back({f, e});
        self(self);
        cur.syllables.pop_back();
      }
    }
  };
  dfs(dfs);
  return out;
}

std::vector<NormalWord> bounded_centralizer_search(const FreeProductContext& ctx, const Word& w,
                                                   const CentralizerSearchOptions& opts) {
  const NormalWord target = normal_form(ctx, w);
  std::vector<NormalWord> out;
  for (auto& u : enumerate_normal_words(ctx, opts))
    if (multiply(ctx, target, u) == multiply(ctx, u, target)) out.push_back(std::move(u));
  return out;
}

std::vector<NormalWord> bounded_center_search(const FreeProductContext& ctx,
                                              const CentralizerSearchOptions& opts) {
  std::vector<NormalWord> gens;
  for (std::size_t f = 0; f < ctx.factor_count(); ++f) gens.push_back(NormalWord{{{f, 1}}});
  std::vector<NormalWord> out;
  for (auto& u : enumerate_normal_words(ctx, opts)) {
    bool central = true;
    for (const auto& g : gens)
      if (multiply(ctx, g, u) != multiply(ctx, u, g)) {
        central = false;
        break;
      }
    if (central) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace orbibraid
