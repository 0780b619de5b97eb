#include "orbibraid/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

namespace {

void push_reduced(std::vector<Syllable>& out, const std::string& g, std::int64_t e) {
  if (e == 0) return;
  if (!out.empty() && out.back().generator == g) {
    out.back().exponent += e;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back({g, e});
}

std::int64_t parse_int(std::string_view s, std::string_view token) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvariantViolation("word_syntax", "bad exponent in '" + std::string(token) + "'");
  return v;
}

}  // namespace

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const auto& s : syllables_)
    if (s.exponent == 0)
      throw InvariantViolation("nonzero_exponent", "syllable " + s.generator + "^0");
}

Word Word::generator(std::string name, std::int64_t exponent) {
  return Word({{std::move(name), exponent}});
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> out;
  for (const auto& l : letters) {
    if (!out.empty() && out.back().generator == l.generator &&
        (out.back().exponent > 0) == (l.sign > 0)) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.generator, l.sign});
    }
  }
  return Word(std::move(out));
}

Word Word::parse(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    if (name.empty())
      throw InvariantViolation("word_syntax", "missing generator in '" + std::string(token) + "'");
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InvariantViolation("word_syntax", "bad generator name '" + std::string(name) + "'");
    std::int64_t e = 1;
    if (caret != std::string_view::npos) e = parse_int(token.substr(caret + 1), token);
    if (e == 0)
      throw InvariantViolation("nonzero_exponent", "zero exponent in '" + std::string(token) + "'");
    out.push_back({std::string(name), e});
  }
  return Word(std::move(out));
}

std::int64_t Word::length() const noexcept {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : syllables_) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < s.exponent * sign; ++k) out.push_back({s.generator, sign});
  }
  return out;
}

Word Word::freely_reduced() const {
  std::vector<Syllable> out;
  for (const auto& s : syllables_) push_reduced(out, s.generator, s.exponent);
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::cyclically_reduced() const {
  const std::vector<Syllable> s = freely_reduced().syllables_;
  std::size_t lo = 0, hi = s.size();
  std::int64_t head = hi ? s[0].exponent : 0;
  // Conjugate the last syllable onto the first while their generators agree.
  while (hi - lo >= 2 && s[lo].generator == s[hi - 1].generator) {
    head += s[hi - 1].exponent;
    --hi;
    if (head == 0) {
      ++lo;
      if (lo < hi) head = s[lo].exponent;
    }
  }
  Word w;
  if (lo < hi) {
    w.syllables_.assign(s.begin() + static_cast<std::ptrdiff_t>(lo),
                        s.begin() + static_cast<std::ptrdiff_t>(hi));
    w.syllables_.front().exponent = head;
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::power(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  std::vector<Syllable> out;
  for (std::int64_t i = 0; i < k; ++i)
    for (const auto& s : base.syllables_) push_reduced(out, s.generator, s.exponent);
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::substitute(const std::string& name, const Word& replacement) const {
  std::vector<Syllable> out;
  for (const auto& s : syllables_) {
    if (s.generator != name) {
      push_reduced(out, s.generator, s.exponent);
      continue;
    }
    for (const auto& r : replacement.power(s.exponent).syllables_)
      push_reduced(out, r.generator, r.exponent);
  }
  Word w;
  w.syllables_ = std::move(out);
  return w;
}

std::int64_t Word::exponent_sum(const std::string& name) const {
  std::int64_t sum = 0;
  for (const auto& s : syllables_)
    if (s.generator == name) sum += s.exponent;
  return sum;
}

std::int64_t Word::occurrences(const std::string& name) const {
  std::int64_t n = 0;
  for (const auto& s : syllables_)
    if (s.generator == name) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) os << ' ';
    os << syllables_[i].generator;
    if (syllables_[i].exponent != 1) os << '^' << syllables_[i].exponent;
  }
  return os.str();
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> out = a.freely_reduced().syllables_;
  for (const auto& s : b.syllables_) push_reduced(out, s.generator, s.exponent);
  Word w;
  w.syllables_ = std::move(out);
  return w.freely_reduced();
}

Word canonical_relator(const Word& w) {
  const std::vector<Letter> base = w.cyclically_reduced().letters();
  if (base.empty()) return Word{};
  std::vector<Letter> inv(base.rbegin(), base.rend());
  for (auto& l : inv) l.sign = -l.sign;

  const std::size_t n = base.size();
  std::vector<Letter> best;
  const std::vector<Letter>* sources[] = {&base, &inv};
  for (const std::vector<Letter>* src : sources) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Letter> cand;
      cand.reserve(n);
      for (std::size_t i = 0; i < n; ++i) cand.push_back((*src)[(r + i) % n]);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return Word::from_letters(best);
}

bool relators_equivalent(const Word& a, const Word& b) {
  return canonical_relator(a) == canonical_relator(b);
}

RootDecomposition maximal_root(const Word& w) {
  const std::vector<Letter> letters = w.cyclically_reduced().letters();
  const std::size_t n = letters.size();
  if (n == 0) return {Word{}, 1};
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = letters[i] == letters[i - d];
    if (periodic) {
      std::vector<Letter> root(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(d));
      return {Word::from_letters(root), static_cast<std::int64_t>(n / d)};
    }
  }
  return {Word::from_letters(letters), 1};
}

}  // namespace orbibraid
