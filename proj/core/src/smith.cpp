#include "orbibraid/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "orbibraid/error.hpp"

namespace orbibraid {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith form");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith form");
  return r;
}

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) throw std::overflow_error("integer overflow in Smith form");
  return v < 0 ? -v : v;
}

// Row and column operations applied to the working matrix, mirrored into
// the witness transforms when they are being tracked.
class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      left_ = IntMatrix::identity(m.rows());
      right_ = IntMatrix::identity(m.cols());
    }
  }

  IntMatrix& a() { return a_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) std::swap(left_(i, c), left_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_(r, i), right_(r, j));
  }

  // row_dst -= k * row_src
  void sub_row(std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < a_.cols(); ++c)
      a_(dst, c) = checked_sub(a_(dst, c), checked_mul(k, a_(src, c)));
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c)
        left_(dst, c) = checked_sub(left_(dst, c), checked_mul(k, left_(src, c)));
  }

  // col_dst -= k * col_src
  void sub_col(std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < a_.rows(); ++r)
      a_(r, dst) = checked_sub(a_(r, dst), checked_mul(k, a_(r, src)));
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r)
        right_(r, dst) = checked_sub(right_(r, dst), checked_mul(k, right_(r, src)));
  }

  void add_row(std::size_t dst, std::size_t src) { sub_row(dst, src, -1); }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = checked_mul(-1, a_(i, c));
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) left_(i, c) = checked_mul(-1, left_(i, c));
  }

  SmithWitness witness() const { return {left_, right_, a_}; }

 private:
  IntMatrix a_;
  bool track_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InvariantViolation("rectangular_matrix", "row " + std::to_string(r) + " has " +
                                                         std::to_string(rows[r].size()) +
                                                         " entries, expected " +
                                                         std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m, bool with_witness) {
  Reducer red(m, with_witness);
  IntMatrix& a = red.a();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::int64_t> factors;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    auto find_pivot = [&]() -> bool {
      std::int64_t best = 0;
      std::size_t br = t, bc = t;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (best == 0 || abs64(a(r, c)) < best)) {
            best = abs64(a(r, c));
            br = r;
            bc = c;
          }
      if (best == 0) return false;
      red.swap_rows(t, br);
      red.swap_cols(t, bc);
      return true;
    };
    if (!find_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        red.sub_row(r, t, a(r, t) / a(t, t));
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        red.sub_col(c, t, a(t, c) / a(t, t));
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot();
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            red.add_row(t, r);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) red.negate_row(t);
    factors.push_back(a(t, t));
  }

  SmithResult result{std::move(factors), std::nullopt};
  if (with_witness) result.witness = red.witness();
  return result;
}

}  // namespace orbibraid
