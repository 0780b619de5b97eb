#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbibraid {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Throws InvariantViolation("rectangular_matrix") on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithWitness {
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix right;     // unimodular, cols x cols
  IntMatrix diagonal;  // left * m * right
};

struct SmithResult {
  /// Nonzero diagonal entries d1 | d2 | ... (ones included), all positive.
  std::vector<std::int64_t> factors;
  std::optional<SmithWitness> witness;
};

/// Smith normal form over the integers. Arithmetic is checked; an entry
/// leaving the int64 range raises std::overflow_error.
SmithResult smith_normal_form(const IntMatrix& m, bool with_witness = false);

}  // namespace orbibraid
