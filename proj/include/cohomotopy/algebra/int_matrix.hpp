#pragma once

#include "cohomotopy/algebra/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cohomotopy::algebra {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVector& entries);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    void set_column(std::size_t c, const IntVector& values);

    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    /// Horizontal concatenation [this | other]; row counts must agree.
    IntMatrix hconcat(const IntMatrix& other) const;

    IntVector apply(const IntVector& x) const;

    bool is_zero() const;
    /// Every entry divisible by m.
    bool is_zero_mod(const Integer& m) const;
    void reduce_mod(const Integer& m);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

} // namespace cohomotopy::algebra
