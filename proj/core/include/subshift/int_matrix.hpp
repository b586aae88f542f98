#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigInt& at(std::size_t r, std::size_t c);
  const BigInt& at(std::size_t r, std::size_t c) const;

  std::vector<std::vector<BigInt>> to_rows() const;
  IntMatrix transpose() const;
  bool nonnegative() const;
  std::size_t nonzero_count() const;

  bool operator==(const IntMatrix& other) const = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

  // Rows joined by newlines, entries right-aligned.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix S;  // unimodular, rows x rows
  IntMatrix D;  // diagonal with d_1 | d_2 | ...
  IntMatrix T;  // unimodular, cols x cols
  std::vector<BigInt> diagonal() const;
};

// S * M * T = D.
SmithForm smith_normal_form(const IntMatrix& m);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// P * M * P^T where row i of the result is row perm[i] of M.
IntMatrix permute_similar(const IntMatrix& m, const std::vector<std::size_t>& perm);

}  // namespace subshift
