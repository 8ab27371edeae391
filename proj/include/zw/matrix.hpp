// Copyright 2026 The zwcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zw/phase.hpp"

namespace zw {

/** Dense row-major complex matrix. */
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1, 1) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(
      std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(Complex s) const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/** a * b (b applied first). */
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct Comparison {
  bool equal = false;
  /** Max entrywise modulus of the difference; +inf on shape mismatch. */
  double max_deviation = 0.0;
  /** Empty when shapes agree. */
  std::string reason;

  explicit operator bool() const { return equal; }
};

Comparison approx_equal(
    const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-9);

/** Powers of xi = e^{2 pi i / d}, indexed modulo d. */
class RootOfUnityTable {
 public:
  explicit RootOfUnityTable(int d);

  int dim() const { return d_; }
  /** xi^k for any integer k. */
  Complex power(long long k) const;
  /** conj(xi)^k. */
  Complex conj_power(long long k) const { return power(-k); }

 private:
  int d_;
  std::vector<Complex> powers_;
};

/** Shared table for dimension d. */
const RootOfUnityTable& roots_of_unity(int d);

}  // namespace zw
