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

#include "zw/matrix.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace zw {

ComplexMatrix::ComplexMatrix(
    std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data does not match its shape");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = std::conj((*this)(r, c));
    }
  }
  return t;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
  ComplexMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      if (x == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

Comparison approx_equal(
    const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return Comparison{
        false, std::numeric_limits<double>::infinity(),
        "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" +
            std::to_string(b.cols())};
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dev = std::max(dev, std::abs(a.data()[i] - b.data()[i]));
  }
  return Comparison{dev <= tol, dev, {}};
}

RootOfUnityTable::RootOfUnityTable(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("root of unity table needs d >= 1");
  powers_.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    // Exact values on the axes keep products like xi^{jk} free of drift.
    if (4 * k % d == 0) {
      static constexpr Complex kAxis[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      powers_.push_back(kAxis[4 * k / d]);
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * k / d;
    powers_.emplace_back(std::cos(angle), std::sin(angle));
  }
}

Complex RootOfUnityTable::power(long long k) const {
  long long e = k % d_;
  if (e < 0) e += d_;
  return powers_[static_cast<std::size_t>(e)];
}

const RootOfUnityTable& roots_of_unity(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RootOfUnityTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[d];
  if (!slot) slot = std::make_unique<RootOfUnityTable>(d);
  return *slot;
}

}  // namespace zw
