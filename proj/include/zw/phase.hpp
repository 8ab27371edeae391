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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zw {

using Complex = std::complex<double>;

/** Thrown when a diagram or one of its parts is malformed. */
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Parameter of a Z (white / green) spider in dimension d.
 *
 * Stores the coefficients (a_1, ..., a_{d-1}). The coefficient of |0> is
 * always 1 and is never stored. Dimension 1 is allowed and carries an empty
 * vector; it only shows up on dimension-1 wires of mixed-dimension diagrams.
 */
class PhaseVector {
 public:
  PhaseVector() = default;
  PhaseVector(int dim, std::vector<Complex> entries);

  /** (1, ..., 1): the spider without phase. */
  static PhaseVector ones(int dim);
  /** (c, ..., c). */
  static PhaseVector constant(int dim, Complex c);
  /** (0, ..., 0): projects onto |0>. */
  static PhaseVector zeros(int dim) { return constant(dim, 0.0); }
  /** (e^{i a_1}, ..., e^{i a_{d-1}}) for real angles. */
  static PhaseVector from_angles(int dim, std::span<const double> angles);
  /** (xi^{1*1}, ..., xi^{k*k}, ...), xi = e^{2 pi i / d}. */
  static PhaseVector braid_loop(int dim);
  /** (xi^{j}, xi^{2j}, ..., xi^{(d-1)j}): the X-spider shift phase. */
  static PhaseVector shift(int dim, int j);
  /** Phase of the spider whose 0-ary scalar evaluates to c. */
  static PhaseVector scalar(int dim, Complex c);

  int dim() const { return dim_; }
  const std::vector<Complex>& entries() const { return entries_; }
  /** Coefficient of |j><j|; index 0 yields 1. */
  Complex coefficient(int j) const;

  /** Entrywise product (a_1 b_1, ...). */
  PhaseVector operator*(const PhaseVector& other) const;
  /** Entrywise sum (a_1 + b_1, ...). */
  PhaseVector operator+(const PhaseVector& other) const;
  PhaseVector conj() const;

  /** Exact comparison, used for structural equality only. */
  bool operator==(const PhaseVector& other) const = default;

  std::string to_string() const;

 private:
  int dim_ = 2;
  std::vector<Complex> entries_{1.0};
};

}  // namespace zw
