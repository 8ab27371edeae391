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

#include "zw/phase.hpp"

#include <cmath>
#include <sstream>

#include "zw/matrix.hpp"

namespace zw {

namespace {

void check_same_dim(const PhaseVector& a, const PhaseVector& b) {
  if (a.dim() != b.dim()) {
    throw DiagramError(
        "phase vectors of different dimension: " + std::to_string(a.dim()) +
        " vs " + std::to_string(b.dim()));
  }
}

Complex root_of_unity(int d, long long exponent) {
  return roots_of_unity(d).power(exponent);
}

}  // namespace

PhaseVector::PhaseVector(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) {
    throw DiagramError("phase vector dimension must be >= 1");
  }
  if (static_cast<int>(entries_.size()) != dim - 1) {
    throw DiagramError(
        "phase length " + std::to_string(entries_.size()) +
        " != d-1=" + std::to_string(dim - 1));
  }
}

PhaseVector PhaseVector::ones(int dim) { return constant(dim, 1.0); }

PhaseVector PhaseVector::constant(int dim, Complex c) {
  if (dim < 1) throw DiagramError("phase vector dimension must be >= 1");
  return PhaseVector(dim, std::vector<Complex>(dim - 1, c));
}

PhaseVector PhaseVector::from_angles(int dim, std::span<const double> angles) {
  std::vector<Complex> e;
  e.reserve(angles.size());
  for (double a : angles) e.push_back(std::polar(1.0, a));
  return PhaseVector(dim, std::move(e));
}

PhaseVector PhaseVector::braid_loop(int dim) {
  std::vector<Complex> e;
  for (long long k = 1; k < dim; ++k) e.push_back(root_of_unity(dim, k * k));
  return PhaseVector(dim, std::move(e));
}

PhaseVector PhaseVector::shift(int dim, int j) {
  std::vector<Complex> e;
  for (long long k = 1; k < dim; ++k) e.push_back(root_of_unity(dim, k * j));
  return PhaseVector(dim, std::move(e));
}

PhaseVector PhaseVector::scalar(int dim, Complex c) {
  if (dim < 2) throw DiagramError("scalar phase needs d >= 2");
  // (0, ..., 0, c - 1): the 0 -> 0 spider sums to 1 + (c - 1).
  std::vector<Complex> e(dim - 1, 0.0);
  e.back() = c - 1.0;
  return PhaseVector(dim, std::move(e));
}

Complex PhaseVector::coefficient(int j) const {
  if (j == 0) return 1.0;
  return entries_.at(static_cast<std::size_t>(j - 1));
}

PhaseVector PhaseVector::operator*(const PhaseVector& other) const {
  check_same_dim(*this, other);
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = entries_[i] * other.entries_[i];
  }
  return PhaseVector(dim_, std::move(e));
}

PhaseVector PhaseVector::operator+(const PhaseVector& other) const {
  check_same_dim(*this, other);
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = entries_[i] + other.entries_[i];
  }
  return PhaseVector(dim_, std::move(e));
}

PhaseVector PhaseVector::conj() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::conj(entries_[i]);
  return PhaseVector(dim_, std::move(e));
}

std::string PhaseVector::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].real() << (entries_[i].imag() < 0 ? "-" : "+")
       << std::abs(entries_[i].imag()) << "i";
  }
  os << ")";
  return os.str();
}

}  // namespace zw
