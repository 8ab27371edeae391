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

#include "zw/diagram.hpp"
#include "zw/matrix.hpp"

namespace zw {

/** Raised when an interpretation would exceed the configured entry cap. */
class DimensionOverflow : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

struct InterpretOptions {
  /** Upper bound on the entries of the result and of every intermediate. */
  std::size_t max_entries = 1'000'000;
};

/** Product of the wire dimensions; 1 for the empty signature. */
std::size_t space_size(const WireSignature& sig);

/**
 * Matrix of a single generator.
 *
 * Basis order is big-endian mixed radix: for wires of dims d_1..d_m the ket
 * |i_1 ... i_m> has index sum_k i_k * prod_{l > k} d_l.
 */
ComplexMatrix generator_matrix(const Generator& g);

/**
 * Standard interpretation of a diagram: rows index the codomain, columns the
 * domain. Par maps to the Kronecker product and Seq(a, b) to [[b]] * [[a]].
 *
 * Evaluation pushes the identity on the domain through the tree one layer
 * at a time, so identities in Par nodes are never materialised.
 */
ComplexMatrix interpret(const Diagram& d, const InterpretOptions& opts = {});

/**
 * Closed form of the X spider with n inputs, m outputs and shift j:
 * sum of |i_1..i_m><j_1..j_n| over i_1+..+i_m+j = j_1+..+j_n (mod d).
 */
ComplexMatrix x_spider_formula(int inputs, int outputs, int shift, int d);

/**
 * (1/d) sum_{k,l,n} e^{i tau_l} xi^{(k-n) l} |k><n| with
 * tau_l = l pi + l^2 pi / d.
 */
ComplexMatrix red_tau_formula(int d);

}  // namespace zw
