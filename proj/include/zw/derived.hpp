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

#include "zw/diagram.hpp"

namespace zw {

// Shorthands for single-generator diagrams.
Diagram z(int d, int inputs, int outputs, const PhaseVector& phase);
Diagram w(int d);
Diagram braid(int d);
Diagram braid_inv(int d);
Diagram id(int d);
Diagram swap(int d);
Diagram cap(int d);
Diagram cup(int d);
Diagram hadamard(int d);
Diagram hadamard_dagger(int d);
Diagram triangle(int d);
Diagram triangle_inv(int d);

enum class DerivedKind { DownW, BlackDot, BlackCodot, WhiteNoPhase, DownWhiteUnit };

/**
 * Composite ZW diagrams used as shorthand throughout the rules.
 *
 *   DownW         2 -> 1, W bent upside down with caps and cups
 *   BlackDot      0 -> 1, cap followed by DownW; [[.]] = |0>
 *   BlackCodot    1 -> 0, W followed by a cup; [[.]] = <0|
 *   WhiteNoPhase  1 -> 2 white spider with phase (1, ..., 1)
 *   DownWhiteUnit 1 -> 0 white spider with phase (1, ..., 1)
 */
Diagram derived_zw(DerivedKind kind, int d);

/** White spider with phase (1, ..., 1). */
Diagram white_spider(int d, int inputs, int outputs);

enum class Orientation { Up, Down };

/**
 * Black spider with one input and `legs` outputs (Up) or the mirror image
 * (Down): a left-leaning tree of W nodes. One leg is the identity and two
 * legs is W itself.
 */
Diagram black_spider(int legs, int d, Orientation orientation = Orientation::Up);

/**
 * Upside-down mirror image; [[flip(D)]] is the transpose of [[D]].
 * Generators without a mirrored counterpart (W, triangles) are bent with
 * caps and cups.
 */
Diagram flip(const Diagram& d);

/** Transpose of a 1 -> 1 diagram, bent with a cap and a cup. */
Diagram bend(const Diagram& f);

// ZX-calculus shorthands, all built from ZX generators only.

/** 0 -> 0 spider evaluating to c. */
Diagram scalar(int d, Complex c);
/** Hadamard-conjugated Z spider with shift phase K_j, scaled by 1/d. */
Diagram x_spider(int d, int inputs, int outputs, int shift);
/** Hadamard-conjugated Z spider with phase e^{i tau}, scaled by 1/d. */
Diagram red_tau(int d);
/** |j> -> |-j mod d>, as (1/d) H H. */
Diagram negation(int d);

}  // namespace zw
