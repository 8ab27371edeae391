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
#include "zw/rules.hpp"

namespace zw {

/** XW: ZX to ZW. WX: ZW to ZX. */
enum class Direction { XW, WX };

std::string to_string(Direction dir);

class TranslationError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

/**
 * Image of a single generator. Z spiders and the common generators map to
 * themselves; every other generator of the source calculus maps to a fixed
 * diagram in the target calculus. Throws TranslationError for generators
 * outside the source calculus.
 */
Diagram translate_generator(const Generator& g, Direction dir);

/** Generator-wise translation, preserving Seq/Par structure. */
Diagram translate(const Diagram& d, Direction dir);

inline Diagram to_zw(const Diagram& d) { return translate(d, Direction::XW); }
inline Diagram to_zx(const Diagram& d) { return translate(d, Direction::WX); }

/** Compares [[translate(d, dir)]] with [[d]]. */
VerificationReport check_preservation(
    const Diagram& d, Direction dir, double tol = 1e-9);

struct RoundTripReport {
  bool semantic = false;
  bool structural = false;
  double max_deviation = 0.0;
};

/** Translates a ZX diagram to ZW and back, then compares with the input. */
RoundTripReport round_trip_zx(const Diagram& d, double tol = 1e-9);

}  // namespace zw
