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
#include <ostream>
#include <string>
#include <string_view>

#include "zw/diagram.hpp"
#include "zw/matrix.hpp"

namespace zw {

/** Malformed diagram text. `position` is a 0-based byte offset. */
class ParseError : public DiagramError {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/**
 * Parses the term syntax
 *
 *   term  := atom | (seq term term) | (par term term)
 *   atom  := (z N M phases) | (w) | (tau) | (taui) | (id) | (swap)
 *          | (cap) | (cup) | (h) | (hdag) | (tri) | (trii)
 *          | (bind S T) | (split S T) | (empty)
 *   phases := [c, c, ...] | []        with c = x or x+yi or x-yi
 *
 * over wires of dimension d. An empty phase list stands for (1, ..., 1).
 * Composition errors are reported at the start of the offending term.
 */
Diagram parse(std::string_view text, int d);

/**
 * Canonical text of a diagram; parse(print(D), d) rebuilds D exactly.
 * Throws DiagramError for swaps between wires of different dimension, which
 * the syntax cannot express.
 */
std::string print(const Diagram& d);

/** Complex literal in the syntax accepted by parse, precise to 17 digits. */
std::string format_complex(Complex c);

/** "rows cols" followed by one line per row of "re,im;re,im;...". */
void write_matrix(std::ostream& os, const ComplexMatrix& m);

}  // namespace zw
