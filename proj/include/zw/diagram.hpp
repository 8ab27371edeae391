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
#include <initializer_list>
#include <memory>

#include "zw/generator.hpp"

namespace zw {

/** Raised by seq() when the codomain of the upper diagram does not match the
 * domain of the lower one. */
class SignatureMismatch : public DiagramError {
 public:
  SignatureMismatch(WireSignature upper_codomain, WireSignature lower_domain);

  const WireSignature& upper_codomain() const { return upper_cod_; }
  const WireSignature& lower_domain() const { return lower_dom_; }

 private:
  WireSignature upper_cod_;
  WireSignature lower_dom_;
};

/**
 * Immutable composition tree of generators.
 *
 * Diagrams read top to bottom: Seq(a, b) places a above b, so the outputs of
 * a feed the inputs of b. Par(a, b) places a to the left of b. Copies share
 * structure, so values are cheap to pass around and safe to share between
 * threads.
 */
class Diagram {
 public:
  enum class Shape { Leaf, Seq, Par };

  /** The empty diagram, 0 -> 0. */
  Diagram();
  explicit Diagram(const Generator& generator);

  Shape shape() const;
  bool is_empty() const;

  /** Leaf only. */
  const Generator& generator() const;
  /** Seq: upper / Par: left. */
  const Diagram& first() const;
  /** Seq: lower / Par: right. */
  const Diagram& second() const;

  const WireSignature& domain() const;
  const WireSignature& codomain() const;

  /** Number of non-empty generator leaves. */
  std::size_t generator_count() const;

  friend Diagram seq(const Diagram& upper, const Diagram& lower);
  friend Diagram par(const Diagram& left, const Diagram& right);

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/** Vertical composition, upper first. Throws SignatureMismatch. */
Diagram seq(const Diagram& upper, const Diagram& lower);
/** Chain of vertical compositions, top to bottom, left-associated. */
Diagram seq(std::initializer_list<Diagram> layers);
/** Side-by-side composition. */
Diagram par(const Diagram& left, const Diagram& right);
/** Row of side-by-side diagrams, left-associated. */
Diagram par(std::initializer_list<Diagram> row);

/** Identity on `wires` wires of dimension d (the empty diagram for 0). */
Diagram identity_wires(int d, int wires);
/** `count` copies of `d` side by side. */
Diagram repeat_par(const Diagram& d, int count);
/** `count` copies of `d` composed vertically; `d` must be an endomorphism. */
Diagram repeat_seq(const Diagram& d, int count);

/**
 * Structural equality up to associativity of Seq/Par and removal of empty
 * units. Phase entries are compared exactly.
 */
bool equal_structural(const Diagram& a, const Diagram& b);

/** True iff every leaf belongs to `calculus` or to the common generators. */
bool uses_only(const Diagram& d, Calculus calculus);

}  // namespace zw
