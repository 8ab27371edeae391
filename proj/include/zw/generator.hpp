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

#include <string>
#include <vector>

#include "zw/phase.hpp"

namespace zw {

/** Ordered wire dimensions on one side of a diagram. */
using WireSignature = std::vector<int>;

std::string to_string(const WireSignature& sig);

enum class GeneratorKind {
  Empty,
  ZSpider,
  W,
  Braid,
  BraidInv,
  Identity,
  Swap,
  Cap,
  Cup,
  Hadamard,
  HadamardDagger,
  Triangle,
  TriangleInv,
  Binder,
  Splitter,
};

/** Which calculus a generator belongs to. */
enum class Calculus { Common, ZW, ZX, Qufinite };

std::string to_string(GeneratorKind kind);

/**
 * One generator together with the dimension(s) of the wires it acts on.
 *
 * The structural generators (identity, swap, cap, cup) and Z spiders accept
 * any dimension >= 1. W, the braids, Hadamards and triangles need d >= 2.
 * Swap may join wires of two different dimensions; binder and splitter
 * always do.
 */
class Generator {
 public:
  static Generator empty();
  static Generator z_spider(int d, int inputs, int outputs, PhaseVector phase);
  static Generator z_spider(
      int d, int inputs, int outputs, std::vector<Complex> phase);
  static Generator w(int d);
  static Generator braid(int d);
  static Generator braid_inverse(int d);
  static Generator identity(int d);
  static Generator swap(int d) { return swap(d, d); }
  static Generator swap(int left, int right);
  static Generator cap(int d);
  static Generator cup(int d);
  static Generator hadamard(int d);
  static Generator hadamard_dagger(int d);
  static Generator triangle(int d);
  static Generator triangle_inverse(int d);
  static Generator binder(int s, int t);
  static Generator splitter(int s, int t);

  GeneratorKind kind() const { return kind_; }
  /** Wire dimension; for Swap/Binder/Splitter the first of the pair. */
  int dim() const { return s_; }
  /** Second dimension for Swap/Binder/Splitter, else equal to dim(). */
  int second_dim() const { return t_; }
  int inputs() const { return inputs_; }
  int outputs() const { return outputs_; }
  /** Only meaningful for ZSpider. */
  const PhaseVector& phase() const { return phase_; }

  WireSignature domain() const;
  WireSignature codomain() const;
  Calculus calculus() const;

  bool operator==(const Generator& other) const = default;

 private:
  Generator(GeneratorKind kind, int s, int t, int inputs, int outputs)
      : kind_(kind), s_(s), t_(t), inputs_(inputs), outputs_(outputs) {}

  GeneratorKind kind_;
  int s_;
  int t_;
  int inputs_;
  int outputs_;
  PhaseVector phase_;
};

}  // namespace zw
