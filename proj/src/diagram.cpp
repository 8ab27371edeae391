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

#include "zw/diagram.hpp"

#include <utility>

namespace zw {

struct Diagram::Node {
  Shape shape;
  Generator generator;
  Diagram first;
  Diagram second;
  WireSignature domain;
  WireSignature codomain;
  std::size_t count;
};

SignatureMismatch::SignatureMismatch(
    WireSignature upper_codomain, WireSignature lower_domain)
    : DiagramError(
          "signature mismatch: upper codomain " + to_string(upper_codomain) +
          " vs lower domain " + to_string(lower_domain)),
      upper_cod_(std::move(upper_codomain)),
      lower_dom_(std::move(lower_domain)) {}

Diagram::Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Diagram::Diagram() {
  // Shared empty leaf; its child slots stay null.
  static const std::shared_ptr<const Node> kEmpty = [] {
    auto n = std::shared_ptr<Node>(new Node{
        Shape::Leaf, Generator::empty(), Diagram(nullptr), Diagram(nullptr),
        {}, {}, 0});
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = kEmpty;
}

Diagram::Diagram(const Generator& generator) {
  if (generator.kind() == GeneratorKind::Empty) {
    node_ = Diagram().node_;
    return;
  }
  node_ = std::make_shared<const Node>(Node{
      Shape::Leaf, generator, Diagram(nullptr), Diagram(nullptr),
      generator.domain(), generator.codomain(), 1});
}

Diagram::Shape Diagram::shape() const { return node_->shape; }

bool Diagram::is_empty() const {
  return node_->shape == Shape::Leaf &&
         node_->generator.kind() == GeneratorKind::Empty;
}

const Generator& Diagram::generator() const {
  if (node_->shape != Shape::Leaf) {
    throw DiagramError("generator() called on a composite diagram");
  }
  return node_->generator;
}

const Diagram& Diagram::first() const {
  if (node_->shape == Shape::Leaf) {
    throw DiagramError("first() called on a leaf");
  }
  return node_->first;
}

const Diagram& Diagram::second() const {
  if (node_->shape == Shape::Leaf) {
    throw DiagramError("second() called on a leaf");
  }
  return node_->second;
}

const WireSignature& Diagram::domain() const { return node_->domain; }
const WireSignature& Diagram::codomain() const { return node_->codomain; }
std::size_t Diagram::generator_count() const { return node_->count; }

Diagram seq(const Diagram& upper, const Diagram& lower) {
  if (upper.codomain() != lower.domain()) {
    throw SignatureMismatch(upper.codomain(), lower.domain());
  }
  return Diagram(std::make_shared<const Diagram::Node>(Diagram::Node{
      Diagram::Shape::Seq, Generator::empty(), upper, lower, upper.domain(),
      lower.codomain(), upper.generator_count() + lower.generator_count()}));
}

Diagram seq(std::initializer_list<Diagram> layers) {
  if (layers.size() == 0) return Diagram();
  auto it = layers.begin();
  Diagram out = *it++;
  for (; it != layers.end(); ++it) out = seq(out, *it);
  return out;
}

Diagram par(const Diagram& left, const Diagram& right) {
  WireSignature dom = left.domain();
  dom.insert(dom.end(), right.domain().begin(), right.domain().end());
  WireSignature cod = left.codomain();
  cod.insert(cod.end(), right.codomain().begin(), right.codomain().end());
  return Diagram(std::make_shared<const Diagram::Node>(Diagram::Node{
      Diagram::Shape::Par, Generator::empty(), left, right, std::move(dom),
      std::move(cod), left.generator_count() + right.generator_count()}));
}

Diagram par(std::initializer_list<Diagram> row) {
  if (row.size() == 0) return Diagram();
  auto it = row.begin();
  Diagram out = *it++;
  for (; it != row.end(); ++it) out = par(out, *it);
  return out;
}

Diagram identity_wires(int d, int wires) {
  return repeat_par(Diagram(Generator::identity(d)), wires);
}

Diagram repeat_par(const Diagram& d, int count) {
  if (count <= 0) return Diagram();
  Diagram out = d;
  for (int i = 1; i < count; ++i) out = par(out, d);
  return out;
}

Diagram repeat_seq(const Diagram& d, int count) {
  if (count <= 0) {
    if (d.domain() != d.codomain()) {
      throw DiagramError("repeat_seq of a non-endomorphism");
    }
    Diagram out;
    for (int dim : d.domain()) out = par(out, Diagram(Generator::identity(dim)));
    return out;
  }
  Diagram out = d;
  for (int i = 1; i < count; ++i) out = seq(out, d);
  return out;
}

namespace {

// Normal form for structural comparison: n-ary Seq/Par nodes with nested
// nodes of the same shape spliced in and empty leaves dropped.
struct Canonical {
  Diagram::Shape shape;
  const Generator* generator = nullptr;
  std::vector<Canonical> children;
};

void collect(const Diagram& d, Diagram::Shape shape, std::vector<Canonical>& out);

Canonical canonical(const Diagram& d) {
  if (d.shape() == Diagram::Shape::Leaf) {
    return Canonical{Diagram::Shape::Leaf, &d.generator(), {}};
  }
  std::vector<Canonical> children;
  collect(d, d.shape(), children);
  if (children.empty()) {
    static const Generator kEmpty = Generator::empty();
    return Canonical{Diagram::Shape::Leaf, &kEmpty, {}};
  }
  if (children.size() == 1) return std::move(children.front());
  return Canonical{d.shape(), nullptr, std::move(children)};
}

void collect(
    const Diagram& d, Diagram::Shape shape, std::vector<Canonical>& out) {
  for (const Diagram* child : {&d.first(), &d.second()}) {
    if (child->is_empty()) continue;
    Canonical c = canonical(*child);
    if (c.shape == Diagram::Shape::Leaf &&
        c.generator->kind() == GeneratorKind::Empty) {
      continue;
    }
    if (c.shape == shape) {
      for (auto& g : c.children) out.push_back(std::move(g));
    } else {
      out.push_back(std::move(c));
    }
  }
}

bool same(const Canonical& a, const Canonical& b) {
  if (a.shape != b.shape) return false;
  if (a.shape == Diagram::Shape::Leaf) return *a.generator == *b.generator;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same(a.children[i], b.children[i])) return false;
  }
  return true;
}

}  // namespace

bool equal_structural(const Diagram& a, const Diagram& b) {
  return same(canonical(a), canonical(b));
}

bool uses_only(const Diagram& d, Calculus calculus) {
  if (d.shape() == Diagram::Shape::Leaf) {
    const Calculus c = d.generator().calculus();
    return c == Calculus::Common || c == calculus;
  }
  return uses_only(d.first(), calculus) && uses_only(d.second(), calculus);
}

}  // namespace zw
