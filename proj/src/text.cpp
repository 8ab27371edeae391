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

#include "zw/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace zw {

ParseError::ParseError(std::size_t position, const std::string& message)
    : DiagramError(
          "parse error at position " + std::to_string(position) + ": " +
          message),
      position_(position),
      detail_(message) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int d) : text_(text), d_(d) {}

  Diagram parse_all() {
    Diagram out = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "', got end of input");
    if (text_[pos_] != c) {
      fail(std::string("expected '") + c + "', got '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a keyword");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    if (value < 0) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  double number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    if (!std::isfinite(value)) fail("number is not finite");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Complex complex_literal() {
    skip_space();
    const double re = number();
    if (at_end() || (text_[pos_] != '+' && text_[pos_] != '-')) return {re, 0.0};
    const double sign = text_[pos_] == '-' ? -1.0 : 1.0;
    ++pos_;
    if (at_end() || text_[pos_] == '+' || text_[pos_] == '-') {
      fail("expected the imaginary part");
    }
    const double im = number();
    if (at_end() || text_[pos_] != 'i') fail("expected 'i' after imaginary part");
    ++pos_;
    return {re, sign * im};
  }

  PhaseVector phases() {
    skip_space();
    const std::size_t start = pos_;
    expect('[');
    skip_space();
    std::vector<Complex> entries;
    if (!at_end() && text_[pos_] == ']') {
      ++pos_;
      return PhaseVector::ones(d_);
    }
    while (true) {
      entries.push_back(complex_literal());
      skip_space();
      if (at_end()) fail("unterminated phase list");
      if (text_[pos_] == ']') {
        ++pos_;
        break;
      }
      expect(',');
    }
    if (static_cast<int>(entries.size()) != d_ - 1) {
      fail_at(start, "phase list has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(d_ - 1));
    }
    return PhaseVector(d_, std::move(entries));
  }

  Generator atom(const std::string& kw, std::size_t start) {
    const int d = d_;
    if (kw == "z") {
      const int n = integer();
      const int m = integer();
      return Generator::z_spider(d, n, m, phases());
    }
    if (kw == "bind" || kw == "split") {
      const int s = integer();
      const int t = integer();
      if (s < 1 || t < 1) fail_at(start, "dimensions must be positive");
      return kw == "bind" ? Generator::binder(s, t) : Generator::splitter(s, t);
    }
    if (kw == "empty") return Generator::empty();
    if (kw == "w") return Generator::w(d);
    if (kw == "tau") return Generator::braid(d);
    if (kw == "taui") return Generator::braid_inverse(d);
    if (kw == "id") return Generator::identity(d);
    if (kw == "swap") return Generator::swap(d);
    if (kw == "cap") return Generator::cap(d);
    if (kw == "cup") return Generator::cup(d);
    if (kw == "h") return Generator::hadamard(d);
    if (kw == "hdag") return Generator::hadamard_dagger(d);
    if (kw == "tri") return Generator::triangle(d);
    if (kw == "trii") return Generator::triangle_inverse(d);
    fail_at(start + 1, "unknown keyword '" + kw + "'");
  }

  Diagram term() {
    skip_space();
    const std::size_t start = pos_;
    expect('(');
    const std::string kw = word();
    if (kw == "seq" || kw == "par") {
      Diagram a = term();
      skip_space();
      const std::size_t second_start = pos_;
      Diagram b = term();
      expect(')');
      if (kw == "par") return par(a, b);
      try {
        return seq(a, b);
      } catch (const SignatureMismatch& e) {
        fail_at(second_start, e.what());
      }
    }
    try {
      Generator g = atom(kw, start);
      expect(')');
      return g.kind() == GeneratorKind::Empty ? Diagram() : Diagram(g);
    } catch (const ParseError&) {
      throw;
    } catch (const DiagramError& e) {
      fail_at(start, e.what());
    }
  }

  std::string_view text_;
  int d_;
  std::size_t pos_ = 0;
};

void print_to(std::ostringstream& os, const Diagram& d) {
  switch (d.shape()) {
    case Diagram::Shape::Seq:
    case Diagram::Shape::Par:
      os << (d.shape() == Diagram::Shape::Seq ? "(seq " : "(par ");
      print_to(os, d.first());
      os << " ";
      print_to(os, d.second());
      os << ")";
      return;
    case Diagram::Shape::Leaf:
      break;
  }
  const Generator& g = d.generator();
  switch (g.kind()) {
    case GeneratorKind::ZSpider: {
      os << "(z " << g.inputs() << " " << g.outputs() << " [";
      if (!(g.phase() == PhaseVector::ones(g.dim()))) {
        for (int j = 1; j < g.dim(); ++j) {
          if (j > 1) os << ", ";
          os << format_complex(g.phase().coefficient(j));
        }
      }
      os << "])";
      return;
    }
    case GeneratorKind::Binder:
    case GeneratorKind::Splitter:
      os << "(" << to_string(g.kind()) << " " << g.dim() << " "
         << g.second_dim() << ")";
      return;
    case GeneratorKind::Swap:
      if (g.dim() != g.second_dim()) {
        throw DiagramError("mixed-dimension swap has no text form");
      }
      [[fallthrough]];
    default:
      os << "(" << to_string(g.kind()) << ")";
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

Diagram parse(std::string_view text, int d) {
  if (d < 1) throw ParseError(0, "dimension must be positive");
  return Parser(text, d).parse_all();
}

std::string print(const Diagram& d) {
  std::ostringstream os;
  print_to(os, d);
  return os.str();
}

std::string format_complex(Complex c) {
  std::string out = format_double(c.real());
  out += std::signbit(c.imag()) ? "-" : "+";
  out += format_double(std::abs(c.imag()));
  out += "i";
  return out;
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ";";
      os << format_double(m(r, c).real()) << "," << format_double(m(r, c).imag());
    }
    os << "\n";
  }
}

}  // namespace zw
