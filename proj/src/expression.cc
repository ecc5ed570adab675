// Copyright 2026 The nbsroyalty Authors.
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

#include "nbs/expression.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <variant>

#include "nbs/error.h"
#include "nbs/weight_models.h"

namespace nbs {

enum class Variable { kD1, kD2 };
enum class BinaryOp { kAdd, kSub, kMul, kDiv, kMin, kMax, kCompetitors, kMarketShare, kPatentLife };

struct Expression::Node {
  struct Binary {
    BinaryOp op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  struct Negate {
    std::shared_ptr<const Node> operand;
  };
  std::variant<double, Variable, Binary, Negate> value;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr MakeNode(decltype(Expression::Node::value) v) {
  return std::make_shared<const Expression::Node>(Expression::Node{std::move(v)});
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr ParseAll() {
    NodePtr root = ParseExpr();
    SkipSpace();
    if (pos_ != src_.size()) Fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "expression column " + std::to_string(pos_ + 1) +
                                            ": " + what + " in '" + std::string(src_) + "'");
  }

  void SkipSpace() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  NodePtr ParseExpr() {
    NodePtr lhs = ParseTerm();
    for (;;) {
      if (Accept('+')) {
        lhs = MakeNode(Expression::Node::Binary{BinaryOp::kAdd, lhs, ParseTerm()});
      } else if (Accept('-')) {
        lhs = MakeNode(Expression::Node::Binary{BinaryOp::kSub, lhs, ParseTerm()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseTerm() {
    NodePtr lhs = ParseUnary();
    for (;;) {
      if (Accept('*')) {
        lhs = MakeNode(Expression::Node::Binary{BinaryOp::kMul, lhs, ParseUnary()});
      } else if (Accept('/')) {
        lhs = MakeNode(Expression::Node::Binary{BinaryOp::kDiv, lhs, ParseUnary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseUnary() {
    if (Accept('-')) return MakeNode(Expression::Node::Negate{ParseUnary()});
    if (Accept('+')) return ParseUnary();
    return ParsePrimary();
  }

  NodePtr ParsePrimary() {
    SkipSpace();
    if (pos_ >= src_.size()) Fail("unexpected end of expression");
    if (Accept('(')) {
      NodePtr inner = ParseExpr();
      Expect(')');
      return inner;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ParseNumber();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ParseIdentifier();
    Fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr ParseNumber() {
    double v = 0.0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) Fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return MakeNode(v);
  }

  NodePtr ParseIdentifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "d1") return MakeNode(Variable::kD1);
    if (name == "d2") return MakeNode(Variable::kD2);

    BinaryOp op;
    if (name == "min") {
      op = BinaryOp::kMin;
    } else if (name == "max") {
      op = BinaryOp::kMax;
    } else if (name == "competitors") {
      op = BinaryOp::kCompetitors;
    } else if (name == "market_share") {
      op = BinaryOp::kMarketShare;
    } else if (name == "patent_life") {
      op = BinaryOp::kPatentLife;
    } else {
      pos_ = start;
      Fail("unknown identifier '" + std::string(name) + "'");
    }
    Expect('(');
    NodePtr a = ParseExpr();
    Expect(',');
    NodePtr b = ParseExpr();
    Expect(')');
    return MakeNode(Expression::Node::Binary{op, a, b});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

double Eval(const Expression::Node& node, double d1, double d2) {
  struct Visitor {
    double d1, d2;
    double operator()(double v) const { return v; }
    double operator()(Variable v) const { return v == Variable::kD1 ? d1 : d2; }
    double operator()(const Expression::Node::Negate& n) const {
      return -Eval(*n.operand, d1, d2);
    }
    double operator()(const Expression::Node::Binary& b) const {
      const double x = Eval(*b.lhs, d1, d2);
      const double y = Eval(*b.rhs, d1, d2);
      switch (b.op) {
        case BinaryOp::kAdd: return x + y;
        case BinaryOp::kSub: return x - y;
        case BinaryOp::kMul: return x * y;
        case BinaryOp::kDiv: return x / y;
        case BinaryOp::kMin: return std::min(x, y);
        case BinaryOp::kMax: return std::max(x, y);
        case BinaryOp::kCompetitors: {
          const double licensees = std::round(y);
          if (x < 0 || std::round(x) != x || licensees != y) {
            throw Error(ErrorCode::kInvalidInput, "competitors() takes whole counts");
          }
          return StrengthCompetitors(static_cast<long>(x), static_cast<long>(y));
        }
        case BinaryOp::kMarketShare: return StrengthMarketShare(x, y);
        case BinaryOp::kPatentLife: return StrengthPatentLife(x, y);
      }
      return 0.0;
    }
  };
  return std::visit(Visitor{d1, d2}, node.value);
}

}  // namespace

Expression Expression::Parse(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.ParseAll();
  return Expression(std::string(source), std::move(root));
}

double Expression::Evaluate(double d1, double d2) const { return Eval(*root_, d1, d2); }

}  // namespace nbs
