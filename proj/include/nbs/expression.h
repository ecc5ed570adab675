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

#ifndef NBS_EXPRESSION_H_
#define NBS_EXPRESSION_H_

#include <memory>
#include <string>
#include <string_view>

namespace nbs {

// A small arithmetic expression over the normalized disagreement payoffs,
// used for user-defined bargaining weights.
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := number | 'd1' | 'd2' | call | '(' expr ')'
//   call    := name '(' expr ',' expr ')'
// with name one of min, max, competitors, market_share, patent_life. The
// three strength functions take (licensors, licensees), (s, S) and (t, T).
//
// Parsed trees are immutable and shared between copies.
class Expression {
 public:
  // Throws Error(kParseError) with the offending column.
  static Expression Parse(std::string_view source);

  // May return non-finite values (e.g. 0/0); strength functions throw
  // Error(kInvalidInput) on out-of-range arguments.
  double Evaluate(double d1, double d2) const;

  const std::string& source() const { return source_; }

  struct Node;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace nbs

#endif  // NBS_EXPRESSION_H_
