// Copyright 2026 The Templar Authors
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

#include "templar/printer.h"

#include <unordered_map>

namespace templar {
namespace {

constexpr int kIndentWidth = 4;

enum Level : int {
  kAssignLevel = 0,
  kConditionalLevel = 1,
  kOrLevel = 2,
  kAndLevel = 3,
  kEqualityLevel = 4,
  kRelationalLevel = 5,
  kAdditiveLevel = 6,
  kMultiplicativeLevel = 7,
  kUnaryLevel = 8,
  kPostfixLevel = 9,
};

int InfixLevel(const std::string& op) {
  if (op == "||") return kOrLevel;
  if (op == "&&") return kAndLevel;
  if (op == "==" || op == "!=") return kEqualityLevel;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") {
    return kRelationalLevel;
  }
  if (op == "+" || op == "-") return kAdditiveLevel;
  return kMultiplicativeLevel;
}

int ExprLevel(const Node& node) {
  switch (node.kind) {
    case NodeKind::kAssign:
      return kAssignLevel;
    case NodeKind::kConditional:
      return kConditionalLevel;
    case NodeKind::kInfix:
      return InfixLevel(node.text);
    case NodeKind::kInstanceOf:
      return kRelationalLevel;
    case NodeKind::kPrefix:
    case NodeKind::kCast:
    case NodeKind::kNewArray:
    case NodeKind::kArrayLiteral:
      return kUnaryLevel;
    default:
      return kPostfixLevel;
  }
}

class Printer {
 public:
  explicit Printer(std::unordered_map<const Node*, Span>* spans)
      : spans_(spans) {}

  std::string Take() { return std::move(out_); }

  void PrintTopLevel(const Node& node) {
    if (node.IsExpression()) {
      Expr(node, kAssignLevel);
    } else {
      Any(node, 0);
    }
  }

 private:
  void Begin(const Node& node) {
    if (spans_ != nullptr) (*spans_)[&node].begin = Pos();
  }
  void End(const Node& node) {
    if (spans_ != nullptr) (*spans_)[&node].end = Pos();
  }
  int32_t Pos() const { return static_cast<int32_t>(out_.size()); }

  void Indent(int depth) { out_.append(depth * kIndentWidth, ' '); }

  void Any(const Node& node, int depth) {
    switch (node.kind) {
      case NodeKind::kCompilationUnit:
        Unit(node);
        return;
      case NodeKind::kClassDecl:
        Class(node, depth);
        return;
      case NodeKind::kFieldDecl:
      case NodeKind::kMethodDecl:
      case NodeKind::kConstructorDecl:
        Member(node, depth);
        return;
      case NodeKind::kParam:
        Param(node);
        return;
      case NodeKind::kType:
        TypeRef(node);
        return;
      case NodeKind::kCatch:
        Catch(node, depth);
        return;
      case NodeKind::kEmpty:
      case NodeKind::kHole:
        Begin(node);
        End(node);
        return;
      default:
        if (node.IsExpression()) {
          Expr(node, kAssignLevel);
        } else {
          Statement(node, depth);
        }
    }
  }

  void Unit(const Node& unit) {
    Begin(unit);
    for (size_t i = 0; i < unit.children.size(); ++i) {
      if (i > 0) out_ += '\n';
      Class(unit.children[i], 0);
      out_ += '\n';
    }
    End(unit);
  }

  void Class(const Node& decl, int depth) {
    Begin(decl);
    out_ += "class " + decl.text;
    if (!decl.aux.empty()) out_ += " extends " + decl.aux;
    out_ += " {\n";
    NodeKind previous = NodeKind::kEmpty;
    for (const Node& member : decl.children) {
      bool callable = member.kind != NodeKind::kFieldDecl;
      if (previous != NodeKind::kEmpty &&
          (callable || previous != NodeKind::kFieldDecl)) {
        out_ += '\n';
      }
      Indent(depth + 1);
      Member(member, depth + 1);
      out_ += '\n';
      previous = member.kind;
    }
    Indent(depth);
    out_ += "}";
    End(decl);
  }

  void Params(const Node& callable, size_t first, size_t last) {
    out_ += '(';
    for (size_t i = first; i < last; ++i) {
      if (i > first) out_ += ", ";
      Param(callable.children[i]);
    }
    out_ += ')';
  }

  void Member(const Node& member, int depth) {
    Begin(member);
    switch (member.kind) {
      case NodeKind::kFieldDecl:
        TypeRef(member.children[0]);
        out_ += ' ' + member.text;
        if (member.children.size() > 1) {
          out_ += " = ";
          Expr(member.children[1], kAssignLevel);
        }
        out_ += ';';
        break;
      case NodeKind::kMethodDecl:
        TypeRef(member.children[0]);
        out_ += ' ' + member.text;
        Params(member, 1, member.children.size() - 1);
        out_ += ' ';
        Block(member.children.back(), depth);
        break;
      case NodeKind::kConstructorDecl:
        out_ += member.text;
        Params(member, 0, member.children.size() - 1);
        out_ += ' ';
        Block(member.children.back(), depth);
        break;
      default:
        Any(member, depth);
    }
    End(member);
  }

  void Param(const Node& param) {
    Begin(param);
    TypeRef(param.children[0]);
    out_ += ' ' + param.text;
    End(param);
  }

  void TypeRef(const Node& type) {
    Begin(type);
    out_ += type.text;
    End(type);
  }

  // Opening brace on the current line; closing brace indented at `depth`.
  void Block(const Node& block, int depth) {
    Begin(block);
    out_ += "{\n";
    for (const Node& statement : block.children) {
      Indent(depth + 1);
      Statement(statement, depth + 1);
      out_ += '\n';
    }
    Indent(depth);
    out_ += '}';
    End(block);
  }

  // Nested statement after `if (...)`, `else`, `while (...)` or `for (...)`.
  void Body(const Node& body, int depth) {
    if (body.kind == NodeKind::kBlock) {
      out_ += ' ';
      Block(body, depth);
    } else {
      out_ += '\n';
      Indent(depth + 1);
      Statement(body, depth + 1);
    }
  }

  void VarDeclNoSemicolon(const Node& decl) {
    Begin(decl);
    TypeRef(decl.children[0]);
    out_ += ' ' + decl.text;
    if (decl.children.size() > 1) {
      out_ += " = ";
      Expr(decl.children[1], kAssignLevel);
    }
    End(decl);
  }

  void Catch(const Node& handler, int depth) {
    Begin(handler);
    out_ += "catch (";
    TypeRef(handler.children[0]);
    out_ += ' ' + handler.text + ") ";
    Block(handler.children[1], depth);
    End(handler);
  }

  void Statement(const Node& node, int depth) {
    switch (node.kind) {
      case NodeKind::kBlock:
        Block(node, depth);
        return;
      case NodeKind::kVarDecl:
        Begin(node);
        VarDeclNoSemicolon(node);
        out_ += ';';
        End(node);
        return;
      case NodeKind::kExprStmt:
        Begin(node);
        Expr(node.children[0], kAssignLevel);
        out_ += ';';
        End(node);
        return;
      case NodeKind::kIf: {
        Begin(node);
        out_ += "if (";
        Expr(node.children[0], kAssignLevel);
        out_ += ')';
        const Node& then_branch = node.children[1];
        Body(then_branch, depth);
        if (node.children.size() > 2) {
          if (then_branch.kind == NodeKind::kBlock) {
            out_ += ' ';
          } else {
            out_ += '\n';
            Indent(depth);
          }
          out_ += "else";
          const Node& else_branch = node.children[2];
          if (else_branch.kind == NodeKind::kIf) {
            out_ += ' ';
            Statement(else_branch, depth);
          } else {
            Body(else_branch, depth);
          }
        }
        End(node);
        return;
      }
      case NodeKind::kWhile:
        Begin(node);
        out_ += "while (";
        Expr(node.children[0], kAssignLevel);
        out_ += ')';
        Body(node.children[1], depth);
        End(node);
        return;
      case NodeKind::kFor: {
        Begin(node);
        out_ += "for (";
        const Node& init = node.children[0];
        if (init.kind == NodeKind::kVarDecl) {
          VarDeclNoSemicolon(init);
        } else if (init.kind == NodeKind::kExprStmt) {
          Begin(init);
          Expr(init.children[0], kAssignLevel);
          End(init);
        } else {
          Any(init, depth);
        }
        out_ += ';';
        if (node.children[1].kind != NodeKind::kEmpty) {
          out_ += ' ';
          Expr(node.children[1], kAssignLevel);
        } else {
          Any(node.children[1], depth);
        }
        out_ += ';';
        const Node& update = node.children[2];
        if (update.kind == NodeKind::kExprStmt) {
          out_ += ' ';
          Begin(update);
          Expr(update.children[0], kAssignLevel);
          End(update);
        } else {
          Any(update, depth);
        }
        out_ += ')';
        Body(node.children[3], depth);
        End(node);
        return;
      }
      case NodeKind::kReturn:
        Begin(node);
        out_ += "return";
        if (!node.children.empty()) {
          out_ += ' ';
          Expr(node.children[0], kAssignLevel);
        }
        out_ += ';';
        End(node);
        return;
      case NodeKind::kBreak:
        Begin(node);
        out_ += "break;";
        End(node);
        return;
      case NodeKind::kContinue:
        Begin(node);
        out_ += "continue;";
        End(node);
        return;
      case NodeKind::kThrow:
        Begin(node);
        out_ += "throw ";
        Expr(node.children[0], kAssignLevel);
        out_ += ';';
        End(node);
        return;
      case NodeKind::kAssert:
        Begin(node);
        out_ += "assert(";
        Expr(node.children[0], kAssignLevel);
        out_ += ");";
        End(node);
        return;
      case NodeKind::kTry:
        Begin(node);
        out_ += "try ";
        Block(node.children[0], depth);
        out_ += ' ';
        Catch(node.children[1], depth);
        End(node);
        return;
      default:
        Any(node, depth);
    }
  }

  void Args(const Node& call, size_t first) {
    out_ += '(';
    for (size_t i = first; i < call.children.size(); ++i) {
      if (i > first) out_ += ", ";
      Expr(call.children[i], kAssignLevel);
    }
    out_ += ')';
  }

  void Expr(const Node& node, int min_level) {
    bool parenthesize = ExprLevel(node) < min_level;
    if (parenthesize) out_ += '(';
    Begin(node);
    switch (node.kind) {
      case NodeKind::kAssign:
        Expr(node.children[0], kPostfixLevel);
        out_ += ' ' + node.text + ' ';
        Expr(node.children[1], kAssignLevel);
        break;
      case NodeKind::kConditional:
        Expr(node.children[0], kOrLevel);
        out_ += " ? ";
        Expr(node.children[1], kAssignLevel);
        out_ += " : ";
        Expr(node.children[2], kConditionalLevel);
        break;
      case NodeKind::kInfix: {
        int level = InfixLevel(node.text);
        Expr(node.children[0], level);
        out_ += ' ' + node.text + ' ';
        Expr(node.children[1], level + 1);
        break;
      }
      case NodeKind::kInstanceOf:
        Expr(node.children[0], kRelationalLevel);
        out_ += " instanceof ";
        TypeRef(node.children[1]);
        break;
      case NodeKind::kPrefix: {
        out_ += node.text;
        const Node& operand = node.children[0];
        // "- -x" must not lex as "--x".
        if (node.text == "-" && operand.kind == NodeKind::kPrefix &&
            operand.text == "-") {
          out_ += ' ';
        }
        Expr(operand, kUnaryLevel);
        break;
      }
      case NodeKind::kCast: {
        out_ += '(';
        TypeRef(node.children[0]);
        out_ += ") ";
        const Node& operand = node.children[1];
        // A reference cast only applies to operands that cannot also start
        // a binary expression.
        bool wrap = !LangType::FromName(node.children[0].text).IsPrimitive() &&
                    operand.kind == NodeKind::kPrefix && operand.text == "-";
        Expr(operand, wrap ? kPostfixLevel + 1 : kUnaryLevel);
        break;
      }
      case NodeKind::kCall: {
        const Node& receiver = node.children[0];
        if (receiver.kind != NodeKind::kEmpty) {
          Expr(receiver, kPostfixLevel);
          out_ += '.';
        } else {
          Begin(receiver);
          End(receiver);
        }
        out_ += node.text;
        Args(node, 1);
        break;
      }
      case NodeKind::kNew:
        out_ += "new " + node.text;
        Args(node, 0);
        break;
      case NodeKind::kNewArray:
        out_ += "new ";
        TypeRef(node.children[0]);
        out_ += '[';
        Expr(node.children[1], kAssignLevel);
        out_ += ']';
        break;
      case NodeKind::kArrayLiteral:
        out_ += "new ";
        TypeRef(node.children[0]);
        out_ += "[] {";
        for (size_t i = 1; i < node.children.size(); ++i) {
          out_ += i > 1 ? ", " : "";
          Expr(node.children[i], kAssignLevel);
        }
        out_ += '}';
        break;
      case NodeKind::kFieldAccess:
        Expr(node.children[0], kPostfixLevel);
        out_ += '.' + node.text;
        break;
      case NodeKind::kArrayAccess:
        Expr(node.children[0], kPostfixLevel);
        out_ += '[';
        Expr(node.children[1], kAssignLevel);
        out_ += ']';
        break;
      case NodeKind::kStringLiteral:
        out_ += QuoteString(node.text);
        break;
      case NodeKind::kHole:
        out_ += "<hole>";
        break;
      default:
        out_ += node.text;
    }
    End(node);
    if (parenthesize) out_ += ')';
  }

  std::unordered_map<const Node*, Span>* spans_;
  std::string out_;
};

void ApplySpans(Node& node, const std::unordered_map<const Node*, Span>& spans) {
  auto it = spans.find(&node);
  if (it != spans.end()) node.span = it->second;
  for (Node& child : node.children) ApplySpans(child, spans);
}

}  // namespace

std::string QuoteString(const std::string& value) {
  std::string result = "\"";
  for (char c : value) {
    switch (c) {
      case '\n': result += "\\n"; break;
      case '\t': result += "\\t"; break;
      case '\r': result += "\\r"; break;
      case '"': result += "\\\""; break;
      case '\\': result += "\\\\"; break;
      default: result += c;
    }
  }
  result += '"';
  return result;
}

std::string PrettyPrint(const Node& node) {
  Printer printer(nullptr);
  printer.PrintTopLevel(node);
  return printer.Take();
}

std::string PrintAndRespan(Node& root) {
  std::unordered_map<const Node*, Span> spans;
  Printer printer(&spans);
  printer.PrintTopLevel(root);
  ApplySpans(root, spans);
  return printer.Take();
}

}  // namespace templar
