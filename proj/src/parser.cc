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

#include "templar/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <vector>

namespace templar {
namespace {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kInt,
  kFloat,
  kString,
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;  // decoded value for strings
  int offset;
  int end;
  int line;
  int column;
};

const std::set<std::string, std::less<>>& Keywords() {
  static const std::set<std::string, std::less<>> keywords = {
      "class",  "extends", "void",    "boolean", "int",        "float",
      "String", "new",     "return",  "if",      "else",       "while",
      "for",    "try",     "catch",   "throw",   "break",      "continue",
      "this",   "super",   "null",    "true",    "false",      "instanceof",
      "assert"};
  return keywords;
}

// Java keywords outside the MiniJ subset are rejected with a clear message.
const std::set<std::string, std::less<>>& UnsupportedKeywords() {
  static const std::set<std::string, std::less<>> keywords = {
      "abstract", "case",      "char",       "default",  "do",
      "double",   "enum",      "final",      "finally",  "implements",
      "import",   "interface", "long",       "package",  "private",
      "protected", "public",   "short",      "static",   "switch",
      "synchronized", "byte",  "throws",     "volatile", "var"};
  return keywords;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::kEnd, "", Offset(), Offset(), line_,
                          column_});
        return tokens;
      }
      tokens.push_back(Next());
    }
  }

 private:
  int Offset() const { return static_cast<int>(pos_); }

  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      char c = Peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        int line = line_;
        int column = column_;
        Advance();
        Advance();
        while (pos_ < text_.size() && !(Peek() == '*' && Peek(1) == '/')) {
          Advance();
        }
        if (pos_ >= text_.size()) {
          throw SyntaxError("unterminated comment", line, column);
        }
        Advance();
        Advance();
      } else {
        return;
      }
    }
  }

  Token Next() {
    Token token{TokenKind::kPunct, "", Offset(), 0, line_, column_};
    char c = Peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(Peek())) ||
             Peek() == '_') {
        token.text += Peek();
        Advance();
      }
      if (UnsupportedKeywords().count(token.text) != 0) {
        throw SyntaxError("unsupported construct '" + token.text + "'",
                          token.line, token.column);
      }
      token.kind = Keywords().count(token.text) != 0 ? TokenKind::kKeyword
                                                     : TokenKind::kIdentifier;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.kind = TokenKind::kInt;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        token.text += Peek();
        Advance();
      }
      if (Peek() == '.' && std::isdigit(static_cast<unsigned char>(Peek(1)))) {
        token.kind = TokenKind::kFloat;
        token.text += Peek();
        Advance();
        while (std::isdigit(static_cast<unsigned char>(Peek()))) {
          token.text += Peek();
          Advance();
        }
      }
      if ((Peek() == 'e' || Peek() == 'E') &&
          (std::isdigit(static_cast<unsigned char>(Peek(1))) ||
           ((Peek(1) == '+' || Peek(1) == '-') &&
            std::isdigit(static_cast<unsigned char>(Peek(2)))))) {
        token.kind = TokenKind::kFloat;
        token.text += Peek();
        Advance();
        if (Peek() == '+' || Peek() == '-') {
          token.text += Peek();
          Advance();
        }
        while (std::isdigit(static_cast<unsigned char>(Peek()))) {
          token.text += Peek();
          Advance();
        }
      }
      if (std::isalpha(static_cast<unsigned char>(Peek())) || Peek() == '_') {
        throw SyntaxError("malformed number", token.line, token.column);
      }
    } else if (c == '"') {
      token.kind = TokenKind::kString;
      Advance();
      while (true) {
        if (pos_ >= text_.size() || Peek() == '\n') {
          throw SyntaxError("unterminated string literal", token.line,
                            token.column);
        }
        char ch = Peek();
        if (ch == '"') {
          Advance();
          break;
        }
        if (ch == '\\') {
          Advance();
          char escaped = Peek();
          switch (escaped) {
            case 'n': token.text += '\n'; break;
            case 't': token.text += '\t'; break;
            case 'r': token.text += '\r'; break;
            case '"': token.text += '"'; break;
            case '\\': token.text += '\\'; break;
            default:
              throw SyntaxError("unknown escape sequence", line_, column_);
          }
          Advance();
          continue;
        }
        token.text += ch;
        Advance();
      }
    } else {
      static const char* const kTwoChar[] = {"==", "!=", "<=", ">=", "&&",
                                             "||", "+=", "-=", "*=", "/=",
                                             "%="};
      static const char* const kUnsupportedTwoChar[] = {"++", "--", "<<",
                                                        ">>", "->", "::"};
      std::string two{c, Peek(1)};
      for (const char* op : kUnsupportedTwoChar) {
        if (two == op) {
          throw SyntaxError("unsupported construct '" + two + "'", token.line,
                            token.column);
        }
      }
      bool matched = false;
      for (const char* op : kTwoChar) {
        if (two == op) {
          token.text = two;
          Advance();
          Advance();
          matched = true;
          break;
        }
      }
      if (!matched) {
        static const std::string kSingle = "+-*/%=<>!?:;,.(){}[]";
        if (kSingle.find(c) == std::string::npos) {
          throw SyntaxError(std::string("unexpected character '") + c + "'",
                            token.line, token.column);
        }
        token.text = std::string(1, c);
        Advance();
      }
    }
    token.end = Offset();
    return token;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool IsPrimitiveTypeKeyword(const Token& token) {
  return token.kind == TokenKind::kKeyword &&
         (token.text == "boolean" || token.text == "int" ||
          token.text == "float" || token.text == "String" ||
          token.text == "void");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).Tokenize()) {}

  Node ParseUnitRoot() {
    Node unit(NodeKind::kCompilationUnit);
    unit.span.begin = 0;
    while (!AtEnd()) unit.children.push_back(ParseClass());
    unit.span.end = Current().end;
    return unit;
  }

  Node ParseStatementRoot() {
    Node statement = ParseStatementNode();
    ExpectEnd();
    return statement;
  }

  Node ParseExpressionRoot() {
    Node expr = ParseExpr();
    ExpectEnd();
    return expr;
  }

 private:
  const Token& Current() const { return tokens_[pos_]; }
  const Token& LookAhead(size_t n) const {
    return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Current().kind == TokenKind::kEnd; }

  bool Is(std::string_view text, size_t ahead = 0) const {
    const Token& t = LookAhead(ahead);
    return (t.kind == TokenKind::kPunct || t.kind == TokenKind::kKeyword) &&
           t.text == text;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    const Token& t = Current();
    std::string found = t.kind == TokenKind::kEnd ? "end of input"
                                                  : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.column);
  }

  const Token& Consume() { return tokens_[pos_++]; }

  const Token& Expect(std::string_view text) {
    if (!Is(text)) Fail("expected '" + std::string(text) + "'");
    return Consume();
  }

  void ExpectEnd() const {
    if (!AtEnd()) Fail("expected end of input");
  }

  std::string ExpectIdentifier() {
    if (Current().kind != TokenKind::kIdentifier) Fail("expected identifier");
    return Consume().text;
  }

  int LastEnd() const { return tokens_[pos_ - 1].end; }

  Node Finish(Node node, int begin) const {
    node.span.begin = begin;
    node.span.end = LastEnd();
    return node;
  }

  // Type := (primitive | String | Identifier) ("[" "]")*
  bool StartsType(size_t ahead = 0) const {
    const Token& t = LookAhead(ahead);
    return IsPrimitiveTypeKeyword(t) || t.kind == TokenKind::kIdentifier;
  }

  Node ParseType() {
    int begin = Current().offset;
    std::string name;
    if (IsPrimitiveTypeKeyword(Current()) ||
        Current().kind == TokenKind::kIdentifier) {
      name = Consume().text;
    } else {
      Fail("expected type");
    }
    while (Is("[") && Is("]", 1)) {
      Consume();
      Consume();
      name += "[]";
    }
    return Finish(Node(NodeKind::kType, name), begin);
  }

  Node ParseClass() {
    int begin = Current().offset;
    Expect("class");
    Node decl(NodeKind::kClassDecl, ExpectIdentifier());
    if (Is("extends")) {
      Consume();
      decl.aux = ExpectIdentifier();
    }
    Expect("{");
    while (!Is("}")) {
      if (AtEnd()) Fail("expected '}'");
      decl.children.push_back(ParseMember(decl.text));
    }
    Expect("}");
    return Finish(std::move(decl), begin);
  }

  Node ParseMember(const std::string& class_name) {
    int begin = Current().offset;
    if ((Current().kind == TokenKind::kIdentifier || Current().text == "String") &&
        Is("(", 1)) {
      std::string name = Consume().text;
      if (name != class_name) {
        Fail("method '" + name + "' is missing a return type");
      }
      Node ctor(NodeKind::kConstructorDecl, name);
      ParseParams(ctor);
      ctor.children.push_back(ParseBlock());
      return Finish(std::move(ctor), begin);
    }
    if (!StartsType()) Fail("expected member declaration");
    Node type = ParseType();
    std::string name = ExpectIdentifier();
    if (Is("(")) {
      Node method(NodeKind::kMethodDecl, name);
      method.children.push_back(std::move(type));
      ParseParams(method);
      method.children.push_back(ParseBlock());
      return Finish(std::move(method), begin);
    }
    if (type.text == "void") Fail("field cannot have type void");
    Node field(NodeKind::kFieldDecl, name);
    field.children.push_back(std::move(type));
    if (Is("=")) {
      Consume();
      field.children.push_back(ParseExpr());
    }
    Expect(";");
    return Finish(std::move(field), begin);
  }

  void ParseParams(Node& callable) {
    Expect("(");
    if (!Is(")")) {
      while (true) {
        int begin = Current().offset;
        Node type = ParseType();
        Node param(NodeKind::kParam, ExpectIdentifier());
        param.children.push_back(std::move(type));
        callable.children.push_back(Finish(std::move(param), begin));
        if (!Is(",")) break;
        Consume();
      }
    }
    Expect(")");
  }

  Node ParseBlock() {
    int begin = Current().offset;
    Expect("{");
    Node block(NodeKind::kBlock);
    while (!Is("}")) {
      if (AtEnd()) Fail("expected '}'");
      block.children.push_back(ParseStatementNode());
    }
    Expect("}");
    return Finish(std::move(block), begin);
  }

  // A declaration starts with a type followed by an identifier.
  bool StartsVarDecl() const {
    if (IsPrimitiveTypeKeyword(Current())) return true;
    if (Current().kind != TokenKind::kIdentifier) return false;
    size_t ahead = 1;
    while (Is("[", ahead) && Is("]", ahead + 1)) ahead += 2;
    return LookAhead(ahead).kind == TokenKind::kIdentifier;
  }

  Node ParseVarDeclNoSemicolon() {
    int begin = Current().offset;
    Node type = ParseType();
    if (type.text == "void") Fail("variable cannot have type void");
    Node decl(NodeKind::kVarDecl, ExpectIdentifier());
    decl.children.push_back(std::move(type));
    if (Is("=")) {
      Consume();
      decl.children.push_back(ParseExpr());
    }
    return Finish(std::move(decl), begin);
  }

  Node ParseExprStatementNoSemicolon() {
    int begin = Current().offset;
    Node expr = ParseExpr();
    if (expr.kind != NodeKind::kAssign && expr.kind != NodeKind::kCall &&
        expr.kind != NodeKind::kNew) {
      throw SyntaxError("not a statement", tokens_[pos_ - 1].line,
                        tokens_[pos_ - 1].column);
    }
    return Finish(MakeExprStmt(std::move(expr)), begin);
  }

  Node ParseStatementNode() {
    int begin = Current().offset;
    if (Is("{")) return ParseBlock();
    if (Is("if")) {
      Consume();
      Expect("(");
      Node cond = ParseExpr();
      Expect(")");
      Node node = MakeIf(std::move(cond), ParseStatementNode());
      if (Is("else")) {
        Consume();
        node.children.push_back(ParseStatementNode());
      }
      return Finish(std::move(node), begin);
    }
    if (Is("while")) {
      Consume();
      Expect("(");
      Node cond = ParseExpr();
      Expect(")");
      Node body = ParseStatementNode();
      return Finish(Node(NodeKind::kWhile, "", {std::move(cond),
                                                std::move(body)}),
                    begin);
    }
    if (Is("for")) {
      Consume();
      Expect("(");
      Node init(NodeKind::kEmpty);
      if (!Is(";")) {
        init = StartsVarDecl() ? ParseVarDeclNoSemicolon()
                               : ParseExprStatementNoSemicolon();
      }
      Expect(";");
      Node cond(NodeKind::kEmpty);
      if (!Is(";")) cond = ParseExpr();
      Expect(";");
      Node update(NodeKind::kEmpty);
      if (!Is(")")) update = ParseExprStatementNoSemicolon();
      Expect(")");
      Node body = ParseStatementNode();
      return Finish(Node(NodeKind::kFor, "",
                         {std::move(init), std::move(cond), std::move(update),
                          std::move(body)}),
                    begin);
    }
    if (Is("return")) {
      Consume();
      std::vector<Node> value;
      if (!Is(";")) value.push_back(ParseExpr());
      Expect(";");
      return Finish(MakeReturn(std::move(value)), begin);
    }
    if (Is("break") || Is("continue")) {
      NodeKind kind = Is("break") ? NodeKind::kBreak : NodeKind::kContinue;
      Consume();
      Expect(";");
      return Finish(Node(kind), begin);
    }
    if (Is("throw")) {
      Consume();
      Node value = ParseExpr();
      Expect(";");
      return Finish(Node(NodeKind::kThrow, "", {std::move(value)}), begin);
    }
    if (Is("assert")) {
      Consume();
      Expect("(");
      Node value = ParseExpr();
      Expect(")");
      Expect(";");
      return Finish(Node(NodeKind::kAssert, "", {std::move(value)}), begin);
    }
    if (Is("try")) {
      Consume();
      Node body = ParseBlock();
      if (!Is("catch")) Fail("expected 'catch'");
      int catch_begin = Current().offset;
      Consume();
      Expect("(");
      Node type = ParseType();
      Node handler(NodeKind::kCatch, ExpectIdentifier());
      Expect(")");
      handler.children.push_back(std::move(type));
      handler.children.push_back(ParseBlock());
      handler = Finish(std::move(handler), catch_begin);
      return Finish(Node(NodeKind::kTry, "", {std::move(body),
                                              std::move(handler)}),
                    begin);
    }
    if (StartsVarDecl()) {
      Node decl = ParseVarDeclNoSemicolon();
      Expect(";");
      return Finish(std::move(decl), begin);
    }
    Node statement = ParseExprStatementNoSemicolon();
    Expect(";");
    return Finish(std::move(statement), begin);
  }

  // Expressions, lowest precedence first.
  Node ParseExpr() { return ParseAssignment(); }

  Node ParseAssignment() {
    int begin = Current().offset;
    Node lhs = ParseConditional();
    static const char* const kAssignOps[] = {"=", "+=", "-=", "*=", "/=",
                                             "%="};
    for (const char* op : kAssignOps) {
      if (Is(op)) {
        if (lhs.kind != NodeKind::kName && lhs.kind != NodeKind::kFieldAccess &&
            lhs.kind != NodeKind::kArrayAccess) {
          Fail("invalid assignment target");
        }
        Consume();
        Node rhs = ParseAssignment();
        return Finish(Node(NodeKind::kAssign, op, {std::move(lhs),
                                                   std::move(rhs)}),
                      begin);
      }
    }
    return lhs;
  }

  Node ParseConditional() {
    int begin = Current().offset;
    Node cond = ParseBinary(0);
    if (!Is("?")) return cond;
    Consume();
    Node then_value = ParseExpr();
    Expect(":");
    Node else_value = ParseConditional();
    return Finish(Node(NodeKind::kConditional, "",
                       {std::move(cond), std::move(then_value),
                        std::move(else_value)}),
                  begin);
  }

  static int Precedence(const Token& t) {
    if (t.kind != TokenKind::kPunct && t.kind != TokenKind::kKeyword) {
      return -1;
    }
    const std::string& op = t.text;
    if (op == "||") return 0;
    if (op == "&&") return 1;
    if (op == "==" || op == "!=") return 2;
    if (op == "<" || op == "<=" || op == ">" || op == ">=" ||
        op == "instanceof") {
      return 3;
    }
    if (op == "+" || op == "-") return 4;
    if (op == "*" || op == "/" || op == "%") return 5;
    return -1;
  }

  Node ParseBinary(int min_precedence) {
    int begin = Current().offset;
    Node lhs = ParseUnary();
    while (true) {
      int precedence = Precedence(Current());
      if (precedence < min_precedence) return lhs;
      std::string op = Consume().text;
      if (op == "instanceof") {
        Node type = ParseType();
        lhs = Finish(Node(NodeKind::kInstanceOf, "", {std::move(lhs),
                                                      std::move(type)}),
                     begin);
        continue;
      }
      Node rhs = ParseBinary(precedence + 1);
      lhs = Finish(MakeInfix(op, std::move(lhs), std::move(rhs)), begin);
    }
  }

  bool StartsCastOperand(const Token& t) const {
    switch (t.kind) {
      case TokenKind::kIdentifier:
      case TokenKind::kInt:
      case TokenKind::kFloat:
      case TokenKind::kString:
        return true;
      case TokenKind::kKeyword:
        return t.text == "new" || t.text == "this" || t.text == "super" ||
               t.text == "null" || t.text == "true" || t.text == "false";
      case TokenKind::kPunct:
        return t.text == "(" || t.text == "!";
      case TokenKind::kEnd:
        return false;
    }
    return false;
  }

  bool LooksLikeCast() const {
    if (!Is("(")) return false;
    if (IsPrimitiveTypeKeyword(LookAhead(1))) return true;
    if (LookAhead(1).kind != TokenKind::kIdentifier) return false;
    size_t ahead = 2;
    while (Is("[", ahead) && Is("]", ahead + 1)) ahead += 2;
    return Is(")", ahead) && StartsCastOperand(LookAhead(ahead + 1));
  }

  Node ParseUnary() {
    int begin = Current().offset;
    if (Is("!") || Is("-")) {
      std::string op = Consume().text;
      Node operand = ParseUnary();
      return Finish(MakePrefix(op, std::move(operand)), begin);
    }
    if (LooksLikeCast()) {
      Consume();
      Node type = ParseType();
      Expect(")");
      Node operand = ParseUnary();
      return Finish(Node(NodeKind::kCast, "", {std::move(type),
                                               std::move(operand)}),
                    begin);
    }
    return ParsePostfix();
  }

  void ParseArgs(Node& call) {
    Expect("(");
    if (!Is(")")) {
      while (true) {
        call.children.push_back(ParseExpr());
        if (!Is(",")) break;
        Consume();
      }
    }
    Expect(")");
  }

  Node ParsePostfix() {
    int begin = Current().offset;
    Node expr = ParsePrimary();
    while (true) {
      if (Is(".")) {
        Consume();
        std::string name = ExpectIdentifier();
        if (Is("(")) {
          Node call(NodeKind::kCall, name, {std::move(expr)});
          ParseArgs(call);
          expr = Finish(std::move(call), begin);
        } else {
          expr = Finish(Node(NodeKind::kFieldAccess, name, {std::move(expr)}),
                        begin);
        }
      } else if (Is("[")) {
        Consume();
        Node index = ParseExpr();
        Expect("]");
        expr = Finish(Node(NodeKind::kArrayAccess, "",
                           {std::move(expr), std::move(index)}),
                      begin);
      } else {
        return expr;
      }
    }
  }

  Node ParsePrimary() {
    int begin = Current().offset;
    const Token& t = Current();
    switch (t.kind) {
      case TokenKind::kInt: {
        int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(),
                            value);
        if (ec != std::errc()) Fail("integer literal out of range");
        Consume();
        return Finish(Node(NodeKind::kIntLiteral, t.text), begin);
      }
      case TokenKind::kFloat:
        Consume();
        return Finish(Node(NodeKind::kFloatLiteral, t.text), begin);
      case TokenKind::kString:
        Consume();
        return Finish(MakeStringLiteral(t.text), begin);
      case TokenKind::kIdentifier: {
        std::string name = Consume().text;
        if (Is("(")) {
          Node call(NodeKind::kCall, name, {Node(NodeKind::kEmpty)});
          ParseArgs(call);
          return Finish(std::move(call), begin);
        }
        return Finish(MakeName(name), begin);
      }
      case TokenKind::kKeyword:
        if (t.text == "true" || t.text == "false") {
          Consume();
          return Finish(MakeBooleanLiteral(t.text == "true"), begin);
        }
        if (t.text == "null") {
          Consume();
          return Finish(MakeNullLiteral(), begin);
        }
        if (t.text == "this") {
          Consume();
          return Finish(Node(NodeKind::kThis, "this"), begin);
        }
        if (t.text == "super") {
          Consume();
          Node receiver = Finish(Node(NodeKind::kSuper, "super"), begin);
          Expect(".");
          Node call(NodeKind::kCall, ExpectIdentifier(), {std::move(receiver)});
          if (!Is("(")) Fail("expected '(' after super member");
          ParseArgs(call);
          return Finish(std::move(call), begin);
        }
        if (t.text == "new") return ParseNew();
        break;
      case TokenKind::kPunct:
        if (t.text == "(") {
          Consume();
          Node inner = ParseExpr();
          Expect(")");
          return inner;
        }
        break;
      case TokenKind::kEnd:
        break;
    }
    Fail("expected expression");
  }

  Node ParseNew() {
    int begin = Current().offset;
    Expect("new");
    int type_begin = Current().offset;
    if ((Current().kind == TokenKind::kIdentifier || Current().text == "String") &&
        Is("(", 1)) {
      Node creation(NodeKind::kNew, Consume().text);
      ParseArgs(creation);
      return Finish(std::move(creation), begin);
    }
    if (!StartsType() || Current().text == "void") Fail("expected type");
    std::string element = Consume().text;
    Expect("[");
    if (Is("]")) {
      Consume();
      while (Is("[") && Is("]", 1)) {
        Consume();
        Consume();
        element += "[]";
      }
      Node type = Finish(Node(NodeKind::kType, element), type_begin);
      Node literal(NodeKind::kArrayLiteral, "", {std::move(type)});
      Expect("{");
      if (!Is("}")) {
        while (true) {
          literal.children.push_back(ParseExpr());
          if (!Is(",")) break;
          Consume();
        }
      }
      Expect("}");
      return Finish(std::move(literal), begin);
    }
    Node size = ParseExpr();
    Expect("]");
    if (Is("[")) Fail("multi-dimensional array creation is unsupported");
    Node type(NodeKind::kType, element);
    type.span = {type_begin, type_begin + static_cast<int>(element.size())};
    return Finish(Node(NodeKind::kNewArray, "", {std::move(type),
                                                 std::move(size)}),
                  begin);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

int SourceFile::LineOf(int offset) const {
  offset = std::clamp(offset, 0, static_cast<int>(text.size()));
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset,
                                         '\n'));
}

Node ParseUnit(std::string_view text) {
  Node unit = Parser(text).ParseUnitRoot();
  IndexTree(unit, 1);
  return unit;
}

SourceFile ParseSourceFile(std::string path, std::string text) {
  Node ast = ParseUnit(text);
  return SourceFile{std::move(path), std::move(text), std::move(ast)};
}

Node ParseStatement(std::string_view text) {
  Node statement = Parser(text).ParseStatementRoot();
  IndexTree(statement, 1);
  return statement;
}

Node ParseExpression(std::string_view text) {
  Node expr = Parser(text).ParseExpressionRoot();
  IndexTree(expr, 1);
  return expr;
}

}  // namespace templar
