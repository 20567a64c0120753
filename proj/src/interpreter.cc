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

#include "templar/interpreter.h"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "templar/ast.h"

namespace templar {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPassed:
      return "passed";
    case Verdict::kFailed:
      return "failed";
    case Verdict::kCrashed:
      return "crashed";
    case Verdict::kTimedOut:
      return "timed-out";
  }
  return "?";
}

namespace {

struct Value {
  enum class Kind : uint8_t { kVoid, kNull, kBoolean, kInt, kFloat, kString,
                              kRef };
  Kind kind = Kind::kVoid;
  bool b = false;
  int64_t i = 0;
  double f = 0;
  std::string s;
  int32_t ref = -1;

  static Value Null() {
    Value r;
    r.kind = Kind::kNull;
    return r;
  }
  static Value Boolean(bool v) {
    Value r;
    r.kind = Kind::kBoolean;
    r.b = v;
    return r;
  }
  static Value Int(int64_t v) {
    Value r;
    r.kind = Kind::kInt;
    r.i = v;
    return r;
  }
  static Value Float(double v) {
    Value r;
    r.kind = Kind::kFloat;
    r.f = v;
    return r;
  }
  static Value Str(std::string v) {
    Value r;
    r.kind = Kind::kString;
    r.s = std::move(v);
    return r;
  }
  static Value Ref(int32_t v) {
    Value r;
    r.kind = Kind::kRef;
    r.ref = v;
    return r;
  }

  double AsFloat() const { return kind == Kind::kInt ? double(i) : f; }
};

struct HeapObject {
  const ClassInfo* klass = nullptr;  // null for arrays
  LangType array_type;
  std::vector<Value> slots;
};

// Uncatchable outcomes unwind the whole test.
struct Abort {
  Verdict verdict;
  std::string detail;
};

// A MiniJ exception in flight.
struct Thrown {
  Value value;
};

enum class Flow { kNormal, kReturn, kBreak, kContinue };

struct Frame {
  std::vector<Value> locals;
  int32_t self = -1;
  int file = 0;
  const ClassInfo* klass = nullptr;
  Value result;
};

int64_t WrapAdd(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) +
                              static_cast<uint64_t>(b));
}
int64_t WrapSub(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) -
                              static_cast<uint64_t>(b));
}
int64_t WrapMul(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) *
                              static_cast<uint64_t>(b));
}

int64_t FloatToInt(double v) {
  if (std::isnan(v)) return 0;
  if (v >= 9.2233720368547758e18) return std::numeric_limits<int64_t>::max();
  if (v <= -9.2233720368547758e18) return std::numeric_limits<int64_t>::min();
  return static_cast<int64_t>(v);
}

Value DefaultFor(const LangType& type) {
  if (type.IsBoolean()) return Value::Boolean(false);
  if (type.IsInt()) return Value::Int(0);
  if (type.IsFloat()) return Value::Float(0);
  return Value::Null();
}

Value Coerce(Value value, const LangType& type) {
  if (type.IsFloat() && value.kind == Value::Kind::kInt) {
    return Value::Float(static_cast<double>(value.i));
  }
  return value;
}

class Interpreter {
 public:
  Interpreter(const CheckedProgram& program, const RunOptions& options)
      : program_(program),
        table_(program.classes()),
        options_(options),
        start_(std::chrono::steady_clock::now()) {
    if (options_.record_coverage) {
      counts_.resize(program.program().files.size());
      for (size_t f = 0; f < counts_.size(); ++f) {
        counts_[f].assign(CountNodes(program.file(f).ast), 0);
      }
    }
  }

  void RunTest(const TestCase& test) {
    const ClassInfo* klass = table_.Find(test.class_name);
    const MethodInfo* ctor = nullptr;
    for (const MethodInfo& c : klass->constructors) {
      if (c.params.empty()) ctor = &c;
    }
    if (ctor == nullptr) {
      throw Abort{Verdict::kCrashed,
                  "test class has no zero-argument constructor"};
    }
    Value self = Construct(klass, *ctor, {});
    const MethodInfo* method = nullptr;
    for (const MethodInfo& m : klass->methods) {
      if (m.decl == test.body) method = &m;
    }
    Invoke(*method, self.ref, {});
  }

  void CollectCoverage(CoverageTrace& trace) const {
    for (size_t f = 0; f < counts_.size(); ++f) {
      const std::string& path = program_.file(f).path;
      for (size_t p = 0; p < counts_[f].size(); ++p) {
        if (counts_[f][p] > 0) {
          trace.counts[{path, static_cast<int>(p)}] = counts_[f][p];
        }
      }
    }
  }

  std::string Describe(const Value& v) const {
    if (v.kind == Value::Kind::kRef && heap_[v.ref].klass != nullptr) {
      return heap_[v.ref].klass->name;
    }
    return ToText(v);
  }

 private:
  // Runtime errors are instances of the builtin Exception class.
  [[noreturn]] void RuntimeError(const std::string& what) {
    last_error_ = what;
    int32_t ref = Allocate(table_.Find("Exception"));
    throw Thrown{Value::Ref(ref)};
  }

  int32_t Allocate(const ClassInfo* klass) {
    HeapObject object;
    object.klass = klass;
    for (const FieldInfo& field : klass->fields) {
      object.slots.push_back(DefaultFor(field.type));
    }
    heap_.push_back(std::move(object));
    return static_cast<int32_t>(heap_.size() - 1);
  }

  void Tick() {
    ++steps_;
    if (steps_ > options_.max_steps) {
      throw Abort{Verdict::kTimedOut, "statement budget exhausted"};
    }
    if ((steps_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > options_.timeout) {
      throw Abort{Verdict::kTimedOut, "per-test timeout"};
    }
  }

  Value Construct(const ClassInfo* klass, const MethodInfo& ctor,
                  std::vector<Value> args) {
    int32_t ref = Allocate(klass);
    // Field initializers run root class first, then the constructor body.
    std::vector<const ClassInfo*> chain;
    for (const ClassInfo* c = klass; c != nullptr;
         c = c->parent.empty() ? nullptr : table_.Find(c->parent)) {
      chain.insert(chain.begin(), c);
    }
    for (const ClassInfo* c : chain) {
      if (c->decl == nullptr) continue;
      for (const Node& member : c->decl->children) {
        if (member.kind != NodeKind::kFieldDecl || member.children.size() < 2) {
          continue;
        }
        Frame frame;
        frame.self = ref;
        frame.file = c->file;
        frame.klass = c;
        const FieldInfo* field = table_.FindField(c->name, member.text);
        Value v = Coerce(Eval(member.children[1], frame), field->type);
        heap_[ref].slots[field->index] = std::move(v);
      }
    }
    if (ctor.decl != nullptr) Invoke(ctor, ref, std::move(args));
    return Value::Ref(ref);
  }

  Value Invoke(const MethodInfo& method, int32_t self,
               std::vector<Value> args) {
    if (method.decl == nullptr) {
      // Object.clone(): shallow copy.
      heap_.push_back(heap_[self]);
      return Value::Ref(static_cast<int32_t>(heap_.size() - 1));
    }
    if (++depth_ > options_.max_depth) {
      throw Abort{Verdict::kCrashed, "stack overflow"};
    }
    const Node& decl = *method.decl;
    Frame frame;
    frame.locals.resize(std::max(decl.slot, 0));
    frame.self = self;
    frame.file = method.file;
    frame.klass = table_.Find(method.owner);
    for (size_t i = 0; i < args.size(); ++i) {
      frame.locals[i] = Coerce(std::move(args[i]), method.params[i]);
    }
    Flow flow = Exec(decl.children.back(), frame);
    if (flow != Flow::kReturn && !method.ret.IsVoid()) {
      throw Abort{Verdict::kCrashed, "missing return in " + method.Key()};
    }
    --depth_;
    return Coerce(std::move(frame.result), method.ret);
  }

  void Record(const Node& s, const Frame& frame) {
    if (options_.record_coverage && s.preorder >= 0) {
      ++counts_[frame.file][s.preorder];
    }
  }

  bool Truthy(const Node& cond, Frame& frame) {
    return Eval(cond, frame).b;
  }

  Flow ExecBlock(const Node& block, Frame& frame) {
    for (const Node& s : block.children) {
      Flow flow = Exec(s, frame);
      if (flow != Flow::kNormal) return flow;
    }
    return Flow::kNormal;
  }

  Flow Exec(const Node& s, Frame& frame) {
    if (s.kind == NodeKind::kBlock) return ExecBlock(s, frame);
    Tick();
    Record(s, frame);
    switch (s.kind) {
      case NodeKind::kVarDecl:
        frame.locals[s.slot] =
            s.children.size() > 1
                ? Coerce(Eval(s.children[1], frame), s.type)
                : DefaultFor(s.type);
        return Flow::kNormal;
      case NodeKind::kExprStmt:
        Eval(s.children[0], frame);
        return Flow::kNormal;
      case NodeKind::kIf:
        if (Truthy(s.children[0], frame)) return Exec(s.children[1], frame);
        if (s.children.size() > 2) return Exec(s.children[2], frame);
        return Flow::kNormal;
      case NodeKind::kWhile:
        while (Truthy(s.children[0], frame)) {
          Flow flow = Exec(s.children[1], frame);
          if (flow == Flow::kBreak) break;
          if (flow == Flow::kReturn) return flow;
          Tick();
        }
        return Flow::kNormal;
      case NodeKind::kFor: {
        const Node& init = s.children[0];
        if (init.kind == NodeKind::kVarDecl) {
          frame.locals[init.slot] =
              init.children.size() > 1
                  ? Coerce(Eval(init.children[1], frame), init.type)
                  : DefaultFor(init.type);
        } else if (init.kind == NodeKind::kExprStmt) {
          Eval(init.children[0], frame);
        }
        while (s.children[1].kind == NodeKind::kEmpty ||
               Truthy(s.children[1], frame)) {
          Flow flow = Exec(s.children[3], frame);
          if (flow == Flow::kBreak) break;
          if (flow == Flow::kReturn) return flow;
          if (s.children[2].kind == NodeKind::kExprStmt) {
            Eval(s.children[2].children[0], frame);
          }
          Tick();
        }
        return Flow::kNormal;
      }
      case NodeKind::kReturn:
        frame.result = s.children.empty() ? Value{} : Eval(s.children[0], frame);
        return Flow::kReturn;
      case NodeKind::kBreak:
        return Flow::kBreak;
      case NodeKind::kContinue:
        return Flow::kContinue;
      case NodeKind::kThrow: {
        Value v = Eval(s.children[0], frame);
        if (v.kind == Value::Kind::kNull) RuntimeError("throw of null");
        last_error_ = "uncaught " + Describe(v);
        throw Thrown{std::move(v)};
      }
      case NodeKind::kTry: {
        const Node& handler = s.children[1];
        const int depth = depth_;
        try {
          return ExecBlock(s.children[0], frame);
        } catch (Thrown& thrown) {
          depth_ = depth;
          const ClassInfo* klass = heap_[thrown.value.ref].klass;
          if (!table_.IsSubclassOf(klass->name, handler.type.class_name)) {
            throw;
          }
          frame.locals[handler.slot] = thrown.value;
          return ExecBlock(handler.children[1], frame);
        }
      }
      case NodeKind::kAssert:
        if (!Truthy(s.children[0], frame)) {
          const SourceFile& file = program_.file(frame.file);
          throw Abort{Verdict::kFailed,
                      "assertion failed at " + file.path + ":" +
                          std::to_string(file.LineOf(s.span.begin))};
        }
        return Flow::kNormal;
      default:
        throw Abort{Verdict::kCrashed,
                    "cannot execute " + std::string(KindName(s.kind))};
    }
  }

  // Storage location of an assignable expression.
  struct Place {
    Value* slot = nullptr;
    LangType type;
  };

  Place Locate(const Node& e, Frame& frame) {
    switch (e.kind) {
      case NodeKind::kName:
        if (e.binding == NameBinding::kLocal) {
          return {&frame.locals[e.slot], e.type};
        }
        return {&heap_[frame.self].slots[e.slot], e.type};
      case NodeKind::kFieldAccess: {
        Value obj = Eval(e.children[0], frame);
        if (obj.kind == Value::Kind::kNull) RuntimeError("null dereference");
        return {&heap_[obj.ref].slots[e.slot], e.type};
      }
      case NodeKind::kArrayAccess: {
        Value arr = Eval(e.children[0], frame);
        Value index = Eval(e.children[1], frame);
        if (arr.kind == Value::Kind::kNull) RuntimeError("null dereference");
        auto& slots = heap_[arr.ref].slots;
        if (index.i < 0 || index.i >= static_cast<int64_t>(slots.size())) {
          RuntimeError("array index out of bounds");
        }
        return {&slots[index.i], e.type};
      }
      default:
        throw Abort{Verdict::kCrashed, "not assignable"};
    }
  }

  std::string ToText(const Value& v) const {
    switch (v.kind) {
      case Value::Kind::kVoid:
        return "";
      case Value::Kind::kNull:
        return "null";
      case Value::Kind::kBoolean:
        return v.b ? "true" : "false";
      case Value::Kind::kInt:
        return std::to_string(v.i);
      case Value::Kind::kFloat:
        return FormatFloatLiteral(v.f);
      case Value::Kind::kString:
        return v.s;
      case Value::Kind::kRef:
        if (heap_[v.ref].klass == nullptr) {
          return heap_[v.ref].array_type.ToString() + "@" +
                 std::to_string(v.ref);
        }
        return heap_[v.ref].klass->name + "@" + std::to_string(v.ref);
    }
    return "";
  }

  bool Equal(const Value& a, const Value& b) const {
    bool a_num = a.kind == Value::Kind::kInt || a.kind == Value::Kind::kFloat;
    bool b_num = b.kind == Value::Kind::kInt || b.kind == Value::Kind::kFloat;
    if (a_num && b_num) {
      if (a.kind == Value::Kind::kInt && b.kind == Value::Kind::kInt) {
        return a.i == b.i;
      }
      return a.AsFloat() == b.AsFloat();
    }
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Value::Kind::kNull:
        return true;
      case Value::Kind::kBoolean:
        return a.b == b.b;
      case Value::Kind::kString:
        return a.s == b.s;
      case Value::Kind::kRef:
        return a.ref == b.ref;
      default:
        return false;
    }
  }

  Value Arithmetic(const std::string& op, const Value& a, const Value& b,
                   const LangType& type) {
    if (type.IsString()) return Value::Str(ToText(a) + ToText(b));
    if (type.IsInt()) {
      switch (op[0]) {
        case '+':
          return Value::Int(WrapAdd(a.i, b.i));
        case '-':
          return Value::Int(WrapSub(a.i, b.i));
        case '*':
          return Value::Int(WrapMul(a.i, b.i));
        case '/':
        case '%':
          if (b.i == 0) RuntimeError("division by zero");
          if (b.i == -1) {
            return Value::Int(op[0] == '/' ? WrapSub(0, a.i) : 0);
          }
          return Value::Int(op[0] == '/' ? a.i / b.i : a.i % b.i);
      }
    }
    double x = a.AsFloat();
    double y = b.AsFloat();
    switch (op[0]) {
      case '+':
        return Value::Float(x + y);
      case '-':
        return Value::Float(x - y);
      case '*':
        return Value::Float(x * y);
      case '/':
        return Value::Float(x / y);
      case '%':
        return Value::Float(std::fmod(x, y));
    }
    throw Abort{Verdict::kCrashed, "bad operator " + op};
  }

  Value EvalInfix(const Node& e, Frame& frame) {
    const std::string& op = e.text;
    if (op == "&&") {
      if (!Eval(e.children[0], frame).b) return Value::Boolean(false);
      return Value::Boolean(Eval(e.children[1], frame).b);
    }
    if (op == "||") {
      if (Eval(e.children[0], frame).b) return Value::Boolean(true);
      return Value::Boolean(Eval(e.children[1], frame).b);
    }
    Value a = Eval(e.children[0], frame);
    Value b = Eval(e.children[1], frame);
    if (op == "==") return Value::Boolean(Equal(a, b));
    if (op == "!=") return Value::Boolean(!Equal(a, b));
    if (op[0] == '<' || op[0] == '>') {
      bool result;
      if (a.kind == Value::Kind::kInt && b.kind == Value::Kind::kInt) {
        result = op == "<" ? a.i < b.i : op == "<=" ? a.i <= b.i
                 : op == ">" ? a.i > b.i : a.i >= b.i;
      } else {
        double x = a.AsFloat();
        double y = b.AsFloat();
        result = op == "<" ? x < y : op == "<=" ? x <= y
                 : op == ">" ? x > y : x >= y;
      }
      return Value::Boolean(result);
    }
    return Arithmetic(op, a, b, e.type);
  }

  std::vector<Value> EvalArgs(const Node& e, size_t first, Frame& frame) {
    std::vector<Value> args;
    for (size_t i = first; i < e.children.size(); ++i) {
      args.push_back(Eval(e.children[i], frame));
    }
    return args;
  }

  Value EvalCall(const Node& e, Frame& frame) {
    const Node& receiver = e.children[0];
    if (e.aux == "String.length()") {
      Value s = Eval(receiver, frame);
      if (s.kind == Value::Kind::kNull) RuntimeError("null dereference");
      return Value::Int(static_cast<int64_t>(s.s.size()));
    }
    int32_t self;
    const MethodInfo* method = nullptr;
    std::vector<Value> args;
    if (receiver.kind == NodeKind::kSuper) {
      self = frame.self;
      args = EvalArgs(e, 1, frame);
      const ClassInfo* parent = table_.Find(frame.klass->parent);
      method = parent->vtable.at(e.aux);
    } else {
      if (receiver.kind == NodeKind::kEmpty) {
        self = frame.self;
      } else {
        Value target = Eval(receiver, frame);
        if (target.kind == Value::Kind::kNull) {
          RuntimeError("null dereference");
        }
        self = target.ref;
      }
      args = EvalArgs(e, 1, frame);
      method = heap_[self].klass->vtable.at(e.aux);
    }
    return Invoke(*method, self, std::move(args));
  }

  Value Eval(const Node& e, Frame& frame) {
    switch (e.kind) {
      case NodeKind::kIntLiteral:
        return Value::Int(std::stoll(e.text));
      case NodeKind::kFloatLiteral:
        return Value::Float(std::stod(e.text));
      case NodeKind::kStringLiteral:
        return Value::Str(e.text);
      case NodeKind::kBooleanLiteral:
        return Value::Boolean(e.text == "true");
      case NodeKind::kNullLiteral:
        return Value::Null();
      case NodeKind::kThis:
        return Value::Ref(frame.self);
      case NodeKind::kName:
      case NodeKind::kArrayAccess:
        return *Locate(e, frame).slot;
      case NodeKind::kFieldAccess: {
        if (e.children[0].type.IsArray()) {
          Value arr = Eval(e.children[0], frame);
          if (arr.kind == Value::Kind::kNull) RuntimeError("null dereference");
          return Value::Int(static_cast<int64_t>(heap_[arr.ref].slots.size()));
        }
        return *Locate(e, frame).slot;
      }
      case NodeKind::kCall:
        return EvalCall(e, frame);
      case NodeKind::kNew: {
        std::vector<Value> args = EvalArgs(e, 0, frame);
        if (e.text == "String") return Value::Str("");
        const ClassInfo* klass = table_.Find(e.text);
        for (const MethodInfo& ctor : klass->constructors) {
          if (ctor.Key() == e.aux) return Construct(klass, ctor, std::move(args));
        }
        throw Abort{Verdict::kCrashed, "constructor not found"};
      }
      case NodeKind::kNewArray: {
        Value size = Eval(e.children[1], frame);
        if (size.i < 0) RuntimeError("negative array size");
        if (size.i > 10'000'000) RuntimeError("array too large");
        HeapObject array;
        array.array_type = e.type;
        array.slots.assign(size.i, DefaultFor(e.type.Element()));
        heap_.push_back(std::move(array));
        return Value::Ref(static_cast<int32_t>(heap_.size() - 1));
      }
      case NodeKind::kArrayLiteral: {
        HeapObject array;
        array.array_type = e.type;
        LangType element = e.type.Element();
        for (size_t i = 1; i < e.children.size(); ++i) {
          array.slots.push_back(Coerce(Eval(e.children[i], frame), element));
        }
        heap_.push_back(std::move(array));
        return Value::Ref(static_cast<int32_t>(heap_.size() - 1));
      }
      case NodeKind::kAssign: {
        // Slot pointers survive heap growth: objects own their slot
        // storage, which moves with them.
        Place place = Locate(e.children[0], frame);
        Value rhs = Eval(e.children[1], frame);
        Value result;
        if (e.text == "=") {
          result = Coerce(std::move(rhs), place.type);
        } else {
          std::string op(1, e.text[0]);
          result = Coerce(Arithmetic(op, *place.slot, rhs, place.type),
                          place.type);
        }
        *place.slot = result;
        return result;
      }
      case NodeKind::kConditional:
        return Coerce(Truthy(e.children[0], frame) ? Eval(e.children[1], frame)
                                                   : Eval(e.children[2], frame),
                      e.type);
      case NodeKind::kInfix:
        return EvalInfix(e, frame);
      case NodeKind::kPrefix: {
        Value v = Eval(e.children[0], frame);
        if (e.text == "!") return Value::Boolean(!v.b);
        if (v.kind == Value::Kind::kInt) return Value::Int(WrapSub(0, v.i));
        return Value::Float(-v.f);
      }
      case NodeKind::kCast: {
        Value v = Eval(e.children[1], frame);
        const LangType& target = e.type;
        if (target.IsInt()) {
          return v.kind == Value::Kind::kFloat ? Value::Int(FloatToInt(v.f))
                                               : v;
        }
        if (target.IsFloat()) return Value::Float(v.AsFloat());
        if (v.kind == Value::Kind::kRef && target.IsClass()) {
          const ClassInfo* klass = heap_[v.ref].klass;
          if (klass == nullptr ||
              !table_.IsSubclassOf(klass->name, target.class_name)) {
            RuntimeError("bad cast to " + target.class_name);
          }
        }
        return v;
      }
      case NodeKind::kInstanceOf: {
        Value v = Eval(e.children[0], frame);
        if (v.kind != Value::Kind::kRef) return Value::Boolean(false);
        const ClassInfo* klass = heap_[v.ref].klass;
        return Value::Boolean(klass != nullptr &&
                              table_.IsSubclassOf(
                                  klass->name, e.children[1].text));
      }
      default:
        throw Abort{Verdict::kCrashed,
                    "cannot evaluate " + std::string(KindName(e.kind))};
    }
  }

  const CheckedProgram& program_;
  const ClassTable& table_;
  RunOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::vector<HeapObject> heap_;
  std::vector<std::vector<int64_t>> counts_;
  int64_t steps_ = 0;
  int depth_ = 0;

 public:
  std::string last_error_;
};

}  // namespace

std::vector<TestCase> DiscoverTests(const CheckedProgram& program,
                                    std::string_view suite_path) {
  int file = program.program().FileIndex(suite_path);
  if (file < 0) {
    throw std::invalid_argument("suite file not found: " +
                                std::string(suite_path));
  }
  std::vector<TestCase> tests;
  std::set<std::string> names;
  for (const Node& decl : program.file(file).ast.children) {
    for (const Node& member : decl.children) {
      if (member.kind != NodeKind::kMethodDecl ||
          member.text.rfind("test_", 0) != 0 || member.children.size() != 2) {
        continue;
      }
      if (!names.insert(member.text).second) {
        throw std::invalid_argument("duplicate test name: " + member.text);
      }
      tests.push_back({member.text, decl.text, &member});
    }
  }
  return tests;
}

CoverageTrace RunTest(const CheckedProgram& program, const TestCase& test,
                      const RunOptions& options) {
  CoverageTrace trace;
  trace.test = test.name;
  Interpreter interpreter(program, options);
  try {
    interpreter.RunTest(test);
    trace.verdict = Verdict::kPassed;
  } catch (const Abort& abort) {
    trace.verdict = abort.verdict;
    trace.detail = abort.detail;
  } catch (const Thrown& thrown) {
    trace.verdict = Verdict::kCrashed;
    trace.detail = interpreter.last_error_;
  }
  if (options.record_coverage) interpreter.CollectCoverage(trace);
  return trace;
}

std::vector<CoverageTrace> RunTests(const CheckedProgram& program,
                                    const std::vector<TestCase>& tests,
                                    const RunOptions& options) {
  std::vector<CoverageTrace> traces;
  traces.reserve(tests.size());
  for (const TestCase& test : tests) {
    traces.push_back(RunTest(program, test, options));
  }
  return traces;
}

}  // namespace templar
