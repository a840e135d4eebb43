#include "regdissect/hierarchy.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "regdissect/errors.hpp"

namespace regdissect {

ClassExpr ClassExpr::atom(Natural level) {
  if (level == 0) throw Error(ErrorKind::kIllFormed, "BCFL_k needs k >= 1");
  return ClassExpr(Op::kAtom, level, {});
}
ClassExpr ClassExpr::meet(ClassExpr a, ClassExpr b) {
  return ClassExpr(Op::kAnd, 0, {std::move(a), std::move(b)});
}
ClassExpr ClassExpr::join(ClassExpr a, ClassExpr b) {
  return ClassExpr(Op::kOr, 0, {std::move(a), std::move(b)});
}
ClassExpr ClassExpr::minus(ClassExpr a, ClassExpr b) {
  return ClassExpr(Op::kMinus, 0, {std::move(a), std::move(b)});
}
ClassExpr ClassExpr::co(ClassExpr a) {
  return ClassExpr(Op::kCo, 0, {std::move(a)});
}

std::string ClassExpr::to_string() const {
  switch (op_) {
    case Op::kAtom:
      return level_ == 1 ? "BCFL" : "BCFL_" + std::to_string(level_);
    case Op::kCo:
      return "co(" + children_[0].to_string() + ")";
    case Op::kAnd:
      return "(" + children_[0].to_string() + " & " + children_[1].to_string() + ")";
    case Op::kOr:
      return "(" + children_[0].to_string() + " | " + children_[1].to_string() + ")";
    case Op::kMinus:
      return "(" + children_[0].to_string() + " - " + children_[1].to_string() + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClassExpr parse() {
    ClassExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kIllFormed,
                what + " at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  ClassExpr expr() {
    ClassExpr e = term();
    while (eat('|')) e = ClassExpr::join(std::move(e), term());
    return e;
  }
  ClassExpr term() {
    ClassExpr e = unary();
    while (true) {
      if (eat('&')) {
        e = ClassExpr::meet(std::move(e), unary());
      } else if (eat('-')) {
        e = ClassExpr::minus(std::move(e), unary());
      } else {
        return e;
      }
    }
  }
  ClassExpr unary() {
    if (eat('(')) {
      ClassExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat_word("co")) {
      if (!eat('(')) fail("expected '(' after co");
      ClassExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return ClassExpr::co(std::move(e));
    }
    if (eat_word("BCFL")) {
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (begin == pos_ || pos_ - begin > 9) fail("expected a level after BCFL_");
        const Natural k = std::stoull(std::string(text_.substr(begin, pos_ - begin)));
        if (k == 0) fail("BCFL_k needs k >= 1");
        return ClassExpr::atom(k);
      }
      return ClassExpr::atom(1);
    }
    fail("expected BCFL, BCFL_k, co(...) or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Natural even_up(Natural k) { return k + (k % 2); }

std::string level_name(Natural k) { return "BCFL_" + std::to_string(k); }

// A bound too large for 64 bits; the side is dropped.
struct Overflow {};

Natural add(Natural a, Natural b) {
  Natural out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
  return out;
}

Natural mul(Natural a, Natural b) {
  Natural out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

struct Tracer {
  std::vector<std::string>* trace = nullptr;
  bool grounded = false;
  void note(std::string s) {
    if (trace && std::find(trace->begin(), trace->end(), s) == trace->end()) {
      trace->push_back(std::move(s));
    }
  }
};

// Diagonal steps of the odd-j recursion unrolled one by one; past this the
// closed form is used.
constexpr Natural kUnrollLimit = 64;

// Level of F_{i,j} = BCFL_i - BCFL_j.
Natural difference(Natural i, Natural j, Tracer& t) {
  if (i == 0) {
    t.grounded = true;
    t.note("F_{0," + std::to_string(j) + "} grounded at level 0");
    return 0;
  }
  if (i == 1 && j == 1) {
    t.note("R7: F_{1,1} = BCFL_2");
    return 2;
  }
  const Natural ie = even_up(i);
  const Natural k = ie / 2;
  if (ie != i) t.note("R8: " + level_name(i) + " ⊆ " + level_name(ie));
  if (j % 2 == 0) {
    // BCFL_j = BCFL_{j-1} & co-BCFL, so A - BCFL_j = (A - BCFL_{j-1}) | (A & BCFL).
    const Natural head = difference(ie, j - 1, t);
    const Natural out = add(head, mul(4, k));
    t.note("unfold " + level_name(j) + " = " + level_name(j - 1) + " & co(BCFL)");
    t.note("R5/R6: F_{" + std::to_string(ie) + "," + std::to_string(j) + "} ⊆ " +
           level_name(head) + " | " + level_name(4 * k));
    return out;
  }
  if (j == 1) {
    if (ie == 2) {
      t.note("R7: F_{2,1} ⊆ BCFL_4");
      return 4;
    }
    t.note("R3: " + level_name(ie) + " & co(BCFL) = " + level_name(ie));
    return ie;
  }
  const Natural m = (j - 1) / 2;
  // F_{2k,2m+1} ⊆ F_{2k-2,2m-1} | F_{2,2m-1} | BCFL_{4k}.
  if (k == 1) {
    // Unrolls to F_{2,1} joined with m copies of BCFL_4, F_{0,·} terms vanishing.
    t.grounded = true;
    t.note("F_{0," + std::to_string(j - 2) + "} grounded at level 0");
    const Natural out = add(mul(2, j), 2);
    t.note("F_{2," + std::to_string(j) + "} ⊆ F_{2,1} | " + std::to_string(m) +
           " x BCFL_4 ⊆ " + level_name(out));
    return out;
  }
  if (std::min(k, m) > kUnrollLimit) {
    // Step (k', m') -> (k'-1, m'-1) adds 4k' + 4m'.
    t.grounded = true;
    Natural out;
    if (k <= m) {
      out = mul(mul(4, k), add(m, 1));
    } else {
      const Natural rest = k - m;
      out = add(mul(mul(4, m), add(k, 1)), rest == 1 ? 4 : mul(2, rest));
    }
    t.note("F_{" + std::to_string(ie) + "," + std::to_string(j) + "} ⊆ " +
           level_name(out) + " (diagonal unfolding summed)");
    return out;
  }
  const Natural l1 = difference(2 * k - 2, 2 * m - 1, t) / 2;
  const Natural l2 = difference(2, 2 * m - 1, t) / 2;
  const Natural out = mul(2, add(add(l1, l2), mul(2, k)));
  t.note("F_{" + std::to_string(2 * k) + "," + std::to_string(j) + "} ⊆ " +
         level_name(2 * l1) + " | " + level_name(2 * l2) + " | " +
         level_name(4 * k) + " ⊆ " + level_name(out));
  return out;
}

// One side of a bound with the rules that produced it.
struct Side {
  Natural value = 0;
  std::vector<std::string> trace;
  bool grounded = false;
};
using OptSide = std::optional<Side>;

OptSide best(OptSide a, OptSide b) {
  if (!a) return b;
  if (!b) return a;
  return a->value <= b->value ? a : b;
}

Side derive(Natural value, std::string rule, std::initializer_list<const Side*> from,
            const Tracer* extra = nullptr) {
  Side s;
  s.value = value;
  for (const Side* f : from) {
    s.trace.insert(s.trace.end(), f->trace.begin(), f->trace.end());
    s.grounded = s.grounded || f->grounded;
  }
  if (extra) {
    s.grounded = s.grounded || extra->grounded;
  }
  if (!rule.empty()) s.trace.push_back(std::move(rule));
  return s;
}

OptSide difference_side(const Side& a, const Side& b) try {
  std::vector<std::string> steps;
  Tracer t{&steps};
  const Natural v = difference(a.value, b.value, t);
  Side s = derive(v, "", {&a, &b}, &t);
  s.trace.insert(s.trace.end(), steps.begin(), steps.end());
  return s;
} catch (const Overflow&) {
  return std::nullopt;
}

OptSide meet_side(const Side& a, const Side& b) try {
  const Natural v = mul(mul(4, (a.value + 1) / 2), (b.value + 1) / 2);
  return derive(v,
                "R8/R5/R6: " + level_name(a.value) + " & " + level_name(b.value) +
                    " ⊆ join of G_{2,2} ⊆ " + level_name(v) + " (R7: G_{2,2} ⊆ BCFL_4)",
                {&a, &b});
} catch (const Overflow&) {
  return std::nullopt;
}

OptSide join_side(const Side& a, const Side& b) try {
  if (a.value == 1 && b.value == 1) return derive(1, "R4: BCFL | BCFL = BCFL", {&a, &b});
  const Natural v = add(even_up(a.value), even_up(b.value));
  return derive(v,
                "R8/R6: " + level_name(a.value) + " | " + level_name(b.value) + " ⊆ " +
                    level_name(v),
                {&a, &b});
} catch (const Overflow&) {
  return std::nullopt;
}

// e ⊆ BCFL_level and/or e ⊆ co-BCFL_co_level.
struct Bound {
  OptSide level;
  OptSide co_level;
};

Bound complement_of(const Bound& c) {
  Bound out;
  out.co_level = c.level;
  out.level = c.co_level;
  if (c.level && c.level->value % 2 == 1 && c.level->value >= 3 &&
      c.level->value < std::numeric_limits<Natural>::max()) {
    const Natural j = c.level->value;
    out.level = best(out.level,
                     derive(j + 1,
                            "R2: co-" + level_name(j) + " = " + level_name(j - 2) +
                                " | BCFL_2 ⊆ " + level_name(j + 1),
                            {&*c.level}));
  }
  return out;
}

Bound meet_of(const Bound& x, const Bound& y) {
  Bound out;
  if (x.level && y.level) out.level = meet_side(*x.level, *y.level);
  if (x.level && y.co_level) out.level = best(out.level, difference_side(*x.level, *y.co_level));
  if (x.co_level && y.level) out.level = best(out.level, difference_side(*y.level, *x.co_level));
  if (x.co_level && y.co_level) out.co_level = join_side(*x.co_level, *y.co_level);
  return out;
}

Bound join_of(const Bound& x, const Bound& y) {
  Bound out;
  if (x.level && y.level) out.level = join_side(*x.level, *y.level);
  if (x.co_level && y.co_level) out.co_level = meet_side(*x.co_level, *y.co_level);
  if (x.level && y.co_level) {
    out.co_level = best(out.co_level, difference_side(*y.co_level, *x.level));
  }
  if (x.co_level && y.level) {
    out.co_level = best(out.co_level, difference_side(*x.co_level, *y.level));
  }
  return out;
}

Bound evaluate(const ClassExpr& e) {
  using Op = ClassExpr::Op;
  switch (e.op()) {
    case Op::kAtom:
      return {Side{e.level(), {}, false}, std::nullopt};
    case Op::kCo:
      return complement_of(evaluate(e.children()[0]));
    case Op::kAnd:
      return meet_of(evaluate(e.children()[0]), evaluate(e.children()[1]));
    case Op::kOr:
      return join_of(evaluate(e.children()[0]), evaluate(e.children()[1]));
    case Op::kMinus:
      // A - B = A & co(B).
      return meet_of(evaluate(e.children()[0]),
                     complement_of(evaluate(e.children()[1])));
  }
  return {};
}

}  // namespace

ClassExpr parse_class_expr(std::string_view text) { return Parser(text).parse(); }

LevelReport level_bound(const ClassExpr& e) {
  const Bound b = evaluate(e);
  LevelReport report;
  if (b.co_level) report.co_level = b.co_level->value;
  if (b.level) {
    report.trace = b.level->trace;
    report.grounded = b.level->grounded;
    const Natural v = b.level->value;
    if (v % 2) report.trace.push_back("R8: " + level_name(v) + " ⊆ " + level_name(v + 1));
    report.level = even_up(v);
  }
  return report;
}

Natural difference_bound(Natural i, Natural j) {
  if (i == 0 || j == 0) {
    throw Error(ErrorKind::kIllFormed, "difference_bound needs i, j >= 1");
  }
  try {
    Tracer t;
    return difference(i, j, t);
  } catch (const Overflow&) {
    throw Error(ErrorKind::kNoBoundDerived, "difference bound for F_{" + std::to_string(i) +
                                                "," + std::to_string(j) +
                                                "} exceeds 64 bits");
  }
}

ClassExpr normalize(const ClassExpr& e) {
  const LevelReport report = level_bound(e);
  if (!report.level) {
    throw Error(ErrorKind::kNoBoundDerived,
                "no BCFL level bound derivable for " + e.to_string());
  }
  if (*report.level / 2 > kMaxNormalFormAtoms) {
    throw Error(ErrorKind::kInvalidArgument,
                "normal form of " + e.to_string() + " needs " +
                    std::to_string(*report.level / 2) + " atoms (limit " +
                    std::to_string(kMaxNormalFormAtoms) + ")");
  }
  ClassExpr out = ClassExpr::atom(2);
  for (Natural i = 1; i < *report.level / 2; ++i) {
    out = ClassExpr::join(std::move(out), ClassExpr::atom(2));
  }
  return out;
}

ClassExpr expand_even_level(const ClassExpr& e) {
  if (e.op() != ClassExpr::Op::kAtom || e.level() % 2 || e.level() < 4) return e;
  return ClassExpr::join(ClassExpr::atom(e.level() - 2), ClassExpr::atom(2));
}

}  // namespace regdissect
