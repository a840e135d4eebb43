#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regdissect/upsets.hpp"

namespace regdissect {

/// Expression over Boolean-hierarchy classes of bounded context-free
/// languages: atoms BCFL_k (k >= 1, BCFL = BCFL_1) combined with
/// intersection (&), union (|), difference (-) and complement co(...).
class ClassExpr {
 public:
  enum class Op { kAtom, kAnd, kOr, kMinus, kCo };

  static ClassExpr atom(Natural level);
  static ClassExpr meet(ClassExpr a, ClassExpr b);
  static ClassExpr join(ClassExpr a, ClassExpr b);
  static ClassExpr minus(ClassExpr a, ClassExpr b);
  static ClassExpr co(ClassExpr a);

  Op op() const { return op_; }
  Natural level() const { return level_; }
  const std::vector<ClassExpr>& children() const { return children_; }

  std::string to_string() const;
  bool operator==(const ClassExpr&) const = default;

 private:
  ClassExpr(Op op, Natural level, std::vector<ClassExpr> children)
      : op_(op), level_(level), children_(std::move(children)) {}

  Op op_;
  Natural level_;
  std::vector<ClassExpr> children_;
};

/// `|` binds loosest; `&` and `-` are left-associative. Throws IllFormed.
ClassExpr parse_class_expr(std::string_view text);

struct LevelReport {
  /// Even 2l with e ⊆ BCFL_{2l}, when the rules give one.
  std::optional<Natural> level;
  /// Smallest j found with e ⊆ co-BCFL_j.
  std::optional<Natural> co_level;
  /// A difference recursion bottomed out at F_{0,j}, taken as level 0.
  bool grounded = false;
  /// Rules applied, innermost first.
  std::vector<std::string> trace;
};

LevelReport level_bound(const ClassExpr& e);

/// Upper bound on the level of BCFL_i - BCFL_j; always even.
Natural difference_bound(Natural i, Natural j);

/// Largest number of BCFL_2 atoms normalize will materialize.
inline constexpr Natural kMaxNormalFormAtoms = 1024;

/// Left-folded join of l copies of BCFL_2, where 2l = level_bound(e).
/// Throws NoBoundDerived, or InvalidArgument when l > kMaxNormalFormAtoms.
ClassExpr normalize(const ClassExpr& e);

/// One unfolding BCFL_{2k} -> BCFL_{2k-2} | BCFL_2 (k >= 2); other
/// expressions are returned unchanged.
ClassExpr expand_even_level(const ClassExpr& e);

}  // namespace regdissect
