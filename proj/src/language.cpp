#include "regdissect/language.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_map>

#include "regdissect/errors.hpp"

namespace regdissect {

std::string_view to_string(LanguageKind kind) {
  switch (kind) {
    case LanguageKind::kGrammar: return "grammar";
    case LanguageKind::kBuiltin: return "builtin";
    case LanguageKind::kDfa: return "dfa";
    case LanguageKind::kIntersection: return "intersection";
    case LanguageKind::kUnion: return "union";
    case LanguageKind::kDifference: return "difference";
    case LanguageKind::kReversal: return "reversal";
  }
  return "unknown";
}

namespace {

bool shortlex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::string sorted_symbols(std::string_view s) {
  std::set<char> symbols(s.begin(), s.end());
  return {symbols.begin(), symbols.end()};
}

// Applies per-length and total caps to a shortlex-sorted, duplicate-free list.
Enumeration apply_limits(std::vector<std::string> sorted, bool truncated,
                         const EnumerationLimits& limits) {
  Enumeration out;
  out.truncated = truncated;
  std::size_t run = 0;
  std::size_t run_length = ~std::size_t{0};
  for (auto& s : sorted) {
    if (s.size() != run_length) {
      run_length = s.size();
      run = 0;
    }
    if (run >= limits.max_per_length || out.members.size() >= limits.max_total) {
      out.truncated = true;
      continue;
    }
    ++run;
    out.members.push_back(std::move(s));
  }
  return out;
}

LengthBits census(const Enumeration& e, Natural max_length) {
  LengthBits bits(max_length + 1);
  for (const auto& s : e.members) {
    if (s.size() <= max_length) bits.set(s.size());
  }
  return bits;
}

std::vector<Natural> factorials_up_to(Natural bound) {
  std::vector<Natural> out;
  Natural f = 1;
  for (Natural n = 1; f <= bound; ++n) {
    if (out.empty() || out.back() != f) out.push_back(f);
    if (f > bound / (n + 1)) break;
    f *= n + 1;
  }
  return out;
}

bool is_factorial(Natural m) {
  if (m == 0) return false;
  Natural f = 1;
  for (Natural n = 2; f < m; ++n) f *= n;
  return f == m;
}

bool all_equal_to(std::string_view s, char c) {
  return std::all_of(s.begin(), s.end(), [c](char x) { return x == c; });
}

// 0^m 1^m (first = '0') or 1^m 0^m.
bool is_block_pair(std::string_view x, char first, char second) {
  if (x.size() % 2) return false;
  const std::size_t m = x.size() / 2;
  return all_equal_to(x.substr(0, m), first) && all_equal_to(x.substr(m), second);
}

}  // namespace

namespace detail {

class LanguageNode {
 public:
  LanguageNode(std::string id, LanguageKind kind, std::string alphabet)
      : id_(std::move(id)), kind_(kind), alphabet_(std::move(alphabet)) {}
  virtual ~LanguageNode() = default;

  const std::string& id() const { return id_; }
  LanguageKind kind() const { return kind_; }
  const std::string& alphabet() const { return alphabet_; }

  virtual bool contains(std::string_view x) const = 0;
  virtual Enumeration enumerate(Natural n, const EnumerationLimits& l) const = 0;
  virtual LengthBits spectrum(Natural n, const EnumerationLimits& l) const {
    return census(enumerate(n, l), n);
  }
  virtual std::string describe() const { return id_; }
  virtual std::vector<LanguageHandle> operands() const { return {}; }
  virtual const Dfa* dfa() const { return nullptr; }
  virtual const ContextFreeGrammar* grammar() const { return nullptr; }

 protected:
  bool over_alphabet(std::string_view x) const {
    return std::all_of(x.begin(), x.end(), [&](char c) {
      return alphabet_.find(c) != std::string::npos;
    });
  }

 private:
  std::string id_;
  LanguageKind kind_;
  std::string alphabet_;
};

}  // namespace detail

namespace {

using detail::LanguageNode;

class GrammarNode final : public LanguageNode {
 public:
  GrammarNode(std::string id, ContextFreeGrammar g)
      : LanguageNode(std::move(id), LanguageKind::kGrammar, g.terminals()),
        grammar_(std::move(g)) {}

  // Composite checks ask about the same strings repeatedly, so answers are
  // memoized; the cache is dropped wholesale when it gets large.
  bool contains(std::string_view x) const override {
    if (!over_alphabet(x)) return false;
    std::string key(x);
    {
      const std::lock_guard lock(cache_mutex_);
      const auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    const bool in = member(grammar_, x);
    const std::lock_guard lock(cache_mutex_);
    if (cache_.size() >= kCacheLimit) cache_.clear();
    cache_.emplace(std::move(key), in);
    return in;
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    return regdissect::enumerate(grammar_, n, l);
  }
  LengthBits spectrum(Natural n, const EnumerationLimits&) const override {
    return length_spectrum(grammar_, n);
  }
  std::string describe() const override { return "grammar:" + id(); }
  const ContextFreeGrammar* grammar() const override { return &grammar_; }

 private:
  static constexpr std::size_t kCacheLimit = 1 << 20;

  ContextFreeGrammar grammar_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, bool> cache_;
};

class DfaNode final : public LanguageNode {
 public:
  DfaNode(std::string id, Dfa d)
      : LanguageNode(std::move(id), LanguageKind::kDfa,
                     sorted_symbols(d.alphabet())),
        dfa_(std::move(d)) {}

  bool contains(std::string_view x) const override { return dfa_.accepts(x); }

  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    const std::size_t states = dfa_.num_states();
    const std::string& symbols = alphabet();
    std::vector<std::size_t> index(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      index[i] = dfa_.alphabet().find(symbols[i]);
    }
    // live[k][s]: some word of length exactly k leads from s to acceptance.
    std::vector<std::vector<bool>> live(n + 1, std::vector<bool>(states));
    for (State s = 0; s < states; ++s) live[0][s] = dfa_.accepting()[s];
    for (Natural k = 1; k <= n; ++k) {
      for (State s = 0; s < states; ++s) {
        for (std::size_t i : index) {
          if (live[k - 1][dfa_.next(s, i)]) {
            live[k][s] = true;
            break;
          }
        }
      }
    }
    Enumeration out;
    std::string word;
    std::size_t found = 0;
    auto walk = [&](auto&& self, State s, Natural remaining) -> bool {
      if (remaining == 0) {
        if (found == l.max_per_length || out.members.size() >= l.max_total) {
          out.truncated = true;
          return false;
        }
        ++found;
        out.members.push_back(word);
        return true;
      }
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        const State t = dfa_.next(s, index[i]);
        if (!live[remaining - 1][t]) continue;
        word.push_back(symbols[i]);
        const bool more = self(self, t, remaining - 1);
        word.pop_back();
        if (!more) return false;
      }
      return true;
    };
    for (Natural len = 0; len <= n; ++len) {
      if (!live[len][dfa_.start()]) continue;
      found = 0;
      walk(walk, dfa_.start(), len);
      if (out.members.size() >= l.max_total) break;
    }
    return out;
  }
  LengthBits spectrum(Natural n, const EnumerationLimits&) const override {
    return length_spectrum(dfa_, n);
  }
  std::string describe() const override { return "dfa:" + id(); }
  const Dfa* dfa() const override { return &dfa_; }

 private:
  Dfa dfa_;
};

// Sparse languages given by a membership predicate and a generator listing
// all members up to a bound.
class BuiltinNode final : public LanguageNode {
 public:
  using Generator = std::function<std::vector<std::string>(Natural)>;
  using Predicate = std::function<bool(std::string_view)>;

  BuiltinNode(std::string id, std::string alphabet, Predicate contains,
              Generator generate)
      : LanguageNode(std::move(id), LanguageKind::kBuiltin, std::move(alphabet)),
        contains_(std::move(contains)),
        generate_(std::move(generate)) {}

  bool contains(std::string_view x) const override {
    return over_alphabet(x) && contains_(x);
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    return apply_limits(all_members(n), false, l);
  }
  LengthBits spectrum(Natural n, const EnumerationLimits&) const override {
    LengthBits bits(n + 1);
    for (const auto& s : all_members(n)) bits.set(s.size());
    return bits;
  }
  std::string describe() const override { return "builtin:" + id(); }

 private:
  std::vector<std::string> all_members(Natural n) const {
    std::vector<std::string> members = generate_(n);
    std::sort(members.begin(), members.end(), shortlex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
  }

  Predicate contains_;
  Generator generate_;
};

std::vector<std::string> block_pairs(Natural n, char first, char second,
                                     const std::vector<Natural>& halves) {
  std::vector<std::string> out;
  for (Natural m : halves) {
    if (2 * m > n) break;
    out.push_back(std::string(m, first) + std::string(m, second));
  }
  return out;
}

std::shared_ptr<const LanguageNode> make_builtin(std::string_view name) {
  if (name == "factorial_unary") {
    return std::make_shared<BuiltinNode>(
        "factorial_unary", "0",
        [](std::string_view x) { return is_factorial(x.size()); },
        [](Natural n) {
          std::vector<std::string> out;
          for (Natural m : factorials_up_to(n)) out.emplace_back(m, '0');
          return out;
        });
  }
  if (name == "factorial_words") {
    return std::make_shared<BuiltinNode>(
        "factorial_words", "ab",
        [](std::string_view x) {
          if (x.size() % 2 || !is_factorial(x.size() / 2)) return false;
          for (std::size_t i = 2; i < x.size(); ++i) {
            if (x[i] != x[i - 2]) return false;
          }
          return true;
        },
        [](Natural n) {
          std::vector<std::string> out;
          for (Natural m : factorials_up_to(n / 2)) {
            for (std::string_view w : {"aa", "ab", "ba", "bb"}) {
              std::string s;
              for (Natural i = 0; i < m; ++i) s += w;
              out.push_back(std::move(s));
            }
          }
          return out;
        });
  }
  if (name == "ab_power") {
    // (a b^n)^n for n >= 0; n = 0 gives the empty word.
    return std::make_shared<BuiltinNode>(
        "ab_power", "ab",
        [](std::string_view x) {
          const auto n = static_cast<std::size_t>(std::count(x.begin(), x.end(), 'a'));
          if (x.size() != n * (n + 1)) return false;
          for (std::size_t i = 0; i < x.size(); ++i) {
            if ((x[i] == 'a') != (i % (n + 1) == 0)) return false;
          }
          return true;
        },
        [](Natural n) {
          std::vector<std::string> out;
          for (Natural k = 0; k * (k + 1) <= n; ++k) {
            const std::string block = "a" + std::string(k, 'b');
            std::string s;
            for (Natural i = 0; i < k; ++i) s += block;
            out.push_back(std::move(s));
          }
          return out;
        });
  }
  if (name == "semilin2_counterexample") {
    return std::make_shared<BuiltinNode>(
        "semilin2_counterexample", "01",
        [](std::string_view x) {
          return is_block_pair(x, '0', '1') && is_factorial(x.size() / 2);
        },
        [](Natural n) { return block_pairs(n, '0', '1', factorials_up_to(n / 2)); });
  }
  if (name == "l2_union") {
    // {1^n 0^n : n >= 0} ∪ {0^{n!} 1^{n!}}.
    return std::make_shared<BuiltinNode>(
        "l2_union", "01",
        [](std::string_view x) {
          return is_block_pair(x, '1', '0') ||
                 (is_block_pair(x, '0', '1') && is_factorial(x.size() / 2));
        },
        [](Natural n) {
          std::vector<Natural> all(n / 2 + 1);
          for (Natural m = 0; m <= n / 2; ++m) all[m] = m;
          auto out = block_pairs(n, '1', '0', all);
          auto extra = block_pairs(n, '0', '1', factorials_up_to(n / 2));
          out.insert(out.end(), extra.begin(), extra.end());
          return out;
        });
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown builtin language '" + std::string(name) + "'");
}

class RestrictNode final : public LanguageNode {
 public:
  RestrictNode(LanguageHandle h, Dfa d)
      : LanguageNode("(" + h.describe() + " & dfa)", LanguageKind::kIntersection,
                     h.alphabet()),
        inner_(std::move(h)),
        dfa_(std::move(d)) {}

  bool contains(std::string_view x) const override {
    return inner_.contains(x) && dfa_.accepts(x);
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    Enumeration e = inner_.enumerate(n, l);
    std::erase_if(e.members, [&](const std::string& s) { return !dfa_.accepts(s); });
    return e;
  }
  std::vector<LanguageHandle> operands() const override { return {inner_}; }
  const Dfa* dfa() const override { return &dfa_; }

 private:
  LanguageHandle inner_;
  Dfa dfa_;
};

class UnionNode final : public LanguageNode {
 public:
  UnionNode(LanguageHandle a, LanguageHandle b)
      : LanguageNode("(" + a.describe() + " | " + b.describe() + ")",
                     LanguageKind::kUnion,
                     sorted_symbols(a.alphabet() + b.alphabet())),
        a_(std::move(a)),
        b_(std::move(b)) {}

  bool contains(std::string_view x) const override {
    return a_.contains(x) || b_.contains(x);
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    Enumeration ea = a_.enumerate(n, l);
    Enumeration eb = b_.enumerate(n, l);
    std::vector<std::string> merged;
    std::set_union(ea.members.begin(), ea.members.end(), eb.members.begin(),
                   eb.members.end(), std::back_inserter(merged), shortlex_less);
    return apply_limits(std::move(merged), ea.truncated || eb.truncated, l);
  }
  std::vector<LanguageHandle> operands() const override { return {a_, b_}; }

 private:
  LanguageHandle a_;
  LanguageHandle b_;
};

class DifferenceNode final : public LanguageNode {
 public:
  DifferenceNode(LanguageHandle a, LanguageHandle b)
      : LanguageNode("(" + a.describe() + " - " + b.describe() + ")",
                     LanguageKind::kDifference, a.alphabet()),
        a_(std::move(a)),
        b_(std::move(b)) {}

  bool contains(std::string_view x) const override {
    return a_.contains(x) && !b_.contains(x);
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    Enumeration e = a_.enumerate(n, l);
    std::erase_if(e.members, [&](const std::string& s) { return b_.contains(s); });
    return e;
  }
  std::vector<LanguageHandle> operands() const override { return {a_, b_}; }

 private:
  LanguageHandle a_;
  LanguageHandle b_;
};

class ReverseNode final : public LanguageNode {
 public:
  explicit ReverseNode(LanguageHandle h)
      : LanguageNode("rev(" + h.describe() + ")", LanguageKind::kReversal,
                     h.alphabet()),
        inner_(std::move(h)) {}

  bool contains(std::string_view x) const override {
    return inner_.contains(std::string(x.rbegin(), x.rend()));
  }
  Enumeration enumerate(Natural n, const EnumerationLimits& l) const override {
    Enumeration e = inner_.enumerate(n, l);
    for (auto& s : e.members) std::reverse(s.begin(), s.end());
    std::sort(e.members.begin(), e.members.end(), shortlex_less);
    return e;
  }
  LengthBits spectrum(Natural n, const EnumerationLimits& l) const override {
    return inner_.length_spectrum(n, l);
  }
  std::vector<LanguageHandle> operands() const override { return {inner_}; }

 private:
  LanguageHandle inner_;
};

}  // namespace

LanguageHandle LanguageHandle::from_grammar(std::string id, ContextFreeGrammar g) {
  return LanguageHandle(std::make_shared<GrammarNode>(std::move(id), std::move(g)));
}

LanguageHandle LanguageHandle::from_dfa(std::string id, Dfa dfa) {
  return LanguageHandle(std::make_shared<DfaNode>(std::move(id), std::move(dfa)));
}

LanguageHandle LanguageHandle::builtin(std::string_view name) {
  return LanguageHandle(make_builtin(name));
}

const std::vector<std::string>& LanguageHandle::builtin_names() {
  static const std::vector<std::string> names{
      "factorial_unary", "factorial_words", "ab_power",
      "semilin2_counterexample", "l2_union"};
  return names;
}

const std::string& LanguageHandle::id() const { return node_->id(); }
LanguageKind LanguageHandle::kind() const { return node_->kind(); }
const std::string& LanguageHandle::alphabet() const { return node_->alphabet(); }
bool LanguageHandle::contains(std::string_view x) const { return node_->contains(x); }

Enumeration LanguageHandle::enumerate(Natural max_length,
                                      const EnumerationLimits& limits) const {
  return node_->enumerate(max_length, limits);
}

LengthBits LanguageHandle::length_spectrum(Natural max_length,
                                           const EnumerationLimits& limits) const {
  return node_->spectrum(max_length, limits);
}

std::string LanguageHandle::describe() const { return node_->describe(); }
std::vector<LanguageHandle> LanguageHandle::operands() const { return node_->operands(); }
const Dfa* LanguageHandle::dfa() const { return node_->dfa(); }
const ContextFreeGrammar* LanguageHandle::grammar() const { return node_->grammar(); }

LanguageHandle restrict_to(const LanguageHandle& h, const Dfa& dfa) {
  for (char c : h.alphabet()) {
    if (dfa.alphabet().find(c) == std::string::npos) {
      throw Error(ErrorKind::kAlphabetMismatch,
                  "automaton alphabet \"" + dfa.alphabet() +
                      "\" does not cover \"" + h.alphabet() + "\"");
    }
  }
  return LanguageHandle(std::make_shared<RestrictNode>(h, dfa));
}

LanguageHandle unite(const LanguageHandle& a, const LanguageHandle& b) {
  return LanguageHandle(std::make_shared<UnionNode>(a, b));
}

LanguageHandle subtract(const LanguageHandle& a, const LanguageHandle& b) {
  return LanguageHandle(std::make_shared<DifferenceNode>(a, b));
}

LanguageHandle reverse(const LanguageHandle& h) {
  return LanguageHandle(std::make_shared<ReverseNode>(h));
}

ConstantGrowthVerdict check_constant_growth(const LanguageHandle& h,
                                            const ConstantGrowthWitness& w,
                                            Natural max_length) {
  if (w.p == 0 || w.constants.empty() ||
      std::find(w.constants.begin(), w.constants.end(), 0) != w.constants.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "constant-growth witness needs p > 0 and a nonempty K of positive constants");
  }
  if (max_length < w.p) {
    throw Error(ErrorKind::kInvalidArgument, "N must be at least p");
  }
  const LengthBits lengths = h.length_spectrum(max_length);
  ConstantGrowthVerdict verdict{true, std::nullopt};
  for (Natural n = w.p; n <= max_length; ++n) {
    if (!lengths[n]) continue;
    const bool ok = std::any_of(w.constants.begin(), w.constants.end(),
                                [&](Natural c) { return c <= n && lengths[n - c]; });
    if (!ok) {
      verdict.holds = false;
      verdict.first_violation = n;
      break;
    }
  }
  return verdict;
}

}  // namespace regdissect
