#include "regdissect/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "regdissect/errors.hpp"

namespace regdissect {

namespace detail {

// Chomsky-style normal form: A -> B C and A -> c only, plus a flag for the
// empty word. Terminal symbols are encoded as negative codes.
struct NormalForm {
  struct Rule {
    std::size_t lhs = 0;
    int rhs[2] = {0, 0};
    std::size_t size = 0;
  };

  std::size_t num_nonterminals = 0;
  std::size_t start = 0;
  bool accepts_empty = false;
  std::vector<Rule> rules;
  std::vector<std::vector<std::size_t>> rules_by_lhs;
};

}  // namespace detail

namespace {

using detail::NormalForm;
using Body = std::vector<int>;

constexpr std::string_view kEpsilon = "\xCE\xB5";  // ε

int encode(const GrammarSymbol& s) {
  return s.terminal ? -1 - static_cast<int>(static_cast<unsigned char>(s.character))
                    : static_cast<int>(s.nonterminal);
}

bool is_terminal_code(int code) { return code < 0; }
char terminal_of(int code) { return static_cast<char>(-1 - code); }

std::vector<bool> nullable_set(std::size_t n,
                               const std::vector<std::pair<std::size_t, Body>>& prods) {
  std::vector<bool> nullable(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, body] : prods) {
      if (nullable[lhs]) continue;
      const bool all = std::all_of(body.begin(), body.end(), [&](int c) {
        return !is_terminal_code(c) && nullable[c];
      });
      if (all) {
        nullable[lhs] = true;
        changed = true;
      }
    }
  }
  return nullable;
}

std::shared_ptr<const NormalForm> build_normal_form(const ContextFreeGrammar& g) {
  const std::size_t original = g.nonterminals().size();
  std::vector<std::pair<std::size_t, Body>> prods;
  for (const auto& p : g.productions()) {
    Body body;
    for (const auto& s : p.body) body.push_back(encode(s));
    prods.emplace_back(p.lhs, std::move(body));
  }
  const std::vector<bool> nullable = nullable_set(original, prods);

  auto nf = std::make_shared<NormalForm>();
  nf->accepts_empty = nullable[g.start()];
  std::size_t next_id = original;
  const std::size_t start = next_id++;
  prods.emplace_back(start, Body{static_cast<int>(g.start())});

  // Drop ε: every combination of omitted nullable occurrences.
  std::set<std::pair<std::size_t, Body>> eps_free;
  for (const auto& [lhs, body] : prods) {
    std::vector<std::size_t> optional_positions;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (!is_terminal_code(body[i]) && nullable[body[i]]) {
        optional_positions.push_back(i);
      }
    }
    if (optional_positions.size() > 20) {
      throw Error(ErrorKind::kInvalidArgument,
                  "rule body has too many nullable symbols");
    }
    const std::size_t combos = std::size_t{1} << optional_positions.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Body variant;
      std::size_t next_optional = 0;
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (next_optional < optional_positions.size() &&
            optional_positions[next_optional] == i) {
          const bool drop = (mask >> next_optional) & 1U;
          ++next_optional;
          if (drop) continue;
        }
        variant.push_back(body[i]);
      }
      if (!variant.empty()) eps_free.emplace(lhs, std::move(variant));
    }
  }

  // Unit elimination through the unit-derivation closure.
  const std::size_t n = next_id;
  std::vector<std::vector<std::size_t>> unit_edges(n);
  for (const auto& [lhs, body] : eps_free) {
    if (body.size() == 1 && !is_terminal_code(body[0])) {
      unit_edges[lhs].push_back(static_cast<std::size_t>(body[0]));
    }
  }
  std::set<std::pair<std::size_t, Body>> unit_free;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      const std::size_t b = stack.back();
      stack.pop_back();
      for (std::size_t c : unit_edges[b]) {
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    for (const auto& [lhs, body] : eps_free) {
      if (!seen[lhs]) continue;
      if (body.size() == 1 && !is_terminal_code(body[0])) continue;
      unit_free.emplace(a, body);
    }
  }

  // Terminals inside long bodies get their own nonterminal, then long
  // bodies are split into binary chains.
  std::map<char, std::size_t> terminal_nt;
  std::vector<NormalForm::Rule> rules;
  auto terminal_rule = [&](char c) {
    auto [it, inserted] = terminal_nt.try_emplace(c, next_id);
    if (inserted) {
      ++next_id;
      NormalForm::Rule r;
      r.lhs = it->second;
      r.rhs[0] = -1 - static_cast<int>(static_cast<unsigned char>(c));
      r.size = 1;
      rules.push_back(r);
    }
    return static_cast<int>(it->second);
  };
  for (const auto& [lhs, body] : unit_free) {
    if (body.size() == 1) {
      NormalForm::Rule r;
      r.lhs = lhs;
      r.rhs[0] = body[0];
      r.size = 1;
      rules.push_back(r);
      continue;
    }
    Body lifted = body;
    for (int& c : lifted) {
      if (is_terminal_code(c)) c = terminal_rule(terminal_of(c));
    }
    std::size_t current = lhs;
    for (std::size_t i = 0; i + 2 < lifted.size(); ++i) {
      const std::size_t fresh = next_id++;
      rules.push_back({current, {lifted[i], static_cast<int>(fresh)}, 2});
      current = fresh;
    }
    rules.push_back(
        {current, {lifted[lifted.size() - 2], lifted.back()}, 2});
  }

  nf->num_nonterminals = next_id;
  nf->start = start;
  nf->rules = std::move(rules);
  nf->rules_by_lhs.assign(next_id, {});
  for (std::size_t i = 0; i < nf->rules.size(); ++i) {
    nf->rules_by_lhs[nf->rules[i].lhs].push_back(i);
  }
  return nf;
}

bool is_nonterminal_name(std::string_view token) {
  if (token.empty() || !std::isupper(static_cast<unsigned char>(token[0]))) {
    return false;
  }
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ContextFreeGrammar::ContextFreeGrammar(std::vector<std::string> nonterminals,
                                       std::vector<Production> productions,
                                       std::size_t start,
                                       std::vector<std::string> removed)
    : nonterminals_(std::move(nonterminals)),
      productions_(std::move(productions)),
      start_(start),
      removed_(std::move(removed)) {
  if (start_ >= nonterminals_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "start symbol out of range");
  }
  std::set<char> terminals;
  for (const auto& p : productions_) {
    if (p.lhs >= nonterminals_.size()) {
      throw Error(ErrorKind::kUndefinedSymbol, "production lhs out of range");
    }
    for (const auto& s : p.body) {
      if (s.terminal) {
        terminals.insert(s.character);
      } else if (s.nonterminal >= nonterminals_.size()) {
        throw Error(ErrorKind::kUndefinedSymbol,
                    "production body refers to an undeclared nonterminal");
      }
    }
  }
  terminals_.assign(terminals.begin(), terminals.end());
  normal_form_ = build_normal_form(*this);
}

std::string ContextFreeGrammar::to_text() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < nonterminals_.size(); ++a) {
    bool first = true;
    for (const auto& p : productions_) {
      if (p.lhs != a) continue;
      os << (first ? nonterminals_[a] + " -> " : std::string(" | "));
      first = false;
      if (p.body.empty()) os << kEpsilon;
      for (std::size_t i = 0; i < p.body.size(); ++i) {
        if (i) os << ' ';
        const auto& s = p.body[i];
        if (s.terminal) {
          os << s.character;
        } else {
          os << nonterminals_[s.nonterminal];
        }
      }
    }
    if (!first) os << '\n';
  }
  return os.str();
}

ContextFreeGrammar parse_grammar(std::string_view text) {
  struct RawRule {
    std::string lhs;
    std::vector<std::string> body;
    std::size_t line;
  };
  std::vector<RawRule> raw;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw SyntaxError(line_no, "expected 'Nonterminal -> body'");
    }
    const std::string lhs(trim(line.substr(0, arrow)));
    if (!is_nonterminal_name(lhs)) {
      throw SyntaxError(line_no, "left-hand side '" + lhs +
                                     "' is not a nonterminal name");
    }
    if (index.try_emplace(lhs, names.size()).second) names.push_back(lhs);

    std::string_view rest = line.substr(arrow + 2);
    while (true) {
      const auto bar = rest.find('|');
      const auto alt = trim(rest.substr(0, bar));
      auto tokens = split_whitespace(alt);
      if (tokens.empty()) {
        throw SyntaxError(line_no, "empty alternative (write ε for the empty body)");
      }
      if (tokens.size() == 1 && tokens[0] == kEpsilon) tokens.clear();
      for (const auto& t : tokens) {
        if (t == kEpsilon) {
          throw SyntaxError(line_no, "ε must be the whole alternative");
        }
        if (!is_nonterminal_name(t) && t.size() != 1) {
          throw SyntaxError(line_no, "terminal '" + t +
                                         "' must be a single character");
        }
      }
      raw.push_back({lhs, std::move(tokens), line_no});
      if (bar == std::string_view::npos) break;
      rest = rest.substr(bar + 1);
    }
  }
  if (raw.empty()) throw SyntaxError(line_no, "grammar has no rules");

  std::vector<Production> productions;
  for (const auto& r : raw) {
    Production p;
    p.lhs = index.at(r.lhs);
    for (const auto& t : r.body) {
      GrammarSymbol s;
      if (is_nonterminal_name(t)) {
        const auto it = index.find(t);
        if (it == index.end()) {
          throw Error(ErrorKind::kUndefinedSymbol,
                      "line " + std::to_string(r.line) + ": nonterminal '" +
                          t + "' has no rule");
        }
        s.nonterminal = it->second;
      } else {
        s.terminal = true;
        s.character = t[0];
      }
      p.body.push_back(s);
    }
    productions.push_back(std::move(p));
  }

  // Productive nonterminals, then the ones reachable from the start.
  const std::size_t n = names.size();
  std::vector<bool> productive(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : productions) {
      if (productive[p.lhs]) continue;
      const bool ok = std::all_of(p.body.begin(), p.body.end(), [&](const auto& s) {
        return s.terminal || productive[s.nonterminal];
      });
      if (ok) productive[p.lhs] = changed = true;
    }
  }
  if (!productive[0]) {
    throw Error(ErrorKind::kEmptyLanguage,
                "start symbol '" + names[0] + "' derives no terminal string");
  }
  auto usable = [&](const Production& p) {
    return productive[p.lhs] &&
           std::all_of(p.body.begin(), p.body.end(), [&](const auto& s) {
             return s.terminal || productive[s.nonterminal];
           });
  };
  std::vector<bool> reachable(n, false);
  reachable[0] = true;
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : productions) {
      if (!reachable[p.lhs] || !usable(p)) continue;
      for (const auto& s : p.body) {
        if (!s.terminal && !reachable[s.nonterminal]) {
          reachable[s.nonterminal] = changed = true;
        }
      }
    }
  }

  std::vector<std::size_t> remap(n, n);
  std::vector<std::string> kept;
  std::vector<std::string> removed;
  for (std::size_t a = 0; a < n; ++a) {
    if (productive[a] && reachable[a]) {
      remap[a] = kept.size();
      kept.push_back(names[a]);
    } else {
      removed.push_back(names[a]);
    }
  }
  std::vector<Production> cleaned;
  for (auto& p : productions) {
    if (remap[p.lhs] == n || !usable(p)) continue;
    p.lhs = remap[p.lhs];
    for (auto& s : p.body) {
      if (!s.terminal) s.nonterminal = remap[s.nonterminal];
    }
    cleaned.push_back(std::move(p));
  }
  return ContextFreeGrammar(std::move(kept), std::move(cleaned), 0,
                            std::move(removed));
}

bool member(const ContextFreeGrammar& g, std::string_view w) {
  for (char c : w) {
    if (g.terminals().find(c) == std::string::npos) {
      throw Error(ErrorKind::kUnknownSymbol,
                  std::string("symbol '") + c + "' is not a terminal of the grammar");
    }
  }
  const NormalForm& nf = *g.normal_form_;
  if (w.empty()) return nf.accepts_empty;

  struct Item {
    std::uint32_t rule;
    std::uint32_t dot;
    std::uint32_t origin;
  };
  const std::size_t n = w.size();
  const std::size_t slots = nf.rules.size() * 3;
  const std::size_t nts = nf.num_nonterminals;
  std::vector<std::vector<Item>> sets(n + 1);
  // Dense bookkeeping: seen[at] is indexed by origin * slots + rule * 3 + dot,
  // waiting by origin * nts + nonterminal.
  std::vector<boost::dynamic_bitset<>> seen(n + 1);
  std::vector<std::vector<Item>> waiting((n + 1) * nts);
  boost::dynamic_bitset<> predicted((n + 1) * nts);

  auto add = [&](std::size_t at, Item item) {
    auto& bits = seen[at];
    if (bits.empty()) bits.resize((at + 1) * slots);
    const std::size_t key = item.origin * slots + item.rule * 3 + item.dot;
    if (bits.test_set(key)) return;
    sets[at].push_back(item);
  };
  auto predict = [&](std::size_t at, std::size_t nt) {
    if (predicted.test_set(at * nts + nt)) return;
    for (std::size_t r : nf.rules_by_lhs[nt]) {
      add(at, {static_cast<std::uint32_t>(r), 0, static_cast<std::uint32_t>(at)});
    }
  };

  predict(0, nf.start);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      const Item item = sets[i][j];
      const auto& rule = nf.rules[item.rule];
      if (item.dot == rule.size) {
        // Index, not reference: add() may grow this same list when i == origin.
        const auto& parents = waiting[item.origin * nts + rule.lhs];
        for (std::size_t p = 0; p < parents.size(); ++p) {
          const Item parent = parents[p];
          add(i, {parent.rule, parent.dot + 1, parent.origin});
        }
        continue;
      }
      const int next = rule.rhs[item.dot];
      if (is_terminal_code(next)) {
        if (i < n && w[i] == terminal_of(next)) {
          add(i + 1, {item.rule, item.dot + 1, item.origin});
        }
      } else {
        waiting[i * nts + static_cast<std::size_t>(next)].push_back(item);
        predict(i, static_cast<std::size_t>(next));
      }
    }
  }
  return std::any_of(sets[n].begin(), sets[n].end(), [&](const Item& item) {
    const auto& rule = nf.rules[item.rule];
    return item.origin == 0 && item.dot == rule.size && rule.lhs == nf.start;
  });
}

LengthBits length_spectrum(const ContextFreeGrammar& g, Natural max_length) {
  const std::size_t size = max_length + 1;
  std::vector<LengthBits> lengths(g.nonterminals().size(), LengthBits(size));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions()) {
      LengthBits acc(size);
      acc.set(0);
      for (const auto& s : p.body) {
        if (s.terminal) {
          acc <<= 1;
        } else {
          acc = truncated_minkowski(acc, lengths[s.nonterminal]);
        }
        if (acc.none()) break;
      }
      if (!acc.is_subset_of(lengths[p.lhs])) {
        lengths[p.lhs] |= acc;
        changed = true;
      }
    }
  }
  return lengths[g.start()];
}

Enumeration enumerate(const ContextFreeGrammar& g, Natural max_length,
                      const EnumerationLimits& limits) {
  const NormalForm& nf = *g.normal_form_;
  const std::size_t size = max_length + 1;
  const std::size_t cap = std::max<std::size_t>(1, limits.max_per_length);

  // Length sets per normal-form nonterminal prune impossible splits.
  std::vector<LengthBits> lengths(nf.num_nonterminals, LengthBits(size));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : nf.rules) {
      LengthBits acc(size);
      if (r.size == 1) {
        if (size > 1) acc.set(1);
      } else {
        acc = truncated_minkowski(lengths[r.rhs[0]], lengths[r.rhs[1]]);
      }
      if (!acc.is_subset_of(lengths[r.lhs])) {
        lengths[r.lhs] |= acc;
        changed = true;
      }
    }
  }

  struct Cell {
    std::vector<std::string> strings;
    bool truncated = false;
  };
  std::unordered_map<std::uint64_t, Cell> memo;
  auto generate = [&](auto&& self, std::size_t nt, std::size_t len) -> const Cell& {
    const std::uint64_t key = (static_cast<std::uint64_t>(nt) << 32) | len;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Cell cell;
    std::set<std::string> acc;
    if (lengths[nt][len]) {
      for (std::size_t ri : nf.rules_by_lhs[nt]) {
        if (cell.truncated) break;
        const auto& r = nf.rules[ri];
        if (r.size == 1) {
          if (len == 1) acc.insert(std::string(1, terminal_of(r.rhs[0])));
          continue;
        }
        const auto left_nt = static_cast<std::size_t>(r.rhs[0]);
        const auto right_nt = static_cast<std::size_t>(r.rhs[1]);
        for (std::size_t split = 1; split < len && !cell.truncated; ++split) {
          if (!lengths[left_nt][split] || !lengths[right_nt][len - split]) continue;
          // Copies: the recursive calls may rehash the memo.
          const Cell left = self(self, left_nt, split);
          const Cell right = self(self, right_nt, len - split);
          if (left.truncated || right.truncated) cell.truncated = true;
          for (const auto& l : left.strings) {
            for (const auto& rs : right.strings) {
              acc.insert(l + rs);
              if (acc.size() > cap) break;
            }
            if (acc.size() > cap) break;
          }
          if (acc.size() > cap) cell.truncated = true;
        }
      }
    }
    while (acc.size() > cap) acc.erase(std::prev(acc.end()));
    cell.strings.assign(acc.begin(), acc.end());
    return memo.emplace(key, std::move(cell)).first->second;
  };

  Enumeration out;
  if (nf.accepts_empty) out.members.emplace_back();
  for (std::size_t len = 1; len < size; ++len) {
    if (!lengths[nf.start][len]) continue;
    const Cell& cell = generate(generate, nf.start, len);
    if (cell.truncated) out.truncated = true;
    for (const auto& s : cell.strings) {
      if (out.members.size() >= limits.max_total) {
        out.truncated = true;
        return out;
      }
      out.members.push_back(s);
    }
  }
  return out;
}

InferredUpset infer_upset(const LengthBits& spectrum, Natural max_length) {
  if (max_length < 4) {
    throw Error(ErrorKind::kInvalidArgument,
                "spectrum inference needs N >= 4");
  }
  if (spectrum.size() != max_length + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "spectrum must cover lengths 0..N");
  }
  const Natural n = max_length;
  for (Natural q = 1; q <= n / 4; ++q) {
    // Smallest t with spectrum[m] == spectrum[m + q] for all m in [t, n - q].
    Natural t = 0;
    for (Natural m = n - q + 1; m-- > 0;) {
      if (spectrum[m] != spectrum[m + q]) {
        t = m + 1;
        break;
      }
    }
    if (t + 3 * q > n) continue;
    InferredUpset out;
    out.lengths = UltimatelyPeriodicSet::from_predicate(t, q, [&](Natural m) {
      return static_cast<bool>(spectrum[m]);
    });
    out.verified_to = n;
    out.confidence = "empirical: verified to " + std::to_string(n);
    return out;
  }
  throw Error(ErrorKind::kInferenceFailed,
              "no period q <= " + std::to_string(n / 4) +
                  " stabilizes the length spectrum up to " + std::to_string(n));
}

}  // namespace regdissect
