// regdissect command-line tool: dissect, verify, separate, hierarchy,
// factorial and corpus listing. Exit codes: 0 success, 2 negative result
// (failure certificate, failed check), 1 bad input.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regdissect/corpus.hpp"
#include "regdissect/dissector.hpp"
#include "regdissect/hierarchy.hpp"
#include "regdissect/separation.hpp"
#include "regdissect/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace regdissect;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

struct RunConfig {
  Natural max_length = 400;
  std::size_t threshold = 20;
  double window = 0.25;
  Natural modulus_cap = 8;
  std::string out;
  std::string format = "human";

  void validate() const {
    if (max_length < 4 * threshold) {
      throw Error(ErrorKind::kInvalidArgument,
                  "--max-len must be at least 4 * --threshold");
    }
    if (!(window > 0.0 && window <= 0.5)) {
      throw Error(ErrorKind::kInvalidArgument, "--window must lie in (0, 1/2]");
    }
  }

  DissectionConfig dissection() const {
    DissectionConfig c;
    c.max_length = max_length;
    c.threshold = threshold;
    c.window_fraction = window;
    c.symbol_modulus_cap = modulus_cap;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Write to a sibling temporary, then rename over the target.
void write_atomically(const std::string& path, const std::string& text) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIoError, "cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw Error(ErrorKind::kIoError, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::kIoError, "cannot move output into '" + path + "': " + ec.message());
  }
}

LanguageHandle load_grammar(const std::string& path) {
  try {
    return LanguageHandle::from_grammar(fs::path(path).stem().string(),
                                        parse_grammar(read_file(path)));
  } catch (const SyntaxError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Dfa load_dfa(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kInvalidArgument, path + ": " + e.what());
  }
  return j.get<Dfa>();
}

// Language expressions: atoms grammar:PATH, builtin:NAME, corpus:NAME,
// dfa:PATH; binary | - & (left-associative, whitespace around operators);
// rev(...) and parentheses. The right side of & must be a dfa atom.
class SpecParser {
 public:
  explicit SpecParser(std::string text) : text_(std::move(text)) {}

  LanguageHandle parse() {
    Operand x = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (!x.handle) fail("a bare dfa atom is not a language expression here");
    return *x.handle;
  }

 private:
  struct Operand {
    std::optional<LanguageHandle> handle;
    std::optional<Dfa> dfa;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kSyntaxError, "language expression \"" + text_ + "\" at offset " +
                                             std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(std::string_view s) {
    skip();
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    pos_ += s.size();
    return true;
  }
  LanguageHandle as_language(Operand o) {
    if (o.handle) return *o.handle;
    return LanguageHandle::from_dfa("dfa", *o.dfa);
  }

  Operand expr() {
    Operand x = primary();
    while (true) {
      skip();
      if (pos_ >= text_.size()) return x;
      const char op = text_[pos_];
      if (op != '|' && op != '-' && op != '&') return x;
      ++pos_;
      Operand y = primary();
      if (op == '|') {
        x = {unite(as_language(x), as_language(y)), std::nullopt};
      } else if (op == '-') {
        x = {subtract(as_language(x), as_language(y)), std::nullopt};
      } else if (y.dfa) {
        x = {restrict_to(as_language(x), *y.dfa), std::nullopt};
      } else if (x.dfa) {
        x = {restrict_to(as_language(y), *x.dfa), std::nullopt};
      } else {
        fail("'&' needs a dfa: operand");
      }
    }
  }

  Operand primary() {
    if (eat("rev(")) {
      Operand x = expr();
      if (!eat(")")) fail("expected ')'");
      return {reverse(as_language(x)), std::nullopt};
    }
    if (eat("(")) {
      Operand x = expr();
      if (!eat(")")) fail("expected ')'");
      return x;
    }
    for (std::string_view kind : {"grammar:", "builtin:", "corpus:", "dfa:"}) {
      if (!eat(kind)) continue;
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ')') {
        ++pos_;
      }
      const std::string arg = text_.substr(begin, pos_ - begin);
      if (arg.empty()) fail("missing argument after " + std::string(kind));
      if (kind == "grammar:") return {load_grammar(arg), std::nullopt};
      if (kind == "builtin:") return {LanguageHandle::builtin(arg), std::nullopt};
      if (kind == "corpus:") return {corpus_language(arg), std::nullopt};
      return {std::nullopt, load_dfa(arg)};
    }
    fail("expected grammar:, builtin:, corpus:, dfa:, rev( or (");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

struct LanguageOptions {
  std::string grammar;
  std::string builtin;
  std::string expr;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("--grammar", grammar, "Grammar file");
    auto* b = cmd->add_option("--builtin", builtin, "Builtin language name");
    auto* e = cmd->add_option("--expr", expr, "Composite language expression");
    g->excludes(b)->excludes(e);
    b->excludes(e);
  }

  LanguageHandle resolve() const {
    if (!grammar.empty()) return load_grammar(grammar);
    if (!builtin.empty()) return LanguageHandle::builtin(builtin);
    if (!expr.empty()) return SpecParser(expr).parse();
    throw Error(ErrorKind::kInvalidArgument, "one of --grammar, --builtin, --expr is required");
  }
};

void add_run_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--max-len", rc.max_length, "Maximum string length N")->capture_default_str();
  cmd->add_option("--threshold", rc.threshold, "Per-side count threshold")->capture_default_str();
  cmd->add_option("--window", rc.window, "Growth window as a fraction of N")->capture_default_str();
  cmd->add_option("--modulus-cap", rc.modulus_cap, "Largest symbol-count modulus")
      ->capture_default_str();
  cmd->add_option("--out", rc.out, "Write the structured document here");
  cmd->add_option("--format", rc.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
}

void print_certificate(std::ostream& os, const DissectionCertificate& c) {
  os << "language:  " << c.language << '\n'
     << "strategy:  " << c.strategy << '\n'
     << "verdict:   " << to_string(c.verdict) << " (N=" << c.max_length
     << ", threshold=" << c.threshold << ", window from " << c.window_start << ")\n";
  if (c.witness) os << "witness:   " << to_string(*c.witness) << '\n';
  os << "  length   in C   out of C\n";
  for (const auto& p : c.checkpoints) {
    os << "  " << std::setw(6) << p.length << " " << std::setw(6) << p.inside << " "
       << std::setw(10) << p.outside << '\n';
  }
  for (const auto& n : c.notes) os << "note: " << n << '\n';
  if (!c.attempts.empty()) {
    os << c.attempts.size() << " earlier attempt(s):\n";
    for (const auto& a : c.attempts) {
      os << "  " << a.strategy << ": "
         << (a.notes.empty() ? std::string(to_string(a.verdict)) : a.notes.front()) << '\n';
    }
  }
}

// Emits `doc` per the run configuration, with `human` as the readable form.
void emit(const RunConfig& rc, const json& doc, const std::string& human) {
  if (!rc.out.empty()) write_atomically(rc.out, doc.dump(2) + "\n");
  if (rc.format == "structured") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << human;
  }
}

json run_document(const RunConfig& rc, const std::string& command) {
  return {{"command", command},
          {"config",
           {{"max_length", rc.max_length},
            {"threshold", rc.threshold},
            {"window_fraction", rc.window},
            {"symbol_modulus_cap", rc.modulus_cap}}}};
}

int cmd_dissect(const LanguageOptions& lang, const RunConfig& rc) {
  rc.validate();
  const LanguageHandle h = lang.resolve();
  const DissectionCertificate cert = dissect_auto(h, rc.dissection());
  json doc = run_document(rc, "dissect");
  doc["certificate"] = cert;
  std::ostringstream os;
  print_certificate(os, cert);
  emit(rc, doc, os.str());
  return cert.verified() ? kOk : kNegative;
}

int cmd_verify(const LanguageOptions& lang, const std::string& dfa_path,
               const std::string& certificate_path, const RunConfig& rc) {
  const LanguageHandle h = lang.resolve();
  json doc = run_document(rc, "verify");
  std::ostringstream os;
  if (!certificate_path.empty()) {
    json stored = json::parse(read_file(certificate_path));
    if (stored.contains("certificate")) stored = stored["certificate"];
    const auto original = stored.get<DissectionCertificate>();
    if (!original.witness) {
      throw Error(ErrorKind::kInvalidArgument, "certificate carries no witness to re-verify");
    }
    DissectionConfig config;
    config.max_length = original.max_length;
    config.threshold = original.threshold;
    config.window_fraction = original.window_fraction;
    DissectionCertificate again = verify_dissection(h, *original.witness, config);
    const bool same = again.checkpoints == original.checkpoints &&
                      again.verdict == original.verdict &&
                      again.truncated == original.truncated;
    doc["certificate"] = again;
    doc["matches_stored"] = same;
    print_certificate(os, again);
    os << (same ? "matches the stored certificate\n" : "DIFFERS from the stored certificate\n");
    emit(rc, doc, os.str());
    return same && again.verified() ? kOk : kNegative;
  }
  if (dfa_path.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "verify needs --dfa or --certificate");
  }
  rc.validate();
  const DissectionCertificate cert = verify_dissection(h, load_dfa(dfa_path), rc.dissection());
  doc["certificate"] = cert;
  print_certificate(os, cert);
  emit(rc, doc, os.str());
  return cert.verified() ? kOk : kNegative;
}

int cmd_separate(const std::string& cover, const std::string& inner, const RunConfig& rc) {
  rc.validate();
  const CoveringPair pair{SpecParser(cover).parse(), SpecParser(inner).parse()};
  json doc = run_document(rc, "separate");
  doc["cover"] = pair.cover.describe();
  doc["inner"] = pair.inner.describe();
  std::ostringstream os;
  os << "cover A: " << pair.cover.describe() << "\ninner B: " << pair.inner.describe() << '\n';
  try {
    const SeparationReport report = iseparate(pair, rc.dissection());
    doc["report"] = report;
    const bool ok = report.separation.holds(rc.threshold);
    os << "separator E: " << report.separator.describe() << '\n'
       << "B ⊆ E: " << (report.separation.inner_in_separator ? "yes" : "no")
       << ", E ⊆ A: " << (report.separation.separator_in_cover ? "yes" : "no") << '\n'
       << "|A - E| = " << report.separation.cover_margin
       << ", |E - B| = " << report.separation.separator_margin << " (up to length "
       << rc.max_length << ")\n"
       << (ok ? "i-separation verified at N\n" : "i-separation NOT verified\n") << '\n';
    print_certificate(os, report.margin_certificate);
    emit(rc, doc, os.str());
    return ok ? kOk : kNegative;
  } catch (const StrategyFailedError& e) {
    doc["error"] = e.what();
    doc["margin_certificate"] = e.certificate();
    os << e.what() << '\n';
    print_certificate(os, e.certificate());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCoverCheckFailed) throw;
    doc["error"] = e.what();
    os << e.what() << '\n';
  }
  emit(rc, doc, os.str());
  return kNegative;
}

int cmd_hierarchy(const std::string& text, const RunConfig& rc) {
  const ClassExpr e = parse_class_expr(text);
  const LevelReport report = level_bound(e);
  json doc = {{"command", "hierarchy"}, {"expression", e.to_string()}, {"report", report}};
  std::ostringstream os;
  os << "expression: " << e.to_string() << '\n';
  if (!report.level) {
    os << "no bound derived\n";
    doc["normal_form"] = nullptr;
    emit(rc, doc, os.str());
    return kNegative;
  }
  const ClassExpr normal = normalize(e);
  doc["normal_form"] = normal.to_string();
  os << "level bound: " << *report.level << '\n' << "normal form: " << normal.to_string() << '\n';
  if (report.grounded) os << "note: a recursion step was grounded at F_{0,j} = level 0\n";
  for (const auto& step : report.trace) os << "  " << step << '\n';
  emit(rc, doc, os.str());
  return kOk;
}

std::vector<ArithmeticProgression> read_triples(const std::string& path) {
  std::istringstream lines(read_file(path));
  std::vector<ArithmeticProgression> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    for (char& c : line) {
      if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<long long> values;
    long long v = 0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw SyntaxError(number, "expected integers 'a b k'");
    if (values.empty()) continue;
    if (values.size() != 3 || values[0] < 0 || values[1] < 0 || values[2] < 0) {
      throw SyntaxError(number, "expected three naturals 'a b k'");
    }
    out.push_back({static_cast<Natural>(values[0]), static_cast<Natural>(values[1]),
                   static_cast<Natural>(values[2])});
  }
  return out;
}

int cmd_factorial(const std::string& path, const RunConfig& rc) {
  const FactorialOutcome outcome = factorial_dissection_decision(read_triples(path));
  json doc = {{"command", "factorial"}, {"outcome", outcome}};
  std::ostringstream os;
  os << outcome.summary << '\n'
     << "every m! with m >= " << outcome.cutoff << " lies in "
     << (outcome.inside_cofinite ? "C" : "the complement of C") << '\n';
  if (!outcome.finite_side.empty()) {
    os << "finite side holds m! for m in {";
    for (std::size_t i = 0; i < outcome.finite_side.size(); ++i) {
      os << (i ? "," : "") << outcome.finite_side[i];
    }
    os << "}\n";
  }
  emit(rc, doc, os.str());
  return kOk;
}

int cmd_corpus_list(const RunConfig& rc) {
  json doc = {{"grammars", json::array()}, {"builtins", LanguageHandle::builtin_names()}};
  std::ostringstream os;
  for (const auto& g : corpus_grammars()) {
    doc["grammars"].push_back({{"name", g.name}, {"summary", g.summary}});
    os << std::left << std::setw(26) << g.name << g.summary << '\n';
  }
  for (const auto& b : LanguageHandle::builtin_names()) {
    os << std::left << std::setw(26) << b << "builtin\n";
  }
  emit(rc, doc, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize and check regular dissectors of infinite languages"};
  app.require_subcommand(1);

  RunConfig rc;
  LanguageOptions lang;
  std::string dfa_path;
  std::string certificate_path;
  std::string cover;
  std::string inner;
  std::string expression;
  std::string triples_path;

  auto* dissect = app.add_subcommand("dissect", "Search for a verified dissector");
  lang.add_to(dissect);
  add_run_options(dissect, rc);

  auto* verify = app.add_subcommand("verify", "Check a given DFA or re-check a certificate");
  lang.add_to(verify);
  add_run_options(verify, rc);
  verify->add_option("--dfa", dfa_path, "Witness DFA (JSON)");
  verify->add_option("--certificate", certificate_path, "Certificate to re-verify");

  auto* separate = app.add_subcommand("separate", "Build and check an i-separator");
  separate->add_option("--cover", cover, "Cover language A (expression)")->required();
  separate->add_option("--inner", inner, "Inner language B (expression)")->required();
  add_run_options(separate, rc);

  auto* hierarchy = app.add_subcommand("hierarchy", "Level bound of a class expression");
  hierarchy->add_option("expression", expression, "e.g. \"(BCFL - BCFL) - BCFL\"")->required();
  hierarchy->add_option("--out", rc.out, "Write the structured document here");
  hierarchy->add_option("--format", rc.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));

  auto* factorial = app.add_subcommand("factorial", "Exact factorial-length decision");
  factorial->add_option("file", triples_path, "Triples 'a b k', one per line")->required();
  factorial->add_option("--out", rc.out, "Write the structured document here");
  factorial->add_option("--format", rc.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));

  auto* corpus = app.add_subcommand("corpus", "Shipped languages");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List corpus grammars and builtins");
  corpus_list->add_option("--format", rc.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*dissect) return cmd_dissect(lang, rc);
    if (*verify) return cmd_verify(lang, dfa_path, certificate_path, rc);
    if (*separate) return cmd_separate(cover, inner, rc);
    if (*hierarchy) return cmd_hierarchy(expression, rc);
    if (*factorial) return cmd_factorial(triples_path, rc);
    if (*corpus_list) return cmd_corpus_list(rc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
