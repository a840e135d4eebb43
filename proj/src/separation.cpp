#include "regdissect/separation.hpp"

#include <algorithm>
#include <cmath>

namespace regdissect {
namespace {

void check_subalphabet(const LanguageHandle& inner, const LanguageHandle& cover) {
  for (char c : inner.alphabet()) {
    if (cover.alphabet().find(c) == std::string::npos) {
      throw Error(ErrorKind::kAlphabetMismatch,
                  "inner alphabet \"" + inner.alphabet() +
                      "\" is not contained in cover alphabet \"" +
                      cover.alphabet() + "\"");
    }
  }
}

Natural window_start(const DissectionConfig& config) {
  const auto width = static_cast<Natural>(
      std::floor(static_cast<double>(config.max_length) * config.window_fraction));
  return config.max_length - std::min(width, config.max_length);
}

// Members of `from` rejected by `by`, with the count past the window start.
struct Margin {
  std::size_t total = 0;
  std::size_t late = 0;
};

template <typename Pred>
Margin count_margin(const Enumeration& from, Natural start, Pred outside) {
  Margin m;
  for (const auto& s : from.members) {
    if (!outside(s)) continue;
    ++m.total;
    if (s.size() > start) ++m.late;
  }
  return m;
}

}  // namespace

CoverVerdict check_icover(const CoveringPair& pair, const DissectionConfig& config) {
  validate_config(config);
  check_subalphabet(pair.inner, pair.cover);
  const Natural start = window_start(config);
  const Enumeration b = pair.inner.enumerate(config.max_length, config.limits);
  const Enumeration a = pair.cover.enumerate(config.max_length, config.limits);

  CoverVerdict v;
  v.truncated = a.truncated || b.truncated;
  for (const auto& s : b.members) {
    if (!pair.cover.contains(s)) {
      v.violation = s;
      return v;
    }
  }
  const Margin m = count_margin(a, start, [&](const std::string& s) {
    return !pair.inner.contains(s);
  });
  v.margin = m.total;
  v.margin_at_window = m.total - m.late;
  v.holds = m.total >= config.threshold && m.late > 0;
  return v;
}

LanguageHandle build_separator(const CoveringPair& pair, const Dfa& c) {
  for (char s : pair.inner.alphabet()) {
    if (c.alphabet().find(s) == std::string::npos) {
      throw Error(ErrorKind::kAlphabetMismatch,
                  "witness alphabet \"" + c.alphabet() +
                      "\" does not cover the inner alphabet");
    }
  }
  return unite(pair.inner, restrict_to(pair.cover, c));
}

SeparationVerdict verify_iseparation(const CoveringPair& pair,
                                     const LanguageHandle& separator,
                                     const DissectionConfig& config) {
  validate_config(config);
  check_subalphabet(pair.inner, pair.cover);
  check_subalphabet(separator, pair.cover);
  const Natural n = config.max_length;
  const Natural start = window_start(config);
  const Enumeration a = pair.cover.enumerate(n, config.limits);
  const Enumeration b = pair.inner.enumerate(n, config.limits);
  const Enumeration e = separator.enumerate(n, config.limits);

  SeparationVerdict v;
  auto first_miss = [](const Enumeration& xs, const LanguageHandle& in) {
    const auto it = std::find_if(xs.members.begin(), xs.members.end(),
                                 [&](const std::string& s) { return !in.contains(s); });
    return it == xs.members.end() ? std::nullopt : std::optional<std::string>(*it);
  };
  const auto b_not_in_e = first_miss(b, separator);
  const auto e_not_in_a = first_miss(e, pair.cover);
  v.inner_in_separator = !b_not_in_e;
  v.separator_in_cover = !e_not_in_a;
  v.violation = b_not_in_e ? b_not_in_e : e_not_in_a;

  const Margin ae = count_margin(a, start, [&](const std::string& s) {
    return !separator.contains(s);
  });
  const Margin eb = count_margin(e, start, [&](const std::string& s) {
    return !pair.inner.contains(s);
  });
  v.cover_margin = ae.total;
  v.separator_margin = eb.total;
  v.cover_margin_grows = ae.late > 0;
  v.separator_margin_grows = eb.late > 0;
  return v;
}

SeparationReport iseparate(const CoveringPair& pair, const DissectionConfig& config) {
  const CoverVerdict cover = check_icover(pair, config);
  if (!cover.holds) {
    throw Error(ErrorKind::kCoverCheckFailed,
                cover.violation
                    ? "inner member \"" + *cover.violation + "\" is not in the cover"
                    : "margin |A - B| = " + std::to_string(cover.margin) +
                          " up to length " + std::to_string(config.max_length) +
                          " is too small or stops growing");
  }
  const LanguageHandle margin = subtract(pair.cover, pair.inner);
  DissectionCertificate cert = dissect_auto(margin, config);
  if (!cert.verified()) throw StrategyFailedError(std::move(cert));

  LanguageHandle separator = build_separator(pair, *cert.witness);
  SeparationVerdict verdict = verify_iseparation(pair, separator, config);
  return {std::move(separator), std::move(cert), cover, verdict};
}

}  // namespace regdissect
