#include "stieltjes/seq.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace stieltjes {

std::size_t resource_cap() {
  static const std::size_t cap = [] {
    std::size_t value = std::size_t{1} << 20;
    if (const char* env = std::getenv("STIELTJES_MAX_WORK")) {
      try {
        value = std::stoull(env);
      } catch (const std::exception&) {
        // keep the default on garbage input
      }
    }
    return value;
  }();
  return cap;
}

void check_resource(std::size_t requested, std::string_view what) {
  if (requested > resource_cap()) {
    throw ResourceLimitExceeded(std::string(what) + " of " + std::to_string(requested) +
                                " symbols exceeds the resource cap of " + std::to_string(resource_cap()) +
                                " (set STIELTJES_MAX_WORK to raise it)");
  }
}

SubstitutionSystem SubstitutionSystem::create(std::vector<std::string> letters,
                                              const std::map<std::string, std::vector<std::string>>& rules,
                                              const std::map<std::string, int>& coding, const std::string& seed) {
  if (letters.empty()) throw std::invalid_argument("substitution system has no letters");
  if (letters.size() > std::numeric_limits<Letter>::max()) throw std::invalid_argument("too many letters");
  std::set<std::string> unique(letters.begin(), letters.end());
  if (unique.size() != letters.size()) throw std::invalid_argument("duplicate letter");

  SubstitutionSystem sys;
  sys.letters_ = std::move(letters);
  sys.rules_.resize(sys.letters_.size());
  sys.coding_.resize(sys.letters_.size());
  for (Letter l = 0; l < sys.letters_.size(); ++l) {
    const auto& name = sys.letters_[l];
    auto rule = rules.find(name);
    if (rule == rules.end() || rule->second.empty()) {
      throw std::invalid_argument("letter '" + name + "' has no rule");
    }
    for (const auto& target : rule->second) sys.rules_[l].push_back(sys.letter(target));
    auto code = coding.find(name);
    if (code == coding.end()) throw std::invalid_argument("coding is not defined on letter '" + name + "'");
    if (code->second != 1 && code->second != -1) {
      throw std::invalid_argument("coding of '" + name + "' must be 1 or -1");
    }
    sys.coding_[l] = code->second;
  }
  for (const auto& [name, _] : rules) sys.letter(name);
  for (const auto& [name, _] : coding) sys.letter(name);
  sys.seed_ = sys.letter(seed);
  if (sys.rules_[sys.seed_].front() != sys.seed_) {
    throw std::invalid_argument("rule of seed '" + seed + "' does not begin with the seed (not prolongable)");
  }
  return sys;
}

SubstitutionSystem SubstitutionSystem::paperfolding() {
  return create({"a", "b", "c", "d"},
                {{"a", {"a", "b"}}, {"b", {"c", "b"}}, {"c", {"a", "d"}}, {"d", {"c", "d"}}},
                {{"a", 1}, {"b", 1}, {"c", -1}, {"d", -1}}, "a");
}

SubstitutionSystem SubstitutionSystem::rudin_shapiro() {
  return create({"a", "b", "c", "d"},
                {{"a", {"a", "b"}}, {"b", {"a", "c"}}, {"c", {"d", "b"}}, {"d", {"d", "c"}}},
                {{"a", 1}, {"b", 1}, {"c", -1}, {"d", -1}}, "a");
}

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SubstitutionSystem SubstitutionSystem::parse(std::string_view config) {
  std::vector<std::string> letters;
  std::map<std::string, std::vector<std::string>> rules;
  std::map<std::string, int> coding;
  std::string seed;
  bool have_letters = false;

  std::istringstream in{std::string(config)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + why);
    };
    if (key == "letters") {
      if (have_letters) fail("duplicate 'letters' line");
      letters = split_words(value);
      have_letters = true;
    } else if (key == "rule") {
      auto arrow = value.find("->");
      if (arrow == std::string::npos) fail("rule needs '->'");
      auto lhs = split_words(value.substr(0, arrow));
      if (lhs.size() != 1) fail("rule must rewrite exactly one letter");
      if (rules.count(lhs[0])) fail("duplicate rule for '" + lhs[0] + "'");
      rules[lhs[0]] = split_words(value.substr(arrow + 2));
    } else if (key == "code") {
      auto eq = value.find('=');
      if (eq == std::string::npos) fail("code needs '='");
      auto lhs = split_words(value.substr(0, eq));
      if (lhs.size() != 1) fail("code must map exactly one letter");
      try {
        coding[lhs[0]] = std::stoi(trim(std::string_view(value).substr(eq + 1)));
      } catch (const std::exception&) {
        fail("code value is not an integer");
      }
    } else if (key == "seed") {
      seed = value;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_letters) throw std::invalid_argument("config has no 'letters' line");
  if (seed.empty()) throw std::invalid_argument("config has no 'seed' line");
  return create(std::move(letters), rules, coding, seed);
}

Letter SubstitutionSystem::letter(std::string_view name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
  return static_cast<Letter>(it - letters_.begin());
}

std::string SubstitutionSystem::spell(const Word& w) const {
  std::string out;
  for (Letter l : w) out += letters_.at(l);
  return out;
}

Word expand_letter(const SubstitutionSystem& system, Letter start, std::size_t n) {
  // Predict the length first so that oversized requests fail fast.
  const std::size_t cap = resource_cap();
  std::vector<std::size_t> len(system.size(), 1);
  for (std::size_t it = 0; it < n; ++it) {
    std::vector<std::size_t> next(system.size(), 0);
    for (Letter l = 0; l < system.size(); ++l) {
      for (Letter t : system.image(l)) next[l] = std::min(next[l] + len[t], cap + 1);
    }
    len = std::move(next);
    if (len[start] > cap) check_resource(len[start], "substitution word");
  }

  Word w{start};
  for (std::size_t it = 0; it < n; ++it) {
    Word next;
    for (Letter l : w) {
      const auto& img = system.image(l);
      next.insert(next.end(), img.begin(), img.end());
    }
    w = std::move(next);
  }
  return w;
}

Word expand_substitution(const SubstitutionSystem& system, std::size_t n) {
  if (system.image(system.seed()).size() < 2) {
    throw std::invalid_argument("seed image has length 1; the fixed point does not grow");
  }
  return expand_letter(system, system.seed(), n);
}

std::vector<int> apply_coding(const SubstitutionSystem& system, const Word& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (Letter l : word) out.push_back(system.code(l));
  return out;
}

SequenceKind parse_sequence_kind(std::string_view name) {
  if (name == "paperfolding") return SequenceKind::paperfolding;
  if (name == "rudin-shapiro") return SequenceKind::rudin_shapiro;
  if (name == "custom") return SequenceKind::custom;
  throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

std::string_view sequence_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::paperfolding:
      return "paperfolding";
    case SequenceKind::rudin_shapiro:
      return "rudin-shapiro";
    case SequenceKind::custom:
      return "custom";
  }
  return "custom";
}

SignSequence SignSequence::paperfolding(std::size_t len) {
  check_resource(len, "paperfolding prefix");
  std::vector<int> p(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (n == 0 || n % 4 == 0) {
      p[n] = 1;
    } else if (n % 4 == 2) {
      p[n] = -1;
    } else {
      p[n] = p[(n - 1) / 2];
    }
  }
  return SignSequence("paperfolding", std::move(p));
}

SignSequence SignSequence::rudin_shapiro(std::size_t len) {
  check_resource(len, "Rudin-Shapiro prefix");
  std::vector<int> r(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (n == 0) {
      r[n] = 1;
    } else if (n % 2 == 0) {
      r[n] = r[n / 2];
    } else {
      std::size_t half = (n - 1) / 2;
      r[n] = (half % 2 == 0 ? 1 : -1) * r[half];
    }
  }
  return SignSequence("rudin-shapiro", std::move(r));
}

SignSequence SignSequence::named(SequenceKind kind, std::size_t len) {
  switch (kind) {
    case SequenceKind::paperfolding:
      return paperfolding(len);
    case SequenceKind::rudin_shapiro:
      return rudin_shapiro(len);
    case SequenceKind::custom:
      break;
  }
  throw std::invalid_argument("custom sequences need a substitution system");
}

SignSequence SignSequence::from_substitution(const SubstitutionSystem& system, std::size_t iterations,
                                             std::string name) {
  return SignSequence(std::move(name), apply_coding(system, expand_substitution(system, iterations)));
}

SignSequence SignSequence::from_values(std::string name, std::vector<int> values) {
  for (int v : values) {
    if (v != 1 && v != -1) throw std::invalid_argument("sign sequence values must be 1 or -1");
  }
  return SignSequence(std::move(name), std::move(values));
}

std::vector<int> sequence_prefix(std::string_view name, std::size_t len) {
  if (len == 0) throw std::invalid_argument("prefix length must be positive");
  auto seq = SignSequence::named(parse_sequence_kind(name), len);
  return {seq.values().begin(), seq.values().end()};
}

bool cross_check_definitions(const SubstitutionSystem& system, std::string_view recurrence_name, std::size_t n) {
  auto coded = apply_coding(system, expand_substitution(system, n));
  return coded == sequence_prefix(recurrence_name, coded.size());
}

bool cross_check_definitions(std::string_view name, std::size_t n) {
  switch (parse_sequence_kind(name)) {
    case SequenceKind::paperfolding:
      return cross_check_definitions(SubstitutionSystem::paperfolding(), name, n);
    case SequenceKind::rudin_shapiro:
      return cross_check_definitions(SubstitutionSystem::rudin_shapiro(), name, n);
    case SequenceKind::custom:
      break;
  }
  throw std::invalid_argument("cross_check_definitions needs paperfolding or rudin-shapiro");
}

bool iota_conjugacy_check(std::size_t n) {
  const auto sys = SubstitutionSystem::rudin_shapiro();
  auto coded = [&](std::string_view letter) { return apply_coding(sys, expand_letter(sys, sys.letter(letter), n)); };
  auto flipped = [](std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
  };
  return coded("a") == flipped(coded("d")) && coded("b") == flipped(coded("c"));
}

std::vector<int> arithmetic_subsequence(std::span<const int> values, std::size_t s, std::size_t t, std::size_t len) {
  if (len > 0 && s * (len - 1) + t >= values.size()) {
    throw std::out_of_range("arithmetic subsequence needs index " + std::to_string(s * (len - 1) + t) +
                            " but only " + std::to_string(values.size()) + " terms are available");
  }
  std::vector<int> out;
  out.reserve(len);
  for (std::size_t n = 0; n < len; ++n) out.push_back(values[s * n + t]);
  return out;
}

KernelReport kernel_estimate(std::span<const int> values, std::size_t k, std::size_t depth, std::size_t window) {
  if (k < 2) throw std::invalid_argument("kernel base must be at least 2");
  if (window == 0) throw std::invalid_argument("comparison window must be positive");
  std::size_t stride = 1;
  for (std::size_t i = 0; i < depth; ++i) stride *= k;
  if (window > values.size() / stride) {
    throw std::invalid_argument("kernel probe needs " + std::to_string(window) + "*" + std::to_string(k) + "^" +
                                std::to_string(depth) + " terms, only " + std::to_string(values.size()) +
                                " available");
  }

  KernelReport report;
  report.k = k;
  report.depth = depth;
  report.comparison_length = window;

  std::set<std::vector<int>> seen;
  std::vector<int> sub(window);
  std::size_t step = 1;
  for (std::size_t level = 0; level <= depth; ++level) {
    std::size_t fresh = 0;
    for (std::size_t j = 0; j < step; ++j) {
      for (std::size_t n = 0; n < window; ++n) sub[n] = values[step * n + j];
      if (seen.insert(sub).second) {
        report.classes.push_back({level, j});
        ++fresh;
      }
    }
    report.new_classes_per_level.push_back(fresh);
    step *= k;
  }
  report.saturated = report.new_classes_per_level.back() == 0;
  return report;
}

}  // namespace stieltjes
