#pragma once

// Automatic sequences over {-1,+1}: substitution fixed points with codings,
// the paperfolding and Rudin-Shapiro recurrences, closure operations and an
// empirical k-kernel probe.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stieltjes {

// Words and prefixes are capped at this many symbols. Defaults to 2^20;
// the STIELTJES_MAX_WORK environment variable overrides it.
std::size_t resource_cap();

class ResourceLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

void check_resource(std::size_t requested, std::string_view what);

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

class SubstitutionSystem {
 public:
  // Validates that rule images only use known letters, that the coding is
  // total with values in {-1,+1}, and that the seed is prolongable.
  static SubstitutionSystem create(std::vector<std::string> letters,
                                   const std::map<std::string, std::vector<std::string>>& rules,
                                   const std::map<std::string, int>& coding, const std::string& seed);

  // a->ab, b->cb, c->ad, d->cd with a,b -> 1 and c,d -> -1
  static SubstitutionSystem paperfolding();
  // a->ab, b->ac, c->db, d->dc with a,b -> 1 and c,d -> -1
  static SubstitutionSystem rudin_shapiro();

  // Plain-text config:
  //   letters: a b c d
  //   rule: a -> a b
  //   code: a = 1
  //   seed: a
  // Blank lines and lines starting with '#' are ignored.
  static SubstitutionSystem parse(std::string_view config);

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  Letter letter(std::string_view name) const;
  Letter seed() const { return seed_; }
  const Word& image(Letter l) const { return rules_.at(l); }
  int code(Letter l) const { return coding_.at(l); }

  // Concatenated letter names, e.g. "abcb".
  std::string spell(const Word& w) const;

 private:
  SubstitutionSystem() = default;

  std::vector<std::string> letters_;
  std::vector<Word> rules_;
  std::vector<int> coding_;
  Letter seed_ = 0;
};

// sigma^n(start); throws ResourceLimitExceeded past the cap.
Word expand_letter(const SubstitutionSystem& system, Letter start, std::size_t n);

// sigma^n(seed); the seed image must have length >= 2.
Word expand_substitution(const SubstitutionSystem& system, std::size_t n);

std::vector<int> apply_coding(const SubstitutionSystem& system, const Word& word);

enum class SequenceKind { paperfolding, rudin_shapiro, custom };

SequenceKind parse_sequence_kind(std::string_view name);
std::string_view sequence_name(SequenceKind kind);

class SignSequence {
 public:
  static SignSequence paperfolding(std::size_t len);
  static SignSequence rudin_shapiro(std::size_t len);
  static SignSequence named(SequenceKind kind, std::size_t len);
  static SignSequence from_substitution(const SubstitutionSystem& system, std::size_t iterations,
                                        std::string name = "custom");
  // Throws unless every value is -1 or +1.
  static SignSequence from_values(std::string name, std::vector<int> values);

  const std::string& name() const { return name_; }
  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }

 private:
  SignSequence(std::string name, std::vector<int> values) : name_(std::move(name)), values_(std::move(values)) {}

  std::string name_;
  std::vector<int> values_;
};

// First len terms from the defining recurrences; unknown names throw.
std::vector<int> sequence_prefix(std::string_view name, std::size_t len);

// rho(sigma^n(seed)) against the recurrence prefix of the same length.
bool cross_check_definitions(std::string_view name, std::size_t n);
bool cross_check_definitions(const SubstitutionSystem& system, std::string_view recurrence_name, std::size_t n);

// rho(sigma^n(a)) = iota(rho(sigma^n(d))) and rho(sigma^n(b)) = iota(rho(sigma^n(c)))
// for the Rudin-Shapiro substitution, iota swapping 1 and -1.
bool iota_conjugacy_check(std::size_t n);

// y_n = x_{n-1} * ... * x_0 for n = 1..len, starting from the identity e.
template <class T, class Op>
std::vector<T> running_fold(std::span<const T> values, Op op, T identity, std::size_t len) {
  if (len > values.size()) throw std::out_of_range("running_fold past the available prefix");
  std::vector<T> out;
  out.reserve(len);
  T acc = identity;
  for (std::size_t n = 0; n < len; ++n) {
    acc = op(values[n], acc);
    out.push_back(acc);
  }
  return out;
}

// (a_{s n + t}) for n < len
std::vector<int> arithmetic_subsequence(std::span<const int> values, std::size_t s, std::size_t t, std::size_t len);

struct KernelClass {
  std::size_t level = 0;   // i
  std::size_t offset = 0;  // j, 0 <= j < k^i
};

struct KernelReport {
  std::size_t k = 2;
  std::size_t depth = 0;
  std::size_t comparison_length = 0;
  std::vector<KernelClass> classes;
  std::vector<std::size_t> new_classes_per_level;
  bool saturated = false;
};

// Distinct subsequences (a_{k^i n + j})_{n < window} over i <= depth.
// Heuristic: equality is only checked on the window.
KernelReport kernel_estimate(std::span<const int> values, std::size_t k, std::size_t depth, std::size_t window);

}  // namespace stieltjes
