#pragma once

// Instance checking for the closed forms, factorizations and congruences,
// Hankel determinants, and column-automaticity probes.

#include "stieltjes/cfrac.hpp"
#include "stieltjes/closedform.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stieltjes {

struct InstanceResult {
  std::string target;
  std::string item;
  std::string param;
  bool pass = false;
  std::optional<std::size_t> first_difference;
  std::string lhs_coefficient;
  std::string rhs_coefficient;
};

struct VerificationReport {
  std::string target;
  std::vector<InstanceResult> instances;

  bool passed() const;
  const InstanceResult* first_failure() const;
  // Fills in the instance's target when it is empty.
  void add(InstanceResult result);
  void append(const VerificationReport& other);
};

// Adds 1 to one coefficient of the closed-form side of an instance. An empty
// param matches every parameter value. Honoured by lemma-pf, lemma-rs,
// pb-relations, theorem1 and theorem2.
struct Perturbation {
  std::string target;
  std::string item;
  std::size_t exponent = 0;
  std::string param;

  bool matches(std::string_view target, std::string_view item, std::string_view param) const;
};

// "target:item:exponent" or "target:item:exponent:param"
Perturbation parse_perturbation(std::string_view text);

// TARGET item=K param=N: PASS|FAIL, with the first differing exponent on failure.
void write_report_text(std::ostream& os, const VerificationReport& report);
// One JSON object per line and instance.
void write_report_json_lines(std::ostream& os, const VerificationReport& report);

template <CoefficientRing R>
InstanceResult compare_instance(std::string item, std::string param, const Poly<R>& computed, const Poly<R>& closed) {
  InstanceResult out{{}, std::move(item), std::move(param), true, first_difference(computed, closed), {}, {}};
  if (out.first_difference) {
    out.pass = false;
    out.lhs_coefficient = computed.ring().format(computed.coefficient(*out.first_difference));
    out.rhs_coefficient = closed.ring().format(closed.coefficient(*out.first_difference));
  }
  return out;
}

InstanceResult compare_instance(std::string item, std::string param, const Series<ResidueRing>& computed,
                                const Series<ResidueRing>& closed);

// Directly computed convergents for the closed-form items, mod 4, in the
// order of paperfolding_lemma_closed_forms / rudin_shapiro_lemma_closed_forms.
std::array<Poly<ResidueRing>, 8> paperfolding_lemma_computed(long n);
std::array<Poly<ResidueRing>, 16> rudin_shapiro_lemma_computed(long j);

VerificationReport verify_paperfolding_lemma(const std::vector<long>& n_values,
                                             const std::optional<Perturbation>& perturbation = std::nullopt);
VerificationReport verify_rs_lemma(const std::vector<long>& j_values,
                                   const std::optional<Perturbation>& perturbation = std::nullopt);

// Splitting of the level-n convergents and b-blocks into level n-1 pieces,
// exact over Z, for l in {1, 2}. Items are 10..13 for paperfolding and
// 24..27 for Rudin-Shapiro, where the b-side is evaluated at -x.
VerificationReport verify_pb_relations(SequenceKind kind, const std::vector<long>& n_values,
                                       const std::optional<Perturbation>& perturbation = std::nullopt);
VerificationReport verify_pb_relations(SequenceKind kind, std::span<const int> values,
                                       const std::vector<long>& n_values,
                                       const std::optional<Perturbation>& perturbation = std::nullopt);

// det(b_{i+j})_{0 <= i,j < n} by fraction-free elimination.
BigInt hankel_direct(std::span<const BigInt> b, std::size_t n);

// a_0^n (a_1 a_2)^{n-1} ... (a_{2n-3} a_{2n-2})
int hankel_heilermann(std::span<const int> a, std::size_t n);

// H_n = prod_{k<n} b_k with b_k = prod_{i<=2k} a_i, built from two running products.
int hankel_double_running_product(std::span<const int> a, std::size_t n);

// hankel_direct over the coefficients of x^1 .. x^{2n-1} of the exact expansion.
BigInt hankel_of_expansion(std::span<const int> a, std::size_t n);

std::vector<KernelReport> column_automaticity_probe(SequenceKind kind, Track track, std::size_t i_max,
                                                    std::size_t n_max, long modulus, std::size_t depth = 8,
                                                    std::size_t window = 16);

VerificationReport verify_theorem(int which, std::size_t order,
                                  const std::optional<Perturbation>& perturbation = std::nullopt);
// Against a caller-supplied right-hand side.
VerificationReport verify_theorem(int which, const Series<ResidueRing>& rhs);

struct SuiteOptions {
  long pf_n_max = 12;
  long rs_j_max = 5;
  long pb_n_max = 10;
  long block_sum_n_max = 8;
  std::vector<std::size_t> theorem_orders{64, 128, 256, 512};
  std::vector<std::size_t> s_infinity_orders{64, 512};
  std::uint64_t catalan_max = 2000;
  std::size_t heilermann_samples = 100;
  std::size_t heilermann_n_max = 8;
  std::size_t heilermann_pf_n_max = 64;
  std::size_t column_n_max = 4096;
  std::size_t column_i_max = 8;
  std::optional<Perturbation> perturbation;
};

const std::vector<std::string>& suite_targets();

// Runs one named target; "all" runs every target in order.
VerificationReport run_target(std::string_view target, const SuiteOptions& options);

}  // namespace stieltjes
