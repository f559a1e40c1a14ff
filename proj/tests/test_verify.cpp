#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stieltjes/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

using namespace stieltjes;

namespace {

const IntegerRing zz;
const ResidueRing m4(4);

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void check_all_pass(const VerificationReport& report) {
  for (const auto& r : report.instances) {
    INFO(r.target << " item=" << r.item << " param=" << r.param);
    CHECK(r.pass);
  }
}

}  // namespace

TEST_CASE("paperfolding closed forms") {
  const auto first = verify_paperfolding_lemma({4});
  CHECK(first.instances.size() == 8);
  check_all_pass(first);
  const auto all = verify_paperfolding_lemma(range(4, 12));
  CHECK(all.instances.size() == 72);
  check_all_pass(all);
}

TEST_CASE("paperfolding closed form with the wrong T level") {
  const long n = 6;
  const auto computed = paperfolding_lemma_computed(n);
  const auto two = m4.from_int(2);
  const auto wrong = Poly<ResidueRing>::from_ints(m4, {1, 2, 2, 2, 2}) +
                     Poly<ResidueRing>::from_ints(m4, {2, 2, 2}) * auxiliary_poly(AuxiliaryKind::S, n - 2, m4) +
                     auxiliary_poly(AuxiliaryKind::T, n - 3, m4) * two;
  const auto result = compare_instance("1", "n=6", computed[0], wrong);
  CHECK_FALSE(result.pass);
  REQUIRE(result.first_difference);
  CHECK(*result.first_difference == 20);  // 2^4 + 2^2, the first exponent the lower level misses
}

TEST_CASE("Rudin-Shapiro closed forms") {
  const auto first = verify_rs_lemma({2});
  CHECK(first.instances.size() == 16);
  check_all_pass(first);
  check_all_pass(verify_rs_lemma(range(2, 5)));
}

TEST_CASE("Rudin-Shapiro item 11 with odd powers in place of even ones") {
  const long j = 3;
  const auto computed = rudin_shapiro_lemma_computed(j);
  const auto sa = auxiliary_poly(AuxiliaryKind::S, 2 * j - 2, m4);
  const auto ta = auxiliary_poly(AuxiliaryKind::T, 2 * j - 2, m4);
  const auto wrong = Poly<ResidueRing>::from_ints(m4, {1, 0, 2, 0, 0, 2}) +
                     Poly<ResidueRing>::from_ints(m4, {3, 0, 0, 2}) * sa +
                     Poly<ResidueRing>::from_ints(m4, {2, 2}) * ta +
                     Poly<ResidueRing>::from_ints(m4, {0, 2}) * auxiliary_poly(AuxiliaryKind::S_odd, j - 1, m4) +
                     Poly<ResidueRing>::monomial(m4, 1, std::size_t{1} << (2 * j - 1));
  CHECK_FALSE(compare_instance("11", "j=3", computed[10], wrong).pass);
  CHECK(compare_instance("11", "j=3", computed[10], rudin_shapiro_lemma_closed_forms(j)[10]).pass);
}

TEST_CASE("block splitting relations over Z") {
  const auto pf3 = verify_pb_relations(SequenceKind::paperfolding, {3});
  CHECK(pf3.instances.size() == 8);
  const auto l1 = std::find_if(pf3.instances.begin(), pf3.instances.end(),
                               [](const InstanceResult& r) { return r.item == "10" && r.param == "n=3,l=1"; });
  REQUIRE(l1 != pf3.instances.end());
  CHECK(l1->pass);

  const auto rs3 = verify_pb_relations(SequenceKind::rudin_shapiro, {3});
  const auto l2 = std::find_if(rs3.instances.begin(), rs3.instances.end(),
                               [](const InstanceResult& r) { return r.item == "26" && r.param == "n=3,l=2"; });
  REQUIRE(l2 != rs3.instances.end());
  CHECK(l2->pass);

  check_all_pass(verify_pb_relations(SequenceKind::paperfolding, range(2, 10)));
  check_all_pass(verify_pb_relations(SequenceKind::rudin_shapiro, range(2, 10)));
}

TEST_CASE("shuffled b-block breaks the splitting") {
  auto values = sequence_prefix("paperfolding", 16);
  std::reverse(values.begin() + 8, values.end());
  const auto report = verify_pb_relations(SequenceKind::paperfolding, values, {3});
  CHECK_FALSE(report.passed());
}

TEST_CASE("Hankel determinants") {
  const std::vector<BigInt> five{5};
  CHECK(hankel_direct(five, 1) == 5);
  const std::vector<BigInt> small{1, 1, 2};
  CHECK(hankel_direct(small, 2) == 1);
  const auto catalan = catalan_numbers(7);
  CHECK(hankel_direct(catalan, 4) == 1);
  const std::vector<BigInt> swap_needed{0, 1, 0};
  CHECK(hankel_direct(swap_needed, 2) == -1);
  CHECK_THROWS(hankel_direct(small, 3));

  const std::vector<int> a{-1, 1, 1};
  CHECK(hankel_heilermann(a, 1) == -1);
  const std::vector<int> ones(30, 1);
  for (std::size_t n = 1; n <= 15; ++n) CHECK(hankel_heilermann(ones, n) == 1);
  const auto pf = SignSequence::paperfolding(200);
  CHECK(hankel_heilermann(pf.values(), 5) == hankel_of_expansion(pf.values(), 5));
  for (std::size_t n = 1; n <= 64; ++n) {
    CHECK(hankel_double_running_product(pf.values(), n) == hankel_heilermann(pf.values(), n));
  }
  CHECK_THROWS(hankel_heilermann(a, 3));
}

TEST_CASE("column probes") {
  const auto q_pf = column_automaticity_probe(SequenceKind::paperfolding, Track::Q, 1, 4096, 4);
  CHECK(q_pf[0].classes.size() == 1);
  CHECK(q_pf[0].saturated);
  CHECK(q_pf[1].saturated);
  const auto p_rs = column_automaticity_probe(SequenceKind::rudin_shapiro, Track::P, 8, 4096, 4);
  for (const auto& r : p_rs) CHECK(r.saturated);
}

TEST_CASE("theorem checks") {
  auto bad_rhs = theorem1_rhs(64);
  // 3x phi -> x phi moves the x^1 coefficient from 1 to 3
  bad_rhs = bad_rhs - Poly<ResidueRing>::from_ints(m4, {0, 2}) * phi_series(64, m4);
  const auto report = verify_theorem(1, bad_rhs);
  REQUIRE(report.first_failure());
  CHECK(*report.first_failure()->first_difference == 1);

  const auto first = verify_theorem(1, 512);
  CHECK(first.instances.size() == 1);
  CHECK(first.instances[0].first_difference == std::optional<std::size_t>(6));
  CHECK(first.instances[0].lhs_coefficient == "2");
  CHECK(first.instances[0].rhs_coefficient == "0");
  CHECK(verify_theorem(2, 512).instances[0].first_difference == std::optional<std::size_t>(7));
  CHECK_THROWS(verify_theorem(3, 64));
  CHECK_THROWS(verify_theorem(1, 3));
}

TEST_CASE("report output") {
  const auto report = verify_paperfolding_lemma({4, 5});
  std::ostringstream text;
  write_report_text(text, report);
  CHECK(text.str().rfind("lemma-pf item=1 param=n=4: PASS\n", 0) == 0);

  std::ostringstream jsonl;
  write_report_json_lines(jsonl, verify_theorem(1, 64));
  const auto record = nlohmann::json::parse(jsonl.str());
  CHECK(record["target"] == "theorem1");
  CHECK(record["status"] == "FAIL");
  CHECK(record["first_difference"] == 6);

}

TEST_CASE("perturbations") {
  const auto p = parse_perturbation("lemma-rs:11:5");
  CHECK(p.target == "lemma-rs");
  CHECK(p.item == "11");
  CHECK(p.exponent == 5);
  CHECK(p.param.empty());
  CHECK(parse_perturbation("lemma-pf:3:2:n=5").param == "n=5");
  CHECK_THROWS(parse_perturbation("lemma-pf:3"));
  CHECK_THROWS(parse_perturbation("lemma-pf:3:x"));

  const auto hit = verify_rs_lemma({2, 3}, p);
  CHECK(std::count_if(hit.instances.begin(), hit.instances.end(), [](auto& r) { return !r.pass; }) == 2);
  const auto one = verify_paperfolding_lemma({4, 5}, parse_perturbation("lemma-pf:3:2:n=5"));
  REQUIRE(one.first_failure());
  CHECK(one.first_failure()->param == "n=5");
  CHECK(one.first_failure()->first_difference == std::optional<std::size_t>(2));
}

TEST_CASE("suite targets") {
  SuiteOptions quick;
  quick.heilermann_samples = 5;
  quick.heilermann_pf_n_max = 8;
  quick.column_n_max = 1024;
  quick.column_i_max = 2;
  for (const auto& t : {"catalan", "eqs-2-5", "lemma-pf", "lemma-rs", "pb-relations", "heilermann"}) {
    INFO(t);
    CHECK(run_target(t, quick).passed());
  }
  CHECK_THROWS(run_target("lemma-9", quick));
}
