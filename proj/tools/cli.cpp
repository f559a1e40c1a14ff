#include "cli.hpp"

#include "render.hpp"
#include "stieltjes/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace stieltjes {

namespace {

struct Options {
  std::string seq = "paperfolding";
  std::string config;
  std::size_t len = 16;
  std::size_t order = 16;
  long modulus = 0;  // 0: the integers
  std::string track = "Q";
  std::size_t index = 0;
  std::size_t level = 2;
  std::size_t n_min = 1;
  std::size_t n_max = 16;
  std::size_t i_min = 0;
  std::size_t i_max = 15;
  std::size_t scale = 1;
  std::string out;
  std::string source = "expansion";
  std::size_t k = 2;
  std::size_t depth = 6;
  std::size_t window = 128;
  std::size_t column = 0;
  std::string target;
  std::string report;
  std::string perturb;
  long j_max = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The first len terms of the requested sequence.
SignSequence load_sequence(const Options& o, std::size_t len) {
  const SequenceKind kind = o.config.empty() ? parse_sequence_kind(o.seq) : SequenceKind::custom;
  if (kind != SequenceKind::custom) return SignSequence::named(kind, len);
  if (o.config.empty()) throw std::invalid_argument("--seq custom needs --config");
  const auto system = SubstitutionSystem::parse(read_file(o.config));
  check_resource(len, "sequence prefix");
  for (std::size_t it = 0;; ++it) {
    auto s = SignSequence::from_substitution(system, it);
    if (s.size() >= len) {
      std::vector<int> v(s.values().begin(), s.values().begin() + static_cast<long>(len));
      return SignSequence::from_values("custom", std::move(v));
    }
  }
}

template <class Fn>
void with_ring(long modulus, Fn&& fn) {
  if (modulus == 0) {
    fn(IntegerRing{});
  } else {
    fn(ResidueRing(modulus));
  }
}

int cmd_seq(const Options& o, std::ostream& out) {
  const auto s = load_sequence(o, o.len);
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
  return exit_ok;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const auto s = load_sequence(o, o.order + 2);
  with_ring(o.modulus, [&](const auto& ring) { out << format_series(expand_stieltjes(s.values(), o.order, ring)) << '\n'; });
  return exit_ok;
}

int cmd_convergent(const Options& o, std::ostream& out) {
  const auto s = load_sequence(o, o.index + 1);
  with_ring(o.modulus, [&](const auto& ring) {
    const auto pair = convergent(s.values(), o.index, ring);
    out << "P: " << format_poly(pair.P) << '\n' << "Q: " << format_poly(pair.Q) << '\n';
  });
  return exit_ok;
}

int cmd_bconvergent(const Options& o, std::ostream& out) {
  const auto kind = parse_sequence_kind(o.seq);
  with_ring(o.modulus, [&](const auto& ring) {
    const auto m = b_convergents(kind, o.level, ring);
    out << "# index 2^" << o.level << "-2\n";
    out << "P: " << format_poly(m.a) << '\n' << "Q: " << format_poly(m.c) << '\n';
    out << "# index 2^" << o.level << "-1\n";
    out << "P: " << format_poly(m.b) << '\n' << "Q: " << format_poly(m.d) << '\n';
  });
  return exit_ok;
}

int cmd_hankel(const Options& o, std::ostream& out) {
  const auto s = load_sequence(o, 2 * o.order + 1);
  int status = exit_ok;
  for (std::size_t n = 1; n <= o.order; ++n) {
    const BigInt direct = hankel_of_expansion(s.values(), n);
    const int formula = hankel_heilermann(s.values(), n);
    out << "n=" << n << " direct=" << direct.get_str() << " heilermann=" << formula << '\n';
    if (direct != formula) status = exit_check_failed;
  }
  return status;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  std::vector<int> values;
  if (o.source == "sequence") {
    const auto s = load_sequence(o, o.len);
    values.assign(s.values().begin(), s.values().end());
  } else if (o.source == "expansion") {
    if (o.modulus < 2) throw std::invalid_argument("kernel probes on an expansion need --mod m >= 2");
    if (o.len < 1) throw std::invalid_argument("--len must be positive");
    const auto s = load_sequence(o, o.len + 1);
    const auto series = expand_stieltjes(s.values(), o.len - 1, ResidueRing(o.modulus));
    values.assign(series.coefficients().begin(), series.coefficients().end());
  } else if (o.source == "column") {
    if (o.modulus < 2) throw std::invalid_argument("column probes need --mod m >= 2");
    const auto s = load_sequence(o, o.n_max + 1);
    const auto table = coefficient_table(s.values(), o.n_max, o.column, ResidueRing(o.modulus), parse_track(o.track));
    const auto col = table.column(o.column);
    values.assign(col.begin(), col.end());
  } else {
    throw std::invalid_argument("--source must be expansion, sequence or column");
  }
  const auto report = kernel_estimate(values, o.k, o.depth, o.window);
  out << "classes=" << report.classes.size() << " saturated=" << (report.saturated ? "yes" : "no") << " levels=";
  for (std::size_t i = 0; i < report.new_classes_per_level.size(); ++i) {
    out << (i ? " " : "") << report.new_classes_per_level[i];
  }
  out << '\n';
  return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto s = load_sequence(o, o.n_max + 1);
  const auto track = parse_track(o.track);
  with_ring(o.modulus, [&](const auto& ring) {
    out << format_table(coefficient_table(s.values(), o.n_max, o.i_max, ring, track));
  });
  return exit_ok;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.track = parse_track(o.track);
  spec.n_first = o.n_min;
  spec.n_last = o.n_max;
  spec.i_first = o.i_min;
  spec.i_last = o.i_max;
  spec.modulus = o.modulus == 0 ? 4 : o.modulus;
  spec.scale = o.scale;
  if (spec.n_last < spec.n_first || spec.i_last < spec.i_first) throw std::invalid_argument("empty render range");
  const auto s = load_sequence(o, spec.n_last + 1);
  const auto table = coefficient_table(s.values(), spec.n_last, spec.i_last, ResidueRing(spec.modulus), spec.track);
  const std::string image = render_table(table, spec);
  if (o.out.empty()) {
    out << image;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
    file << image;
  }
  return exit_ok;
}

int cmd_verify(const Options& o, const std::vector<std::string>& given, std::ostream& out) {
  const auto& targets = suite_targets();
  if (o.target != "all" && std::find(targets.begin(), targets.end(), o.target) == targets.end()) {
    throw CLI::ValidationError("target", "unknown verification target '" + o.target + "'");
  }
  const auto was_given = [&](const std::string& flag) {
    return std::find(given.begin(), given.end(), flag) != given.end();
  };
  SuiteOptions suite;
  if (was_given("--order")) {
    suite.theorem_orders = {o.order};
    suite.s_infinity_orders = {o.order};
  }
  if (was_given("--n-max")) {
    suite.pf_n_max = static_cast<long>(o.n_max);
    suite.pb_n_max = static_cast<long>(o.n_max);
    suite.block_sum_n_max = static_cast<long>(o.n_max);
    suite.column_n_max = o.n_max;
  }
  if (was_given("--i-max")) suite.column_i_max = o.i_max;
  if (o.j_max > 0) suite.rs_j_max = o.j_max;
  if (!o.perturb.empty()) suite.perturbation = parse_perturbation(o.perturb);

  const VerificationReport report = run_target(o.target, suite);
  write_report_text(out, report);
  const auto passed = std::count_if(report.instances.begin(), report.instances.end(),
                                    [](const InstanceResult& r) { return r.pass; });
  out << o.target << ": " << passed << "/" << report.instances.size() << " passed\n";
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw std::runtime_error("cannot write '" + o.report + "'");
    write_report_json_lines(file, report);
  }
  return report.passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stieltjes continued fractions of automatic sequences", "stieltjes"};
  app.require_subcommand(1);
  Options o;

  auto seq_flags = [&](CLI::App* sub) {
    sub->add_option("--seq,--name", o.seq, "paperfolding, rudin-shapiro or custom");
    sub->add_option("--config", o.config, "substitution file for a custom sequence")->check(CLI::ExistingFile);
  };
  auto mod_flag = [&](CLI::App* sub) {
    sub->add_option("--mod", o.modulus, "reduce coefficients mod m (0: exact integers)")
        ->check(CLI::Range(0L, 1L << 30));
  };

  auto* seq = app.add_subcommand("seq", "print a prefix of the sequence");
  seq_flags(seq);
  seq->add_option("--len", o.len, "number of terms")->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "truncated power series of the continued fraction");
  seq_flags(expand);
  mod_flag(expand);
  expand->add_option("--order", o.order, "truncation order");

  auto* conv = app.add_subcommand("convergent", "numerator and denominator of one convergent");
  seq_flags(conv);
  mod_flag(conv);
  conv->add_option("--index", o.index, "convergent index");

  auto* bconv = app.add_subcommand("bconvergent", "convergents of the block c_{2^n} .. c_{2^{n+1}-1}");
  seq_flags(bconv);
  mod_flag(bconv);
  bconv->add_option("--level", o.level, "block level n >= 2");

  auto* hankel = app.add_subcommand("hankel", "Hankel determinants, direct and by the product formula");
  seq_flags(hankel);
  hankel->add_option("--order", o.order, "largest determinant size")->check(CLI::PositiveNumber);

  auto* kernel = app.add_subcommand("kernel", "empirical 2-kernel probe");
  seq_flags(kernel);
  mod_flag(kernel);
  kernel->add_option("--source", o.source, "expansion, sequence or column");
  kernel->add_option("--len", o.len, "prefix length");
  kernel->add_option("--k", o.k, "kernel base");
  kernel->add_option("--depth", o.depth, "largest level");
  kernel->add_option("--window", o.window, "comparison length");
  kernel->add_option("--track", o.track, "P or Q (column source)");
  kernel->add_option("--column", o.column, "column index (column source)");
  kernel->add_option("--n-max", o.n_max, "last row (column source)");

  auto* table = app.add_subcommand("table", "coefficient table a_{n,i}, one row per n");
  seq_flags(table);
  mod_flag(table);
  table->add_option("--track", o.track, "P or Q");
  table->add_option("--n-max", o.n_max, "last row");
  table->add_option("--i-max", o.i_max, "last column");

  auto* render = app.add_subcommand("render", "draw the coefficient table as a P3 pixmap");
  seq_flags(render);
  mod_flag(render);
  render->add_option("--track", o.track, "P or Q");
  render->add_option("--n-min", o.n_min, "first n");
  render->add_option("--n-max", o.n_max, "last n");
  render->add_option("--i-min", o.i_min, "first i");
  render->add_option("--i-max", o.i_max, "last i");
  render->add_option("--scale", o.scale, "pixels per cell")->check(CLI::PositiveNumber);
  render->add_option("--out", o.out, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification target");
  verify->add_option("target", o.target, "theorem1, theorem2, lemma-pf, lemma-rs, pb-relations, eqs-2-5, "
                                         "s-infinity, catalan, heilermann, columns or all")
      ->required();
  verify->add_option("--order", o.order, "series order for theorem and S_inf checks");
  verify->add_option("--n-max", o.n_max, "largest level for lemma-pf, pb-relations, eqs-2-5; last row for columns");
  verify->add_option("--i-max", o.i_max, "last column for columns");
  verify->add_option("--j-max", o.j_max, "largest j for lemma-rs");
  verify->add_option("--report", o.report, "write one JSON record per instance to this file");
  verify->add_option("--perturb", o.perturb, "target:item:exponent[:param], add 1 to one closed-form coefficient");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (seq->parsed()) return cmd_seq(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (conv->parsed()) return cmd_convergent(o, out);
    if (bconv->parsed()) return cmd_bconvergent(o, out);
    if (hankel->parsed()) return cmd_hankel(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, args, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace stieltjes
