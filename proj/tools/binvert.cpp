// binvert: invert-transform sequences, convolution triangles and their
// brute-force verification from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "binvert/commands.hpp"
#include "binvert/families.hpp"

#ifndef BINVERT_FIXTURE_DIR
#define BINVERT_FIXTURE_DIR "fixtures/oeis"
#endif

namespace {

struct FamilyOptions {
  std::string family = "row";
  int a = 2;
  std::string values_path;
  int m = 1;
  int n_max = 20;
  std::string format = "plain";
};

void add_family_options(CLI::App& cmd, FamilyOptions& opt) {
  cmd.add_option("--family", opt.family, "row, diagonal, central, central-adjacent or custom")
      ->check(CLI::IsMember({"row", "diagonal", "central", "central-adjacent", "custom"}))
      ->capture_default_str();
  cmd.add_option("--a", opt.a, "parameter a for the row and diagonal families")
      ->capture_default_str();
  cmd.add_option("--values", opt.values_path, "custom f_0 values, one integer per line");
  cmd.add_option("--m", opt.m, "transform order")->capture_default_str();
  cmd.add_option("--n-max", opt.n_max, "truncation bound N")->capture_default_str();
}

binvert::FamilySpec make_spec(const FamilyOptions& opt) {
  switch (binvert::parse_family_kind(opt.family)) {
    case binvert::FamilyKind::Row: return binvert::FamilySpec::row(opt.a);
    case binvert::FamilyKind::Diagonal: return binvert::FamilySpec::diagonal(opt.a);
    case binvert::FamilyKind::Central: return binvert::FamilySpec::central();
    case binvert::FamilyKind::CentralAdjacent: return binvert::FamilySpec::central_adjacent();
    case binvert::FamilyKind::Custom:
      if (opt.values_path.empty()) throw std::invalid_argument("--family custom needs --values");
      return binvert::FamilySpec::custom(binvert::load_custom_values(opt.values_path));
  }
  throw std::invalid_argument("unknown family");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invert transforms of binomial-coefficient sequences, with exhaustive checks"};
  app.require_subcommand(1);

  std::string out_path;
  int threads = 0;
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--threads", threads, "OpenMP threads for enumeration kernels (0 = default)");

  FamilyOptions seq_opt;
  auto* seq = app.add_subcommand("seq", "print f_m(1..N)");
  add_family_options(*seq, seq_opt);
  seq->add_option("--format", seq_opt.format, "plain, csv, bfile or json")
      ->check(CLI::IsMember({"plain", "csv", "bfile", "json"}))
      ->capture_default_str();

  FamilyOptions table_opt;
  auto* table = app.add_subcommand("table", "print the c_m(n,k) triangle");
  add_family_options(*table, table_opt);
  table->add_option("--format", table_opt.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  std::string suite = "all";
  std::optional<int> verify_n_max;
  auto* verify = app.add_subcommand("verify", "run verification suites, JSON report");
  verify->add_option("--suite", suite, "closed-forms, identities, words, paths, lifts or all")
      ->capture_default_str();
  verify->add_option("--n-max", verify_n_max, "size bound (suite default when omitted)");

  FamilyOptions oeis_opt;
  std::string source = "A002478";
  bool fetch = false;
  std::string fixtures = BINVERT_FIXTURE_DIR;
  auto* oeis = app.add_subcommand("oeis", "compare f_m with an OEIS b-file");
  add_family_options(*oeis, oeis_opt);
  oeis->add_option("source", source, "A-number or path to a local b-file")->capture_default_str();
  oeis->add_flag("--fetch", fetch, "download the b-file (OEIS_BASE_URL overrides the host)");
  oeis->add_option("--fixtures", fixtures, "directory of vendored b-files")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    std::ostringstream out;
    int status = 0;
    if (*seq) {
      binvert::cmd_seq(out, make_spec(seq_opt), seq_opt.m, seq_opt.n_max,
                       binvert::parse_format(seq_opt.format));
    } else if (*table) {
      binvert::cmd_table(out, make_spec(table_opt), table_opt.m, table_opt.n_max,
                         binvert::parse_format(table_opt.format));
    } else if (*verify) {
      const auto report =
          binvert::cmd_verify(binvert::parse_suite(suite), binvert::SuiteBounds{verify_n_max});
      out << report.to_json().dump(2) << '\n';
      status = report.exit_code();
    } else if (*oeis) {
      binvert::OeisRequest request{make_spec(oeis_opt), oeis_opt.m, oeis_opt.n_max, source,
                                   fetch, fixtures, ""};
      const auto report = binvert::cmd_oeis(request);
      out << report.to_json().dump(2) << '\n';
      status = binvert::oeis_exit_code(report);
    }
    emit(out.str(), out_path);
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
