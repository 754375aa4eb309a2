#pragma once

#include <iosfwd>
#include <string>

#include "binvert/families.hpp"
#include "binvert/report.hpp"
#include "binvert/suites.hpp"

namespace binvert {

enum class OutputFormat { Plain, Csv, BFile, Json };

OutputFormat parse_format(const std::string& name);

inline constexpr int kMaxTriangleN = 512;

// f_m(1..N): one value per line (plain), "n,value" (csv), "n value" (bfile)
// or a JSON object.
void cmd_seq(std::ostream& out, const FamilySpec& spec, int m, int N, OutputFormat format);

// c_m triangle: "n,k,value" (csv), n followed by the row, tab separated
// (plain), or JSON. The bfile format is rejected.
void cmd_table(std::ostream& out, const FamilySpec& spec, int m, int N, OutputFormat format);

CheckReport cmd_verify(Suite suite, const SuiteBounds& bounds);

struct OeisRequest {
  FamilySpec spec;
  int m = 1;
  int N = 20;
  std::string source;        // A-number or path to a b-file
  bool fetch = false;        // try the remote b-file first
  std::string fixtures_dir;  // where b<digits>.txt fixtures live
  std::string base_url;      // empty: OEIS_BASE_URL or the public site
};

// Compares f_m(1..N) with a b-file. An unavailable b-file produces a
// skipped case, never a pass.
CheckReport cmd_oeis(const OeisRequest& request);

// 0 pass, 1 any failure, 3 nothing compared (all skipped).
int oeis_exit_code(const CheckReport& report);

}  // namespace binvert
