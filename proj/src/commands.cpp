#include "binvert/commands.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "binvert/bfile.hpp"
#include "binvert/oeis.hpp"
#include "binvert/transforms.hpp"

namespace binvert {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "bfile") return OutputFormat::BFile;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

void check_request(const FamilySpec& spec, int m, int N, int min_m) {
  spec.validate();
  if (m < min_m) throw std::invalid_argument("m must be >= " + std::to_string(min_m));
  if (N < 1 || N > kMaxTriangleN) {
    throw std::invalid_argument("n-max " + std::to_string(N) + " outside 1.." +
                                std::to_string(kMaxTriangleN));
  }
  if (spec.kind == FamilyKind::Custom && static_cast<std::size_t>(N) > spec.custom_values.size()) {
    throw std::invalid_argument("n-max " + std::to_string(N) + " exceeds the " +
                                std::to_string(spec.custom_values.size()) + " custom values");
  }
}

Json string_values(const SeqFn& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(v.str());
  return values;
}

}  // namespace

void cmd_seq(std::ostream& out, const FamilySpec& spec, int m, int N, OutputFormat format) {
  check_request(spec, m, N, 0);
  const SeqFn f = fm(spec, m, N);
  switch (format) {
    case OutputFormat::Plain:
      for (const auto& v : f.values()) out << v << '\n';
      break;
    case OutputFormat::Csv:
      out << "n,value\n";
      for (int n = 1; n <= N; ++n) out << n << ',' << f(n) << '\n';
      break;
    case OutputFormat::BFile:
      render_bfile(out, to_bfile(f));
      break;
    case OutputFormat::Json:
      out << Json{{"family", spec.label()}, {"m", m}, {"values", string_values(f)}}.dump(2)
          << '\n';
      break;
  }
}

void cmd_table(std::ostream& out, const FamilySpec& spec, int m, int N, OutputFormat format) {
  check_request(spec, m, N, 1);
  if (format == OutputFormat::BFile) {
    throw std::invalid_argument("table output supports plain, csv and json");
  }
  const CTriangle t = cm(spec, m, N);
  switch (format) {
    case OutputFormat::Plain:
      write_triangle_tsv(out, t);
      break;
    case OutputFormat::Csv:
      write_triangle_csv(out, t);
      break;
    case OutputFormat::Json: {
      Json rows = Json::array();
      for (int n = 1; n <= N; ++n) {
        Json row = Json::array();
        for (int k = 1; k <= n; ++k) row.push_back(t.at(n, k).str());
        rows.push_back(std::move(row));
      }
      out << Json{{"family", spec.label()}, {"m", m}, {"rows", std::move(rows)}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::BFile:
      break;
  }
}

CheckReport cmd_verify(Suite suite, const SuiteBounds& bounds) { return run_suite(suite, bounds); }

CheckReport cmd_oeis(const OeisRequest& request) {
  CheckReport report("oeis");
  Json params{{"family", request.spec.label()}, {"m", request.m}, {"N", request.N},
              {"source", request.source}};
  if (request.N < 1) {
    report.skip("oeis_prefix", params, "empty comparison: N < 1");
    return report;
  }
  check_request(request.spec, request.m, request.N, 0);

  std::optional<BFile> bfile;
  std::string origin;
  if (is_anum(request.source)) {
    if (request.fetch) {
      const std::string base = request.base_url.empty() ? oeis_base_url() : request.base_url;
      const FetchResult fetched = fetch_bfile(request.source, base);
      if (fetched.body) {
        bfile = parse_bfile_text(*fetched.body);
        origin = "live:" + fetched.url;
      } else {
        report.note("fetch of " + fetched.url + " failed: " + fetched.error);
      }
    }
    if (!bfile && !request.fixtures_dir.empty()) {
      const auto path = std::filesystem::path(request.fixtures_dir) / bfile_name(request.source);
      if (std::filesystem::exists(path)) {
        bfile = load_bfile(path.string());
        origin = "fixture:" + path.string();
      }
    }
  } else {
    if (!std::filesystem::exists(request.source)) {
      throw std::invalid_argument("b-file not found: " + request.source);
    }
    bfile = load_bfile(request.source);
    origin = "file:" + request.source;
  }

  if (!bfile) {
    report.skip("oeis_prefix", params,
                "no b-file available for " + request.source +
                    (request.fetch ? "" : " (remote fetch disabled; pass --fetch)"));
    return report;
  }
  params["origin"] = origin;

  const SeqFn f = fm(request.spec, request.m, request.N);
  const Alignment alignment = align_with_bfile(f, *bfile);

  std::ostringstream computed;
  std::ostringstream reference;
  for (int n = 1; n <= f.size(); ++n) {
    const auto b = bfile->value_at(n + alignment.shift);
    if (!b) continue;
    computed << (computed.tellp() > 0 ? "," : "") << f(n);
    reference << (reference.tellp() > 0 ? "," : "") << *b;
  }
  params["shift"] = alignment.shift;
  params["overlap"] = alignment.overlap;
  report.add({"oeis_prefix", params, reference.str(), computed.str(),
              alignment.matched ? CaseStatus::Pass : CaseStatus::Fail});
  if (alignment.matched) {
    report.note("matched " + std::to_string(alignment.overlap) + " terms with index shift " +
                std::to_string(alignment.shift) + " (f(n) = b(n" +
                (alignment.shift < 0 ? "" : "+") + std::to_string(alignment.shift) + "))");
  } else if (alignment.first_mismatch) {
    report.note("no shift in [-2,2] matches; at shift 0 the first mismatch is n=" +
                std::to_string(*alignment.first_mismatch));
  } else {
    report.note("no overlapping indices between the sequence and the b-file");
  }
  return report;
}

int oeis_exit_code(const CheckReport& report) {
  const Summary s = report.summary();
  if (s.fail > 0) return 1;
  if (s.pass == 0) return 3;
  return 0;
}

}  // namespace binvert
