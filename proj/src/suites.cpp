#include "binvert/suites.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binvert/closed_forms.hpp"
#include "binvert/families.hpp"
#include "binvert/oracles.hpp"
#include "binvert/transforms.hpp"

namespace binvert {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kP4LengthNote =
    "P4 words are enumerated at length 2n-1, the total of k blocks of length 2i_t-1 plus k-1 "
    "separators; the stated length n+k-1 agrees only when k = n.";

std::vector<FamilySpec> named_families() {
  std::vector<FamilySpec> out;
  for (int a = 1; a <= 4; ++a) out.push_back(FamilySpec::row(a));
  for (int a = 1; a <= 4; ++a) out.push_back(FamilySpec::diagonal(a));
  out.push_back(FamilySpec::central());
  out.push_back(FamilySpec::central_adjacent());
  return out;
}

Json nk(const std::string& family, int n, int k) {
  return Json{{"family", family}, {"n", n}, {"k", k}};
}

void closed_forms_suite(CheckReport& r, int n_max) {
  for (const auto& spec : named_families()) {
    const CTriangle t = c_triangle(f0_sequence(spec, n_max), n_max);
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; k <= n; ++k)
        r.compare("c1_closed_form", nk(spec.label(), n, k), t.at(n, k),
                  c1_closed_form(spec, n, k));
  }
  for (int n = 1; n <= n_max; ++n)
    r.compare("c1_central_first_column", Json{{"n", n}}, binomial(2 * n - 2, n - 1),
              c1_central(n, 1));
}

void identities_suite(CheckReport& r, int n_max) {
  for (int u = 1; u <= n_max; ++u)
    for (int v = 1; v <= u; ++v)
      for (int w = 1; w <= v; ++w) r.record_identity(identity_idd1(u, v, w));
  for (int n = 1; n <= n_max; ++n) {
    r.record_identity(identity_double_factorial(n));
    r.record_identity(identity_shifted_double_factorial(n));
  }
  for (int k = 1; k <= n_max; ++k)
    for (int j = 0; j < k; ++j) r.record_identity(identity_vanishing(k, j));
  for (int n = 2; n <= n_max; ++n) r.record_identity(power_of_four_check(n));
}

void lifts_suite(CheckReport& r, int n_max) {
  for (const auto& spec : named_families()) {
    const CTriangle c1 = cm(spec, 1, n_max);
    for (int m = 1; m <= 3; ++m) {
      const CTriangle direct = cm(spec, m, n_max);
      const SeqFn f = fm(spec, m, n_max);
      for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
          r.compare("lift_cm_from_c1",
                    Json{{"family", spec.label()}, {"m", m}, {"n", n}, {"k", k}},
                    direct.at(n, k), lift_cm_from_c1(c1, m, n, k));
        }
        r.compare("lift_fm_from_c1", Json{{"family", spec.label()}, {"m", m}, {"n", n}}, f(n),
                  lift_fm_from_c1(c1, m, n));
      }
    }
  }
}

void words_suite(CheckReport& r, int n_max) {
  struct Property {
    const char* name;
    FamilySpec (*family)(int);
    ExactInt (*count)(int, int, int, std::optional<int>, Reading, Exec);
  };
  const Property properties[] = {
      {"count_p1_words", FamilySpec::row, count_p1_words},
      {"count_p2_words", FamilySpec::diagonal, count_p2_words},
  };
  for (const auto& prop : properties) {
    for (int a = 1; a <= 3; ++a) {
      const FamilySpec spec = prop.family(a);
      for (int m = 0; m <= 2; ++m) {
        const SeqFn f = fm(spec, m, n_max);
        for (int n = 1; n <= n_max; ++n) {
          r.compare(prop.name, Json{{"a", a}, {"m", m}, {"n", n}}, f(n),
                    prop.count(a, m, n, std::nullopt, Reading::Blocks, Exec::Parallel));
        }
        if (m == 0) continue;
        const CTriangle t = cm(spec, m, n_max);
        for (int n = 1; n <= n_max; ++n)
          for (int k = 1; k <= n; ++k)
            r.compare(prop.name, Json{{"a", a}, {"m", m}, {"n", n}, {"k", k}}, t.at(n, k),
                      prop.count(a, m, n, k, Reading::Blocks, Exec::Parallel));
      }
    }
  }

  for (int a = 1; a <= 5; ++a) {
    for (int len = 0; len <= n_max; ++len) {
      const ExactInt counted = count_norise_words(a, len);
      r.compare("count_norise_words", Json{{"a", a}, {"len", len}, {"check", "closed_form"}},
                binomial(len + a - 1, a - 1), counted);
      if (a >= 2) {
        ExactInt recurrence = 0;
        for (int i = 1; i <= len + 1; ++i) recurrence += count_norise_words(a - 1, i - 1);
        r.compare("count_norise_words", Json{{"a", a}, {"len", len}, {"check", "recurrence"}},
                  recurrence, counted);
      }
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      r.compare("count_p3_words", nk("central", n, k), c1_central(n, k), count_p3_words(n, k));
      r.compare("count_p4_words", nk("central-adjacent", n, k), c1_central_adjacent(n, k),
                count_p4_words(n, k));
    }
  }
  r.note(kP4LengthNote);

  std::vector<FamilySpec> marker_families;
  for (int a = 1; a <= 3; ++a) marker_families.push_back(FamilySpec::row(a));
  for (int a = 1; a <= 3; ++a) marker_families.push_back(FamilySpec::diagonal(a));
  marker_families.push_back(FamilySpec::central());
  for (const auto& spec : marker_families) {
    const CTriangle t = c_triangle(f0_sequence(spec, n_max), n_max);
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; k <= n; ++k)
        r.compare("count_marker_words", nk(spec.label(), n, k), t.at(n, k),
                  count_marker_words(spec, n, k));
  }
  CheckCase rejection{"count_marker_words", nk("central-adjacent", 1, 1), "rejected", "",
                      CaseStatus::Fail};
  try {
    rejection.actual = count_marker_words(FamilySpec::central_adjacent(), 1, 1).str();
  } catch (const std::invalid_argument&) {
    rejection.actual = "rejected";
    rejection.status = CaseStatus::Pass;
  }
  r.add(std::move(rejection));
}

void paths_suite(CheckReport& r, int n_max) {
  for (int s = 2; s <= n_max + 1; ++s) {
    r.compare("count_two_peak_dyck", Json{{"s", s}}, f0(FamilySpec::diagonal(3), s - 1),
              count_two_peak_dyck(s));
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const ExactInt dyck = count_concat_two_peak(n, k);
      r.compare("count_concat_two_peak", nk("diagonal(a=3)", n, k),
                count_p2_words(3, 1, n, k), dyck);
      r.compare("count_concat_two_peak", nk("diagonal(a=3) closed form", n, k),
                c1_diagonal(3, n, k), dyck);
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const ExactInt paths = count_diag_lattice_paths(n, k);
      r.compare("count_diag_lattice_paths", nk("central", n, k), c1_central(n, k), paths);
      r.compare("count_diag_lattice_paths", nk("central words", n, k), count_p3_words(n, k),
                  paths);
    }
  }
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "closed-forms") return Suite::ClosedForms;
  if (name == "identities") return Suite::Identities;
  if (name == "words") return Suite::Words;
  if (name == "paths") return Suite::Paths;
  if (name == "lifts") return Suite::Lifts;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected closed-forms, identities, words, paths, lifts, all)");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::ClosedForms: return "closed-forms";
    case Suite::Identities: return "identities";
    case Suite::Words: return "words";
    case Suite::Paths: return "paths";
    case Suite::Lifts: return "lifts";
    case Suite::All: return "all";
  }
  return "?";
}

int default_n_max(Suite suite) {
  switch (suite) {
    case Suite::ClosedForms: return 24;
    case Suite::Identities: return 50;
    case Suite::Words: return 7;
    case Suite::Paths: return 8;
    case Suite::Lifts: return 16;
    case Suite::All: return 0;
  }
  return 0;
}

int n_max_cap(Suite suite) {
  switch (suite) {
    case Suite::ClosedForms: return 512;
    case Suite::Identities: return 512;
    case Suite::Words: return 8;   // P4 words reach length 2n-1 <= 16
    case Suite::Paths: return 9;   // Dyck semilength n+4 <= 13
    case Suite::Lifts: return 512;
    case Suite::All: return 8;
  }
  return 0;
}

CheckReport run_suite(Suite suite, const SuiteBounds& bounds) {
  if (bounds.n_max && (*bounds.n_max < 1 || *bounds.n_max > n_max_cap(suite))) {
    throw std::invalid_argument("n-max " + std::to_string(*bounds.n_max) + " outside 1.." +
                                std::to_string(n_max_cap(suite)) + " for suite " +
                                suite_name(suite));
  }
  CheckReport report(suite_name(suite));
  if (suite == Suite::All) {
    for (Suite part : {Suite::ClosedForms, Suite::Identities, Suite::Words, Suite::Paths,
                       Suite::Lifts}) {
      report.merge(run_suite(part, bounds));
    }
    return report;
  }
  const int n_max = bounds.n_max.value_or(default_n_max(suite));
  switch (suite) {
    case Suite::ClosedForms: closed_forms_suite(report, n_max); break;
    case Suite::Identities: identities_suite(report, n_max); break;
    case Suite::Words: words_suite(report, n_max); break;
    case Suite::Paths: paths_suite(report, n_max); break;
    case Suite::Lifts: lifts_suite(report, n_max); break;
    case Suite::All: break;
  }
  return report;
}

}  // namespace binvert
