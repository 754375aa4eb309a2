#include "binvert/transforms.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace binvert {

CTriangle::CTriangle(int N, int m, std::optional<FamilySpec> base)
    : N_(N), m_(m), base_(std::move(base)) {
  if (N < 0) throw std::invalid_argument("triangle size must be >= 0");
  entries_.resize(offset(N + 1, 1));
}

ExactInt CTriangle::at(int n, int k) const {
  if (k < 1 || k > n || n > N_) return 0;
  return entries_[offset(n, k)];
}

const ExactInt& CTriangle::cref(int n, int k) const { return entries_[checked_offset(n, k)]; }

ExactInt& CTriangle::ref(int n, int k) { return entries_[checked_offset(n, k)]; }

std::size_t CTriangle::checked_offset(int n, int k) const {
  if (k < 1 || k > n || n > N_) {
    throw std::out_of_range("triangle entry (" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside N=" + std::to_string(N_));
  }
  return offset(n, k);
}

namespace {

void check_truncation(const SeqFn& f, int N) {
  if (N < 0) throw std::invalid_argument("triangle size must be >= 0");
  if (N > f.size()) {
    throw std::out_of_range("requested N=" + std::to_string(N) + " but sequence '" + f.origin() +
                            "' is truncated at " + std::to_string(f.size()));
  }
}

ExactInt column_entry(const SeqFn& f, const CTriangle& t, int n, int k) {
  ExactInt sum = 0;
  for (int i = 1; i <= n - k + 1; ++i) {
    const ExactInt& fi = f(i);
    if (fi != 0) sum += fi * t.cref(n - i, k - 1);
  }
  return sum;
}

}  // namespace

CTriangle c_triangle(const SeqFn& f, int N) {
  check_truncation(f, N);
  CTriangle t(N, 1, std::nullopt);
  for (int n = 1; n <= N; ++n) t.ref(n, 1) = f(n);
  for (int k = 2; k <= N; ++k) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int n = k; n <= N; ++n) t.ref(n, k) = column_entry(f, t, n, k);
  }
  return t;
}

namespace reference {

CTriangle c_triangle(const SeqFn& f, int N) {
  check_truncation(f, N);
  CTriangle t(N, 1, std::nullopt);
  for (int n = 1; n <= N; ++n) {
    t.ref(n, 1) = f(n);
    for (int k = 2; k <= n; ++k) t.ref(n, k) = column_entry(f, t, n, k);
  }
  return t;
}

}  // namespace reference

SeqFn invert_transform(const SeqFn& f) {
  const int N = f.size();
  const CTriangle t = c_triangle(f, N);
  std::vector<ExactInt> g(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    ExactInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += t.cref(n, k);
    g[static_cast<std::size_t>(n - 1)] = std::move(sum);
  }
  return SeqFn(std::move(g), "invert(" + f.origin() + ")");
}

SeqFn fm(const FamilySpec& spec, int m, int N) {
  if (m < 0) throw std::invalid_argument("fm: m must be >= 0");
  SeqFn f = f0_sequence(spec, N);
  for (int step = 0; step < m; ++step) f = invert_transform(f);
  return SeqFn(f.values(), "f" + std::to_string(m) + ":" + spec.label());
}

CTriangle cm(const FamilySpec& spec, int m, int N) {
  if (m < 1) throw std::invalid_argument("cm: m must be >= 1");
  const CTriangle plain = c_triangle(fm(spec, m - 1, N), N);
  CTriangle tagged(N, m, spec);
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n; ++k) tagged.ref(n, k) = plain.cref(n, k);
  return tagged;
}

namespace {

void check_lift_args(const CTriangle& c1, int m, int n) {
  if (c1.m() != 1) throw std::invalid_argument("lift needs the m = 1 triangle");
  if (m < 1) throw std::invalid_argument("lift: m must be >= 1");
  if (n < 1 || n > c1.N()) {
    throw std::out_of_range("lift: n=" + std::to_string(n) + " outside 1.." +
                            std::to_string(c1.N()));
  }
}

}  // namespace

ExactInt lift_cm_from_c1(const CTriangle& c1, int m, int n, int k) {
  check_lift_args(c1, m, n);
  if (k < 1 || k > n) throw std::out_of_range("lift: k outside 1..n");
  const ExactInt ratio = m - 1;
  ExactInt sum = 0;
  for (int i = k; i <= n; ++i) {
    sum += ipow(ratio, static_cast<std::uint32_t>(i - k)) * binomial(i - 1, k - 1) * c1.at(n, i);
  }
  return sum;
}

ExactInt lift_fm_from_c1(const CTriangle& c1, int m, int n) {
  check_lift_args(c1, m, n);
  const ExactInt ratio = m;
  ExactInt sum = 0;
  for (int i = 1; i <= n; ++i) sum += ipow(ratio, static_cast<std::uint32_t>(i - 1)) * c1.at(n, i);
  return sum;
}

void write_triangle_csv(std::ostream& out, const CTriangle& t) {
  out << "n,k,value\n";
  for (int n = 1; n <= t.N(); ++n)
    for (int k = 1; k <= n; ++k) out << n << ',' << k << ',' << t.at(n, k) << '\n';
}

void write_triangle_tsv(std::ostream& out, const CTriangle& t) {
  for (int n = 1; n <= t.N(); ++n) {
    out << n;
    for (int k = 1; k <= n; ++k) out << '\t' << t.at(n, k);
    out << '\n';
  }
}

}  // namespace binvert
