#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "binvert/families.hpp"
#include "binvert/kernel.hpp"

namespace binvert {

// Lower-triangular table c(n, k), 1 <= k <= n <= N. Reads outside the
// triangle return 0.
class CTriangle {
 public:
  CTriangle() = default;
  CTriangle(int N, int m, std::optional<FamilySpec> base);

  int N() const { return N_; }
  int m() const { return m_; }
  const std::optional<FamilySpec>& base() const { return base_; }

  ExactInt at(int n, int k) const;
  // Checked access to a stored entry (1 <= k <= n <= N).
  const ExactInt& cref(int n, int k) const;
  ExactInt& ref(int n, int k);

  bool operator==(const CTriangle& other) const {
    return N_ == other.N_ && entries_ == other.entries_;
  }

 private:
  static std::size_t offset(int n, int k) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 +
           static_cast<std::size_t>(k - 1);
  }
  std::size_t checked_offset(int n, int k) const;

  int N_ = 0;
  int m_ = 1;
  std::optional<FamilySpec> base_;
  std::vector<ExactInt> entries_;
};

// Convolution triangle of f via c(n,1) = f(n), c(n,k) = sum_i f(i) c(n-i,k-1).
// Columns are filled left to right; the rows of one column are independent
// and are computed in parallel with OpenMP.
CTriangle c_triangle(const SeqFn& f, int N);

// g(n) = sum_k c(n,k); on generating functions G = F / (1 - F).
SeqFn invert_transform(const SeqFn& f);

// m-fold invert transform of f_0; m = 0 returns f_0.
SeqFn fm(const FamilySpec& spec, int m, int N);

// Triangle of f_{m-1}, tagged with m and the base family.
CTriangle cm(const FamilySpec& spec, int m, int N);

// sum_{i=k}^{n} (m-1)^{i-k} C(i-1,k-1) c_1(n,i), with 0^0 = 1.
ExactInt lift_cm_from_c1(const CTriangle& c1, int m, int n, int k);

// sum_{i=1}^{n} m^{i-1} c_1(n,i).
ExactInt lift_fm_from_c1(const CTriangle& c1, int m, int n);

// "n,k,value" with header.
void write_triangle_csv(std::ostream& out, const CTriangle& t);
// One line per n: n followed by c(n,1..n), tab separated.
void write_triangle_tsv(std::ostream& out, const CTriangle& t);

namespace reference {

// Single-threaded version of c_triangle, kept as the baseline for the
// parallel one.
CTriangle c_triangle(const SeqFn& f, int N);

}  // namespace reference

}  // namespace binvert
