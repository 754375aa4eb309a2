#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "binvert/kernel.hpp"

namespace binvert {

enum class FamilyKind { Row, Diagonal, Central, CentralAdjacent, Custom };

// Initial function f_0 choice. `a` is meaningful for Row and Diagonal only;
// `custom_values` holds f_0(1), f_0(2), ... for Custom.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Row;
  int a = 0;
  std::vector<ExactInt> custom_values;

  static FamilySpec row(int a);
  static FamilySpec diagonal(int a);
  static FamilySpec central();
  static FamilySpec central_adjacent();
  static FamilySpec custom(std::vector<ExactInt> values);

  // Throws std::invalid_argument when the parameters violate the family's domain.
  void validate() const;

  // Short human-readable label, e.g. "row(a=2)" or "central".
  std::string label() const;

  bool operator==(const FamilySpec&) const = default;
};

// Parses "row", "diagonal", "central", "central-adjacent", "custom".
FamilyKind parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind kind);

inline constexpr int kDefaultTruncation = 64;

// A truncated arithmetic function f(1..N). Storage is 0-based internally;
// the accessors take the mathematical 1-based index.
class SeqFn {
 public:
  SeqFn() = default;
  SeqFn(std::vector<ExactInt> values, std::string origin);

  int size() const { return static_cast<int>(values_.size()); }
  const ExactInt& operator()(int n) const;
  const std::vector<ExactInt>& values() const { return values_; }
  const std::string& origin() const { return origin_; }

  bool operator==(const SeqFn& other) const { return values_ == other.values_; }

 private:
  std::vector<ExactInt> values_;
  std::string origin_;
};

ExactInt f0(const FamilySpec& spec, int n);

// f_0(1..N) as a sequence tagged with the family label.
SeqFn f0_sequence(const FamilySpec& spec, int N);

// Length l(i-1) of the words counted by f_0(i).
int word_length(const FamilySpec& spec, int i);

// One integer per line; blank lines and lines starting with '#' are skipped.
std::vector<ExactInt> read_custom_values(std::istream& in);
std::vector<ExactInt> load_custom_values(const std::string& path);

}  // namespace binvert
