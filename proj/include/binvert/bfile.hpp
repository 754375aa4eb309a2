#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "binvert/families.hpp"
#include "binvert/kernel.hpp"

namespace binvert {

struct BFileEntry {
  std::int64_t index = 0;
  ExactInt value;

  bool operator==(const BFileEntry&) const = default;
};

// OEIS b-file: "index value" lines with strictly increasing indices.
struct BFile {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<BFileEntry> entries;

  std::optional<ExactInt> value_at(std::int64_t index) const;
  bool operator==(const BFile&) const = default;
};

// Throws std::runtime_error naming the offending line on malformed input.
BFile parse_bfile(std::istream& in);
BFile parse_bfile_text(const std::string& text);
BFile load_bfile(const std::string& path);

// Comment lines first ("#" + text), then "index value" lines, LF endings.
void render_bfile(std::ostream& out, const BFile& b);
std::string render_bfile_text(const BFile& b);

// f(1..N) as a b-file indexed from 1.
BFile to_bfile(const SeqFn& f);

struct Alignment {
  int shift = 0;       // f(n) == b(n + shift)
  int overlap = 0;     // number of indices compared
  bool matched = false;
  std::optional<std::int64_t> first_mismatch;  // n of the first mismatch at shift 0
};

// Tries every constant shift in [-max_shift, max_shift]. The match with the
// largest overlap wins, ties broken by the smaller |shift| and then the
// negative shift.
Alignment align_with_bfile(const SeqFn& f, const BFile& b, int max_shift = 2);

}  // namespace binvert
