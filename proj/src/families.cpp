#include "binvert/families.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>
#include <utility>

namespace binvert {

FamilySpec FamilySpec::row(int a) {
  FamilySpec spec{FamilyKind::Row, a, {}};
  spec.validate();
  return spec;
}

FamilySpec FamilySpec::diagonal(int a) {
  FamilySpec spec{FamilyKind::Diagonal, a, {}};
  spec.validate();
  return spec;
}

FamilySpec FamilySpec::central() { return FamilySpec{FamilyKind::Central, 0, {}}; }

FamilySpec FamilySpec::central_adjacent() {
  return FamilySpec{FamilyKind::CentralAdjacent, 0, {}};
}

FamilySpec FamilySpec::custom(std::vector<ExactInt> values) {
  FamilySpec spec{FamilyKind::Custom, 0, std::move(values)};
  spec.validate();
  return spec;
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Row:
    case FamilyKind::Diagonal:
      if (a < 1) throw std::invalid_argument(family_kind_name(kind) + " family needs a >= 1");
      break;
    case FamilyKind::Custom:
      if (custom_values.empty())
        throw std::invalid_argument("custom family needs at least one value");
      break;
    default:
      break;
  }
}

std::string FamilySpec::label() const {
  switch (kind) {
    case FamilyKind::Row:
    case FamilyKind::Diagonal:
      return family_kind_name(kind) + "(a=" + std::to_string(a) + ")";
    case FamilyKind::Custom:
      return "custom(" + std::to_string(custom_values.size()) + " values)";
    default:
      return family_kind_name(kind);
  }
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "row") return FamilyKind::Row;
  if (name == "diagonal") return FamilyKind::Diagonal;
  if (name == "central") return FamilyKind::Central;
  if (name == "central-adjacent") return FamilyKind::CentralAdjacent;
  if (name == "custom") return FamilyKind::Custom;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Row: return "row";
    case FamilyKind::Diagonal: return "diagonal";
    case FamilyKind::Central: return "central";
    case FamilyKind::CentralAdjacent: return "central-adjacent";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

SeqFn::SeqFn(std::vector<ExactInt> values, std::string origin)
    : values_(std::move(values)), origin_(std::move(origin)) {}

const ExactInt& SeqFn::operator()(int n) const {
  if (n < 1 || n > size()) {
    throw std::out_of_range("sequence index " + std::to_string(n) + " outside 1.." +
                            std::to_string(size()));
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

ExactInt f0(const FamilySpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("f0: n must be >= 1");
  switch (spec.kind) {
    case FamilyKind::Row:
      return binomial(spec.a, n - 1);
    case FamilyKind::Diagonal:
      return binomial(n + spec.a - 2, spec.a - 1);
    case FamilyKind::Central:
      return binomial(2 * n - 2, n - 1);
    case FamilyKind::CentralAdjacent:
      return binomial(2 * n - 1, n);
    case FamilyKind::Custom:
      if (static_cast<std::size_t>(n) > spec.custom_values.size()) {
        throw std::out_of_range("custom f0 index " + std::to_string(n) + " beyond " +
                                std::to_string(spec.custom_values.size()) + " stored values");
      }
      return spec.custom_values[static_cast<std::size_t>(n - 1)];
  }
  throw std::logic_error("f0: unhandled family");
}

SeqFn f0_sequence(const FamilySpec& spec, int N) {
  spec.validate();
  if (N < 0) throw std::invalid_argument("f0_sequence: N must be >= 0");
  std::vector<ExactInt> values;
  values.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) values.push_back(f0(spec, n));
  return SeqFn(std::move(values), "f0:" + spec.label());
}

int word_length(const FamilySpec& spec, int i) {
  if (i < 1) throw std::invalid_argument("word_length: i must be >= 1");
  switch (spec.kind) {
    case FamilyKind::Row:
    case FamilyKind::Diagonal:
      return i - 1;
    case FamilyKind::Central:
      return 2 * i - 2;
    case FamilyKind::CentralAdjacent:
      return 2 * i - 1;
    case FamilyKind::Custom:
      throw std::invalid_argument("custom family has no word model");
  }
  throw std::logic_error("word_length: unhandled family");
}

std::vector<ExactInt> read_custom_values(std::istream& in) {
  std::vector<ExactInt> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      values.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer: '" +
                                  token + "'");
    }
  }
  if (values.empty()) throw std::invalid_argument("custom sequence file has no values");
  return values;
}

std::vector<ExactInt> load_custom_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_custom_values(in);
}

}  // namespace binvert
