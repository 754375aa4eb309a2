#include "binvert/bfile.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace binvert {

std::optional<ExactInt> BFile::value_at(std::int64_t index) const {
  for (const auto& e : entries) {
    if (e.index == index) return e.value;
    if (e.index > index) break;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void malformed(int line_no, const std::string& why) {
  throw std::runtime_error("b-file line " + std::to_string(line_no) + ": " + why);
}

bool is_integer_token(const std::string& s) {
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile b;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      b.comments.push_back(line.substr(1));
      continue;
    }
    std::istringstream fields(line);
    std::string index_tok;
    std::string value_tok;
    std::string extra;
    if (!(fields >> index_tok >> value_tok)) malformed(line_no, "expected 'index value'");
    if (fields >> extra) malformed(line_no, "unexpected trailing field '" + extra + "'");
    if (!is_integer_token(index_tok)) malformed(line_no, "bad index '" + index_tok + "'");
    if (!is_integer_token(value_tok)) malformed(line_no, "bad value '" + value_tok + "'");
    BFileEntry entry{std::stoll(index_tok), ExactInt(value_tok)};
    if (!b.entries.empty() && entry.index <= b.entries.back().index) {
      malformed(line_no, "indices must be strictly increasing");
    }
    b.entries.push_back(std::move(entry));
  }
  return b;
}

BFile parse_bfile_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open b-file " + path);
  return parse_bfile(in);
}

void render_bfile(std::ostream& out, const BFile& b) {
  for (const auto& c : b.comments) out << '#' << c << '\n';
  for (const auto& e : b.entries) out << e.index << ' ' << e.value << '\n';
}

std::string render_bfile_text(const BFile& b) {
  std::ostringstream out;
  render_bfile(out, b);
  return out.str();
}

BFile to_bfile(const SeqFn& f) {
  BFile b;
  for (int n = 1; n <= f.size(); ++n) b.entries.push_back({n, f(n)});
  return b;
}

Alignment align_with_bfile(const SeqFn& f, const BFile& b, int max_shift) {
  std::vector<int> order{0};
  for (int magnitude = 1; magnitude <= max_shift; ++magnitude) {
    order.push_back(-magnitude);
    order.push_back(magnitude);
  }
  Alignment best;
  for (int shift : order) {
    int overlap = 0;
    bool ok = true;
    std::optional<std::int64_t> mismatch;
    for (int n = 1; n <= f.size(); ++n) {
      const auto expected = b.value_at(n + shift);
      if (!expected) continue;
      ++overlap;
      if (*expected != f(n)) {
        ok = false;
        mismatch = n;
        break;
      }
    }
    if (shift == 0) best.first_mismatch = mismatch;
    if (ok && overlap > best.overlap) {
      best.shift = shift;
      best.overlap = overlap;
      best.matched = true;
    }
  }
  return best;
}

}  // namespace binvert
