#include "binvert/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace binvert {

bool Word::valid() const {
  return alphabet >= 1 &&
         std::all_of(letters.begin(), letters.end(), [&](Letter c) { return c < alphabet; });
}

std::pair<int, int> LatticePath::end() const {
  int x = start_x;
  int y = start_y;
  for (Step s : steps) {
    if (s != Step::Up) ++x;
    if (s != Step::Right) ++y;
  }
  return {x, y};
}

bool LatticePath::diagonal_steps_on_main_diagonal() const {
  int x = start_x;
  int y = start_y;
  for (Step s : steps) {
    if (s == Step::Diag && x != y) return false;
    if (s != Step::Up) ++x;
    if (s != Step::Right) ++y;
  }
  return true;
}

bool DyckPath::valid() const {
  int h = 0;
  for (bool up : steps) {
    h += up ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

int DyckPath::peaks() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) count += steps[i] && !steps[i + 1];
  return count;
}

bool runs_strictly_increasing(std::span<const Letter> word, int low) {
  int prev = -1;
  for (Letter c : word) {
    if (c >= low) {
      prev = -1;
    } else {
      if (c <= prev) return false;
      prev = c;
    }
  }
  return true;
}

bool runs_weakly_decreasing(std::span<const Letter> word, int low) {
  int prev = low;
  for (Letter c : word) {
    if (c >= low) {
      prev = low;
    } else {
      if (c > prev) return false;
      prev = c;
    }
  }
  return true;
}

bool subsequence_strictly_increasing(std::span<const Letter> word, int low) {
  int prev = -1;
  for (Letter c : word) {
    if (c >= low) continue;
    if (c <= prev) return false;
    prev = c;
  }
  return true;
}

bool subsequence_weakly_decreasing(std::span<const Letter> word, int low) {
  int prev = low;
  for (Letter c : word) {
    if (c >= low) continue;
    if (c > prev) return false;
    prev = c;
  }
  return true;
}

namespace {

// Ones minus zeros of each maximal binary run must equal `excess`.
bool binary_runs_with_excess(std::span<const Letter> word, int excess) {
  int diff = 0;
  for (Letter c : word) {
    if (c >= 2) {
      if (diff != excess) return false;
      diff = 0;
    } else {
      diff += c == 1 ? 1 : -1;
    }
  }
  return diff == excess;
}

}  // namespace

bool binary_runs_balanced(std::span<const Letter> word) { return binary_runs_with_excess(word, 0); }

bool binary_runs_one_heavy(std::span<const Letter> word) { return binary_runs_with_excess(word, 1); }

namespace {

template <typename Classify>
Histogram word_histogram(Exec exec, int alphabet, int length, int buckets, Classify classify) {
  if (exec == Exec::Serial) return reference::histogram_words(alphabet, length, buckets, classify);
  return histogram_words(alphabet, length, buckets, classify);
}

template <typename Classify>
Histogram dyck_histogram(Exec exec, int semilength, int buckets, Classify classify) {
  if (exec == Exec::Serial) return reference::histogram_dyck(semilength, buckets, classify);
  return histogram_dyck(semilength, buckets, classify);
}

ExactInt sum_of(const Histogram& h) {
  return std::accumulate(h.begin(), h.end(), ExactInt(0),
                         [](const ExactInt& acc, std::uint64_t v) { return acc + v; });
}

int count_letter(std::span<const Letter> word, Letter letter) {
  return static_cast<int>(std::count(word.begin(), word.end(), letter));
}

void require_nk(int n, int k, const char* what) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
}

using RunPredicate = bool (*)(std::span<const Letter>, int);

ExactInt count_low_run_words(const char* what, RunPredicate ok, int a, int m, int n,
                             std::optional<int> k, Exec exec) {
  if (a < 1 || m < 0 || n < 1) {
    throw std::invalid_argument(std::string(what) + ": need a >= 1, m >= 0, n >= 1");
  }
  if (k) {
    if (m < 1) throw std::invalid_argument(std::string(what) + ": k requires m >= 1");
    require_nk(n, *k, what);
  }
  const int alphabet = a + m;
  const auto top = static_cast<Letter>(alphabet - 1);
  const Histogram hist = word_histogram(exec, alphabet, n - 1, n, [=](std::span<const Letter> w) {
    if (!ok(w, a)) return -1;
    return m == 0 ? 0 : count_letter(w, top);
  });
  return k ? ExactInt(hist[static_cast<std::size_t>(*k - 1)]) : sum_of(hist);
}

}  // namespace

ExactInt count_p1_words(int a, int m, int n, std::optional<int> k, Reading reading, Exec exec) {
  const RunPredicate ok = reading == Reading::Blocks ? runs_strictly_increasing
                                                     : subsequence_strictly_increasing;
  return count_low_run_words("count_p1_words", ok, a, m, n, k, exec);
}

ExactInt count_p2_words(int a, int m, int n, std::optional<int> k, Reading reading, Exec exec) {
  const RunPredicate ok =
      reading == Reading::Blocks ? runs_weakly_decreasing : subsequence_weakly_decreasing;
  return count_low_run_words("count_p2_words", ok, a, m, n, k, exec);
}

ExactInt count_norise_words(int a, int len, Exec exec) {
  if (a < 1 || len < 0) throw std::invalid_argument("count_norise_words: need a >= 1, len >= 0");
  const Histogram hist = word_histogram(exec, a, len, 1, [=](std::span<const Letter> w) {
    return runs_weakly_decreasing(w, a) ? 0 : -1;
  });
  return hist[0];
}

ExactInt count_p3_words(int n, int k, Exec exec) {
  require_nk(n, k, "count_p3_words");
  const Histogram hist = word_histogram(exec, 3, 2 * n - k - 1, 1, [=](std::span<const Letter> w) {
    return count_letter(w, 2) == k - 1 && binary_runs_balanced(w) ? 0 : -1;
  });
  return hist[0];
}

ExactInt count_p4_words(int n, int k, Exec exec) {
  require_nk(n, k, "count_p4_words");
  const Histogram hist = word_histogram(exec, 3, 2 * n - 1, 1, [=](std::span<const Letter> w) {
    if (w.front() == 2 || w.back() == 2) return -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == 2 && w[i + 1] == 2) return -1;
    return count_letter(w, 2) == k - 1 && binary_runs_one_heavy(w) ? 0 : -1;
  });
  return hist[0];
}

ExactInt count_marker_words(const FamilySpec& spec, int n, int k, Exec exec) {
  require_nk(n, k, "count_marker_words");
  int base = 0;
  int slope = 1;
  RunPredicate block_ok = nullptr;
  switch (spec.kind) {
    case FamilyKind::Row:
      spec.validate();
      base = spec.a;
      block_ok = runs_strictly_increasing;
      break;
    case FamilyKind::Diagonal:
      spec.validate();
      base = spec.a;
      block_ok = runs_weakly_decreasing;
      break;
    case FamilyKind::Central:
      base = 2;
      slope = 2;
      block_ok = [](std::span<const Letter> w, int) { return binary_runs_balanced(w); };
      break;
    case FamilyKind::CentralAdjacent:
      throw std::invalid_argument(
          "count_marker_words: the empty word is not counted by central-adjacent f_0, so the "
          "marker construction does not apply");
    case FamilyKind::Custom:
      throw std::invalid_argument("count_marker_words: custom family has no word model");
  }
  const auto marker = static_cast<Letter>(base);
  const int length = word_length(spec, n - k + 1) + k - 1;
  const Histogram hist =
      word_histogram(exec, base + 1, length, 1, [=](std::span<const Letter> w) {
        int markers = 0;
        int index_sum = 0;
        std::size_t start = 0;
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
          if (pos < w.size() && w[pos] != marker) continue;
          const auto block = w.subspan(start, pos - start);
          if (block.size() % static_cast<std::size_t>(slope) != 0) return -1;
          if (!block_ok(block, base)) return -1;
          index_sum += static_cast<int>(block.size()) / slope + 1;
          if (pos < w.size()) ++markers;
          start = pos + 1;
        }
        return markers == k - 1 && index_sum == n ? 0 : -1;
      });
  return hist[0];
}

int two_peak_factor_count(std::span<const Letter> path) {
  int height = 0;
  int peaks = 0;
  int factors = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 1 && i + 1 < path.size() && path[i + 1] == 0 && ++peaks > 2) return -1;
    height += path[i] == 1 ? 1 : -1;
    if (height == 0 && peaks == 2) {
      ++factors;
      peaks = 0;
    }
  }
  return peaks == 0 ? factors : -1;
}

ExactInt count_two_peak_dyck(int s, Exec exec) {
  if (s < 1) throw std::invalid_argument("count_two_peak_dyck: need s >= 1");
  const Histogram hist = dyck_histogram(exec, s, 1, [](std::span<const Letter> p) {
    int peaks = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) peaks += p[i] == 1 && p[i + 1] == 0;
    return peaks == 2 ? 0 : -1;
  });
  return hist[0];
}

ExactInt count_concat_two_peak(int n, int k, Exec exec) {
  require_nk(n, k, "count_concat_two_peak");
  const Histogram hist = dyck_histogram(exec, n + k, k + 1, two_peak_factor_count);
  return hist[static_cast<std::size_t>(k)];
}

ExactInt count_diag_lattice_paths(int n, int k) {
  require_nk(n, k, "count_diag_lattice_paths");
  const int side = n;  // points 0..n-1 on each axis
  const int diags = k;  // 0..k-1 diagonal steps used
  std::vector<ExactInt> ways(static_cast<std::size_t>(side * side * diags), 0);
  auto at = [&](int x, int y, int d) -> ExactInt& {
    return ways[static_cast<std::size_t>((x * side + y) * diags + d)];
  };
  at(0, 0, 0) = 1;
  for (int x = 0; x < side; ++x) {
    for (int y = 0; y < side; ++y) {
      for (int d = 0; d < diags; ++d) {
        ExactInt& cell = at(x, y, d);
        if (x > 0) cell += at(x - 1, y, d);
        if (y > 0) cell += at(x, y - 1, d);
        if (x > 0 && y > 0 && d > 0 && x - 1 == y - 1) cell += at(x - 1, y - 1, d - 1);
      }
    }
  }
  return at(n - 1, n - 1, k - 1);
}

namespace reference {

namespace {

void walk(LatticePath& path, int x, int y, int diags_left, int target,
          std::vector<LatticePath>& out) {
  if (x == target && y == target && diags_left == 0) {
    out.push_back(path);
    return;
  }
  if (x < target) {
    path.steps.push_back(Step::Right);
    walk(path, x + 1, y, diags_left, target, out);
    path.steps.pop_back();
  }
  if (y < target) {
    path.steps.push_back(Step::Up);
    walk(path, x, y + 1, diags_left, target, out);
    path.steps.pop_back();
  }
  if (x == y && x < target && diags_left > 0) {
    path.steps.push_back(Step::Diag);
    walk(path, x + 1, y + 1, diags_left - 1, target, out);
    path.steps.pop_back();
  }
}

void grow(DyckPath& path, int ups, int downs, int semilength, std::vector<DyckPath>& out) {
  if (ups == semilength && downs == semilength) {
    out.push_back(path);
    return;
  }
  if (ups < semilength) {
    path.steps.push_back(true);
    grow(path, ups + 1, downs, semilength, out);
    path.steps.pop_back();
  }
  if (downs < ups) {
    path.steps.push_back(false);
    grow(path, ups, downs + 1, semilength, out);
    path.steps.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_diag_lattice_paths(int n, int k) {
  require_nk(n, k, "enumerate_diag_lattice_paths");
  std::vector<LatticePath> out;
  LatticePath path;
  walk(path, 0, 0, k - 1, n - 1, out);
  return out;
}

std::vector<DyckPath> enumerate_dyck_paths(int semilength) {
  if (semilength < 0 || semilength > kMaxDyckSemilength) {
    throw std::length_error("enumerate_dyck_paths: semilength outside supported range");
  }
  std::vector<DyckPath> out;
  DyckPath path;
  grow(path, 0, 0, semilength, out);
  return out;
}

}  // namespace reference

}  // namespace binvert
