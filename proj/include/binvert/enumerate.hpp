#pragma once

// Exhaustive enumeration kernels shared by the oracles. Each kernel runs a
// classifier over every object of a finite space and returns a histogram of
// the bucket indices it reports (a negative index rejects the object).
//
// The default kernels split the space across OpenMP threads; the versions in
// `reference` walk it on one thread in a different order and exist so the
// parallel ones can be checked against them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace binvert {

inline constexpr int kMaxWordLength = 16;
inline constexpr int kMaxDyckSemilength = 13;

using Histogram = std::vector<std::uint64_t>;
using Letter = std::uint8_t;

namespace detail {

inline std::uint64_t checked_power(int base, int exp) {
  std::uint64_t r = 1;
  for (int t = 0; t < exp; ++t) r *= static_cast<std::uint64_t>(base);
  return r;
}

inline void check_word_space(int alphabet, int length) {
  if (alphabet < 1 || alphabet > 255) throw std::invalid_argument("alphabet size must be 1..255");
  if (length < 0 || length > kMaxWordLength) {
    throw std::length_error("word length " + std::to_string(length) + " outside 0.." +
                            std::to_string(kMaxWordLength));
  }
}

template <typename Classify>
inline void tally(Histogram& hist, Classify& classify, std::span<const Letter> word) {
  const int bucket = classify(word);
  if (bucket >= 0 && static_cast<std::size_t>(bucket) < hist.size()) ++hist[bucket];
}

}  // namespace detail

/// Runs `classify` over all alphabet^length words. The space is cut into
/// prefixes of fixed length; threads take whole prefixes and walk the
/// remaining positions with an odometer.
template <typename Classify>
Histogram histogram_words(int alphabet, int length, int buckets, Classify classify) {
  detail::check_word_space(alphabet, length);
  Histogram total(static_cast<std::size_t>(buckets), 0);

  int prefix_len = 0;
  while (prefix_len < length && detail::checked_power(alphabet, prefix_len) < 256) ++prefix_len;
  const auto prefixes = static_cast<std::int64_t>(detail::checked_power(alphabet, prefix_len));

#pragma omp parallel
  {
    Histogram local(total.size(), 0);
    std::array<Letter, kMaxWordLength> word{};
    const std::span<const Letter> view(word.data(), static_cast<std::size_t>(length));

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < prefixes; ++p) {
      std::int64_t code = p;
      for (int pos = prefix_len - 1; pos >= 0; --pos) {
        word[pos] = static_cast<Letter>(code % alphabet);
        code /= alphabet;
      }
      for (int pos = prefix_len; pos < length; ++pos) word[pos] = 0;
      while (true) {
        detail::tally(local, classify, view);
        int pos = length - 1;
        while (pos >= prefix_len && word[pos] == alphabet - 1) word[pos--] = 0;
        if (pos < prefix_len) break;
        ++word[pos];
      }
    }

#pragma omp critical(binvert_histogram_merge)
    for (std::size_t b = 0; b < total.size(); ++b) total[b] += local[b];
  }
  return total;
}

/// Runs `classify` over all Dyck paths of the given semilength. Steps are
/// encoded 1 = up, 0 = down. Threads take disjoint prefixes and never step
/// outside the valid region.
template <typename Classify>
Histogram histogram_dyck(int semilength, int buckets, Classify classify) {
  if (semilength < 0 || semilength > kMaxDyckSemilength) {
    throw std::length_error("Dyck semilength " + std::to_string(semilength) + " outside 0.." +
                            std::to_string(kMaxDyckSemilength));
  }
  Histogram total(static_cast<std::size_t>(buckets), 0);
  const int steps = 2 * semilength;
  // Work is split over prefixes; each valid prefix is completed depth first.
  const int prefix = std::min(steps, 12);
  const std::int64_t prefixes = std::int64_t{1} << prefix;

#pragma omp parallel
  {
    Histogram local(total.size(), 0);
    std::array<Letter, 2 * kMaxDyckSemilength> path{};
    const std::span<const Letter> view(path.data(), static_cast<std::size_t>(steps));

    // height after `pos` steps; ups counts up steps taken so far.
    auto grow = [&](auto&& self, int pos, int height, int ups) -> void {
      if (pos == steps) {
        detail::tally(local, classify, view);
        return;
      }
      if (ups < semilength) {
        path[pos] = 1;
        self(self, pos + 1, height + 1, ups + 1);
      }
      if (height > 0) {
        path[pos] = 0;
        self(self, pos + 1, height - 1, ups);
      }
    };

#pragma omp for schedule(dynamic, 16)
    for (std::int64_t mask = 0; mask < prefixes; ++mask) {
      int height = 0;
      int ups = 0;
      bool ok = true;
      for (int s = 0; s < prefix && ok; ++s) {
        const Letter up = static_cast<Letter>((mask >> (prefix - 1 - s)) & 1);
        path[s] = up;
        ups += up;
        height += up ? 1 : -1;
        ok = height >= 0 && ups <= semilength;
      }
      if (ok) grow(grow, prefix, height, ups);
    }

#pragma omp critical(binvert_histogram_merge)
    for (std::size_t b = 0; b < total.size(); ++b) total[b] += local[b];
  }
  return total;
}

namespace reference {

template <typename Classify>
Histogram histogram_words(int alphabet, int length, int buckets, Classify classify) {
  detail::check_word_space(alphabet, length);
  Histogram hist(static_cast<std::size_t>(buckets), 0);
  std::vector<Letter> word(static_cast<std::size_t>(length), 0);
  while (true) {
    detail::tally(hist, classify, std::span<const Letter>(word));
    int pos = length - 1;
    while (pos >= 0 && word[pos] == alphabet - 1) word[pos--] = 0;
    if (pos < 0) break;
    ++word[pos];
  }
  return hist;
}

namespace detail_dyck {

template <typename Classify>
void grow(std::vector<Letter>& path, int ups, int downs, int semilength, Histogram& hist,
          Classify& classify) {
  if (ups == semilength && downs == semilength) {
    binvert::detail::tally(hist, classify, std::span<const Letter>(path));
    return;
  }
  if (ups < semilength) {
    path.push_back(1);
    grow(path, ups + 1, downs, semilength, hist, classify);
    path.pop_back();
  }
  if (downs < ups) {
    path.push_back(0);
    grow(path, ups, downs + 1, semilength, hist, classify);
    path.pop_back();
  }
}

}  // namespace detail_dyck

// Generates Dyck paths recursively (never leaving the valid region) instead
// of filtering bitmasks.
template <typename Classify>
Histogram histogram_dyck(int semilength, int buckets, Classify classify) {
  if (semilength < 0 || semilength > kMaxDyckSemilength) {
    throw std::length_error("Dyck semilength outside supported range");
  }
  Histogram hist(static_cast<std::size_t>(buckets), 0);
  std::vector<Letter> path;
  path.reserve(static_cast<std::size_t>(2 * semilength));
  detail_dyck::grow(path, 0, 0, semilength, hist, classify);
  return hist;
}

}  // namespace reference

}  // namespace binvert
