#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "binvert/enumerate.hpp"
#include "binvert/families.hpp"
#include "binvert/kernel.hpp"

namespace binvert {

// A word over {0, ..., alphabet-1}.
struct Word {
  std::vector<Letter> letters;
  int alphabet = 0;

  bool valid() const;
};

// Lattice path step: Right (1,0), Up (0,1) or Diag (1,1).
enum class Step : std::uint8_t { Right, Up, Diag };

struct LatticePath {
  std::vector<Step> steps;
  int start_x = 0;
  int start_y = 0;

  std::pair<int, int> end() const;
  // Every Diag step leaves a point with equal coordinates.
  bool diagonal_steps_on_main_diagonal() const;
};

// Up/down steps, true = up.
struct DyckPath {
  std::vector<bool> steps;

  int semilength() const { return static_cast<int>(steps.size()) / 2; }
  bool valid() const;
  int peaks() const;
};

// How "subwords over the low letters" is read: maximal contiguous runs of
// low letters (between separators), or the scattered subsequence of all low
// letters.
enum class Reading { Blocks, Subsequence };

enum class Exec { Parallel, Serial };

// Low-letter predicates used by the word counters. A letter >= `low` ends
// the current run.
bool runs_strictly_increasing(std::span<const Letter> word, int low);
bool runs_weakly_decreasing(std::span<const Letter> word, int low);
bool subsequence_strictly_increasing(std::span<const Letter> word, int low);
bool subsequence_weakly_decreasing(std::span<const Letter> word, int low);
// Every maximal run of letters < 2 has equally many 0s and 1s.
bool binary_runs_balanced(std::span<const Letter> word);
// Every maximal run of letters < 2 has one more 1 than 0s.
bool binary_runs_one_heavy(std::span<const Letter> word);

// Words of length n-1 over {0..a+m-1} whose low runs (letters < a) are
// strictly increasing. With k: exactly k-1 copies of the top letter a+m-1,
// which needs m >= 1. Counts c_m(n,k) (k given) or f_m(n).
ExactInt count_p1_words(int a, int m, int n, std::optional<int> k = std::nullopt,
                        Reading reading = Reading::Blocks, Exec exec = Exec::Parallel);

// As count_p1_words with weakly decreasing low runs (no rises).
ExactInt count_p2_words(int a, int m, int n, std::optional<int> k = std::nullopt,
                        Reading reading = Reading::Blocks, Exec exec = Exec::Parallel);

// Weakly decreasing words of length `len` over {0..a-1}.
ExactInt count_norise_words(int a, int len, Exec exec = Exec::Parallel);

// Ternary words of length 2n-k-1 with k-1 twos whose binary runs are balanced.
ExactInt count_p3_words(int n, int k, Exec exec = Exec::Parallel);

// Ternary words of length 2n-1 with k-1 twos, none at either end, no two
// adjacent, each binary run having one more 1 than 0s.
ExactInt count_p4_words(int n, int k, Exec exec = Exec::Parallel);

// Words w_{i_1-1} x w_{i_2-1} x ... x w_{i_k-1} over the family's base
// alphabet plus a marker x, summed over compositions of n. Defined for Row,
// Diagonal and Central; CentralAdjacent and Custom are rejected.
ExactInt count_marker_words(const FamilySpec& spec, int n, int k, Exec exec = Exec::Parallel);

// Dyck paths of semilength s with exactly two peaks; 0 for s = 1.
ExactInt count_two_peak_dyck(int s, Exec exec = Exec::Parallel);

// Dyck paths of semilength n+k that factor as k consecutive two-peak Dyck
// paths.
ExactInt count_concat_two_peak(int n, int k, Exec exec = Exec::Parallel);

// Number of two-peak factors in `path` if it is such a concatenation, else -1.
int two_peak_factor_count(std::span<const Letter> path);

// Monotone lattice paths (0,0) -> (n-1,n-1) using exactly k-1 Diag steps,
// each taken from the main diagonal. Dynamic programming over the grid.
ExactInt count_diag_lattice_paths(int n, int k);

namespace reference {

// Explicit list of the paths count_diag_lattice_paths counts.
std::vector<LatticePath> enumerate_diag_lattice_paths(int n, int k);

// Explicit list of all Dyck paths of the given semilength.
std::vector<DyckPath> enumerate_dyck_paths(int semilength);

}  // namespace reference

}  // namespace binvert
