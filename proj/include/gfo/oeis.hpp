#pragma once

// OEIS prefixes for every sequence cited alongside the single-letter and
// r r+s r families.  Generated by tools/oeis_fixtures.py from the defining
// formula of each sequence; offsets follow the OEIS entries.

#include <cstdint>
#include <string_view>
#include <vector>

namespace gfo::oeis {

struct Fixture {
  std::string_view id;
  int column;  // array column for tabular entries, else 0
  int offset;  // index of the first term
  std::string_view name;
  std::string_view definition;
  std::vector<std::int64_t> terms;
};

/// Coefficients of x^first_degree.. in a generating function at t = 1
/// against terms[first_index..] of a fixture.
struct Check {
  std::string_view id;
  int column;
  char set;  // 'S', 'F' or 'A'
  std::string_view pattern;
  unsigned first_degree;
  unsigned first_index;
  unsigned count;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table{
      {"A000045", 0, 0, "Fibonacci numbers", "F(n), F(0) = 0, F(1) = 1",
       {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610}},
      {"A000071", 0, 1, "Fibonacci partial sums", "F(n) - 1",
       {0, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609, 986}},
      {"A000073", 0, 0, "Tribonacci numbers", "0, 0, 1, then sum of previous three",
       {0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705}},
      {"A000078", 0, 0, "Tetranacci numbers", "0, 0, 0, 1, then sum of previous four",
       {0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490}},
      {"A000124", 0, 0, "Central polygonal numbers", "n(n+1)/2 + 1",
       {1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92, 106, 121}},
      {"A000126", 0, 1, "F(n+3) - n - 1", "F(n+3) - n - 1",
       {1, 2, 4, 8, 15, 27, 47, 80, 134, 222, 365, 597, 973, 1582, 2568, 4164}},
      {"A000292", 0, 0, "Tetrahedral numbers", "n(n+1)(n+2)/6",
       {0, 1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455, 560, 680}},
      {"A001591", 0, 0, "Pentanacci numbers", "0, 0, 0, 0, 1, then sum of previous five",
       {0, 0, 0, 0, 1, 1, 2, 4, 8, 16, 31, 61, 120, 236, 464, 912}},
      {"A001949", 0, 0, "Pentanacci partial sums", "partial sums of A001591",
       {0, 0, 0, 0, 1, 2, 4, 8, 16, 32, 63, 124, 244, 480, 944, 1856}},
      {"A007800", 0, 1, "AI planning sequence", "a(n) = 4 + a(n-1) + a(n-2) + a(n-3) + a(n-4) - a(n-5) - a(n-6) - a(n-7), seeded 1, 2, 4, 8, 16, 31, 59",
       {1, 2, 4, 8, 16, 31, 59, 111, 207, 384, 710, 1310, 2414, 4445, 8181, 15053}},
      {"A008466", 0, 0, "Runs of 2 heads", "2^n - F(n+2)",
       {0, 0, 1, 3, 8, 19, 43, 94, 201, 423, 880, 1815, 3719, 7582, 15397, 31171}},
      {"A008937", 0, 0, "Tribonacci partial sums", "partial sums of A000073",
       {0, 0, 1, 2, 4, 8, 15, 28, 52, 96, 177, 326, 600, 1104, 2031, 3736}},
      {"A014162", 0, 0, "Triple Fibonacci partial sums", "partial sums, applied three times, of F(n)",
       {0, 1, 4, 11, 25, 51, 97, 176, 309, 530, 894, 1490, 2462, 4043, 6610, 10773}},
      {"A050231", 0, 0, "Runs of 3 heads", "2^n - A000073(n+3)",
       {0, 0, 0, 1, 3, 8, 20, 47, 107, 238, 520, 1121, 2391, 5056, 10616, 22159}},
      {"A050232", 0, 0, "Runs of 4 heads", "2^n - A000078(n+4)",
       {0, 0, 0, 0, 1, 3, 8, 20, 48, 111, 251, 558, 1224, 2656, 5713, 12199}},
      {"A050233", 0, 0, "Runs of 5 heads", "2^n - A001591(n+5)",
       {0, 0, 0, 0, 0, 1, 3, 8, 20, 48, 112, 255, 571, 1262, 2760, 5984}},
      {"A107066", 0, 0, "Tetranacci partial sums", "partial sums of A000078",
       {0, 0, 0, 1, 2, 4, 8, 16, 31, 60, 116, 224, 432, 833, 1606, 3096}},
      {"A145112", 0, 0, "Binary words, gaps below 4", "binary words of length n with fewer than four 0s between consecutive 1s",
       {1, 2, 4, 8, 16, 32, 63, 123, 239, 463, 895, 1728, 3334, 6430, 12398, 23902}},
      {"A145113", 0, 0, "Binary words, gaps below 5", "binary words of length n with fewer than five 0s between consecutive 1s",
       {1, 2, 4, 8, 16, 32, 64, 127, 251, 495, 975, 1919, 3775, 7424, 14598, 28702}},
      {"A172119", 2, 0, "Array column 2", "partial sums of the 2-step Fibonacci numbers, from the first 1",
       {1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609, 986, 1596, 2583}},
      {"A172119", 3, 0, "Array column 3", "partial sums of the 3-step Fibonacci numbers, from the first 1",
       {1, 2, 4, 8, 15, 28, 52, 96, 177, 326, 600, 1104, 2031, 3736, 6872, 12640}},
      {"A172119", 4, 0, "Array column 4", "partial sums of the 4-step Fibonacci numbers, from the first 1",
       {1, 2, 4, 8, 16, 31, 60, 116, 224, 432, 833, 1606, 3096, 5968, 11504, 22175}},
      {"A172119", 5, 0, "Array column 5", "partial sums of the 5-step Fibonacci numbers, from the first 1",
       {1, 2, 4, 8, 16, 32, 63, 124, 244, 480, 944, 1856, 3649, 7174, 14104, 27728}},
  };
  return table;
}

inline const std::vector<Check>& checks() {
  static const std::vector<Check> table{
      {"A000045", 0, 'A', "3", 0, 1, 15},
      {"A000073", 0, 'A', "4", 0, 2, 14},
      {"A000078", 0, 'A', "5", 0, 3, 13},
      {"A001591", 0, 'A', "6", 0, 4, 12},
      {"A000071", 0, 'S', "3", 3, 2, 14},
      {"A008937", 0, 'S', "4", 4, 2, 14},
      {"A107066", 0, 'S', "5", 5, 3, 13},
      {"A001949", 0, 'S', "6", 6, 4, 12},
      {"A172119", 2, 'S', "3", 3, 0, 16},
      {"A172119", 3, 'S', "4", 4, 0, 16},
      {"A172119", 4, 'S', "5", 5, 0, 16},
      {"A172119", 5, 'S', "6", 6, 0, 16},
      {"A008466", 0, 'F', "3", 1, 0, 16},
      {"A050231", 0, 'F', "4", 1, 0, 16},
      {"A050232", 0, 'F', "5", 1, 0, 16},
      {"A050233", 0, 'F', "6", 1, 0, 16},
      {"A000292", 0, 'S', "121", 4, 1, 15},
      {"A014162", 0, 'S', "131", 5, 1, 15},
      {"A000124", 0, 'A', "121", 1, 0, 16},
      {"A000126", 0, 'A', "131", 1, 0, 16},
      {"A007800", 0, 'A', "141", 1, 0, 16},
      {"A145112", 0, 'A', "151", 1, 0, 16},
      {"A145113", 0, 'A', "161", 1, 0, 16},
  };
  return table;
}

}  // namespace gfo::oeis
