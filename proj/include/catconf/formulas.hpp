#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace catconf {

// Closed-form counting arithmetic for simultaneous decompositions of r forms
// of the given degrees in n+1 variables. All arithmetic is exact 64-bit.

// Candidate summand count k = N / (dim X + 1) with N the total coefficient
// count and dim X = r + n - 1; empty when the division is not exact.
std::optional<std::int64_t> perfect_case(int n, int r, const std::vector<int>& degrees);

// Generic simultaneous rank for r forms of equal degree a:
// ceil( r * binom(a+n, n) / (n + r) ).
std::int64_t generic_rank_uniform(int n, int r, int a);

struct DefectReport {
  std::int64_t k;         // generic rank of the degree-a1 part alone
  std::int64_t kprime;    // expected generic rank with s extra degree-a2 forms
  bool defective;         // k >= kprime: the joint problem cannot be perfect
};

DefectReport defectivity_check(int n, int r, int a1, int s, int a2);

}  // namespace catconf
