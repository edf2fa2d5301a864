#include "catconf/formulas.hpp"

#include <stdexcept>

#include "catconf/monomials.hpp"

namespace catconf {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if (a > INT64_MAX - b) throw std::overflow_error("formulas: 64-bit overflow");
  return a + b;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > INT64_MAX / a) throw std::overflow_error("formulas: 64-bit overflow");
  return a * b;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

void require_positive(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("formulas: need n >= 1 and r >= 1");
}

}  // namespace

std::optional<std::int64_t> perfect_case(int n, int r, const std::vector<int>& degrees) {
  require_positive(n, r);
  if (static_cast<int>(degrees.size()) != r)
    throw std::invalid_argument("perfect_case: degrees must have length r");
  std::int64_t total = 0;
  for (int a : degrees) {
    if (a < 1) throw std::invalid_argument("perfect_case: degrees must be >= 1");
    total = checked_add(total, binomial(a + n, n));
  }
  const std::int64_t fiber = r + n;  // free coordinates per summand: n point + r weights
  if (total % fiber != 0) return std::nullopt;
  return total / fiber;
}

std::int64_t generic_rank_uniform(int n, int r, int a) {
  require_positive(n, r);
  if (a < 1) throw std::invalid_argument("generic_rank_uniform: need a >= 1");
  return ceil_div(checked_mul(r, binomial(a + n, n)), n + r);
}

DefectReport defectivity_check(int n, int r, int a1, int s, int a2) {
  require_positive(n, r);
  if (s < 1 || a1 < 1 || a2 < 1)
    throw std::invalid_argument("defectivity_check: need s, a1, a2 >= 1");
  DefectReport rep{};
  rep.k = generic_rank_uniform(n, r, a1);
  const std::int64_t joint =
      checked_add(checked_mul(r, binomial(a1 + n, n)), checked_mul(s, binomial(a2 + n, n)));
  rep.kprime = ceil_div(joint, n + r + s);
  rep.defective = rep.k >= rep.kprime;
  return rep;
}

}  // namespace catconf
