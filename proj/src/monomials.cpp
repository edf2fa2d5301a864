#include "catconf/monomials.hpp"

#include <map>
#include <stdexcept>

namespace catconf {

namespace {

void emit(int remaining_vars, int remaining_deg, Exponent& cur, std::vector<Exponent>& out) {
  if (remaining_vars == 0) {
    cur.push_back(remaining_deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining_deg; e >= 0; --e) {
    cur.push_back(e);
    emit(remaining_vars - 1, remaining_deg - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialOrder::MonomialOrder(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw std::invalid_argument("MonomialOrder: need n >= 1");
  if (d < 0) throw std::invalid_argument("MonomialOrder: need d >= 0");
  Exponent cur;
  cur.reserve(n + 1);
  emit(n, d, cur, exponents_);
}

int MonomialOrder::index_of(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_ + 1)
    throw std::out_of_range("MonomialOrder::index_of: wrong tuple length");
  // Descending lex position: count tuples that precede e.
  int deg = 0;
  for (int v : e) {
    if (v < 0) throw std::out_of_range("MonomialOrder::index_of: negative exponent");
    deg += v;
  }
  if (deg != d_) throw std::out_of_range("MonomialOrder::index_of: wrong degree");
  int idx = 0;
  int rem = d_;
  for (int var = 0; var < n_; ++var) {
    // Tuples with a larger exponent in slot `var` come first.
    for (int larger = rem; larger > e[var]; --larger)
      idx += static_cast<int>(binomial(rem - larger + n_ - var - 1, n_ - var - 1));
    rem -= e[var];
  }
  return idx;
}

MonomialOrder monomials(int n, int d) { return MonomialOrder(n, d); }

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    if (result > INT64_MAX / num) throw std::overflow_error("binomial: 64-bit overflow");
    result = result * num / i;  // exact: result*num is divisible by i here
  }
  return result;
}

std::int64_t multinomial(int d, const Exponent& e) {
  std::int64_t result = 1;
  int used = 0;
  for (int v : e) {
    used += v;
    const std::int64_t factor = binomial(used, v);
    if (factor != 0 && result > INT64_MAX / factor)
      throw std::overflow_error("multinomial: 64-bit overflow");
    result *= factor;
  }
  if (used != d) throw std::invalid_argument("multinomial: exponents do not sum to d");
  return result;
}

}  // namespace catconf
