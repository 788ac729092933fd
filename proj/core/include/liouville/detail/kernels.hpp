#pragma once

// Storage-level kernels shared by the ring operations. All vectors are
// 1-based with an unused slot 0; `bound` is the last valid index.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace liouville::detail {

template <class T>
std::vector<std::size_t> support(const std::vector<T>& values, std::size_t bound) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (sgn(values[n]) != 0) out.push_back(n);
  }
  return out;
}

template <class T>
std::vector<T> convolve(const std::vector<T>& lhs, const std::vector<T>& rhs, std::size_t bound) {
  std::vector<T> out(bound + 1);
  const std::vector<std::size_t> rhs_support = support(rhs, bound);
  for (std::size_t d = 1; d <= bound; ++d) {
    if (sgn(lhs[d]) == 0) continue;
    const std::size_t limit = bound / d;
    for (const std::size_t m : rhs_support) {
      if (m > limit) break;
      out[d * m] += lhs[d] * rhs[m];
    }
  }
  return out;
}

// Exact quotient num/den, or false when it does not exist in the ring.
inline bool exact_quotient(mpz_class& out, const mpz_class& num, const mpz_class& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

inline bool exact_quotient(mpq_class& out, const mpq_class& num, const mpq_class& den) {
  out = num / den;
  return true;
}

// Triangular solve for the Dirichlet inverse. Caller guarantees values[1]
// is invertible in the ring of T.
template <class T>
std::vector<T> inverse(const std::vector<T>& values, std::size_t bound) {
  // out[n] accumulates sum_{d|n, d>1} values[d] * out[n/d] until n is reached.
  std::vector<T> out(bound + 1);
  std::vector<std::size_t> tail = support(values, bound);
  if (!tail.empty() && tail.front() == 1) tail.erase(tail.begin());

  const T& head = values[1];
  for (std::size_t m = 1; m <= bound; ++m) {
    if (m == 1) {
      exact_quotient(out[1], T(1), head);
    } else {
      T neg = -out[m];
      exact_quotient(out[m], neg, head);
    }
    if (sgn(out[m]) == 0) continue;
    const std::size_t limit = bound / m;
    for (const std::size_t d : tail) {
      if (d > limit) break;
      out[d * m] += values[d] * out[m];
    }
  }
  return out;
}

struct DivisionResult {
  bool divisible = false;
  std::size_t witness = 0;
};

// Solves divisor * quotient = dividend for quotient supported on
// 1..bound/rank, then checks the residual everywhere. `rank` is the least
// nonzero index of divisor.
template <class T>
DivisionResult divide(const std::vector<T>& dividend, const std::vector<T>& divisor,
                      std::size_t bound, std::size_t rank, std::vector<T>& quotient) {
  quotient.assign(bound + 1, T(0));
  std::vector<T> product(bound + 1);
  const std::vector<std::size_t> divisor_support = support(divisor, bound);
  const T& lead = divisor[rank];

  const auto first_mismatch_below = [&](std::size_t end) -> std::size_t {
    for (std::size_t n = 1; n < end; ++n) {
      if (product[n] != dividend[n]) return n;
    }
    return 0;
  };

  const std::size_t top = bound / rank;
  for (std::size_t m = 1; m <= top; ++m) {
    const std::size_t n = rank * m;
    // Entries of `product` below n are final here: any later term d*m' with
    // m' >= m and d >= rank lands at or above n.
    T residual = dividend[n] - product[n];
    if (!exact_quotient(quotient[m], residual, lead)) {
      const std::size_t earlier = first_mismatch_below(n);
      return {false, earlier != 0 ? earlier : n};
    }
    if (sgn(quotient[m]) == 0) continue;
    const std::size_t limit = bound / m;
    for (const std::size_t d : divisor_support) {
      if (d > limit) break;
      product[d * m] += divisor[d] * quotient[m];
    }
  }

  const std::size_t mismatch = first_mismatch_below(bound + 1);
  if (mismatch != 0) return {false, mismatch};
  return {true, 0};
}

}  // namespace liouville::detail
