#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "liouville/arith_func.hpp"
#include "liouville/coefficient.hpp"

namespace liouville {

// Constructors ---------------------------------------------------------------

/// Multiplicative identity: 1 at index 1, 0 elsewhere.
ArithFunc epsilon(std::size_t bound, Domain domain);

/// Additive identity.
ArithFunc omega(std::size_t bound, Domain domain);

/// Indicator of r. OutOfRange unless 1 <= r <= bound.
ArithFunc nu(std::size_t r, std::size_t bound, Domain domain);

// Ring arithmetic -------------------------------------------------------------
//
// Binary operations require equal domains (DomainMismatch otherwise) and
// truncate to the smaller bound.

ArithFunc add(const ArithFunc& lhs, const ArithFunc& rhs);
ArithFunc negate(const ArithFunc& alpha);
ArithFunc subtract(const ArithFunc& lhs, const ArithFunc& rhs);

/// Dirichlet convolution, (lhs * rhs)(n) = sum over d*e = n of lhs(d) rhs(e).
///
/// Scatters over divisor pairs (d, m) with d*m <= N, skipping zero
/// entries, so the work is O(N log N) multiply-adds for dense input.
ArithFunc convolve(const ArithFunc& lhs, const ArithFunc& rhs);

/// Multiplies every value by `factor` (equivalently convolves with factor*eps).
ArithFunc scale(const ArithFunc& alpha, const Coefficient& factor);

/// Keeps indices 1..new_bound. OutOfRange unless 1 <= new_bound <= bound.
ArithFunc restrict_to(const ArithFunc& alpha, std::size_t new_bound);

// Rank, units, inverses -------------------------------------------------------

/// Least index with a nonzero value, together with that value, or the
/// marker that the function is zero everywhere up to its bound.
class Rank {
 public:
  static Rank detected(std::size_t index, Coefficient leading);
  static Rank not_visible();

  bool visible() const noexcept { return index_ != 0; }

  /// RankNotVisible if !visible().
  std::size_t index() const;
  const Coefficient& leading() const;

  friend bool operator==(const Rank&, const Rank&) = default;

 private:
  Rank(std::size_t index, Coefficient leading) : index_(index), leading_(std::move(leading)) {}

  std::size_t index_ = 0;
  Coefficient leading_;
};

Rank rank(const ArithFunc& alpha);

/// Q: alpha(1) != 0.  Z: alpha(1) = +-1.
bool is_unit(const ArithFunc& alpha);

/// Dirichlet inverse by the triangular recursion
///   g(1) = 1/alpha(1),  g(n) = -(1/alpha(1)) * sum_{d|n, d>1} alpha(d) g(n/d).
/// Throws NotAUnit when !is_unit(alpha).
ArithFunc inverse(const ArithFunc& alpha);

/// Scales so the leading value becomes 1. Not an associate-class invariant;
/// over Z only possible when the leading value is +-1 (NotInDomain
/// otherwise). RankNotVisible for the zero function.
ArithFunc monic(const ArithFunc& alpha);

// Division ------------------------------------------------------------------

struct Quotient {
  ArithFunc value;
};

/// No gamma supported on 1..floor(N/b) solves divisor * gamma = dividend;
/// `witness` is the least index where the equation fails.
struct NotDivisibleAtBound {
  std::size_t witness;
};

using DivisionVerdict = std::variant<Quotient, NotDivisibleAtBound>;

/// Solves divisor * gamma = dividend at the common bound N.
///
/// With b the rank of the divisor, gamma is determined on 1..floor(N/b) by
/// the triangular recursion over indices b*m and taken to be zero above;
/// the full residual is then checked on every n <= N. Over Z each step is
/// an exact division and fails fast. A zero dividend yields Quotient(omega).
///
/// Throws DomainMismatch, and RankNotVisible when the divisor is zero at
/// the bound.
DivisionVerdict divide(const ArithFunc& dividend, const ArithFunc& divisor);

/// Convenience accessor; nullopt for NotDivisibleAtBound.
std::optional<ArithFunc> quotient_of(const DivisionVerdict& verdict);

/// alpha ~ beta: each divides the other at the bound.
///
/// Evaluated two ways (two-sided division, and equal rank plus a unit
/// one-sided quotient); a disagreement throws std::logic_error.
bool are_associates(const ArithFunc& alpha, const ArithFunc& beta);

}  // namespace liouville
