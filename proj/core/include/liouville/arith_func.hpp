#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "liouville/coefficient.hpp"

namespace liouville {

/// A truncated arithmetic function: the values alpha(1..N) over one domain.
///
/// Every statement made about an ArithFunc holds "at bound N". Dirichlet
/// convolution at n only consults indices dividing n, so the truncated
/// values are exact images of the infinite objects.
///
/// Storage is 1-based: slot 0 exists, is always zero, and is never exposed.
class ArithFunc {
 public:
  using IntegerValues = std::vector<mpz_class>;
  using RationalValues = std::vector<mpq_class>;

  /// Builds from alpha(1..N). Throws InvalidArgument if `values` is empty
  /// and NotInDomain if some value does not fit `domain`.
  static ArithFunc make(std::span<const Coefficient> values, Domain domain);

  /// Takes ownership of 1-based storage (size N+1, slot 0 ignored).
  static ArithFunc from_storage(IntegerValues storage);
  static ArithFunc from_storage(RationalValues storage);

  /// All-zero function of the given bound and domain.
  static ArithFunc zeros(std::size_t bound, Domain domain);

  Domain domain() const noexcept;
  std::size_t bound() const noexcept;

  /// alpha(n) for 1 <= n <= bound(); OutOfRange otherwise.
  Coefficient at(std::size_t n) const;
  bool is_zero_at(std::size_t n) const;

  /// True when every value up to the bound is zero.
  bool is_zero() const;

  /// 1-based storage, slot 0 zero. DomainMismatch on the wrong domain.
  const IntegerValues& integer_storage() const;
  const RationalValues& rational_storage() const;

  /// Embedding Z -> Q, or the checked restriction Q -> Z.
  ArithFunc in(Domain target) const;

  std::vector<Coefficient> values() const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const {
    return std::visit(std::forward<Visitor>(visitor), storage_);
  }

  friend bool operator==(const ArithFunc& lhs, const ArithFunc& rhs);

 private:
  explicit ArithFunc(std::variant<RationalValues, IntegerValues> storage);

  std::variant<RationalValues, IntegerValues> storage_;
};

}  // namespace liouville
