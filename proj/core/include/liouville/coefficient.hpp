#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace liouville {

/// Ring the values of an arithmetic function are drawn from.
enum class Domain {
  Rational,  ///< the field Q
  Integer,   ///< the ring Z
};

/// "Q" or "Z".
std::string_view to_string(Domain domain) noexcept;

/// Accepts "Q"/"Z" (case-insensitive). Throws InvalidArgument otherwise.
Domain parse_domain(std::string_view text);

/// An exact value tagged with its domain.
///
/// Rationals are kept canonical (reduced, positive denominator). Integer
/// coefficients never carry a denominator.
class Coefficient {
 public:
  /// Zero of the given domain.
  explicit Coefficient(Domain domain = Domain::Rational);
  explicit Coefficient(mpz_class value);
  explicit Coefficient(mpq_class value);
  Coefficient(long value, Domain domain);

  /// Parses "n", "-n", "p/q". Throws ParseError on malformed text and
  /// NotInDomain when a non-integral value is requested in Z.
  static Coefficient parse(std::string_view text, Domain domain);

  Domain domain() const noexcept;
  bool is_zero() const;
  int sign() const;

  /// Exact value as a rational, whatever the domain.
  mpq_class to_rational() const;

  /// Integer value; NotInDomain if the value has a denominator.
  mpz_class to_integer() const;

  /// Same value moved into `target`; NotInDomain if it does not fit.
  Coefficient in(Domain target) const;

  /// Canonical text: "p/q", or "n" when the denominator is 1.
  std::string to_string() const;

  friend bool operator==(const Coefficient& lhs, const Coefficient& rhs);

 private:
  std::variant<mpq_class, mpz_class> value_;
};

/// Canonical text for a raw rational.
std::string format_rational(const mpq_class& value);

}  // namespace liouville
