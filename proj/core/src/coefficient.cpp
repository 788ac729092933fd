#include "liouville/coefficient.hpp"

#include <algorithm>
#include <cctype>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

std::string_view to_string(Domain domain) noexcept {
  return domain == Domain::Rational ? "Q" : "Z";
}

Domain parse_domain(std::string_view text) {
  if (text == "Q" || text == "q") return Domain::Rational;
  if (text == "Z" || text == "z") return Domain::Integer;
  throw InvalidArgument("unknown domain '" + std::string(text) + "' (expected Q or Z)");
}

Coefficient::Coefficient(Domain domain) {
  if (domain == Domain::Integer) value_ = mpz_class(0);
}

Coefficient::Coefficient(mpz_class value) : value_(std::move(value)) {}

Coefficient::Coefficient(mpq_class value) {
  value.canonicalize();
  value_ = std::move(value);
}

Coefficient::Coefficient(long value, Domain domain) {
  if (domain == Domain::Integer) {
    value_ = mpz_class(value);
  } else {
    value_ = mpq_class(value);
  }
}

Coefficient Coefficient::parse(std::string_view text, Domain domain) {
  const std::string_view body = trim(text);
  std::string_view digits = body;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  const auto slash = digits.find('/');
  const std::string_view num = digits.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : digits.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed coefficient '" + std::string(body) + "'", 0);
  }

  mpq_class value;
  value.get_num().set_str(std::string(num), 10);
  if (slash != std::string_view::npos) {
    value.get_den().set_str(std::string(den), 10);
    if (value.get_den() == 0) throw ParseError("zero denominator in '" + std::string(body) + "'", 0);
  }
  if (negative) value.get_num() = -value.get_num();
  value.canonicalize();
  return Coefficient(std::move(value)).in(domain);
}

Domain Coefficient::domain() const noexcept {
  return std::holds_alternative<mpz_class>(value_) ? Domain::Integer : Domain::Rational;
}

bool Coefficient::is_zero() const { return sign() == 0; }

int Coefficient::sign() const {
  return std::visit([](const auto& v) { return sgn(v); }, value_);
}

mpq_class Coefficient::to_rational() const {
  if (const auto* z = std::get_if<mpz_class>(&value_)) return mpq_class(*z);
  return std::get<mpq_class>(value_);
}

mpz_class Coefficient::to_integer() const {
  if (const auto* z = std::get_if<mpz_class>(&value_)) return *z;
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() != 1) throw NotInDomain("value " + format_rational(q) + " is not an integer");
  return q.get_num();
}

Coefficient Coefficient::in(Domain target) const {
  if (target == domain()) return *this;
  if (target == Domain::Integer) return Coefficient(to_integer());
  return Coefficient(to_rational());
}

std::string Coefficient::to_string() const {
  if (const auto* z = std::get_if<mpz_class>(&value_)) return z->get_str();
  return format_rational(std::get<mpq_class>(value_));
}

bool operator==(const Coefficient& lhs, const Coefficient& rhs) {
  return lhs.value_ == rhs.value_;
}

std::string format_rational(const mpq_class& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace liouville
