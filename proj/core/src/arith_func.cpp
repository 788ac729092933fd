#include "liouville/arith_func.hpp"

#include <algorithm>
#include <string>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

template <class Values>
void check_storage(Values& storage) {
  if (storage.size() < 2) throw InvalidArgument("arithmetic function needs bound >= 1");
  storage[0] = 0;
}

}  // namespace

ArithFunc::ArithFunc(std::variant<RationalValues, IntegerValues> storage)
    : storage_(std::move(storage)) {}

ArithFunc ArithFunc::make(std::span<const Coefficient> values, Domain domain) {
  if (values.empty()) throw InvalidArgument("arithmetic function needs at least one value");
  if (domain == Domain::Integer) {
    IntegerValues storage(values.size() + 1);
    for (std::size_t i = 0; i < values.size(); ++i) storage[i + 1] = values[i].to_integer();
    return from_storage(std::move(storage));
  }
  RationalValues storage(values.size() + 1);
  for (std::size_t i = 0; i < values.size(); ++i) storage[i + 1] = values[i].to_rational();
  return from_storage(std::move(storage));
}

ArithFunc ArithFunc::from_storage(IntegerValues storage) {
  check_storage(storage);
  return ArithFunc(std::move(storage));
}

ArithFunc ArithFunc::from_storage(RationalValues storage) {
  check_storage(storage);
  for (auto& v : storage) v.canonicalize();
  return ArithFunc(std::move(storage));
}

ArithFunc ArithFunc::zeros(std::size_t bound, Domain domain) {
  if (bound == 0) throw InvalidArgument("arithmetic function needs bound >= 1");
  if (domain == Domain::Integer) return ArithFunc(IntegerValues(bound + 1));
  return ArithFunc(RationalValues(bound + 1));
}

Domain ArithFunc::domain() const noexcept {
  return std::holds_alternative<IntegerValues>(storage_) ? Domain::Integer : Domain::Rational;
}

std::size_t ArithFunc::bound() const noexcept {
  return visit([](const auto& v) { return v.size() - 1; });
}

Coefficient ArithFunc::at(std::size_t n) const {
  if (n == 0 || n > bound()) {
    throw OutOfRange("index " + std::to_string(n) + " outside 1.." + std::to_string(bound()));
  }
  return visit([n](const auto& v) { return Coefficient(v[n]); });
}

bool ArithFunc::is_zero_at(std::size_t n) const {
  if (n == 0 || n > bound()) {
    throw OutOfRange("index " + std::to_string(n) + " outside 1.." + std::to_string(bound()));
  }
  return visit([n](const auto& v) { return sgn(v[n]) == 0; });
}

bool ArithFunc::is_zero() const {
  return visit([](const auto& v) {
    return std::all_of(v.begin() + 1, v.end(), [](const auto& x) { return sgn(x) == 0; });
  });
}

const ArithFunc::IntegerValues& ArithFunc::integer_storage() const {
  if (const auto* z = std::get_if<IntegerValues>(&storage_)) return *z;
  throw DomainMismatch("function lives in Q, integer storage requested");
}

const ArithFunc::RationalValues& ArithFunc::rational_storage() const {
  if (const auto* q = std::get_if<RationalValues>(&storage_)) return *q;
  throw DomainMismatch("function lives in Z, rational storage requested");
}

ArithFunc ArithFunc::in(Domain target) const {
  if (target == domain()) return *this;
  if (target == Domain::Rational) {
    const auto& src = integer_storage();
    return ArithFunc(RationalValues(src.begin(), src.end()));
  }
  const auto& src = rational_storage();
  IntegerValues out(src.size());
  for (std::size_t n = 1; n < src.size(); ++n) {
    if (src[n].get_den() != 1) {
      throw NotInDomain("value at index " + std::to_string(n) + " is not an integer");
    }
    out[n] = src[n].get_num();
  }
  return ArithFunc(std::move(out));
}

std::vector<Coefficient> ArithFunc::values() const {
  return visit([](const auto& v) {
    std::vector<Coefficient> out;
    out.reserve(v.size() - 1);
    for (std::size_t n = 1; n < v.size(); ++n) out.emplace_back(v[n]);
    return out;
  });
}

bool operator==(const ArithFunc& lhs, const ArithFunc& rhs) {
  return lhs.storage_ == rhs.storage_;
}

}  // namespace liouville
