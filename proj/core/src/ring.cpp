#include "liouville/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "liouville/detail/kernels.hpp"
#include "liouville/errors.hpp"

namespace liouville {

namespace {

void require_same_domain(const ArithFunc& lhs, const ArithFunc& rhs, const char* op) {
  if (lhs.domain() != rhs.domain()) {
    throw DomainMismatch(std::string(op) + ": operands in " + std::string(to_string(lhs.domain())) +
                         " and " + std::string(to_string(rhs.domain())));
  }
}

template <class T>
const std::vector<T>& storage_of(const ArithFunc& f) {
  if constexpr (std::is_same_v<T, mpz_class>) {
    return f.integer_storage();
  } else {
    return f.rational_storage();
  }
}

// Calls fn(lhs_storage, rhs_storage) with matching element types.
template <class Fn>
decltype(auto) with_pair(const ArithFunc& lhs, const ArithFunc& rhs, const char* op, Fn&& fn) {
  require_same_domain(lhs, rhs, op);
  return lhs.visit([&](const auto& a) -> decltype(auto) {
    using Values = std::decay_t<decltype(a)>;
    return fn(a, storage_of<typename Values::value_type>(rhs));
  });
}

}  // namespace

ArithFunc epsilon(std::size_t bound, Domain domain) { return nu(1, bound, domain); }

ArithFunc omega(std::size_t bound, Domain domain) { return ArithFunc::zeros(bound, domain); }

ArithFunc nu(std::size_t r, std::size_t bound, Domain domain) {
  if (r == 0 || r > bound) {
    throw OutOfRange("nu_" + std::to_string(r) + " outside bound " + std::to_string(bound));
  }
  if (domain == Domain::Integer) {
    ArithFunc::IntegerValues v(bound + 1);
    v[r] = 1;
    return ArithFunc::from_storage(std::move(v));
  }
  ArithFunc::RationalValues v(bound + 1);
  v[r] = 1;
  return ArithFunc::from_storage(std::move(v));
}

ArithFunc add(const ArithFunc& lhs, const ArithFunc& rhs) {
  return with_pair(lhs, rhs, "add", [](const auto& a, const auto& b) {
    const std::size_t bound = std::min(a.size(), b.size()) - 1;
    std::decay_t<decltype(a)> out(bound + 1);
    for (std::size_t n = 1; n <= bound; ++n) out[n] = a[n] + b[n];
    return ArithFunc::from_storage(std::move(out));
  });
}

ArithFunc negate(const ArithFunc& alpha) {
  return alpha.visit([](const auto& a) {
    std::decay_t<decltype(a)> out(a.size());
    for (std::size_t n = 1; n < a.size(); ++n) out[n] = -a[n];
    return ArithFunc::from_storage(std::move(out));
  });
}

ArithFunc subtract(const ArithFunc& lhs, const ArithFunc& rhs) { return add(lhs, negate(rhs)); }

ArithFunc convolve(const ArithFunc& lhs, const ArithFunc& rhs) {
  return with_pair(lhs, rhs, "convolve", [](const auto& a, const auto& b) {
    const std::size_t bound = std::min(a.size(), b.size()) - 1;
    return ArithFunc::from_storage(detail::convolve(a, b, bound));
  });
}

ArithFunc scale(const ArithFunc& alpha, const Coefficient& factor) {
  const Coefficient c = factor.in(alpha.domain());
  if (alpha.domain() == Domain::Integer) {
    const mpz_class k = c.to_integer();
    ArithFunc::IntegerValues out(alpha.integer_storage());
    for (auto& v : out) v *= k;
    return ArithFunc::from_storage(std::move(out));
  }
  const mpq_class k = c.to_rational();
  ArithFunc::RationalValues out(alpha.rational_storage());
  for (auto& v : out) v *= k;
  return ArithFunc::from_storage(std::move(out));
}

ArithFunc restrict_to(const ArithFunc& alpha, std::size_t new_bound) {
  if (new_bound == 0 || new_bound > alpha.bound()) {
    throw OutOfRange("cannot restrict bound " + std::to_string(alpha.bound()) + " to " +
                     std::to_string(new_bound));
  }
  return alpha.visit([new_bound](const auto& a) {
    std::decay_t<decltype(a)> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(new_bound + 1));
    return ArithFunc::from_storage(std::move(out));
  });
}

Rank Rank::detected(std::size_t index, Coefficient leading) {
  if (index == 0 || leading.is_zero()) throw InvalidArgument("rank needs a positive index and nonzero value");
  return Rank(index, std::move(leading));
}

Rank Rank::not_visible() { return Rank(0, Coefficient()); }

std::size_t Rank::index() const {
  if (!visible()) throw RankNotVisible("function is zero at its bound");
  return index_;
}

const Coefficient& Rank::leading() const {
  if (!visible()) throw RankNotVisible("function is zero at its bound");
  return leading_;
}

Rank rank(const ArithFunc& alpha) {
  return alpha.visit([](const auto& a) {
    for (std::size_t n = 1; n < a.size(); ++n) {
      if (sgn(a[n]) != 0) return Rank::detected(n, Coefficient(a[n]));
    }
    return Rank::not_visible();
  });
}

bool is_unit(const ArithFunc& alpha) {
  if (alpha.domain() == Domain::Integer) {
    return abs(alpha.integer_storage()[1]) == 1;
  }
  return sgn(alpha.rational_storage()[1]) != 0;
}

ArithFunc inverse(const ArithFunc& alpha) {
  if (!is_unit(alpha)) {
    throw NotAUnit("alpha(1) = " + alpha.at(1).to_string() + " is not invertible in " +
                   std::string(to_string(alpha.domain())));
  }
  return alpha.visit([](const auto& a) {
    return ArithFunc::from_storage(detail::inverse(a, a.size() - 1));
  });
}

ArithFunc monic(const ArithFunc& alpha) {
  const Rank r = rank(alpha);
  const Coefficient& lead = r.leading();
  if (alpha.domain() == Domain::Integer) {
    const mpz_class v = lead.to_integer();
    if (abs(v) != 1) {
      throw NotInDomain("leading value " + v.get_str() + " is not invertible in Z");
    }
    return scale(alpha, lead);
  }
  return scale(alpha, Coefficient(mpq_class(1) / lead.to_rational()));
}

DivisionVerdict divide(const ArithFunc& dividend, const ArithFunc& divisor) {
  require_same_domain(dividend, divisor, "divide");
  const std::size_t bound = std::min(dividend.bound(), divisor.bound());
  const Rank divisor_rank = rank(restrict_to(divisor, bound));
  if (!divisor_rank.visible()) {
    throw RankNotVisible("divide: divisor is zero at bound " + std::to_string(bound));
  }
  const std::size_t b = divisor_rank.index();

  return with_pair(dividend, divisor, "divide", [&](const auto& num, const auto& den) -> DivisionVerdict {
    std::decay_t<decltype(num)> gamma;
    const detail::DivisionResult result = detail::divide(num, den, bound, b, gamma);
    if (!result.divisible) return NotDivisibleAtBound{result.witness};
    return Quotient{ArithFunc::from_storage(std::move(gamma))};
  });
}

std::optional<ArithFunc> quotient_of(const DivisionVerdict& verdict) {
  if (const auto* q = std::get_if<Quotient>(&verdict)) return q->value;
  return std::nullopt;
}

bool are_associates(const ArithFunc& alpha, const ArithFunc& beta) {
  require_same_domain(alpha, beta, "are_associates");
  const std::size_t bound = std::min(alpha.bound(), beta.bound());
  const ArithFunc a = restrict_to(alpha, bound);
  const ArithFunc b = restrict_to(beta, bound);

  const bool a_zero = a.is_zero();
  const bool b_zero = b.is_zero();
  if (a_zero || b_zero) return a_zero && b_zero;

  const DivisionVerdict a_by_b = divide(a, b);
  const bool two_sided = quotient_of(a_by_b).has_value() && quotient_of(divide(b, a)).has_value();

  const auto q = quotient_of(a_by_b);
  const bool unit_factor = rank(a).index() == rank(b).index() && q.has_value() && is_unit(*q);

  if (two_sided != unit_factor) {
    throw std::logic_error("associate characterizations disagree");
  }
  return two_sided;
}

}  // namespace liouville
