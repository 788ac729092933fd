#include "liouville/factorization.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "liouville/classical.hpp"
#include "liouville/errors.hpp"
#include "liouville/ring.hpp"

namespace liouville {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_prime_index(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Below 2^64 GMP's BPSW test has no false positives; above it only a
// "definitely prime" answer is accepted.
bool is_certified_prime(const mpz_class& m) {
  if (m < 2) return false;
  const int answer = mpz_probab_prime_p(m.get_mpz_t(), 50);
  if (answer == 2) return true;
  return answer == 1 && mpz_sizeinbase(m.get_mpz_t(), 2) <= 64;
}

std::string reason_text(const IrreducibilityReason& reason) {
  return std::visit(
      [](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, PrimeSupport>) {
          return "PrimeSupport(" + std::to_string(r.prime) + ")";
        } else if constexpr (std::is_same_v<R, PrimeRank>) {
          return "PrimeRank(" + std::to_string(r.rank) + ")";
        } else {
          return "PrimeLeadingMagnitude(" + r.magnitude.get_str() + ")";
        }
      },
      reason);
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json doc;
  doc["verdict"] = std::string(to_string(c.verdict));
  doc["reason"] = c.reason ? ordered_json(reason_text(*c.reason)) : ordered_json(nullptr);
  doc["witness_indices"] = c.witness_indices();
  return doc;
}

}  // namespace

std::string_view to_string(Certificate::Verdict verdict) noexcept {
  switch (verdict) {
    case Certificate::Verdict::Zero: return "Zero";
    case Certificate::Verdict::Unit: return "Unit";
    case Certificate::Verdict::Irreducible: return "Irreducible";
    case Certificate::Verdict::Reducible: return "Reducible";
    case Certificate::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::vector<std::size_t> Certificate::witness_indices() const {
  switch (verdict) {
    case Verdict::Unit:
      return {1};
    case Verdict::Irreducible:
      return std::visit(
          [](const auto& r) -> std::vector<std::size_t> {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, PrimeSupport>) {
              return {r.prime};
            } else if constexpr (std::is_same_v<R, PrimeRank>) {
              return {r.rank};
            } else {
              return {1};
            }
          },
          *reason);
    case Verdict::Reducible:
      return {rank(*left).index(), rank(*right).index()};
    case Verdict::Zero:
    case Verdict::Unknown:
      break;
  }
  return {};
}

std::string Certificate::to_json() const { return certificate_json(*this).dump(); }

Certificate certify(const ArithFunc& alpha) {
  const Rank r = rank(alpha);
  if (!r.visible()) return {Certificate::Verdict::Zero, std::nullopt, std::nullopt, std::nullopt};
  if (is_unit(alpha)) return {Certificate::Verdict::Unit, std::nullopt, std::nullopt, std::nullopt};

  const auto irreducible = [](IrreducibilityReason reason) {
    return Certificate{Certificate::Verdict::Irreducible, std::move(reason), std::nullopt, std::nullopt};
  };

  if (alpha.is_zero_at(1)) {
    const std::vector<std::size_t> spf = classical::smallest_prime_factors(alpha.bound());
    for (std::size_t p = 2; p <= alpha.bound(); ++p) {
      if (spf[p] == p && !alpha.is_zero_at(p)) return irreducible(PrimeSupport{p});
    }
  }
  if (alpha.domain() == Domain::Rational && is_prime_index(r.index())) {
    return irreducible(PrimeRank{r.index()});
  }
  if (alpha.domain() == Domain::Integer) {
    const mpz_class magnitude = abs(alpha.integer_storage()[1]);
    if (is_certified_prime(magnitude)) return irreducible(PrimeLeadingMagnitude{magnitude});
  }
  return {Certificate::Verdict::Unknown, std::nullopt, std::nullopt, std::nullopt};
}

Certificate reducible_certificate(const ArithFunc& alpha, const ArithFunc& left, const ArithFunc& right) {
  if (left.domain() != alpha.domain() || right.domain() != alpha.domain()) {
    throw DomainMismatch("reducible witness in a different domain");
  }
  if (left.bound() < alpha.bound() || right.bound() < alpha.bound()) {
    throw InvalidArgument("reducible witness shorter than the function it factors");
  }
  const ArithFunc l = restrict_to(left, alpha.bound());
  const ArithFunc rr = restrict_to(right, alpha.bound());
  if (l.is_zero() || rr.is_zero()) throw InvalidArgument("reducible witness has a zero factor");
  if (is_unit(l) || is_unit(rr)) throw InvalidArgument("reducible witness has a unit factor");
  if (!(convolve(l, rr) == alpha)) throw InvalidArgument("reducible witness does not multiply to the function");
  return {Certificate::Verdict::Reducible, std::nullopt, l, rr};
}

FactorizationReport verify_factorization(const ArithFunc& alpha, const FactorizationClaim& claim) {
  const auto check_part = [&](const ArithFunc& part, const std::string& what) {
    if (part.domain() != alpha.domain()) throw DomainMismatch(what + " is in a different domain");
    if (part.bound() != alpha.bound()) throw InvalidArgument(what + " has a different bound");
  };
  check_part(claim.unit_part, "unit part");
  for (std::size_t i = 0; i < claim.irreducibles.size(); ++i) {
    check_part(claim.irreducibles[i], "factor " + std::to_string(i));
  }

  FactorizationReport report;
  report.unit_ok = is_unit(claim.unit_part);

  ArithFunc product = claim.unit_part;
  for (std::size_t i = 0; i < claim.irreducibles.size(); ++i) {
    report.factors.push_back(certify(claim.irreducibles[i]));
    if (!report.factors.back().irreducible()) report.unverified.push_back(i);
    product = convolve(product, claim.irreducibles[i]);
  }

  const ArithFunc residual = subtract(product, alpha);
  const Rank r = rank(residual);
  report.product_matches = !r.visible();
  report.first_mismatch = r.visible() ? r.index() : 0;
  return report;
}

std::string FactorizationReport::to_json() const {
  ordered_json doc;
  doc["passed"] = passed();
  doc["unit_ok"] = unit_ok;
  ordered_json items = ordered_json::array();
  for (const Certificate& c : factors) items.push_back(certificate_json(c));
  doc["factors"] = std::move(items);
  doc["unverified"] = unverified;
  doc["product_matches"] = product_matches;
  doc["first_mismatch"] = product_matches ? ordered_json(nullptr) : ordered_json(first_mismatch);
  return doc.dump();
}

std::vector<RankSplit> rank_screen(const ArithFunc& alpha) {
  const std::size_t a = rank(alpha).index();
  const RankSplit::Note edge = alpha.domain() == Domain::Rational ? RankSplit::Note::UnitFactor
                                                                  : RankSplit::Note::UnitOrRankOneNonunit;
  std::vector<RankSplit> out;
  for (std::size_t b = 1; b <= a; ++b) {
    if (a % b != 0) continue;
    const std::size_t c = a / b;
    out.push_back({b, c, (b == 1 || c == 1) ? edge : RankSplit::Note::None});
  }
  return out;
}

}  // namespace liouville
