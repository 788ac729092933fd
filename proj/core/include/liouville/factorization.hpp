#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liouville/arith_func.hpp"

namespace liouville {

// Reasons an element is irreducible.

/// alpha(1) = 0 and alpha(p) != 0 at a prime p: any product of two
/// nonunits vanishes at every prime.
struct PrimeSupport {
  std::size_t prime;
};

/// Over Q, the rank is prime; rank is multiplicative so one factor has rank 1.
struct PrimeRank {
  std::size_t rank;
};

/// Over Z, |alpha(1)| is a rational prime; |alpha(1)| = |beta(1)| |gamma(1)|.
struct PrimeLeadingMagnitude {
  mpz_class magnitude;
};

using IrreducibilityReason = std::variant<PrimeSupport, PrimeRank, PrimeLeadingMagnitude>;

struct Certificate {
  enum class Verdict { Zero, Unit, Irreducible, Reducible, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<IrreducibilityReason> reason;  ///< set iff Irreducible
  std::optional<ArithFunc> left;               ///< witness pair iff Reducible
  std::optional<ArithFunc> right;

  bool irreducible() const noexcept { return verdict == Verdict::Irreducible; }

  /// Indices the verdict rests on: [p], [rank], [1], or the witness ranks.
  std::vector<std::size_t> witness_indices() const;

  /// {"verdict": ..., "reason": ..., "witness_indices": [...]}
  std::string to_json() const;
};

std::string_view to_string(Certificate::Verdict verdict) noexcept;

/// Decides Zero / Unit / Irreducible / Unknown from rules that hold in the
/// untruncated ring. Never searches for a factorization.
Certificate certify(const ArithFunc& alpha);

/// Validates a claimed factorization alpha = left * right into two nonzero
/// nonunits and returns a Reducible certificate. Throws InvalidArgument if
/// the witness does not re-verify.
Certificate reducible_certificate(const ArithFunc& alpha, const ArithFunc& left,
                                  const ArithFunc& right);

/// alpha = unit_part * irreducibles[0] * ... * irreducibles[k-1].
struct FactorizationClaim {
  ArithFunc unit_part;
  std::vector<ArithFunc> irreducibles;
};

struct FactorizationReport {
  bool unit_ok = false;
  std::vector<Certificate> factors;        ///< certify() of each claimed irreducible
  std::vector<std::size_t> unverified;     ///< positions whose certificate is not Irreducible
  bool product_matches = false;
  std::size_t first_mismatch = 0;          ///< 0 when the product matches

  bool passed() const noexcept { return unit_ok && unverified.empty() && product_matches; }

  std::string to_json() const;
};

/// Checks the unit part, certifies each factor, and compares the full
/// product with alpha. Throws DomainMismatch / InvalidArgument when the
/// parts do not share alpha's domain and bound.
FactorizationReport verify_factorization(const ArithFunc& alpha, const FactorizationClaim& claim);

/// Ordered (b, c) with b * c = rank(alpha).
struct RankSplit {
  enum class Note { None, UnitFactor, UnitOrRankOneNonunit };

  std::size_t left;
  std::size_t right;
  Note note;

  friend bool operator==(const RankSplit&, const RankSplit&) = default;
};

/// Every way the rank could split across two factors. Splits with a
/// rank-1 side are annotated: over Q that side is a unit, over Z it is a
/// unit or a rank-one nonunit. RankNotVisible for the zero function.
std::vector<RankSplit> rank_screen(const ArithFunc& alpha);

}  // namespace liouville
