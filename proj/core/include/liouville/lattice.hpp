#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liouville::lattice {

using Divisor = std::uint64_t;

/// Largest root accepted by co_ideal unless the caller raises it.
inline constexpr Divisor default_max_root = 1'000'000'000;

struct PrimePower {
  Divisor prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division up to sqrt(n). factorize(1) is empty.
std::vector<PrimePower> factorize(Divisor n);

/// Prime factors with multiplicity, ascending.
std::vector<Divisor> trial_division(Divisor n);

bool is_squarefree(Divisor n);

/// The co-ideal {a}: all divisors of a ordered by divisibility.
class DivisorPoset {
 public:
  using Edge = std::pair<Divisor, Divisor>;

  /// OutOfRange if a < 1 or a > max_root.
  explicit DivisorPoset(Divisor a, Divisor max_root = default_max_root);

  Divisor root() const noexcept { return root_; }
  const std::vector<PrimePower>& factorization() const noexcept { return factorization_; }

  /// Ascending; front() is 1 (null element), back() is a (universal element).
  const std::vector<Divisor>& elements() const noexcept { return elements_; }

  /// Covering pairs (x, x*p), p prime, sorted.
  const std::vector<Edge>& hasse_edges() const noexcept { return hasse_edges_; }

  /// Elements covering 1, i.e. the prime divisors of a.
  const std::vector<Divisor>& atoms() const noexcept { return atoms_; }

  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Divisor x) const;

  /// Position of x in elements(); OutOfRange if x is not a member.
  std::size_t index_of(Divisor x) const;

 private:
  Divisor root_;
  std::vector<PrimePower> factorization_;
  std::vector<Divisor> elements_;
  std::vector<Edge> hasse_edges_;
  std::vector<Divisor> atoms_;
};

DivisorPoset co_ideal(Divisor a);

/// gcd / lcm; OutOfRange unless both arguments are members.
Divisor meet(Divisor x, Divisor y, const DivisorPoset& poset);
Divisor join(Divisor x, Divisor y, const DivisorPoset& poset);

/// Minimum partition into chains plus an antichain of the same size.
struct ChainCover {
  std::vector<std::vector<Divisor>> chains;
  std::vector<Divisor> antichain;

  std::size_t width() const noexcept { return antichain.size(); }
};

/// Minimum chain partition via maximum bipartite matching (Hopcroft-Karp)
/// on strict divisibility; the antichain comes from the Konig vertex cover
/// of that matching. Both are re-validated before returning.
ChainCover chain_cover(const DivisorPoset& poset);

/// All x' with gcd(x, x') = 1 and lcm(x, x') = a.
std::vector<Divisor> complements_of(Divisor x, const DivisorPoset& poset);
bool is_complemented(const DivisorPoset& poset);
bool is_uniquely_complemented(const DivisorPoset& poset);

/// Checks x v (y ^ z) = (x v y) ^ (x v z) over all triples and the
/// cancellation criterion (x^y = x^z and xvy = xvz imply y = z); the two
/// must agree. Cubic in the number of divisors.
bool is_distributive(const DivisorPoset& poset);

/// Distributive and uniquely complemented; cross-checked against
/// squarefreeness of the root.
bool is_boolean(const DivisorPoset& poset);

/// gcd(x, y) * lcm(x, y) = x * y for every pair of members.
bool gcd_lcm_identity_check(const DivisorPoset& poset);

/// Repeatedly walks a descending chain of proper divisors until it reaches
/// an irreducible, divides it out, and continues with the cofactor. Each
/// step takes the smallest nontrivial divisor. Ascending multiset of
/// irreducibles. InvalidArgument if n < 2.
std::vector<Divisor> euclid_factorization(Divisor n);

/// p has no divisors besides 1 and itself.
bool is_irreducible(Divisor p);

/// For each (a, b) with p | ab, checks p | a or p | b. InvalidArgument
/// unless p is irreducible.
bool prime_property_check(Divisor p, std::span<const std::pair<Divisor, Divisor>> sample);

/// prime_property_check over every pair 1 <= a, b <= limit.
bool prime_property_check_exhaustive(Divisor p, Divisor limit);

struct LatticeReport {
  Divisor root;
  std::vector<Divisor> elements;
  std::vector<Divisor> atoms;
  ChainCover cover;
  bool distributive;
  bool complemented;
  bool uniquely_complemented;
  bool boolean;
};

LatticeReport analyze(const DivisorPoset& poset);

/// {"a", "elements", "atoms", "width", "chains", "antichain", "boolean",
///  "distributive", "complemented"}
std::string to_json(const LatticeReport& report);

std::string to_text(const LatticeReport& report);

/// Graphviz digraph of the Hasse diagram, bottom-up. With `cover`, nodes
/// are filled with one color per chain.
std::string to_dot(const DivisorPoset& poset, const ChainCover* cover = nullptr);

}  // namespace liouville::lattice
