#include "liouville/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "liouville/errors.hpp"

namespace liouville::lattice {

namespace {

__extension__ using uint128 = unsigned __int128;

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Smallest d in [2, sqrt(n)] dividing n, or 0 if there is none.
Divisor smallest_nontrivial_divisor(Divisor n) {
  for (Divisor d = 2; d <= n / d; ++d) {
    if (n % d == 0) return d;
  }
  return 0;
}

// Maximum matching between two copies of the elements, with an edge
// i -> j whenever elements[i] strictly divides elements[j].
class Matching {
 public:
  explicit Matching(const std::vector<Divisor>& elements) : n_(elements.size()) {
    adjacency_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (elements[j] % elements[i] == 0) adjacency_[i].push_back(j);
      }
    }
    match_left_.assign(n_, npos);
    match_right_.assign(n_, npos);
    distance_.assign(n_, 0);
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (match_left_[u] == npos) dfs(u);
      }
    }
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count_if(match_left_.begin(), match_left_.end(),
                                                  [](std::size_t v) { return v != npos; }));
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }
  const std::vector<std::size_t>& match_right() const { return match_right_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }

 private:
  bool bfs() {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == npos) {
        distance_[u] = 0;
        queue.push(u);
      } else {
        distance_[u] = npos;
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (const std::size_t v : adjacency_[u]) {
        const std::size_t w = match_right_[v];
        if (w == npos) {
          found = true;
        } else if (distance_[w] == npos) {
          distance_[w] = distance_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (const std::size_t v : adjacency_[u]) {
      const std::size_t w = match_right_[v];
      if (w == npos || (distance_[w] == distance_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    distance_[u] = npos;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> distance_;
};

bool comparable(Divisor x, Divisor y) { return x % y == 0 || y % x == 0; }

// gcd/lcm of members as indices into elements(), for the cubic checks.
struct OperationTables {
  std::size_t n;
  std::vector<std::uint32_t> meet;
  std::vector<std::uint32_t> join;

  explicit OperationTables(const DivisorPoset& poset) : n(poset.size()), meet(n * n), join(n * n) {
    const auto& e = poset.elements();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Divisor g = std::gcd(e[i], e[j]);
        const auto gi = static_cast<std::uint32_t>(poset.index_of(g));
        const auto li = static_cast<std::uint32_t>(poset.index_of(e[i] / g * e[j]));
        meet[i * n + j] = meet[j * n + i] = gi;
        join[i * n + j] = join[j * n + i] = li;
      }
    }
  }

  std::uint32_t m(std::size_t i, std::size_t j) const { return meet[i * n + j]; }
  std::uint32_t J(std::size_t i, std::size_t j) const { return join[i * n + j]; }
};

}  // namespace

std::vector<PrimePower> factorize(Divisor n) {
  std::vector<PrimePower> out;
  for (Divisor p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Divisor> trial_division(Divisor n) {
  std::vector<Divisor> out;
  for (const auto& [p, e] : factorize(n)) out.insert(out.end(), e, p);
  return out;
}

bool is_squarefree(Divisor n) {
  const auto f = factorize(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

DivisorPoset::DivisorPoset(Divisor a, Divisor max_root) : root_(a) {
  if (a < 1) throw OutOfRange("co-ideal root must be >= 1");
  if (a > max_root) {
    throw OutOfRange("co-ideal root " + std::to_string(a) + " exceeds limit " + std::to_string(max_root));
  }
  factorization_ = factorize(a);

  elements_ = {1};
  for (const auto& [p, e] : factorization_) {
    const std::size_t base = elements_.size();
    Divisor power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) elements_.push_back(elements_[i] * power);
    }
  }
  std::sort(elements_.begin(), elements_.end());

  for (const Divisor x : elements_) {
    for (const auto& pp : factorization_) {
      if ((a / x) % pp.prime == 0) hasse_edges_.emplace_back(x, x * pp.prime);
    }
  }
  std::sort(hasse_edges_.begin(), hasse_edges_.end());

  for (const auto& pp : factorization_) atoms_.push_back(pp.prime);
}

bool DivisorPoset::contains(Divisor x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t DivisorPoset::index_of(Divisor x) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw OutOfRange(std::to_string(x) + " is not a divisor of " + std::to_string(root_));
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

DivisorPoset co_ideal(Divisor a) { return DivisorPoset(a); }

Divisor meet(Divisor x, Divisor y, const DivisorPoset& poset) {
  poset.index_of(x);
  poset.index_of(y);
  return std::gcd(x, y);
}

Divisor join(Divisor x, Divisor y, const DivisorPoset& poset) {
  poset.index_of(x);
  poset.index_of(y);
  return std::lcm(x, y);
}

ChainCover chain_cover(const DivisorPoset& poset) {
  const auto& e = poset.elements();
  const std::size_t n = e.size();
  const Matching matching(e);

  ChainCover cover;
  // A matched edge i -> j puts j directly after i in a chain.
  for (std::size_t start = 0; start < n; ++start) {
    if (matching.match_right()[start] != npos) continue;
    std::vector<Divisor> chain;
    for (std::size_t i = start; i != npos; i = matching.match_left()[i]) chain.push_back(e[i]);
    cover.chains.push_back(std::move(chain));
  }

  // Konig: Z = vertices reachable from unmatched left vertices along
  // alternating paths. Elements with left copy in Z and right copy outside
  // Z are uncovered on both sides and form a maximum antichain.
  std::vector<bool> left_reached(n, false);
  std::vector<bool> right_reached(n, false);
  std::queue<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (matching.match_left()[u] == npos) {
      left_reached[u] = true;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (const std::size_t v : matching.adjacency()[u]) {
      if (right_reached[v] || matching.match_left()[u] == v) continue;
      right_reached[v] = true;
      const std::size_t w = matching.match_right()[v];
      if (w != npos && !left_reached[w]) {
        left_reached[w] = true;
        queue.push(w);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (left_reached[i] && !right_reached[i]) cover.antichain.push_back(e[i]);
  }

  if (cover.chains.size() != cover.antichain.size() || cover.chains.size() != n - matching.size()) {
    throw std::logic_error("chain partition and antichain sizes disagree");
  }
  for (std::size_t i = 0; i < cover.antichain.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.antichain.size(); ++j) {
      if (comparable(cover.antichain[i], cover.antichain[j])) {
        throw std::logic_error("width certificate is not an antichain");
      }
    }
  }
  return cover;
}

std::vector<Divisor> complements_of(Divisor x, const DivisorPoset& poset) {
  poset.index_of(x);
  std::vector<Divisor> out;
  for (const Divisor y : poset.elements()) {
    if (std::gcd(x, y) == 1 && std::lcm(x, y) == poset.root()) out.push_back(y);
  }
  return out;
}

bool is_complemented(const DivisorPoset& poset) {
  return std::all_of(poset.elements().begin(), poset.elements().end(),
                     [&](Divisor x) { return !complements_of(x, poset).empty(); });
}

bool is_uniquely_complemented(const DivisorPoset& poset) {
  return std::all_of(poset.elements().begin(), poset.elements().end(),
                     [&](Divisor x) { return complements_of(x, poset).size() == 1; });
}

bool is_distributive(const DivisorPoset& poset) {
  const OperationTables t(poset);
  const std::size_t n = t.n;

  bool identity_holds = true;
  for (std::size_t x = 0; x < n && identity_holds; ++x) {
    for (std::size_t y = 0; y < n && identity_holds; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (t.J(x, t.m(y, z)) != t.m(t.J(x, y), t.J(x, z))) {
          identity_holds = false;
          break;
        }
      }
    }
  }

  bool cancellation_holds = true;
  for (std::size_t x = 0; x < n && cancellation_holds; ++x) {
    for (std::size_t y = 0; y < n && cancellation_holds; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (y != z && t.m(x, y) == t.m(x, z) && t.J(x, y) == t.J(x, z)) {
          cancellation_holds = false;
          break;
        }
      }
    }
  }

  if (identity_holds != cancellation_holds) {
    throw std::logic_error("distributivity criteria disagree");
  }
  return identity_holds;
}

bool is_boolean(const DivisorPoset& poset) {
  const bool boolean = is_distributive(poset) && is_uniquely_complemented(poset);
  if (boolean != is_squarefree(poset.root())) {
    throw std::logic_error("boolean lattice check disagrees with squarefreeness");
  }
  return boolean;
}

bool gcd_lcm_identity_check(const DivisorPoset& poset) {
  const auto& e = poset.elements();
  for (const Divisor x : e) {
    for (const Divisor y : e) {
      const auto lhs = static_cast<uint128>(std::gcd(x, y)) * std::lcm(x, y);
      const auto rhs = static_cast<uint128>(x) * y;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_irreducible(Divisor p) { return p >= 2 && smallest_nontrivial_divisor(p) == 0; }

std::vector<Divisor> euclid_factorization(Divisor n) {
  if (n < 2) throw InvalidArgument("euclid_factorization needs n >= 2");
  std::vector<Divisor> out;
  Divisor cofactor = n;
  while (cofactor > 1) {
    // Descend through proper divisors until none is left.
    Divisor factor = cofactor;
    for (Divisor d = smallest_nontrivial_divisor(factor); d != 0; d = smallest_nontrivial_divisor(factor)) {
      factor = d;
    }
    out.push_back(factor);
    cofactor /= factor;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool prime_property_check(Divisor p, std::span<const std::pair<Divisor, Divisor>> sample) {
  if (!is_irreducible(p)) throw InvalidArgument(std::to_string(p) + " is not irreducible");
  for (const auto& [a, b] : sample) {
    const auto product = static_cast<uint128>(a) * b;
    if (product % p != 0) continue;
    if (a % p != 0 && b % p != 0) return false;
  }
  return true;
}

bool prime_property_check_exhaustive(Divisor p, Divisor limit) {
  if (!is_irreducible(p)) throw InvalidArgument(std::to_string(p) + " is not irreducible");
  std::vector<std::pair<Divisor, Divisor>> row;
  row.reserve(limit);
  for (Divisor a = 1; a <= limit; ++a) {
    row.clear();
    for (Divisor b = 1; b <= limit; ++b) row.emplace_back(a, b);
    if (!prime_property_check(p, row)) return false;
  }
  return true;
}

LatticeReport analyze(const DivisorPoset& poset) {
  LatticeReport r;
  r.root = poset.root();
  r.elements = poset.elements();
  r.atoms = poset.atoms();
  r.cover = chain_cover(poset);
  r.distributive = is_distributive(poset);
  r.complemented = is_complemented(poset);
  r.uniquely_complemented = is_uniquely_complemented(poset);
  r.boolean = is_boolean(poset);
  return r;
}

std::string to_json(const LatticeReport& report) {
  nlohmann::ordered_json doc;
  doc["a"] = report.root;
  doc["elements"] = report.elements;
  doc["atoms"] = report.atoms;
  doc["width"] = report.cover.width();
  doc["chains"] = report.cover.chains;
  doc["antichain"] = report.cover.antichain;
  doc["boolean"] = report.boolean;
  doc["distributive"] = report.distributive;
  doc["complemented"] = report.complemented;
  return doc.dump();
}

std::string to_text(const LatticeReport& report) {
  const auto join_values = [](const std::vector<Divisor>& values) {
    std::string out;
    for (const Divisor v : values) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
    return out;
  };
  std::ostringstream out;
  out << "co-ideal {" << report.root << "}: " << report.elements.size() << " elements\n";
  out << "elements: " << join_values(report.elements) << '\n';
  out << "atoms: " << join_values(report.atoms) << " (" << report.atoms.size() << ")\n";
  out << "width: " << report.cover.width() << '\n';
  for (std::size_t i = 0; i < report.cover.chains.size(); ++i) {
    out << "chain " << i + 1 << ": " << join_values(report.cover.chains[i]) << '\n';
  }
  out << "antichain: " << join_values(report.cover.antichain) << '\n';
  out << "distributive: " << (report.distributive ? "true" : "false") << '\n';
  out << "complemented: " << (report.complemented ? "true" : "false") << '\n';
  out << "boolean: " << (report.boolean ? "true" : "false") << '\n';
  return out.str();
}

std::string to_dot(const DivisorPoset& poset, const ChainCover* cover) {
  static constexpr const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                            "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

  std::vector<std::size_t> chain_of(poset.size(), npos);
  if (cover != nullptr) {
    for (std::size_t c = 0; c < cover->chains.size(); ++c) {
      for (const Divisor x : cover->chains[c]) chain_of[poset.index_of(x)] = c;
    }
  }

  std::ostringstream out;
  out << "digraph coideal_" << poset.root() << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const Divisor x = poset.elements()[i];
    out << "  \"" << x << "\" [label=\"" << x << "\"";
    if (chain_of[i] != npos) {
      out << ", style=filled, fillcolor=\"" << palette[chain_of[i] % palette_size] << "\"";
    }
    out << "];\n";
  }
  for (const auto& [lo, hi] : poset.hasse_edges()) {
    out << "  \"" << lo << "\" -> \"" << hi << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace liouville::lattice
