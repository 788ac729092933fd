#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "liouville/classical.hpp"
#include "liouville/errors.hpp"
#include "liouville/factorization.hpp"
#include "liouville/io.hpp"
#include "liouville/lattice.hpp"
#include "liouville/ring.hpp"

namespace liouville::cli {

namespace {

constexpr std::size_t default_bound = 1000;

struct Globals {
  std::size_t bound = default_bound;
  std::string domain = "Q";
  std::string in;
  std::string out;
  std::string format;

  CLI::Option* bound_opt = nullptr;
  CLI::Option* domain_opt = nullptr;
};

// Values bound to subcommand options.
struct Operands {
  std::string fn;
  std::string lhs;
  std::string rhs;
  std::string num;
  std::string den;
  std::string unit = "epsilon";
  std::vector<std::string> factors;
  std::size_t at = 0;
  lattice::Divisor root = 0;
  lattice::Divisor number = 0;
  lattice::Divisor prime = 0;
  lattice::Divisor limit = 200;
  std::size_t samples = 0;
  lattice::Divisor sample_max = 1'000'000;
  std::uint64_t seed = 1;
  bool color_chains = false;
};

class Context {
 public:
  explicit Context(const Globals& g) : globals_(g), domain_(parse_domain(g.domain)) {}

  Domain domain() const { return domain_; }
  std::size_t bound() const { return globals_.bound; }

  std::string format(std::string_view fallback) const {
    return globals_.format.empty() ? std::string(fallback) : globals_.format;
  }

  /// A built-in name, nu_R, omega, or a .json/.csv file path.
  ArithFunc resolve(const std::string& operand) const {
    if (operand.empty()) throw InvalidArgument("missing function operand");
    const std::filesystem::path path(operand);
    if (path.extension() == ".json" || path.extension() == ".csv" || std::filesystem::exists(path)) {
      ArithFunc f = load_function(path, domain_);
      if (globals_.domain_opt->count() > 0) f = f.in(domain_);
      if (globals_.bound_opt->count() > 0 && globals_.bound < f.bound()) f = restrict_to(f, globals_.bound);
      return f;
    }
    if (operand == "omega") return omega(bound(), domain_);
    if (operand.starts_with("nu_")) {
      std::size_t r = 0;
      std::istringstream digits(operand.substr(3));
      if (!(digits >> r) || !digits.eof()) throw UnknownFunction("unknown function '" + operand + "'");
      return nu(r, bound(), domain_);
    }
    return classical::build(operand, bound()).in(domain_);
  }

 private:
  const Globals& globals_;
  Domain domain_;
};

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (const auto a : allowed) {
    if (format == a) return;
  }
  throw InvalidArgument("format '" + format + "' not supported by this command");
}

void write_function(std::ostream& out, const ArithFunc& f, const std::string& format) {
  check_format(format, {"text", "json", "csv"});
  if (format == "json") {
    out << to_json(f) << '\n';
  } else if (format == "csv") {
    out << to_csv(f);
  } else {
    out << to_text(f) << '\n';
  }
}

std::string certificate_text(const Certificate& c) {
  std::string text(to_string(c.verdict));
  if (c.verdict == Certificate::Verdict::Irreducible) {
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, PrimeSupport>) {
            text += "(PrimeSupport(" + std::to_string(r.prime) + "))";
          } else if constexpr (std::is_same_v<R, PrimeRank>) {
            text += "(PrimeRank(" + std::to_string(r.rank) + "))";
          } else {
            text += "(PrimeLeadingMagnitude(" + r.magnitude.get_str() + "))";
          }
        },
        *c.reason);
  }
  return text;
}

std::string join_numbers(const std::vector<lattice::Divisor>& values) {
  std::string out;
  for (const auto v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

using Handler = std::function<int(const Context&, const Operands&, std::ostream&)>;

int cmd_fn_build(const Context& ctx, const Operands& ops, std::ostream& out) {
  write_function(out, ctx.resolve(ops.fn), ctx.format("json"));
  return exit_ok;
}

int cmd_fn_eval(const Context& ctx, const Operands& ops, std::ostream& out) {
  const ArithFunc f = ctx.resolve(ops.fn);
  if (ops.at != 0) {
    const std::string format = ctx.format("text");
    check_format(format, {"text", "json", "csv"});
    const std::string value = f.at(ops.at).to_string();
    if (format == "json") {
      out << "{\"index\":" << ops.at << ",\"value\":\"" << value << "\"}\n";
    } else if (format == "csv") {
      out << ops.at << ',' << value << '\n';
    } else {
      out << value << '\n';
    }
    return exit_ok;
  }
  write_function(out, f, ctx.format("text"));
  return exit_ok;
}

int cmd_add(const Context& ctx, const Operands& ops, std::ostream& out) {
  write_function(out, add(ctx.resolve(ops.lhs), ctx.resolve(ops.rhs)), ctx.format("text"));
  return exit_ok;
}

int cmd_conv(const Context& ctx, const Operands& ops, std::ostream& out) {
  write_function(out, convolve(ctx.resolve(ops.lhs), ctx.resolve(ops.rhs)), ctx.format("text"));
  return exit_ok;
}

int cmd_inv(const Context& ctx, const Operands& ops, std::ostream& out) {
  write_function(out, inverse(ctx.resolve(ops.fn)), ctx.format("text"));
  return exit_ok;
}

int cmd_div(const Context& ctx, const Operands& ops, std::ostream& out) {
  const DivisionVerdict verdict = divide(ctx.resolve(ops.num), ctx.resolve(ops.den));
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json", "csv"});
  if (const auto* q = std::get_if<Quotient>(&verdict)) {
    if (format == "json") {
      out << "{\"verdict\":\"Quotient\",\"quotient\":" << to_json(q->value) << "}\n";
    } else {
      write_function(out, q->value, format);
    }
    return exit_ok;
  }
  const std::size_t witness = std::get<NotDivisibleAtBound>(verdict).witness;
  if (format == "json") {
    out << "{\"verdict\":\"NotDivisibleAtBound\",\"witness\":" << witness << "}\n";
  } else {
    out << "NotDivisibleAtBound(" << witness << ")\n";
  }
  return exit_failure;
}

int cmd_rank(const Context& ctx, const Operands& ops, std::ostream& out) {
  const Rank r = rank(ctx.resolve(ops.fn));
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  if (format == "json") {
    if (r.visible()) {
      out << "{\"rank\":" << r.index() << ",\"leading\":\"" << r.leading().to_string() << "\"}\n";
    } else {
      out << "{\"rank\":null,\"leading\":null}\n";
    }
  } else if (r.visible()) {
    out << "Detected(" << r.index() << ", " << r.leading().to_string() << ")\n";
  } else {
    out << "NotVisibleAtBound\n";
  }
  return exit_ok;
}

int boolean_answer(std::ostream& out, const std::string& format, const char* key, bool value) {
  check_format(format, {"text", "json"});
  if (format == "json") {
    out << "{\"" << key << "\":" << bool_text(value) << "}\n";
  } else {
    out << bool_text(value) << '\n';
  }
  return value ? exit_ok : exit_failure;
}

int cmd_unit(const Context& ctx, const Operands& ops, std::ostream& out) {
  return boolean_answer(out, ctx.format("text"), "unit", is_unit(ctx.resolve(ops.fn)));
}

int cmd_associates(const Context& ctx, const Operands& ops, std::ostream& out) {
  return boolean_answer(out, ctx.format("text"), "associates",
                        are_associates(ctx.resolve(ops.lhs), ctx.resolve(ops.rhs)));
}

int cmd_certify(const Context& ctx, const Operands& ops, std::ostream& out) {
  const Certificate c = certify(ctx.resolve(ops.fn));
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  out << (format == "json" ? c.to_json() : certificate_text(c)) << '\n';
  return exit_ok;
}

int cmd_verify_fact(const Context& ctx, const Operands& ops, std::ostream& out) {
  const ArithFunc alpha = ctx.resolve(ops.fn);
  FactorizationClaim claim{ctx.resolve(ops.unit), {}};
  for (const auto& f : ops.factors) claim.irreducibles.push_back(ctx.resolve(f));
  const FactorizationReport report = verify_factorization(alpha, claim);

  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  if (format == "json") {
    out << report.to_json() << '\n';
  } else {
    out << "unit part: " << (report.unit_ok ? "unit" : "NOT a unit") << '\n';
    for (std::size_t i = 0; i < report.factors.size(); ++i) {
      const bool ok = report.factors[i].irreducible();
      out << "factor " << i + 1 << ": " << (ok ? "" : "Unverified: ") << certificate_text(report.factors[i])
          << '\n';
    }
    if (report.product_matches) {
      out << "product: matches\n";
    } else {
      out << "product: mismatch at index " << report.first_mismatch << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? exit_ok : exit_failure;
}

int cmd_identity_suite(const Context& ctx, const Operands&, std::ostream& out) {
  const auto results = classical::identity_suite(ctx.bound());
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  bool all = true;
  if (format == "json") out << '[';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.passed;
    if (format == "json") {
      out << (i ? "," : "") << "{\"identity\":\"" << r.name << "\",\"passed\":" << bool_text(r.passed)
          << ",\"first_failure\":" << (r.passed ? std::string("null") : std::to_string(r.first_failure)) << '}';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << " (first failure at " << r.first_failure << ')';
      out << '\n';
    }
  }
  if (format == "json") out << "]\n";
  return all ? exit_ok : exit_failure;
}

int cmd_lattice_report(const Context& ctx, const Operands& ops, std::ostream& out) {
  const lattice::LatticeReport report = lattice::analyze(lattice::co_ideal(ops.root));
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  out << (format == "json" ? lattice::to_json(report) + "\n" : lattice::to_text(report));
  return exit_ok;
}

int cmd_lattice_chains(const Context& ctx, const Operands& ops, std::ostream& out) {
  const lattice::ChainCover cover = lattice::chain_cover(lattice::co_ideal(ops.root));
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  if (format == "json") {
    out << "{\"width\":" << cover.width() << ",\"chains\":[";
    for (std::size_t i = 0; i < cover.chains.size(); ++i) {
      out << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < cover.chains[i].size(); ++j) out << (j ? "," : "") << cover.chains[i][j];
      out << ']';
    }
    out << "],\"antichain\":[";
    for (std::size_t i = 0; i < cover.antichain.size(); ++i) out << (i ? "," : "") << cover.antichain[i];
    out << "]}\n";
  } else {
    for (const auto& chain : cover.chains) out << join_numbers(chain) << '\n';
  }
  return exit_ok;
}

int cmd_lattice_dot(const Context& ctx, const Operands& ops, std::ostream& out) {
  check_format(ctx.format("dot"), {"dot"});
  const lattice::DivisorPoset poset = lattice::co_ideal(ops.root);
  if (ops.color_chains) {
    const lattice::ChainCover cover = lattice::chain_cover(poset);
    out << lattice::to_dot(poset, &cover);
  } else {
    out << lattice::to_dot(poset);
  }
  return exit_ok;
}

int cmd_euclid(const Context& ctx, const Operands& ops, std::ostream& out) {
  const auto factors = lattice::euclid_factorization(ops.number);
  const std::string format = ctx.format("text");
  check_format(format, {"text", "json"});
  if (format == "json") {
    out << '[';
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "," : "") << factors[i];
    out << "]\n";
  } else {
    out << join_numbers(factors) << '\n';
  }
  return exit_ok;
}

int cmd_prime_check(const Context& ctx, const Operands& ops, std::ostream& out) {
  bool holds = false;
  if (ops.samples > 0) {
    std::mt19937_64 rng(ops.seed);
    std::uniform_int_distribution<lattice::Divisor> pick(1, ops.sample_max);
    std::vector<std::pair<lattice::Divisor, lattice::Divisor>> sample(ops.samples);
    for (auto& [a, b] : sample) {
      a = pick(rng);
      b = pick(rng);
    }
    holds = lattice::prime_property_check(ops.prime, sample);
  } else {
    holds = lattice::prime_property_check_exhaustive(ops.prime, ops.limit);
  }
  return boolean_answer(out, ctx.format("text"), "prime_property", holds);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dirichlet-convolution rings and divisor lattices", "liouville"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.bound_opt = app.add_option("--bound", g.bound, "Truncation bound N for built-in functions")
                    ->check(CLI::PositiveNumber);
  g.domain_opt = app.add_option("--domain", g.domain, "Coefficient domain")->check(CLI::IsMember({"Q", "Z"}));
  app.add_option("--in", g.in, "Function file used when no operand is given");
  app.add_option("--out", g.out, "Write data to FILE instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));

  Operands ops;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto command = [&](const char* name, const char* help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };
  const auto unary = [&](CLI::App* sub) { sub->add_option("fn,--fn", ops.fn, "Function: built-in name or file"); };
  const auto binary = [&](CLI::App* sub) {
    sub->add_option("--lhs", ops.lhs, "Left operand")->required();
    sub->add_option("--rhs", ops.rhs, "Right operand")->required();
  };

  CLI::App* fn_build = command("fn-build", "Build a named function", cmd_fn_build);
  fn_build->add_option("name", ops.fn, "Built-in name (one, id_k, mobius, ..., nu_R, omega)")->required();

  CLI::App* fn_eval = command("fn-eval", "Print a function's values", cmd_fn_eval);
  unary(fn_eval);
  fn_eval->add_option("--at", ops.at, "Print only the value at this index")->check(CLI::PositiveNumber);

  binary(command("add", "Pointwise sum", cmd_add));
  binary(command("conv", "Dirichlet convolution", cmd_conv));
  unary(command("inv", "Dirichlet inverse of a unit", cmd_inv));

  CLI::App* div = command("div", "Solve den * q = num at the bound", cmd_div);
  div->add_option("--num", ops.num, "Dividend")->required();
  div->add_option("--den", ops.den, "Divisor")->required();

  unary(command("rank", "Least index with a nonzero value", cmd_rank));
  unary(command("unit", "Whether the function is a unit", cmd_unit));
  binary(command("associates", "Whether two functions divide each other", cmd_associates));
  unary(command("certify", "Irreducibility certificate", cmd_certify));

  CLI::App* verify = command("verify-fact", "Verify unit * factors = fn", cmd_verify_fact);
  unary(verify);
  verify->add_option("--unit", ops.unit, "Unit part (default epsilon)");
  verify->add_option("--factor", ops.factors, "Claimed irreducible factor (repeatable)");

  command("identity-suite", "Check the classical Moebius-inversion identities", cmd_identity_suite);

  const auto root_arg = [&](CLI::App* sub) {
    sub->add_option("a", ops.root, "Root of the co-ideal")->required()->check(CLI::PositiveNumber);
  };
  root_arg(command("lattice-report", "Analyze the divisor lattice of a", cmd_lattice_report));
  root_arg(command("lattice-chains", "Minimum chain partition of the divisors of a", cmd_lattice_chains));
  CLI::App* dot = command("lattice-dot", "Hasse diagram in Graphviz DOT", cmd_lattice_dot);
  root_arg(dot);
  dot->add_flag("--color-chains", ops.color_chains, "Fill nodes by chain of a minimum partition");

  command("euclid", "Factor n by descending divisor chains", cmd_euclid)
      ->add_option("n", ops.number, "Integer >= 2")
      ->required();

  CLI::App* prime = command("prime-check", "Check p | ab implies p | a or p | b", cmd_prime_check);
  prime->add_option("p", ops.prime, "Irreducible p")->required();
  prime->add_option("--limit", ops.limit, "Exhaustive range 1..limit for a and b");
  prime->add_option("--samples", ops.samples, "Random pairs instead of the exhaustive range");
  prime->add_option("--max", ops.sample_max, "Upper end of random a, b")->check(CLI::PositiveNumber);
  prime->add_option("--seed", ops.seed, "Seed for random pairs");

  std::vector<const char*> argv{"liouville"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (ops.fn.empty()) ops.fn = g.in;

  std::ostringstream data;
  int code = exit_ok;
  try {
    const Context ctx(g);
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        code = handler(ctx, ops, data);
        break;
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const UnknownFunction& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }

  if (g.out.empty()) {
    out << data.str();
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << g.out << "'\n";
      return exit_usage;
    }
    file << data.str();
  }
  return code;
}

}  // namespace liouville::cli
