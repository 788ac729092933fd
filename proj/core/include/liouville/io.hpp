#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "liouville/arith_func.hpp"

namespace liouville {

/// {"domain": "Q"|"Z", "bound": N, "values": ["p/q" | "n", ...]}
std::string to_json(const ArithFunc& alpha);

/// Inverse of to_json. Values may also be JSON integers. Throws ParseError.
ArithFunc from_json(std::string_view text);

/// One "index,value" line per index 1..N.
std::string to_csv(const ArithFunc& alpha);

/// Reads "index,value" lines. An optional "index,value" header, blank lines
/// and '#' comments are skipped. Missing indices are zero and the bound is
/// the largest index. Throws ParseError with the offending line number.
ArithFunc from_csv(std::string_view text, Domain domain);

/// Values separated by single spaces.
std::string to_text(const ArithFunc& alpha);

/// Dispatches on extension: ".csv" reads CSV in `csv_domain`, anything
/// else is read as JSON.
ArithFunc load_function(const std::filesystem::path& path, Domain csv_domain);

}  // namespace liouville
