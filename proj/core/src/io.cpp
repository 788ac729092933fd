#include "liouville/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string to_json(const ArithFunc& alpha) {
  ordered_json doc;
  doc["domain"] = std::string(to_string(alpha.domain()));
  doc["bound"] = alpha.bound();
  ordered_json values = ordered_json::array();
  for (const Coefficient& c : alpha.values()) values.push_back(c.to_string());
  doc["values"] = std::move(values);
  return doc.dump();
}

ArithFunc from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; turn it into a line number.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!doc.is_object()) throw ParseError("function document must be a JSON object", 0);
  if (!doc.contains("domain") || !doc["domain"].is_string()) throw ParseError("missing string field 'domain'", 0);
  if (!doc.contains("values") || !doc["values"].is_array()) throw ParseError("missing array field 'values'", 0);

  Domain domain;
  try {
    domain = parse_domain(doc["domain"].get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }

  const auto& raw = doc["values"];
  if (raw.empty()) throw ParseError("'values' must not be empty", 0);
  if (doc.contains("bound")) {
    if (!doc["bound"].is_number_unsigned() || doc["bound"].get<std::size_t>() != raw.size()) {
      throw ParseError("'bound' does not match the number of values", 0);
    }
  }

  std::vector<Coefficient> values;
  values.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& v = raw[i];
    std::string token;
    if (v.is_string()) {
      token = v.get<std::string>();
    } else if (v.is_number_integer()) {
      token = v.dump();
    } else {
      throw ParseError("value at index " + std::to_string(i + 1) + " must be a string or integer", 0);
    }
    try {
      values.push_back(Coefficient::parse(token, domain));
    } catch (const ParseError&) {
      throw ParseError("malformed value '" + token + "' at index " + std::to_string(i + 1), 0);
    } catch (const NotInDomain&) {
      throw ParseError("value '" + token + "' at index " + std::to_string(i + 1) + " is not in " +
                           std::string(to_string(domain)),
                       0);
    }
  }
  return ArithFunc::make(values, domain);
}

std::string to_csv(const ArithFunc& alpha) {
  std::string out;
  const auto values = alpha.values();
  for (std::size_t n = 1; n <= values.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += values[n - 1].to_string();
    out += '\n';
  }
  return out;
}

ArithFunc from_csv(std::string_view text, Domain domain) {
  std::map<std::size_t, Coefficient> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line == "index,value") continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'index,value'", line_no);
    const std::string_view index_text = trim(line.substr(0, comma));
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size() || index == 0) {
      throw ParseError("invalid index '" + std::string(index_text) + "'", line_no);
    }
    if (entries.contains(index)) throw ParseError("duplicate index " + std::to_string(index), line_no);
    try {
      entries.emplace(index, Coefficient::parse(line.substr(comma + 1), domain));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const NotInDomain& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (entries.empty()) throw ParseError("no values in CSV input", 0);

  const std::size_t bound = entries.rbegin()->first;
  std::vector<Coefficient> values(bound, Coefficient(0, domain));
  for (auto& [index, value] : entries) values[index - 1] = std::move(value);
  return ArithFunc::make(values, domain);
}

std::string to_text(const ArithFunc& alpha) {
  std::string out;
  for (const Coefficient& c : alpha.values()) {
    if (!out.empty()) out += ' ';
    out += c.to_string();
  }
  return out;
}

ArithFunc load_function(const std::filesystem::path& path, Domain csv_domain) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".csv") return from_csv(buffer.str(), csv_domain);
  return from_json(buffer.str());
}

}  // namespace liouville
