#include "hv/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hv/errors.hpp"

namespace hv {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
  return s;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw UsageError("config key '" + std::string(key) + "' needs a nonnegative integer, got '" + std::string(value) + "'");
  return out;
}

}  // namespace

std::vector<Rational> parse_generators(std::string_view text) {
  std::vector<Rational> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      out.push_back(Rational::parse(token));
    } catch (const std::exception& e) {
      throw UsageError("bad generator '" + token + "': " + e.what());
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') flush();
    else token.push_back(c);
  }
  flush();
  if (out.empty()) throw UsageError("at least one generator is required");
  return out;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "generators") generators = parse_generators(value);
  else if (key == "variant") variant = parse_variant(value);
  else if (key == "mixed_cocycle") mixed_cocycle = parse_mixed_cocycle(value);
  else if (key == "radius" || key == "window") radius = parse_unsigned<std::size_t>(key, value);
  else if (key == "seed") seed = parse_unsigned<std::uint64_t>(key, value);
  else if (key == "jobs") jobs = parse_unsigned<unsigned>(key, value);
  else if (key == "format") {
    if (value != "text" && value != "json") throw UsageError("format must be text or json");
    format = std::string(value);
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    if (trim(l).empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    cfg.set(trim(l.substr(0, eq)), l.substr(eq + 1));
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

ConfigPtr RunConfig::algebra() const { return make_config(GroupSpec(generators), variant, mixed_cocycle); }

}  // namespace hv
