#include "lucas/formats.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "lucas/error.hpp"

namespace lucas {

namespace {

std::uint64_t parse_decimal(std::string_view field, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::Parse, "invalid decimal for " + std::string(what) + ": '" + std::string(field) + "'");
  }
  return value;
}

// Splits `name=value` lines. Blank lines are skipped; a trailing CR is
// tolerated. Duplicate or malformed lines are rejected.
std::map<std::string, std::string, std::less<>> parse_pairs(std::string_view text) {
  std::map<std::string, std::string, std::less<>> pairs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::Parse, "expected name=value, got '" + std::string(line) + "'");
    auto [it, inserted] = pairs.emplace(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    if (!inserted) throw Error(Errc::Parse, "duplicate field '" + it->first + "'");
  }
  return pairs;
}

const std::string& field(const std::map<std::string, std::string, std::less<>>& pairs, std::string_view name) {
  const auto it = pairs.find(name);
  if (it == pairs.end()) throw Error(Errc::Parse, "missing field '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

std::string format_public_key(const PublicKey& pk) {
  std::ostringstream os;
  os << "p=" << pk.p.value() << "\ne1=" << pk.e1.value() << "\ne2=" << pk.e2.value() << '\n';
  return os.str();
}

std::string format_secret_key(const SecretKey& sk) {
  std::ostringstream os;
  os << "p=" << sk.p.value() << "\nd=" << sk.d << '\n';
  return os.str();
}

PublicKey parse_public_key(std::string_view text) {
  const auto pairs = parse_pairs(text);
  const Prime p(parse_decimal(field(pairs, "p"), "p"));
  const auto e1 = parse_decimal(field(pairs, "e1"), "e1");
  const auto e2 = parse_decimal(field(pairs, "e2"), "e2");
  if (e1 == 0 || e1 >= p.value() || e2 == 0 || e2 >= p.value()) {
    throw Error(Errc::Parse, "e1 and e2 must lie in [1, p)");
  }
  if (!is_primitive_root(Residue(e1, p))) {
    throw Error(Errc::NotPrimitiveRoot, "e1 = " + std::to_string(e1) + " is not a primitive root");
  }
  return PublicKey{p, Residue(e1, p), Residue(e2, p)};
}

SecretKey parse_secret_key(std::string_view text) {
  const auto pairs = parse_pairs(text);
  const Prime p(parse_decimal(field(pairs, "p"), "p"));
  const auto d = parse_decimal(field(pairs, "d"), "d");
  if (d <= 1 || d >= euler_phi(p)) throw Error(Errc::ExponentOutOfRange, "d must satisfy 1 < d < phi(p)");
  return SecretKey{p, d};
}

std::string format_symbols(const SymbolStream& symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(symbols[i]);
  }
  return out;
}

SymbolStream parse_symbols(std::string_view csv) {
  SymbolStream out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = csv.find(',', pos);
    const std::string_view item = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    out.push_back(parse_decimal(item, "symbol"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_envelope(const Envelope& env) {
  return "s=" + std::to_string(env.s) + "\nc=" + format_symbols(env.ciphertext) + "\n";
}

Envelope parse_envelope(std::string_view text) {
  // Exactly two lines, in order.
  const auto first_nl = text.find('\n');
  if (first_nl == std::string_view::npos) throw Error(Errc::Parse, "envelope needs two lines");
  std::string_view line1 = text.substr(0, first_nl);
  std::string_view rest = text.substr(first_nl + 1);
  const auto second_nl = rest.find('\n');
  std::string_view line2 = rest.substr(0, second_nl);
  if (second_nl != std::string_view::npos && rest.find_first_not_of("\r\n", second_nl) != std::string_view::npos) {
    throw Error(Errc::Parse, "trailing data after envelope");
  }
  if (!line1.empty() && line1.back() == '\r') line1.remove_suffix(1);
  if (!line2.empty() && line2.back() == '\r') line2.remove_suffix(1);
  if (!line1.starts_with("s=")) throw Error(Errc::Parse, "envelope line 1 must start with 's='");
  if (!line2.starts_with("c=")) throw Error(Errc::Parse, "envelope line 2 must start with 'c='");
  Envelope env;
  env.s = parse_decimal(line1.substr(2), "s");
  env.ciphertext = parse_symbols(line2.substr(2));
  return env;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::Io, "failed reading " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

}  // namespace lucas
