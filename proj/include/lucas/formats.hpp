#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lucas/protocol.hpp"

namespace lucas {

// Key files are UTF-8 text, one `name=value` decimal pair per line, LF
// terminated. Public: p, e1, e2. Secret: p, d.
std::string format_public_key(const PublicKey& pk);
std::string format_secret_key(const SecretKey& sk);
PublicKey parse_public_key(std::string_view text);
SecretKey parse_secret_key(std::string_view text);

// Envelope: `s=<decimal>` then `c=<comma-separated decimal symbols>`.
std::string format_envelope(const Envelope& env);
Envelope parse_envelope(std::string_view text);

std::string format_symbols(const SymbolStream& symbols);
SymbolStream parse_symbols(std::string_view csv);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lucas
