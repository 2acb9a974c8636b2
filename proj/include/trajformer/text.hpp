#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trajformer::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);
/// Shortest decimal representation that round-trips exactly.
std::string format_double(double v);
std::string lower(std::string_view s);

/// Parses `key=value` lines; '#' starts a comment. Throws DataError on malformed lines.
std::map<std::string, std::string> parse_key_values(std::string_view content, std::string_view origin);
std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace trajformer::text
