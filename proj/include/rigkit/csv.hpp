#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rigkit {

/// RFC 4180 quoting: fields containing a comma, quote or newline are quoted.
std::string csv_field(std::string_view value);

std::string csv_row(const std::vector<std::string>& fields);

/// Splits one CSV line, honouring quoted fields.
std::vector<std::string> csv_split(std::string_view line);

/// Writes through a sibling temp file and renames into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// "%.*f" without locale surprises.
std::string format_fixed(double value, int decimals);

}  // namespace rigkit
