#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnf::tables {

// "(partition) | (tensor space) | (irreducible)" for every non-identity
// Jordan type of dimension lo..hi.
std::vector<std::string> table_A(std::uint64_t lo, std::uint64_t hi);

// "(S) | (wedge) | (irreducible) | alpha". Without `all`, n > 3 keeps only
// the alpha > 0 rows, matching the published selection.
std::vector<std::string> table_C(std::uint64_t lo, std::uint64_t hi, bool all = false);

// Line-by-line comparison; returns human-readable differences, empty on match.
std::vector<std::string> diff(const std::vector<std::string>& got, const std::vector<std::string>& want);

std::vector<std::string> read_lines(const std::string& path);

} // namespace hnf::tables
