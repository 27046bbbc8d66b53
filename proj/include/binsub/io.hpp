#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "binsub/sigma.hpp"

namespace binsub {

// Text form: one comma-separated line of values per letter, blank lines and
// '#' comments ignored. A single line with r_flag > 1 is replicated to r
// letters. JSON form (first non-space byte '{'): fields sigmas, and
// optionally r, m, diagonal.
SubgroupModel parse_sigma_input(const std::string& text, int r_flag,
                                bool diagonal_flag,
                                const std::string& origin = "input");

SubgroupModel load_sigma_file(const std::string& path, int r_flag,
                              bool diagonal_flag);

// "1,2,4" -> {1,2,4}; used for inline sigma arguments.
std::vector<std::int64_t> parse_csv_integers(const std::string& text);

// 0/1 matrix, one row per line, separators optional. Returns row masks and
// sets length to the column count.
std::vector<std::uint64_t> parse_bit_matrix(const std::string& text,
                                            int& length);

std::string read_file_or_stdin(const std::string& path);

}  // namespace binsub
