#include "binsub/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace binsub {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::int64_t parse_int(const std::string& token, const std::string& where) {
  size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadArgument, where + ": bad integer '" + token + "'");
  }
  while (pos < token.size() && isspace(static_cast<unsigned char>(token[pos]))) ++pos;
  if (pos != token.size()) {
    throw Error(ErrorCode::BadArgument, where + ": bad integer '" + token + "'");
  }
  return v;
}

std::vector<std::int64_t> split_csv(const std::string& line,
                                    const std::string& where) {
  std::vector<std::int64_t> out;
  std::stringstream ss(line);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_int(token, where));
  if (out.empty()) {
    throw Error(ErrorCode::BadArgument, where + ": no values");
  }
  return out;
}

SubgroupModel model_from_json_input(const nlohmann::json& j, int r_flag,
                                    bool diagonal_flag,
                                    const std::string& origin) {
  if (!j.contains("sigmas")) {
    throw Error(ErrorCode::BadArgument, origin + ": missing 'sigmas' field");
  }
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& row : j.at("sigmas")) {
    raw.push_back(row.get<std::vector<std::int64_t>>());
  }
  if (raw.size() == 1) {
    int r = j.value("r", r_flag > 0 ? r_flag : 1);
    if (r_flag > 0) r = r_flag;
    if (r < 1) throw Error(ErrorCode::BadShape, origin + ": r must be >= 1");
    raw.resize(static_cast<size_t>(r), raw[0]);
  } else if (j.contains("r") &&
             j.at("r").get<int>() != static_cast<int>(raw.size())) {
    throw Error(ErrorCode::LengthMismatch,
                origin + ": 'r' disagrees with the number of sigma lists");
  }
  SigmaSpec spec = validate_spec(raw);
  if (j.contains("m") && j.at("m").get<int>() != spec.m) {
    throw Error(ErrorCode::LengthMismatch,
                origin + ": 'm' disagrees with the sigma length");
  }
  bool diagonal = diagonal_flag || j.value("diagonal", false);
  return make_model(std::move(spec), diagonal);
}

}  // namespace

SubgroupModel parse_sigma_input(const std::string& text, int r_flag,
                                bool diagonal_flag, const std::string& origin) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw Error(ErrorCode::BadArgument, origin + ": empty input");
  }
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::BadArgument, origin + ": " + e.what());
    }
    return model_from_json_input(j, r_flag, diagonal_flag, origin);
  }

  std::vector<std::vector<std::int64_t>> raw;
  std::vector<int> line_of_list;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    raw.push_back(split_csv(line, origin + ":" + std::to_string(line_no)));
    line_of_list.push_back(line_no);
  }
  if (raw.empty()) {
    throw Error(ErrorCode::BadArgument, origin + ": no sigma lines");
  }
  if (raw.size() == 1 && r_flag > 1) {
    raw.resize(static_cast<size_t>(r_flag), raw[0]);
    line_of_list.resize(static_cast<size_t>(r_flag), line_of_list[0]);
  }
  try {
    return make_model(validate_spec(raw), diagonal_flag);
  } catch (const Error& e) {
    // surface the offending line when the failure points at one list
    long long list = e.arg(0);
    if ((e.code() == ErrorCode::DuplicateEntry ||
         e.code() == ErrorCode::NonPositiveEntry ||
         e.code() == ErrorCode::LengthMismatch) &&
        list >= 0 && list < static_cast<long long>(line_of_list.size())) {
      throw Error(e.code(),
                  origin + ":" + std::to_string(line_of_list[static_cast<size_t>(list)]) +
                      ": " + e.what(),
                  e.arg(0), e.arg(1), e.arg(2));
    }
    throw;
  }
}

SubgroupModel load_sigma_file(const std::string& path, int r_flag,
                              bool diagonal_flag) {
  return parse_sigma_input(read_file_or_stdin(path), r_flag, diagonal_flag,
                           path);
}

std::vector<std::int64_t> parse_csv_integers(const std::string& text) {
  return split_csv(text, "argument");
}

std::vector<std::uint64_t> parse_bit_matrix(const std::string& text,
                                            int& length) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::uint64_t> rows;
  length = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::uint64_t mask = 0;
    int col = 0;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        if (col >= kMaxFactors) {
          throw Error(ErrorCode::BadShape, "matrix wider than 64 columns");
        }
        if (ch == '1') mask |= std::uint64_t{1} << col;
        ++col;
      } else if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
        continue;
      } else {
        throw Error(ErrorCode::BadArgument,
                    "line " + std::to_string(line_no) +
                        ": matrix entries must be 0 or 1");
      }
    }
    if (col == 0) continue;
    if (length < 0) length = col;
    if (col != length) {
      throw Error(ErrorCode::LengthMismatch,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(length) + " columns, got " +
                      std::to_string(col));
    }
    rows.push_back(mask);
  }
  if (length <= 0) {
    throw Error(ErrorCode::BadArgument, "no matrix rows found");
  }
  return rows;
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::BadArgument, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace binsub
