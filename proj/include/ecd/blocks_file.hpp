#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ecd/design.hpp"
#include "ecd/error.hpp"

namespace ecd {

namespace detail {

inline long long parse_count_token(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::out_of_range&) {
    throw ParseError(line_no, std::string(what) + " overflows");
  } catch (...) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line_no, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

}  // namespace detail

/// Strict reader for the blocks text format:
///   v <int>
///   b <int>
///   <b lines of strictly increasing space-separated point indices>
/// `#` starts a comment line (allowed anywhere); lines are LF-terminated.
inline Design parse_blocks_file(const std::string& text) {
  std::optional<long long> v, b;
  std::vector<Block> blocks;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string::npos ? text.size() : nl + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r')
      throw ParseError(line_no, "carriage return found; the format requires LF line endings");
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) throw ParseError(line_no, "blank line");

    std::istringstream in(line);
    if (!v || !b) {
      std::string key, tok, extra;
      if (!(in >> key >> tok) || in >> extra)
        throw ParseError(line_no, "expected header '" + std::string(!v ? "v" : "b") + " <int>'");
      long long value = detail::parse_count_token(tok, line_no, "header value");
      if (key == "v") {
        if (v) throw ParseError(line_no, "duplicate 'v' header");
        if (value < 0) throw ParseError(line_no, "negative point count");
        v = value;
      } else if (key == "b") {
        if (!v) throw ParseError(line_no, "'v' header must precede 'b'");
        if (value < 0) throw ParseError(line_no, "negative block count");
        b = value;
      } else {
        throw ParseError(line_no, "unknown header key '" + key + "'");
      }
      continue;
    }

    if (static_cast<long long>(blocks.size()) == *b)
      throw ParseError(line_no, "more than the declared " + std::to_string(*b) + " blocks");
    Block blk;
    std::string tok;
    while (in >> tok) {
      long long p = detail::parse_count_token(tok, line_no, "point index");
      if (p < 0 || p >= *v)
        throw ParseError(line_no, "point index " + std::to_string(p) + " outside [0, " +
                                      std::to_string(*v) + ")");
      if (!blk.empty() && p <= blk.back())
        throw ParseError(line_no, "point indices must be strictly increasing");
      blk.push_back(static_cast<int>(p));
    }
    if (blk.empty()) throw ParseError(line_no, "empty block line");
    blocks.push_back(std::move(blk));
  }

  if (!v) throw ParseError(line_no + 1, "missing 'v' header");
  if (!b) throw ParseError(line_no + 1, "missing 'b' header");
  if (static_cast<long long>(blocks.size()) != *b)
    throw ParseError(line_no + 1, "declared " + std::to_string(*b) + " blocks, found " +
                                      std::to_string(blocks.size()));
  return Design(static_cast<int>(*v), std::move(blocks));
}

/// Canonical writer: headers then normalized blocks, LF endings, no comments.
/// parse(write(d)) == d for every Design.
inline std::string write_blocks_file(const Design& d) {
  std::string out = "v " + std::to_string(d.point_count()) + "\nb " +
                    std::to_string(d.block_count()) + "\n";
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(blk[i]);
    }
    out += '\n';
  }
  return out;
}

inline Design load_blocks_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_blocks_file(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace ecd
