// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/graphon_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "graphent/error.hpp"

namespace graphent {

namespace {

constexpr double kUpperTriangleTol = 1e-12;

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return line;
  }
  throw Error(ErrorCode::kParseError, "unexpected end of input");
}

int parse_header(const std::string& line, const std::string& kind, const std::string& key) {
  std::istringstream ss(line);
  std::string word, version, field;
  ss >> word >> version >> field;
  const std::string prefix = key + "=";
  if (word != kind || version != "v1" || field.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::kParseError, "bad header '" + line + "', expected '" + kind + " v1 " +
                                            prefix + "<int>'");
  }
  const std::string digits = field.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw Error(ErrorCode::kParseError, "bad " + key + " in header '" + line + "'");
  }
  return value;
}

double parse_real(const std::string& token) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError, "bad real '" + token + "'");
  }
  return x;
}

}  // namespace

void write_graphon(std::ostream& out, const Graphon& g) {
  const int m = g.resolution();
  out << "graphon v1 m=" << m << '\n';
  std::array<char, 40> buf{};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::snprintf(buf.data(), buf.size(), "%.16e", g(i, j));
      if (j > 0) out << ' ';
      out << buf.data();
    }
    out << '\n';
  }
}

Graphon read_graphon(std::istream& in) {
  const int m = parse_header(next_content_line(in), "graphon", "m");
  Matrix values(m, m);
  for (int i = 0; i < m; ++i) {
    std::istringstream row(next_content_line(in));
    std::string token;
    int j = 0;
    while (row >> token) {
      if (j >= m) throw Error(ErrorCode::kParseError, "row " + std::to_string(i + 1) + " too long");
      values(i, j++) = parse_real(token);
    }
    if (j != m) throw Error(ErrorCode::kParseError, "row " + std::to_string(i + 1) + " too short");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!(std::abs(values(i, j) - values(j, i)) <= kUpperTriangleTol)) {
        throw Error(ErrorCode::kAsymmetricMatrix, "upper triangle disagrees with lower at (" +
                                                      std::to_string(i + 1) + ", " +
                                                      std::to_string(j + 1) + ")");
      }
      values(i, j) = values(j, i);
    }
  }
  return Graphon::validate(std::move(values));
}

void write_motif(std::ostream& out, const Motif& motif) {
  out << "motif v1 ell=" << motif.vertex_count() << '\n';
  for (const auto& [a, b] : motif.edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

Motif read_motif(std::istream& in) {
  const int ell = parse_header(next_content_line(in), "motif", "ell");
  std::vector<Motif::Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    int a = 0, b = 0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) {
      throw Error(ErrorCode::kParseError, "bad edge line '" + line + "'");
    }
    edges.emplace_back(a - 1, b - 1);
  }
  return Motif::make(ell, std::move(edges));
}

Graphon load_graphon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return read_graphon(in);
}

void save_graphon(const std::string& path, const Graphon& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  write_graphon(out, g);
}

Motif load_motif(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return read_motif(in);
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace graphent
