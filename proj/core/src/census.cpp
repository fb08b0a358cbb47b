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

#include "graphent/census.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

#include "graphent/error.hpp"
#include "graphent/parallel.hpp"

namespace graphent {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }
int choose3(int n) { return n * (n - 1) * (n - 2) / 6; }

constexpr int kChunkBits = 6;

struct EdgeList {
  std::vector<int> a;
  std::vector<int> b;
};

EdgeList pair_order(int n) {
  EdgeList pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.a.push_back(i);
      pairs.b.push_back(j);
    }
  }
  return pairs;
}

// Enumerates Gray codes g(i) for i in [begin, end) into `table`.
void enumerate_range(const EdgeList& pairs, std::uint64_t begin, std::uint64_t end,
                     CensusTable& table) {
  std::uint32_t adj[kMaxCensusGated] = {};
  const std::uint64_t code = begin ^ (begin >> 1);
  int edges = 0;
  for (std::size_t k = 0; k < pairs.a.size(); ++k) {
    if ((code >> k) & 1U) {
      adj[pairs.a[k]] |= 1U << pairs.b[k];
      adj[pairs.b[k]] |= 1U << pairs.a[k];
      ++edges;
    }
  }
  int triangles = 0;
  for (std::size_t k = 0; k < pairs.a.size(); ++k) {
    if ((code >> k) & 1U) triangles += std::popcount(adj[pairs.a[k]] & adj[pairs.b[k]]);
  }
  triangles /= 3;

  const int cols = table.max_triangles() + 1;
  std::vector<std::uint64_t> local(static_cast<std::size_t>(table.max_edges() + 1) * cols, 0);
  local[static_cast<std::size_t>(edges) * cols + triangles] += 1;
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const int k = std::countr_zero(i);
    const int u = pairs.a[k];
    const int v = pairs.b[k];
    const int common = std::popcount(adj[u] & adj[v]);
    if ((adj[u] >> v) & 1U) {
      adj[u] &= ~(1U << v);
      adj[v] &= ~(1U << u);
      --edges;
      triangles -= common;
    } else {
      adj[u] |= 1U << v;
      adj[v] |= 1U << u;
      ++edges;
      triangles += common;
    }
    local[static_cast<std::size_t>(edges) * cols + triangles] += 1;
  }
  for (int e = 0; e <= table.max_edges(); ++e) {
    for (int t = 0; t < cols; ++t) {
      const auto c = local[static_cast<std::size_t>(e) * cols + t];
      if (c != 0) table.add(e, t, c);
    }
  }
}

double edge_density_of(const CensusTable& table, int edges) {
  return table.max_edges() == 0 ? 0.0 : static_cast<double>(edges) / table.max_edges();
}

double triangle_density_of(const CensusTable& table, int triangles) {
  return table.max_triangles() == 0 ? 0.0 : static_cast<double>(triangles) / table.max_triangles();
}

}  // namespace

CensusTable::CensusTable(int n)
    : n_(n),
      max_edges_(choose2(n)),
      max_triangles_(choose3(n)),
      counts_(static_cast<std::size_t>(max_edges_ + 1) * (max_triangles_ + 1), 0) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "census needs n >= 1");
}

std::uint64_t CensusTable::count(int edges, int triangles) const {
  if (edges < 0 || edges > max_edges_ || triangles < 0 || triangles > max_triangles_) return 0;
  return counts_[static_cast<std::size_t>(edges) * (max_triangles_ + 1) + triangles];
}

void CensusTable::add(int edges, int triangles, std::uint64_t amount) {
  if (edges < 0 || edges > max_edges_ || triangles < 0 || triangles > max_triangles_) {
    throw Error(ErrorCode::kValueOutOfRange, "census bin (" + std::to_string(edges) + ", " +
                                                 std::to_string(triangles) + ") out of range");
  }
  counts_[static_cast<std::size_t>(edges) * (max_triangles_ + 1) + triangles] += amount;
}

std::uint64_t CensusTable::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

std::uint64_t CensusTable::row_total(int edges) const {
  std::uint64_t sum = 0;
  for (int t = 0; t <= max_triangles_; ++t) sum += count(edges, t);
  return sum;
}

CensusTable enumerate_census(int n, bool allow_n8, int threads,
                             const std::function<void(int, int)>& progress) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "census needs n >= 1");
  if (n > kMaxCensusGated || (n > kMaxCensusDefault && !allow_n8)) {
    throw Error(ErrorCode::kTooLarge, "census for n = " + std::to_string(n) + " exceeds the cap of " +
                                          std::to_string(allow_n8 ? kMaxCensusGated : kMaxCensusDefault));
  }
  const EdgeList pairs = pair_order(n);
  const int bits = static_cast<int>(pairs.a.size());
  const std::uint64_t space = std::uint64_t{1} << bits;
  const int chunk_bits = std::min(bits, kChunkBits);
  const int chunks = 1 << chunk_bits;
  const std::uint64_t chunk_size = space >> chunk_bits;

  std::vector<CensusTable> partial(chunks, CensusTable(n));
  std::atomic<int> done{0};
  std::mutex progress_mutex;
  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
    enumerate_range(pairs, c * chunk_size, (c + 1) * chunk_size, partial[c]);
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(++done, chunks);
    }
  });
  CensusTable table(n);
  for (const auto& part : partial) {
    for (int e = 0; e <= table.max_edges(); ++e) {
      for (int t = 0; t <= table.max_triangles(); ++t) {
        if (auto c = part.count(e, t); c != 0) table.add(e, t, c);
      }
    }
  }
  return table;
}

double empirical_entropy(const CensusTable& table, double e, double t, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::kValueOutOfRange, "alpha must be positive");
  std::uint64_t sum = 0;
  for (int edges = 0; edges <= table.max_edges(); ++edges) {
    if (!(std::abs(edge_density_of(table, edges) - e) < alpha)) continue;
    for (int tri = 0; tri <= table.max_triangles(); ++tri) {
      if (std::abs(triangle_density_of(table, tri) - t) < alpha) sum += table.count(edges, tri);
    }
  }
  if (sum == 0) return -std::numeric_limits<double>::infinity();
  const double n = table.n();
  return std::log(static_cast<double>(sum)) / (n * n);
}

std::vector<CensusRidgeRow> census_ridge(const CensusTable& table) {
  std::vector<CensusRidgeRow> rows;
  for (int edges = 0; edges <= table.max_edges(); ++edges) {
    CensusRidgeRow row;
    row.edges = edges;
    row.e = edge_density_of(table, edges);
    std::uint64_t best = 0;
    for (int tri = 0; tri <= table.max_triangles(); ++tri) {
      if (table.count(edges, tri) > best) {
        best = table.count(edges, tri);
        row.argmax_triangles = tri;
      }
    }
    row.ridge_triangles = row.e * row.e * row.e * table.max_triangles();
    row.distance = std::abs(row.argmax_triangles - row.ridge_triangles);
    rows.push_back(row);
  }
  return rows;
}

CensusComparison compare_to_variational(const CensusTable& table,
                                        std::span<const DensityPair> points, double alpha,
                                        const EntropySolver& reference) {
  CensusComparison out;
  out.n = table.n();
  out.alpha = alpha;
  for (const auto& p : points) {
    CensusPointComparison row;
    row.point = p;
    row.s_census = empirical_entropy(table, p.e, p.t, alpha);
    row.s_variational = reference ? reference(p) : std::numeric_limits<double>::quiet_NaN();
    row.gap = row.s_variational - row.s_census;
    out.points.push_back(row);
  }
  out.ridge = census_ridge(table);
  return out;
}

void write_census_csv(std::ostream& out, const CensusTable& table) {
  out << "n,edges,triangles,count\n";
  for (int e = 0; e <= table.max_edges(); ++e) {
    for (int t = 0; t <= table.max_triangles(); ++t) {
      if (auto c = table.count(e, t); c != 0) {
        out << table.n() << ',' << e << ',' << t << ',' << c << '\n';
      }
    }
  }
}

CensusTable read_census_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,edges,triangles,count") {
    throw Error(ErrorCode::kParseError, "census CSV must start with 'n,edges,triangles,count'");
  }
  CensusTable table;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    long long n = 0, e = 0, t = 0;
    unsigned long long c = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(fields >> n >> c1 >> e >> c2 >> t >> c3 >> c) || c1 != ',' || c2 != ',' || c3 != ',' ||
        !(fields >> std::ws).eof()) {
      throw Error(ErrorCode::kParseError, "bad census row " + std::to_string(line_no) + ": '" + line + "'");
    }
    if (table.n() == 0) {
      if (n < 1 || n > kMaxCensusGated) throw Error(ErrorCode::kParseError, "bad n in census CSV");
      table = CensusTable(static_cast<int>(n));
    } else if (n != table.n()) {
      throw Error(ErrorCode::kParseError, "mixed n in census CSV");
    }
    table.add(static_cast<int>(e), static_cast<int>(t), c);
  }
  if (table.n() == 0) throw Error(ErrorCode::kParseError, "census CSV has no rows");
  return table;
}

}  // namespace graphent
