#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

namespace {

using ZMat = std::vector<std::vector<Integer>>;

bool find_pivot(const ZMat& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best = 0;
  for (std::size_t i = s; i < m.size(); ++i) {
    for (std::size_t j = s; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      const Integer a = abs(m[i][j]);
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Integer> smith_diagonal(ZMat m) {
  std::vector<Integer> divisors;
  if (m.empty() || m[0].empty()) return divisors;
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(m, s, pi, pj)) break;
    std::swap(m[s], m[pi]);
    for (std::size_t i = s; i < rows; ++i) std::swap(m[i][s], m[i][pj]);

    // Clear row and column s; restart whenever a remainder reintroduces an
    // off-pivot entry, picking the smaller pivot it produced.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m[i][s] == 0) continue;
        const Integer q = m[i][s] / m[s][s];
        for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        if (m[i][s] != 0) {
          std::swap(m[s], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m[s][j] == 0) continue;
        const Integer q = m[s][j] / m[s][s];
        for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
        if (m[s][j] != 0) {
          for (std::size_t i = s; i < rows; ++i) std::swap(m[i][s], m[i][j]);
          clean = false;
        }
      }
    }
    if (m[s][s] < 0)
      for (std::size_t j = s; j < cols; ++j) m[s][j] = -m[s][j];
  }

  for (std::size_t s = 0; s < steps; ++s) {
    if (m[s][s] != 0) divisors.push_back(m[s][s]);
  }

  // Enforce the divisibility chain d_1 | d_2 | ... with gcd/lcm sweeps.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
      if (divisors[i + 1] % divisors[i] == 0) continue;
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), divisors[i].get_mpz_t(),
              divisors[i + 1].get_mpz_t());
      l = divisors[i] / g * divisors[i + 1];
      divisors[i] = g;
      divisors[i + 1] = l;
      changed = true;
    }
  }
  return divisors;
}

namespace {

LatticeData from_difference_matrix(ZMat diffs, int ambient) {
  LatticeData out;
  out.ambient = ambient;
  const std::vector<Integer> d = smith_diagonal(std::move(diffs));
  out.rank = static_cast<int>(d.size());
  out.full_rank = (out.rank == ambient);
  out.index = 1;
  for (const Integer& x : d) out.index *= x;
  return out;
}

}  // namespace

LatticeData lattice_data(const std::vector<ZVec>& points) {
  if (points.empty()) throw ValidationError("lattice_data: no points");
  const std::size_t n = points[0].size();
  for (const ZVec& p : points)
    if (p.size() != n) throw ValidationError("lattice_data: dimension mismatch");
  ZMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Integer> row(n);
    for (std::size_t j = 0; j < n; ++j)
      row[j] = Integer(points[i][j]) - Integer(points[0][j]);
    diffs.push_back(std::move(row));
  }
  if (diffs.empty()) diffs.push_back(std::vector<Integer>(n, Integer(0)));
  return from_difference_matrix(std::move(diffs), static_cast<int>(n));
}

LatticeData joint_lattice_data(const std::vector<std::vector<ZVec>>& blocks) {
  if (blocks.empty()) throw ValidationError("joint_lattice_data: no blocks");
  const std::size_t n = blocks[0][0].size();
  ZMat diffs;
  for (const auto& points : blocks) {
    if (points.empty())
      throw ValidationError("joint_lattice_data: empty block");
    for (std::size_t i = 1; i < points.size(); ++i) {
      std::vector<Integer> row(n);
      for (std::size_t j = 0; j < n; ++j)
        row[j] = Integer(points[i][j]) - Integer(points[0][j]);
      diffs.push_back(std::move(row));
    }
  }
  if (diffs.empty()) diffs.push_back(std::vector<Integer>(n, Integer(0)));
  return from_difference_matrix(std::move(diffs), static_cast<int>(n));
}

}  // namespace toric
