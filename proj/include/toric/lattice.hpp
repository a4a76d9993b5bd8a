#pragma once

#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Invariants of the Z-module generated by the differences of a point
// configuration: its rank, the index in its saturation inside Z^n, and
// whether it is all of Z^n.
struct LatticeData {
  int ambient = 0;
  int rank = 0;
  // Index of the lattice in its saturation; equals the index in Z^n when
  // the rank is full.
  Integer index = 1;
  bool full_rank = false;

  bool is_standard() const { return full_rank && index == 1; }
};

LatticeData lattice_data(const std::vector<ZVec>& points);

// Same computation for several configurations joined together (the lattice
// generated by all blockwise differences).
LatticeData joint_lattice_data(const std::vector<std::vector<ZVec>>& blocks);

// Elementary divisors d_1 | d_2 | ... of an integer matrix.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

}  // namespace toric
