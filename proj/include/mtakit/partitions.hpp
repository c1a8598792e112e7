#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace mtakit {

// A partition is stored as its weakly decreasing sequence of positive parts.
using Partition = std::vector<unsigned>;

// All partitions of n, smallest leading part first, so for n = 3 the order
// is [1,1,1], [2,1], [3]. The empty partition is the unique partition of 0.
std::vector<Partition> partitions_of(unsigned n);

std::size_t partition_count(unsigned n);

// Contraction norm of a partition: the product of its parts times the product
// of the factorials of the part multiplicities. ||[1,1]|| = 2, ||[d]|| = d.
mpz_class norm_coefficient(const Partition& r);

}  // namespace mtakit
