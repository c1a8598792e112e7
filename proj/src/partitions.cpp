#include "mtakit/partitions.hpp"

namespace mtakit {

namespace {

void emit_partitions(unsigned n, unsigned cap, Partition& prefix,
                     std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned first = 1; first <= n && first <= cap; ++first) {
    prefix.push_back(first);
    emit_partitions(n - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition prefix;
  emit_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

std::size_t partition_count(unsigned n) {
  // Euler's recurrence would be overkill at the sizes used here.
  return partitions_of(n).size();
}

mpz_class norm_coefficient(const Partition& r) {
  mpz_class norm(1);
  std::size_t i = 0;
  while (i < r.size()) {
    std::size_t j = i;
    while (j < r.size() && r[j] == r[i]) ++j;
    const std::size_t multiplicity = j - i;
    for (std::size_t k = i; k < j; ++k) norm *= r[k];
    for (std::size_t m = 2; m <= multiplicity; ++m) norm *= static_cast<unsigned long>(m);
    i = j;
  }
  return norm;
}

}  // namespace mtakit
