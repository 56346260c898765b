#include "ttperm/rep/cyclic_group.hpp"

#include "ttperm/error.hpp"
#include "ttperm/linalg/matrix_fp.hpp"

namespace ttperm {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

CyclicGroup::CyclicGroup(std::uint32_t prime, unsigned level) : p(prime), n(level) {
  if (!is_prime(prime)) throw InvalidArgument("CyclicGroup: " + std::to_string(prime) + " is not prime");
  if (level > 40) throw InvalidArgument("CyclicGroup: level too large");
}

std::string CyclicGroup::to_string() const {
  return "C_" + std::to_string(p) + "^" + std::to_string(n);
}

Subgroup subgroup_of_index(const CyclicGroup& g, unsigned index_exponent) {
  if (index_exponent > g.n)
    throw InvalidArgument("subgroup_of_index: index exponent " + std::to_string(index_exponent) +
                          " exceeds level " + std::to_string(g.n));
  return Subgroup{g.n - index_exponent};
}

void require_subgroup(const CyclicGroup& g, Subgroup h, const char* where) {
  if (h.s > g.n)
    throw InvalidArgument(std::string(where) + ": subgroup exponent " + std::to_string(h.s) +
                          " exceeds level " + std::to_string(g.n));
}

}  // namespace ttperm
