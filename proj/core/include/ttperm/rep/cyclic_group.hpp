#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ttperm {

std::uint64_t ipow(std::uint64_t base, unsigned exp);

// The cyclic p-group C_{p^n}; n = 0 is the trivial group. The generator is
// written g and acts on each coset set G/C_{p^s} = Z/p^{n-s} by c -> c+1.
struct CyclicGroup {
  std::uint32_t p = 2;
  unsigned n = 0;

  CyclicGroup() = default;
  CyclicGroup(std::uint32_t prime, unsigned level);

  std::uint64_t order() const { return ipow(p, n); }
  std::string to_string() const;

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

// The subgroup C_{p^s} of C_{p^n}, identified by its order exponent s. Its
// index is p^{n-s}. Every subgroup of a cyclic p-group has this form and is
// normal, so conjugacy questions never arise.
struct Subgroup {
  unsigned s = 0;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

// Subgroup of C_{p^n} of index p^i (the tower subgroup <p^i> of Z_p seen at
// level n); requires i <= n.
Subgroup subgroup_of_index(const CyclicGroup& g, unsigned index_exponent);

void require_subgroup(const CyclicGroup& g, Subgroup h, const char* where);

}  // namespace ttperm
