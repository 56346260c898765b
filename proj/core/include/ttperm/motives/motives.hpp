#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "ttperm/rep/integral_complex.hpp"
#include "ttperm/topology/wbar.hpp"

namespace ttperm {

// The base field F_q. Its absolute Galois group is Z-hat, whose p-Sylow is
// Z_p for every prime p, so the spectra below do not depend on q.
struct GaloisDatum {
  std::uint64_t q = 2;

  explicit GaloisDatum(std::uint64_t field_size);
  std::uint64_t characteristic() const { return prime_; }

 private:
  std::uint64_t prime_ = 2;
};

// Spectrum of Artin motives over F_q with coefficients in a field of the
// given characteristic (0 or a prime p).
struct SpectrumDescription {
  bool single_point = false;  // characteristic 0
  std::uint64_t coefficient_characteristic = 0;
  std::string to_string() const;
};

SpectrumDescription spectrum_of_dam(const GaloisDatum& field, std::uint64_t coefficient_characteristic);

// A point of the integral spectrum: the generic point, or a point of the
// copy of W-bar lying over the prime q.
struct IntegralPoint {
  struct Generic {
    friend bool operator==(Generic, Generic) { return true; }
  };
  struct Fiber {
    std::uint64_t q;
    WBarPoint x;
    friend bool operator==(const Fiber&, const Fiber&) = default;
  };
  std::variant<Generic, Fiber> where;
};

// A subset of the integral spectrum: generic point, the fibers over the
// listed primes, and the fiber shared by every other prime (empty or full).
struct IntegralSupport {
  bool contains_generic = false;
  bool default_full = false;
  std::map<std::uint64_t, WBarSubset> fibers;

  WBarSubset fiber(std::uint64_t q) const;
  bool contains(const IntegralPoint& x) const;
  std::string to_string() const;
};

enum class SupportType { I, II, Invalid };
const char* to_string(SupportType t);

// Support of a complex over C_m. The generic point is present iff t (x) Q is
// not acyclic. The listed primes are those dividing m or some torsion
// invariant factor of the differentials; at such q the fiber is the preimage
// of supp of t mod q restricted to the q-Sylow subgroup. At every other
// prime, t (x) F_q is acyclic exactly when t (x) Q is, so the fiber is full
// or empty with the generic point.
IntegralSupport integral_support(const IntegralPermComplex& t);

// (I): no generic point, default empty, listed fibers closed.
// (II): generic point, default full, listed fibers closed and cofinite.
SupportType classify_support_type(const IntegralSupport& s);

// Z(Z-hat / p^n Z-hat) as a complex over C_{p^n}.
IntegralPermComplex integral_orbit(std::uint64_t p, unsigned n);
// cone(Z --q--> Z) over the trivial group, degrees 1 and 0.
IntegralPermComplex integral_multiplication_cone(std::uint64_t q);

// Integral lift of s_K^G over C_{p^level}, K of index p^m: the mod-p signs
// lift to +-1. Exists for odd p only; p = 2 throws InvalidArgument.
IntegralPermComplex integral_koszul(std::uint32_t p, unsigned level, unsigned index_exponent);

}  // namespace ttperm
