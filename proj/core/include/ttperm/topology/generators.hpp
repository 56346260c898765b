#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttperm/rep/perm_complex.hpp"
#include "ttperm/topology/wbar.hpp"

namespace ttperm {

// Symbolic tt-ideal generator over Z_p. Leaves: Perm(n), the permutation
// module on Z_p / p^n Z_p, and Kos(m), the Koszul object of the subgroup of
// index p^m. Inner nodes: Tensor and Sum of any number of children.
class GeneratorExpr {
 public:
  enum class Kind { Perm, Kos, Tensor, Sum };

  static GeneratorExpr perm(unsigned n) { return GeneratorExpr(Kind::Perm, n, {}); }
  static GeneratorExpr kos(unsigned m) { return GeneratorExpr(Kind::Kos, m, {}); }
  static GeneratorExpr tensor(std::vector<GeneratorExpr> children) {
    return GeneratorExpr(Kind::Tensor, 0, std::move(children));
  }
  static GeneratorExpr sum(std::vector<GeneratorExpr> children) {
    return GeneratorExpr(Kind::Sum, 0, std::move(children));
  }

  Kind kind() const { return kind_; }
  unsigned index() const { return index_; }
  const std::vector<GeneratorExpr>& children() const { return children_; }

  // Largest leaf index (0 for leafless expressions).
  unsigned max_index() const;
  // perm(1), kos(2), tensor(perm(1),kos(2)), sum(...)
  std::string to_string() const;

  friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;

 private:
  GeneratorExpr(Kind k, unsigned i, std::vector<GeneratorExpr> c)
      : kind_(k), index_(i), children_(std::move(c)) {}

  Kind kind_;
  unsigned index_;
  std::vector<GeneratorExpr> children_;
};

// Accepts perm(n), kos(m), tensor(e, ...), sum(e, ...), infix '*' (tensor,
// binds tighter) and '+' (sum), and parentheses. Throws ParseError.
GeneratorExpr parse_generator_expr(const std::string& text);

// Interval arithmetic: supp Perm(n) = W-bar_{>= n}, supp Kos(m) = W-bar_{<= m-1},
// Tensor intersects and Sum unites.
WBarSubset support_of_generators(const GeneratorExpr& g);

// The default realization level: one more than the largest leaf index.
unsigned realization_level(const GeneratorExpr& g);

// The complex over C_{p^level}: Perm(n) becomes k(G / C_{p^{level-n}}) and
// Kos(m) becomes s_K^G with K of index p^m. Requires level >= max_index().
// Koszul leaves are built densely and may throw SizeLimitExceeded.
PermComplex realize(const GeneratorExpr& g, std::uint32_t p, unsigned level);

// supp(realize(g, p, level)), evaluated point by point. Each residue functor
// commutes with tensor products and sums, so the residue object of g is
// assembled from those of its leaves; Koszul leaves contribute only their
// fixed subsets, or are known to vanish when every subset is fixed (their
// underlying complex is then acyclic).
SupportSet realized_support(const GeneratorExpr& g, std::uint32_t p, unsigned level);

// {Perm(perm) (x) Kos(m) : m >= kos_from}; perm = 0 means the bare Kos(m).
struct GeneratorFamily {
  unsigned perm = 0;
  unsigned kos_from = 1;

  friend bool operator==(const GeneratorFamily&, const GeneratorFamily&) = default;
};

struct ThomasonGenerators {
  std::vector<GeneratorExpr> finite;
  std::optional<GeneratorFamily> tail;

  std::string to_string() const;
};

// Generators whose supports unite to the Thomason subset s: one generator per
// maximal run {M(a), P(a+1), ..., M(b)}, namely Perm(a) (x) Kos(b+1) (Perm(0)
// dropped); a run reaching m_inf gives Perm(a), and an infinite run without
// m_inf gives the infinite family over b. Throws InvalidArgument otherwise.
ThomasonGenerators generators_of_thomason(const WBarSubset& s);

WBarSubset support_of_generators(const ThomasonGenerators& g);

}  // namespace ttperm
