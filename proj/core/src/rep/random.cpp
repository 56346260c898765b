#include "ttperm/rep/random.hpp"

#include <numeric>

#include "ttperm/rep/detail/orbit_layout.hpp"

namespace ttperm {
namespace {

Residue random_residue(std::uint32_t p, std::mt19937_64& rng) {
  return static_cast<Residue>(std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng));
}

// Random vector in the span of the given basis.
std::vector<Residue> random_combination(std::uint32_t p, const std::vector<std::vector<Residue>>& basis,
                                        std::size_t length, std::mt19937_64& rng) {
  std::vector<Residue> v(length, 0);
  for (const auto& b : basis) {
    const auto c = random_residue(p, rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < length; ++i)
      v[i] = static_cast<Residue>((v[i] + static_cast<std::uint64_t>(c) * b[i]) % p);
  }
  return v;
}

MatrixFp combine(std::uint32_t p, const std::vector<MatrixFp>& basis, const std::vector<Residue>& coeff,
                 std::size_t rows, std::size_t cols) {
  MatrixFp out(p, rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeff[k] != 0) out = out + basis[k].scaled(coeff[k]);
  return out;
}

}  // namespace

std::vector<MatrixFp> equivariant_hom_basis(std::uint32_t p,
                                            const std::vector<std::size_t>& codomain_sizes,
                                            const std::vector<std::size_t>& domain_sizes) {
  const auto roff = detail::offsets_of(codomain_sizes), coff = detail::offsets_of(domain_sizes);
  std::vector<MatrixFp> out;
  for (std::size_t tp = 0; tp < codomain_sizes.size(); ++tp)
    for (std::size_t t = 0; t < domain_sizes.size(); ++t) {
      const std::size_t v = codomain_sizes[tp], u = domain_sizes[t], g = std::gcd(u, v);
      for (std::size_t r = 0; r < g; ++r) {
        MatrixFp e(p, roff.back(), coff.back());
        for (std::size_t cp = 0; cp < v; ++cp)
          for (std::size_t c = 0; c < u; ++c)
            if ((cp + g * u - c) % g == r) e.set(roff[tp] + cp, coff[t] + c, 1);
        out.push_back(std::move(e));
      }
    }
  return out;
}

PermComplex random_complex(const CyclicGroup& g, std::mt19937_64& rng,
                           const RandomComplexOptions& opts) {
  const int length = std::uniform_int_distribution<int>(1, std::max(1, opts.max_length))(rng);
  // random orbits, keeping the total dimension within budget
  std::vector<PermModule> modules;
  std::size_t budget = opts.max_total_dim;
  for (int k = 0; k < length; ++k) {
    std::vector<unsigned> orbits;
    const int count = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int o = 0; o < count; ++o) {
      const unsigned s = std::uniform_int_distribution<unsigned>(0, g.n)(rng);
      const std::size_t size = ipow(g.p, g.n - s);
      if (size > budget) continue;
      budget -= size;
      orbits.push_back(s);
    }
    modules.emplace_back(g, std::move(orbits));
  }

  // choose differentials from the top down: d_k must satisfy d_k o d_{k+1} = 0
  std::vector<MatrixFp> diffs(length > 0 ? length - 1 : 0);
  for (int k = length - 1; k >= 1; --k) {
    const auto dom = modules[k].orbit_sizes(), cod = modules[k - 1].orbit_sizes();
    const auto basis = equivariant_hom_basis(g.p, cod, dom);
    const std::size_t rows = detail::total(cod), cols = detail::total(dom);
    std::vector<std::vector<Residue>> kernel;
    if (k + 1 < length && !basis.empty()) {
      const MatrixFp& above = diffs[k];
      // constraint matrix: each column is vec(E_b * above)
      const std::size_t n_above = above.cols();
      MatrixFp constraints(g.p, rows * n_above, basis.size());
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const MatrixFp prod = basis[b] * above;
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < n_above; ++j) constraints.set(i * n_above + j, b, prod(i, j));
      }
      kernel = kernel_basis(constraints);
    } else {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::vector<Residue> e(basis.size(), 0);
        e[b] = 1;
        kernel.push_back(std::move(e));
      }
    }
    diffs[k - 1] = combine(g.p, basis, random_combination(g.p, kernel, basis.size(), rng), rows, cols);
  }
  return PermComplex(g, opts.lo, std::move(modules), std::move(diffs));
}

ChainMap random_chain_map(const PermComplex& source, const PermComplex& target, std::mt19937_64& rng) {
  const std::uint32_t p = source.group().p;
  if (source.is_zero()) return ChainMap::zero(source, target);
  const int lo = source.lo(), hi = source.hi();
  // parameters of all components, laid out degree by degree
  std::vector<std::vector<MatrixFp>> bases;
  std::vector<std::size_t> first;
  std::size_t params = 0;
  for (int d = lo; d <= hi; ++d) {
    bases.push_back(equivariant_hom_basis(p, target.module(d).orbit_sizes(), source.module(d).orbit_sizes()));
    first.push_back(params);
    params += bases.back().size();
  }
  // constraints d_T f_d - f_{d-1} d_S = 0 for d in [lo, hi+1]
  std::vector<std::vector<Residue>> rows_acc;
  for (int d = lo; d <= hi + 1; ++d) {
    const MatrixFp dt = target.differential(d), ds = source.differential(d);
    const std::size_t r = target.dim(d - 1), c = source.dim(d);
    if (r == 0 || c == 0) continue;
    std::vector<std::vector<Residue>> block(r * c, std::vector<Residue>(params, 0));
    if (d <= hi)
      for (std::size_t b = 0; b < bases[d - lo].size(); ++b) {
        const MatrixFp prod = dt * bases[d - lo][b];
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) block[i * c + j][first[d - lo] + b] = prod(i, j);
      }
    if (d - 1 >= lo)
      for (std::size_t b = 0; b < bases[d - 1 - lo].size(); ++b) {
        const MatrixFp prod = bases[d - 1 - lo][b] * ds;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) {
            auto& e = block[i * c + j][first[d - 1 - lo] + b];
            e = static_cast<Residue>((e + p - prod(i, j)) % p);
          }
      }
    for (auto& row : block) rows_acc.push_back(std::move(row));
  }
  std::vector<std::vector<Residue>> kernel;
  if (rows_acc.empty()) {
    for (std::size_t b = 0; b < params; ++b) {
      std::vector<Residue> e(params, 0);
      e[b] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    MatrixFp sys(p, rows_acc.size(), params);
    for (std::size_t i = 0; i < rows_acc.size(); ++i)
      for (std::size_t j = 0; j < params; ++j) sys.set(i, j, rows_acc[i][j]);
    kernel = kernel_basis(sys);
  }
  const auto coeff = random_combination(p, kernel, params, rng);
  std::vector<MatrixFp> comps;
  for (int d = lo; d <= hi; ++d) {
    const auto& basis = bases[d - lo];
    std::vector<Residue> local(coeff.begin() + first[d - lo], coeff.begin() + first[d - lo] + basis.size());
    comps.push_back(combine(p, basis, local, target.dim(d), source.dim(d)));
  }
  return ChainMap(source, target, std::move(comps));
}

}  // namespace ttperm
