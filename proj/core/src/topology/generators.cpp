#include "ttperm/topology/generators.hpp"

#include <cctype>

#include "ttperm/error.hpp"
#include "ttperm/rep/functors.hpp"
#include "ttperm/rep/koszul.hpp"

namespace ttperm {

unsigned GeneratorExpr::max_index() const {
  unsigned m = (kind_ == Kind::Perm || kind_ == Kind::Kos) ? index_ : 0;
  for (const auto& c : children_) m = std::max(m, c.max_index());
  return m;
}

std::string GeneratorExpr::to_string() const {
  switch (kind_) {
    case Kind::Perm:
      return "perm(" + std::to_string(index_) + ")";
    case Kind::Kos:
      return "kos(" + std::to_string(index_) + ")";
    default:
      break;
  }
  std::string out = kind_ == Kind::Tensor ? "tensor(" : "sum(";
  for (std::size_t k = 0; k < children_.size(); ++k) out += (k ? "," : "") + children_[k].to_string();
  return out + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : text_(t) {}

  GeneratorExpr parse() {
    GeneratorExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("generator expression: " + what + " at offset " + std::to_string(pos_) +
                     " in '" + text_ + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  GeneratorExpr expr() {
    std::vector<GeneratorExpr> terms{term()};
    while (eat('+')) terms.push_back(term());
    return terms.size() == 1 ? terms[0] : GeneratorExpr::sum(std::move(terms));
  }
  GeneratorExpr term() {
    std::vector<GeneratorExpr> factors{factor()};
    while (eat('*')) factors.push_back(factor());
    return factors.size() == 1 ? factors[0] : GeneratorExpr::tensor(std::move(factors));
  }
  GeneratorExpr factor() {
    if (eat('(')) {
      GeneratorExpr e = expr();
      expect(')');
      return e;
    }
    skip();
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    if (name.empty()) fail("expected perm, kos, tensor, sum or '('");
    expect('(');
    if (name == "perm" || name == "kos") {
      const unsigned v = number();
      expect(')');
      return name == "perm" ? GeneratorExpr::perm(v) : GeneratorExpr::kos(v);
    }
    if (name != "tensor" && name != "sum") fail("unknown generator '" + name + "'");
    std::vector<GeneratorExpr> args{expr()};
    while (eat(',')) args.push_back(expr());
    expect(')');
    return name == "tensor" ? GeneratorExpr::tensor(std::move(args)) : GeneratorExpr::sum(std::move(args));
  }
  unsigned number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 6) fail("index too large");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorExpr parse_generator_expr(const std::string& text) { return Parser(text).parse(); }

WBarSubset support_of_generators(const GeneratorExpr& g) {
  switch (g.kind()) {
    case GeneratorExpr::Kind::Perm:
      return WBarSubset::at_least(g.index());
    case GeneratorExpr::Kind::Kos:
      return WBarSubset::at_most(static_cast<long>(g.index()) - 1);
    case GeneratorExpr::Kind::Tensor: {
      WBarSubset s = WBarSubset::everything();
      for (const auto& c : g.children()) s = s & support_of_generators(c);
      return s;
    }
    case GeneratorExpr::Kind::Sum: {
      WBarSubset s = WBarSubset::empty_set();
      for (const auto& c : g.children()) s = s | support_of_generators(c);
      return s;
    }
  }
  return {};
}

unsigned realization_level(const GeneratorExpr& g) { return g.max_index() + 1; }

PermComplex realize(const GeneratorExpr& g, std::uint32_t p, unsigned level) {
  const CyclicGroup grp(p, level);
  if (g.max_index() > level)
    throw InvalidArgument("realize: " + g.to_string() + " needs level at least " +
                          std::to_string(g.max_index()));
  switch (g.kind()) {
    case GeneratorExpr::Kind::Perm:
      return PermComplex::concentrated(orbit_module(grp, Subgroup{level - g.index()}));
    case GeneratorExpr::Kind::Kos:
      return koszul(grp, Subgroup{level - g.index()});
    case GeneratorExpr::Kind::Tensor: {
      PermComplex c = PermComplex::unit(grp);
      for (const auto& ch : g.children()) c = tensor_complexes(c, realize(ch, p, level));
      return c;
    }
    case GeneratorExpr::Kind::Sum: {
      PermComplex c(grp);
      for (const auto& ch : g.children()) c = direct_sum(c, realize(ch, p, level));
      return c;
    }
  }
  return PermComplex(grp);
}

namespace {

// The image of an expression under one residue functor, as a complex over
// the functor's target group; nullopt stands for an object known to vanish in
// the target (acyclic over k, or perfect over kC_p). Vanishing factors are
// dropped early: acyclic (x) anything is acyclic, perfect (x) anything is
// perfect.
using LocalObject = std::optional<PermComplex>;

struct ResidueFunctor {
  CyclicGroup group;  // C_{p^L}
  bool at_p = false;
  unsigned index = 0;

  // Restriction subgroup and fixed-point subgroup (as a subgroup of G).
  Subgroup restriction() const { return at_p ? Subgroup{group.n - index + 1} : Subgroup{group.n}; }
  Subgroup fixed() const { return Subgroup{group.n - index}; }

  // Finish: restrict a complex over G/S to the target group of the functor.
  PermComplex finish(const PermComplex& over_quotient) const {
    return at_p ? restrict(over_quotient, Subgroup{1}) : underlying(over_quotient);
  }

  LocalObject unit() const { return finish(PermComplex::unit(CyclicGroup(group.p, group.n - fixed().s))); }

  LocalObject apply(const GeneratorExpr& g) const {
    switch (g.kind()) {
      case GeneratorExpr::Kind::Perm: {
        const PermComplex c =
            PermComplex::concentrated(orbit_module(group, Subgroup{group.n - g.index()}));
        return finish(brauer_fixed_points(c, fixed()));
      }
      case GeneratorExpr::Kind::Kos: {
        const Subgroup k{group.n - g.index()};
        if (fixed().s <= k.s && koszul_fixed_basis_size(group, k, fixed()) > kDefaultKoszulBudget)
          return std::nullopt;  // a Koszul object of G/S, acyclic underneath
        return finish(koszul_fixed_points(group, k, fixed()));
      }
      case GeneratorExpr::Kind::Tensor: {
        LocalObject acc = unit();
        for (const auto& ch : g.children()) {
          LocalObject x = eval(ch);
          if (!x || !acc) return std::nullopt;
          acc = tensor_complexes(*acc, *x);
        }
        return acc;
      }
      case GeneratorExpr::Kind::Sum: {
        LocalObject acc;
        for (const auto& ch : g.children()) {
          LocalObject x = eval(ch);
          if (!x) continue;
          acc = acc ? direct_sum(*acc, *x) : *x;
        }
        return acc;
      }
    }
    return std::nullopt;
  }

  bool vanishes(const PermComplex& x) const { return at_p ? is_stably_zero(x) : is_acyclic(x); }

  LocalObject eval(const GeneratorExpr& g) const {
    LocalObject x = apply(g);
    if (x && vanishes(*x)) return std::nullopt;
    return x;
  }

  bool nonzero(const GeneratorExpr& g) const { return eval(g).has_value(); }
};

}  // namespace

SupportSet realized_support(const GeneratorExpr& g, std::uint32_t p, unsigned level) {
  const CyclicGroup grp(p, level);
  if (g.max_index() > level)
    throw InvalidArgument("realized_support: " + g.to_string() + " needs level at least " +
                          std::to_string(g.max_index()));
  SupportSet s(level);
  for (const auto& x : points_of_level(level)) {
    const ResidueFunctor f{grp, x.kind == PointKind::P, x.index};
    if (f.nonzero(g)) s.insert(x);
  }
  if (!s.is_specialization_closed())
    throw InvariantViolation("realized support " + s.to_string() + " is not specialization-closed");
  return s;
}

std::string ThomasonGenerators::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < finite.size(); ++k) out += (k ? ", " : "") + finite[k].to_string();
  if (tail) {
    out += finite.empty() ? "" : ", ";
    const std::string kos = "kos(m)";
    out += (tail->perm == 0 ? kos : "tensor(perm(" + std::to_string(tail->perm) + ")," + kos + ")") +
           " for m >= " + std::to_string(tail->kos_from);
  }
  return out + "]";
}

ThomasonGenerators generators_of_thomason(const WBarSubset& s) {
  if (!is_thomason(s)) throw InvalidArgument("generators_of_thomason: " + s.to_string() + " is not Thomason");
  ThomasonGenerators out;
  // every point above M(top) lies in s exactly when s is cofinite
  const unsigned top = s.max_index() + 1;
  auto in = [&](PointKind k, unsigned i) { return s.contains(WBarPoint{k, i}); };
  auto run_generator = [](unsigned a, unsigned b) {
    if (a == 0) return GeneratorExpr::kos(b + 1);
    return GeneratorExpr::tensor({GeneratorExpr::perm(a), GeneratorExpr::kos(b + 1)});
  };
  unsigned i = 0;
  while (i <= top) {
    if (!in(PointKind::M, i)) {
      ++i;
      continue;
    }
    const unsigned a = i;
    while (i < top && in(PointKind::P, i + 1)) ++i;
    if (i == top && s.is_cofinite()) {
      if (s.contains(WBarPoint::m_infinity())) out.finite.push_back(GeneratorExpr::perm(a));
      else out.tail = GeneratorFamily{a, a + 1};
      break;
    }
    out.finite.push_back(run_generator(a, i));
    ++i;
  }
  return out;
}

WBarSubset support_of_generators(const ThomasonGenerators& g) {
  WBarSubset s = WBarSubset::empty_set();
  for (const auto& e : g.finite) s = s | support_of_generators(e);
  if (g.tail) {
    // the supports W-bar_{>= a} cap W-bar_{<= m-1} exhaust the finite part of W-bar_{>= a}
    s = s | (WBarSubset::at_least(g.tail->perm) & WBarSubset::finite_part());
  }
  return s;
}

}  // namespace ttperm
