#include "rook_orbits/coadjoint.hpp"

#include <stdexcept>

#include "rook_orbits/linalg.hpp"
#include "rook_orbits/sampling.hpp"

namespace rook_orbits {

LinearForm zero_form(const RootSystem& sys) { return LinearForm::Zero(sys.num_positive()); }

LinearForm f_form(const RootSystem& sys, const RookPlacement& d, const XiMap& xi) {
  if (static_cast<int>(xi.size()) != d.size()) throw std::invalid_argument("xi domain differs from the placement");
  LinearForm f = zero_form(sys);
  for (int r : d.roots()) {
    auto it = xi.find(r);
    if (it == xi.end()) throw std::invalid_argument("xi domain differs from the placement");
    if (it->second.is_zero()) throw std::invalid_argument("xi takes the value zero");
    f(r) = it->second;
  }
  return f;
}

XiMap constant_xi(const RookPlacement& d, const Rational& value) {
  XiMap xi;
  for (int r : d.roots()) xi[r] = value;
  return xi;
}

XiMap random_xi(const RookPlacement& d, std::uint64_t seed) {
  RationalSampler s(seed);
  XiMap xi;
  for (int r : d.roots()) xi[r] = s.nonzero();
  return xi;
}

RationalMatrix coadjoint_operator(const NilpotentAlgebra& alg, const RationalVector& x) {
  RationalMatrix m = alg.ad(x);
  return nilpotent_exp((-m).eval());
}

LinearForm coadjoint_act(const NilpotentAlgebra& alg, const RationalVector& x, const LinearForm& lambda) {
  if (x.size() != alg.dim() || lambda.size() != alg.dim()) throw std::invalid_argument("dimension mismatch");
  return coadjoint_operator(alg, x).transpose() * lambda;
}

LinearForm coadjoint_act(const StructureTable& t, const AlgebraElement& x, const LinearForm& lambda) {
  if (!x.in_nilradical()) throw std::invalid_argument("element is not in the nilradical");
  RationalVector v = RationalVector::Zero(t.num_positive());
  for (const auto& [b, c] : x.terms()) v(b.index) = c;
  return coadjoint_act(t.nilradical(), v, lambda);
}

std::vector<RationalVector> random_nilradical_elements(int dim, int count, std::uint64_t seed) {
  std::vector<RationalVector> out;
  for (int i = 0; i < count; ++i) {
    if (seed == 0 && i == 0) {
      out.push_back(RationalVector::Zero(dim));
      continue;
    }
    RationalSampler s(derive_seed(seed, static_cast<std::uint64_t>(i)));
    out.push_back(s.vector(dim));
  }
  return out;
}

std::vector<LinearForm> orbit_samples(const NilpotentAlgebra& alg, const LinearForm& f, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("negative sample count");
  std::vector<LinearForm> out;
  for (const RationalVector& x : random_nilradical_elements(alg.dim(), count, seed))
    out.push_back(coadjoint_act(alg, x, f));
  return out;
}

std::vector<LinearForm> orbit_samples(const StructureTable& t, const RookPlacement& d, const XiMap& xi, int count,
                                      std::uint64_t seed) {
  return orbit_samples(t.nilradical(), f_form(t.system(), d, xi), count, seed);
}

RationalMatrix kirillov_form(const NilpotentAlgebra& alg, const LinearForm& f) {
  const int n = alg.dim();
  RationalMatrix b = RationalMatrix::Zero(n, n);
  for (int g = 0; g < n; ++g)
    for (int d = 0; d < n; ++d)
      if (alg.target(g, d) >= 0) b(g, d) = alg.constant(g, d) * f(alg.target(g, d));
  return b;
}

int kirillov_rank(const NilpotentAlgebra& alg, const LinearForm& f) {
  return static_cast<int>(exact_rank(kirillov_form(alg, f)));
}

int kirillov_rank(const StructureTable& t, const LinearForm& f) { return kirillov_rank(t.nilradical(), f); }

}  // namespace rook_orbits
