#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rook_orbits/chevalley.hpp"
#include "rook_orbits/rook_placement.hpp"

namespace rook_orbits {

// Coefficients lambda_gamma = lambda(e_gamma), indexed canonically over the positive roots.
using LinearForm = RationalVector;
// Nonzero values on the roots of a placement, keyed by positive-root index.
using XiMap = std::map<int, Rational>;

LinearForm zero_form(const RootSystem& sys);
LinearForm f_form(const RootSystem& sys, const RookPlacement& d, const XiMap& xi);
XiMap constant_xi(const RookPlacement& d, const Rational& value = Rational(1));
XiMap random_xi(const RookPlacement& d, std::uint64_t seed);

// exp(-ad x) restricted to n; (exp(x).lambda) = E^T lambda.
RationalMatrix coadjoint_operator(const NilpotentAlgebra& alg, const RationalVector& x);
LinearForm coadjoint_act(const NilpotentAlgebra& alg, const RationalVector& x, const LinearForm& lambda);
LinearForm coadjoint_act(const StructureTable& t, const AlgebraElement& x, const LinearForm& lambda);

// Seeded random elements of n; with seed 0 the first element is 0.
std::vector<RationalVector> random_nilradical_elements(int dim, int count, std::uint64_t seed);
std::vector<LinearForm> orbit_samples(const NilpotentAlgebra& alg, const LinearForm& f, int count, std::uint64_t seed);
std::vector<LinearForm> orbit_samples(const StructureTable& t, const RookPlacement& d, const XiMap& xi, int count,
                                      std::uint64_t seed);

// B_f(gamma, delta) = f([e_gamma, e_delta]).
RationalMatrix kirillov_form(const NilpotentAlgebra& alg, const LinearForm& f);
int kirillov_rank(const NilpotentAlgebra& alg, const LinearForm& f);
int kirillov_rank(const StructureTable& t, const LinearForm& f);

}  // namespace rook_orbits
