#pragma once

#include <cstdint>
#include <utility>

#include "ljb/subspace.hpp"

namespace ljb {

// A positive semidefinite, trace-one Hermitian matrix; represents the state
// a -> Tr(rho a).
class DensityState {
public:
    explicit DensityState(CMat matrix, double tol = 1e-10);
    // Symmetrizes first; for matrices Hermitian only up to roundoff.
    static DensityState symmetrized(CMat matrix, double tol = 1e-10);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const CMat& matrix() const { return matrix_; }

private:
    CMat matrix_;
};

// A real linear functional on a subspace, stored by its values on the
// orthonormal basis vectors. evaluate() extends linearly to any ambient
// coordinate vector through the subspace projection.
class SubalgebraFunctional {
public:
    SubalgebraFunctional(SubspaceBasis subspace, RVec values);

    const SubspaceBasis& subspace() const { return subspace_; }
    const RVec& values() const { return values_; }

    // Value on the element with the given ambient coordinates (the element
    // is projected onto the subspace first; for members the projection is
    // the identity).
    double evaluate(const RVec& ambient_coords) const;

private:
    SubspaceBasis subspace_;
    RVec values_;
};

// Tr(rho a); the imaginary residue is checked to be roundoff-level and then
// discarded.
double expectation(const DensityState& rho, const HermitianElement& a);

// Slacks of the two state inequalities:
//   first:  rho(a^2) rho(b^2) - rho(a o b)^2
//   second: rho(a^2) rho(b^2) / hbar^2 - rho([a, b])^2
// Both are nonnegative (up to roundoff) for every density state.
std::pair<double, double> check_cauchy_schwarz(const DensityState& rho,
                                               const LJBAlgebra& alg,
                                               const HermitianElement& a,
                                               const HermitianElement& b);

// The functional v_i -> Tr(rho v_i) on the subspace basis.
SubalgebraFunctional restrict_state(const DensityState& rho,
                                    const SubspaceBasis& sub);

// Constructive state extension: finds a density state on the parent algebra
// whose restriction to func's subspace reproduces func within tol. The
// subspace must contain the unit and be closed under the Jordan product.
// A fast certificate (the bilinear form func(v_i o v_j) must be positive
// semidefinite) rejects non-states before the iteration; the iteration
// alternates projections between the affine constraint set and the positive
// semidefinite cone (budget 10000 rounds) starting from the minimum-norm
// affine solution. Failure to converge throws ExtensionInfeasibleError.
DensityState extend_state(const SubalgebraFunctional& func,
                          const LJBAlgebra& alg, double tol);

// rho = G G* / Tr(G G*) for a seed-deterministic complex Gaussian G.
DensityState random_state(int dim, std::uint64_t seed);

} // namespace ljb
