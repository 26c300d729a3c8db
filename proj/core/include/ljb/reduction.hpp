#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ljb/states.hpp"
#include "ljb/subspace.hpp"

namespace ljb {

// A set of constraint observables inside an algebra's span. Holds shared
// ownership of the algebra when given a shared_ptr; the reference overload
// borrows, and the caller must keep the algebra alive.
class ConstraintSystem {
public:
    ConstraintSystem(std::shared_ptr<const LJBAlgebra> algebra,
                     std::vector<HermitianElement> constraints);
    ConstraintSystem(const LJBAlgebra& algebra,
                     std::vector<HermitianElement> constraints);

    const LJBAlgebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const LJBAlgebra>& algebra_ptr() const {
        return algebra_;
    }
    const std::vector<HermitianElement>& constraints() const {
        return constraints_;
    }
    // Coordinates of each constraint in the algebra basis (validated at
    // construction to lie in the span within 1e-10 relative).
    const std::vector<RVec>& constraint_coords() const { return coords_; }

private:
    void validate();

    std::shared_ptr<const LJBAlgebra> algebra_;
    std::vector<HermitianElement> constraints_;
    std::vector<RVec> coords_;
};

// Generators J of the inner derivations a -> [J, a] used for symmetry
// reduction. Same ownership convention as ConstraintSystem.
class SymmetrySystem {
public:
    SymmetrySystem(std::shared_ptr<const LJBAlgebra> algebra,
                   std::vector<HermitianElement> generators);
    SymmetrySystem(const LJBAlgebra& algebra,
                   std::vector<HermitianElement> generators);

    const LJBAlgebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const LJBAlgebra>& algebra_ptr() const {
        return algebra_;
    }
    const std::vector<HermitianElement>& generators() const {
        return generators_;
    }
    const std::vector<RVec>& generator_coords() const { return coords_; }

private:
    void validate();

    std::shared_ptr<const LJBAlgebra> algebra_;
    std::vector<HermitianElement> generators_;
    std::vector<RVec> coords_;
};

// One numerical rank decision: which singular values were kept against
// which threshold, for audit trails in reports.
struct RankDecision {
    std::string stage;
    std::vector<double> singular_values; // descending, possibly truncated
    double threshold = 0.0;
    int kernel_dim = 0;

    bool operator==(const RankDecision&) const = default;
};

// Trace of everything a reduction pipeline decided or verified, surfaced
// through CLI reports.
struct ReductionLog {
    std::vector<RankDecision> rank_decisions;
    std::map<std::string, double> checks; // named residuals
    std::vector<std::string> warnings;
};

// Output of constraint reduction: the support projector P onto the joint
// constraint kernel K, the vanishing ideal V, its normalizer N, and the
// quotient N/V modeled on the orthogonal complement of V inside N, with
// induced structure tensors. `model` is the same quotient realized
// concretely by compression a -> U* a U onto K; it is null when the
// compressed complement basis fails to form an algebra (never the case for
// the constraint pipeline on a full matrix algebra).
struct ReducedAlgebra {
    std::shared_ptr<const LJBAlgebra> ambient;
    CMat support_projector; // n x n, P = U U*
    CMat support_isometry;  // n x k, orthonormal columns spanning K
    int support_rank = 0;
    SubspaceBasis vanishing;  // V
    SubspaceBasis normalizer; // N, contains V
    SubspaceBasis complement; // coordinate model of N/V, orthogonal to V in N
    StructureTensor quotient_jordan;
    StructureTensor quotient_lie;
    int quotient_dim = 0;
    RVec quotient_unit; // complement coordinates of the projected unit
    std::shared_ptr<const LJBAlgebra> model;
    double compression_residual = 0.0; // NaN when model is null
    std::vector<HermitianElement> constraints; // pipeline provenance
    ReductionLog log;
};

// Fixed-point subalgebra of the derivations: {a : [J_k, a] = 0 for all k},
// computed as a joint kernel in coordinates. Verified closed under both
// products; contains the unit when the ambient has one. Empty generator
// list returns the full algebra.
SubspaceBasis symmetry_reduce(const SymmetrySystem& sys);

// Orthogonal projector onto K, the intersection of the constraint kernels,
// via accumulated SVDs with relative threshold tol. Throws
// NoDiracStatesError when K is trivial. The optional isometry receives an
// orthonormal basis of K as columns.
CMat dirac_support(const ConstraintSystem& cs, double tol,
                   CMat* isometry_out = nullptr, ReductionLog* log = nullptr);

// True iff expectation(rho, c^2) <= tol for every constraint c.
bool is_dirac_state(const DensityState& rho, const ConstraintSystem& cs,
                    double tol);

// V = {a in span : a P = 0}, the ideal of observables that every state
// supported in K annihilates. Checked: closed under both products, unit
// not a member, every constraint a member.
SubspaceBasis vanishing_subalgebra(const ConstraintSystem& cs, const CMat& p,
                                   double tol, ReductionLog* log = nullptr);

// Samples Dirac-supported and generic states and verifies the
// characterization: a state is Dirac iff it vanishes on every basis vector
// of V. Returns false on the first counterexample.
bool check_dirac_equivalence(const ConstraintSystem& cs,
                             const SubspaceBasis& v, int samples,
                             std::uint64_t seed, double tol);

// N = {a in span : [a, V] within V}, the largest subalgebra in which V is
// an ideal. Checked: unit membership, closure, and the ideal property
// (Jordan and Lie products of N with V land in V).
SubspaceBasis normalizer(const LJBAlgebra& alg, const SubspaceBasis& v,
                         double tol, ReductionLog* log = nullptr);

// Quotient N/V on the orthogonal complement of V inside N: products are
// computed in the ambient and projected onto the complement along V.
// Representative independence is verified on random ideal shifts. The
// support data is derived from the joint kernel of V's representatives.
ReducedAlgebra quotient(const LJBAlgebra& alg, const SubspaceBasis& v,
                        const SubspaceBasis& n, double tol);

// Norm of the coset a + V, the infimum of the operator norm over ideal
// shifts. Exact closed form (compression onto K) when V annihilates K and
// a is block-diagonal with the matching shift inside V; otherwise a
// subgradient-descent upper bound, reported via *approximate_out.
double quotient_norm(const ReducedAlgebra& red, const RVec& a_coords,
                     double tol, bool* approximate_out = nullptr);

// Full constraint pipeline: support, vanishing ideal, normalizer, quotient,
// compression model with axiom verification. The returned log carries every
// rank decision and consistency residual.
ReducedAlgebra reduce_constraints(const ConstraintSystem& cs, double tol);

// Worked example: ambient Hilbert space with sectors j = 0..l_max carrying
// a Casimir operator with eigenvalue j(j+1) on sector j (hbar = 1), full
// Hermitian ambient algebra, single constraint picking out sector l. The
// quotient is the full Hermitian algebra on the (2l+1)-dimensional sector.
ReducedAlgebra reduce_angular_momentum(int l, int l_max);

// Pushforward of a Dirac state to the quotient: restrict to N, check it
// vanishes on V, and read off complement coordinates. The result is
// normalized and positive on quotient squares (verified).
SubalgebraFunctional reduce_dirac_states(const ConstraintSystem& cs,
                                         const ReducedAlgebra& red,
                                         const DensityState& rho, double tol);

// Inverse direction: pull a quotient state back to a functional on N
// vanishing on V and extend it to a density state on the ambient algebra.
// The result is verified to be a Dirac state and to push forward to func.
DensityState lift_reduced_state(const ReducedAlgebra& red,
                                const SubalgebraFunctional& func, double tol);

} // namespace ljb
