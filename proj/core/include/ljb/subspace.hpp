#pragma once

#include <string>
#include <vector>

#include "ljb/algebra.hpp"

namespace ljb {

// Orthonormal basis (Hilbert-Schmidt inner product) of a real subspace of an
// algebra, stored as coordinate columns with respect to the parent basis.
// Used for the vanishing subalgebra V, the normalizer N_V, fixed-point
// subalgebras of symmetries, and quotient sections.
class SubspaceBasis {
public:
    // Columns of coords must already be orthonormal under the parent's
    // inner product, within 1e-10.
    SubspaceBasis(const LJBAlgebra& parent, RMat coords);

    // Gram-Schmidt in the parent inner product; drops dependent directions
    // below tol (relative).
    static SubspaceBasis from_spanning(const LJBAlgebra& parent,
                                       const RMat& spanning, double tol);
    static SubspaceBasis empty(const LJBAlgebra& parent);
    // The whole algebra as a subspace of itself.
    static SubspaceBasis full(const LJBAlgebra& parent);

    const LJBAlgebra& parent() const { return *parent_; }
    int dimension() const { return static_cast<int>(coords_.cols()); }
    const RMat& coords() const { return coords_; }
    RVec vector(int i) const { return coords_.col(i); }
    HermitianElement represent(int i) const;

    // Orthogonal projection of ambient coordinates onto the subspace.
    RVec project(const RVec& x) const;
    // Norm of x minus its projection, relative to the norm of x.
    double membership_residual(const RVec& x) const;
    bool contains(const RVec& x, double tol) const;
    // True iff every column of other lies in this subspace within tol.
    bool contains_subspace(const SubspaceBasis& other, double tol) const;

private:
    const LJBAlgebra* parent_;
    RMat coords_; // basis_size x dimension
};

// Result of a numerical kernel computation: an orthonormal (euclidean)
// nullspace basis plus the singular values that drove the rank decision.
struct NullspaceResult {
    RMat basis; // cols x kernel_dim
    std::vector<double> singular_values;
    double threshold = 0.0;
    int kept_rank = 0; // dimension of the kernel
};

// Kernel of A (acting on column vectors) with threshold tol * sigma_max.
// Uses a full SVD for moderate row counts and the normal-equations Gram
// matrix for very tall stacks (kernels here are well separated, with
// singular values either zero or order one).
NullspaceResult nullspace(const RMat& a, double tol);

} // namespace ljb
