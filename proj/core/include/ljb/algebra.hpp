#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ljb/hermitian.hpp"
#include "ljb/rng.hpp"

namespace ljb {

// Coefficients of e_i * e_j expanded in the basis: coeff(i, j, k) is the
// e_k coordinate of the product of the i-th and j-th basis elements.
// Storage is per-i slices, dense for generic bases and sparse for the
// canonical Hermitian basis (whose products have at most a few nonzero
// coordinates each; dense d^3 storage would be 134 MB at d = 256).
class StructureTensor {
public:
    StructureTensor() = default;

    static StructureTensor dense(std::vector<RMat> slices);
    static StructureTensor sparse(
        int d, const std::vector<std::vector<Eigen::Triplet<double>>>& by_slice);

    int size() const { return d_; }
    bool is_sparse() const { return sparse_mode_; }

    double coeff(int i, int j, int k) const;
    // Materialized i-th slice as a dense (j, k) matrix.
    RMat slice(int i) const;

    // M = sum_i x_i * slice(i); the coordinate matrix of left multiplication.
    RMat contract_left(const RVec& x) const;

    // Coordinates of the product of elements with coordinates x and y:
    // out_k = sum_{ij} x_i y_j coeff(i, j, k).
    RVec apply(const RVec& x, const RVec& y) const;

private:
    int d_ = 0;
    bool sparse_mode_ = false;
    std::vector<RMat> dense_;
    std::vector<Eigen::SparseMatrix<double>> sparse_;
};

// A finite-dimensional Lie-Jordan algebra concretely carried by a real-linear
// span of Hermitian matrices, with the products
//     a o b = (ab + ba) / 2          (Jordan)
//     [a, b] = i (ab - ba) / (2 hbar) (Lie)
// verified closed on the basis at construction. Owns the structure constants
// of both products and the Gram data of the basis.
class LJBAlgebra {
public:
    // Validates linear independence, closure under both products (every
    // basis product reconstructs from the structure constants within tol),
    // and detects the unit. The canonical orthonormal Hermitian basis is
    // recognized and takes an exact closed-form path for the tensors.
    static LJBAlgebra from_basis(double hbar, std::vector<HermitianElement> basis,
                                 double tol = 1e-10);

    // Full Hermitian matrix algebra on C^n in the canonical orthonormal
    // basis; structure constants are exact closed forms.
    static LJBAlgebra full_hermitian(int n, double hbar);

    // Skips closure validation and takes the given tensors at face value.
    // For tests that need deliberately corrupted structure constants.
    static LJBAlgebra unchecked(double hbar, std::vector<HermitianElement> basis,
                                StructureTensor jordan, StructureTensor lie);

    double hbar() const { return hbar_; }
    // Representation dimension n (matrix side length).
    int dim() const { return n_; }
    // Number of basis elements d.
    int basis_size() const { return static_cast<int>(basis_.size()); }
    const std::vector<HermitianElement>& basis() const { return basis_; }
    const StructureTensor& jordan_structure() const { return jordan_; }
    const StructureTensor& lie_structure() const { return lie_; }
    // Coordinates of the identity matrix, absent for non-unital spans.
    const std::optional<RVec>& unit_coords() const { return unit_coords_; }
    // Condition number of the basis Gram matrix (1 for orthonormal bases).
    double gram_condition() const { return gram_condition_; }
    // Largest product-reconstruction residual observed at construction.
    double closure_residual() const { return closure_residual_; }
    const RMat& gram() const { return gram_; }

    // Least-squares coordinates of m in the span; *residual_out receives the
    // Hilbert-Schmidt norm of m minus its span projection when requested.
    RVec coordinates(const CMat& m, double* residual_out = nullptr) const;
    CMat represent(const RVec& coords) const;
    HermitianElement element(const RVec& coords) const;

    // Products in coordinates, evaluated through the structure tensors.
    RVec jordan_coords(const RVec& x, const RVec& y) const;
    RVec lie_coords(const RVec& x, const RVec& y) const;

    // Hilbert-Schmidt inner product of coordinate vectors: x^T G y.
    double inner(const RVec& x, const RVec& y) const;
    double coord_norm(const RVec& x) const;

private:
    LJBAlgebra() = default;
    void finalize_gram();
    void detect_unit();

    double hbar_ = 1.0;
    int n_ = 0;
    std::vector<HermitianElement> basis_;
    StructureTensor jordan_;
    StructureTensor lie_;
    std::optional<RVec> unit_coords_;
    RMat gram_;
    Eigen::LDLT<RMat> gram_ldlt_;
    CMat basis_stack_; // d x n^2, row k = vectorized basis element k
    double gram_condition_ = 1.0;
    double closure_residual_ = 0.0;
};

// Concrete-model products on elements; validated against the algebra's
// representation dimension. These are the definitions the structure
// constants discretize.
HermitianElement jordan_product(const LJBAlgebra& alg, const HermitianElement& a,
                                const HermitianElement& b);
HermitianElement lie_bracket(const LJBAlgebra& alg, const HermitianElement& a,
                             const HermitianElement& b);

// Matrix-level products for internal use (no algebra object needed).
CMat jordan_mat(const CMat& a, const CMat& b);
CMat lie_mat(const CMat& a, const CMat& b, double hbar);

struct AxiomReport {
    int samples = 0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    double gram_condition = 1.0;
    double closure_residual = 0.0;
    // Max relative residual per axiom, keyed by a stable name.
    std::map<std::string, double> residuals;
    bool passed = false;
};

// Draws sample_count coordinate triples deterministically from seed and
// evaluates the defining identities through the structure tensors (so
// corrupted tensors surface) and the norm axioms through the represented
// matrices. Residuals are relative to the magnitudes of the terms involved.
AxiomReport verify_axioms(const LJBAlgebra& alg, int sample_count, double tol,
                          std::uint64_t seed);

// Max deviation of (a o b) - i*hbar*[a, b] from the plain matrix product ab
// over sampled pairs, relative to ||a|| ||b||. The bridge between the two
// products and associative matrix multiplication.
double product_reconstruction_residual(const LJBAlgebra& alg, int sample_count,
                                       std::uint64_t seed);

// Evaluates the resolvent identity linking S+ = a1^2 + a2^2 + lam*[a1,a2]
// and S- = a1^2 + a2^2 - lam*[a1,a2]: with b = (S+ - z)^{-1},
//   z^{-1} { 2 a1 o (b o a1) - a1^2 o b + 2 a2 o (b o a2) - a2^2 o b
//            - lam [a1, b o a2] - lam a1 o [b, a2] - 1 }
// must invert (S- - z). Requires z outside both spectra (checked). Returns
// true iff the product deviates from the identity by at most tol;
// *residual_out receives the deviation when requested.
bool check_resolvent_inverse(const LJBAlgebra& alg, const HermitianElement& a1,
                          const HermitianElement& a2, double lam, double z,
                          double tol, double* residual_out = nullptr);

// X = a1^2 + a2^2 - lam*[a1, a2], positive semidefinite whenever
// |lam| <= 2 hbar (exact square decomposition at the endpoints, convex
// combination in between). Outside that range throws DomainError carrying
// the computed minimum eigenvalue as diagnostic.
HermitianElement positivity_combination(const LJBAlgebra& alg,
                                        const HermitianElement& a1,
                                        const HermitianElement& a2, double lam);

// Iteratively closes the real span of the generators under both products
// (orthonormalizing as it grows) and returns the resulting algebra.
// Terminates because the ambient Hermitian space has finite dimension n^2.
LJBAlgebra build_algebra(double hbar,
                         const std::vector<HermitianElement>& generators,
                         double tol = 1e-10);

} // namespace ljb
