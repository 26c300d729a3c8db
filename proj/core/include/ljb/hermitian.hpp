#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "ljb/errors.hpp"

namespace ljb {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-12;

// A Hermitian n-by-n complex matrix, the concrete carrier of an algebra
// element. Construction validates hermiticity to 1e-12 (max entry deviation
// from the conjugate transpose) and rejects anything worse.
class HermitianElement {
public:
    explicit HermitianElement(CMat entries, double herm_tol = kHermTol);

    // Accepts a matrix that is Hermitian only up to roundoff and replaces it
    // with its Hermitian part (m + m*)/2. For results of unitary conjugation
    // and other internal paths whose exact-arithmetic value is Hermitian.
    static HermitianElement symmetrized(const CMat& m);

    // All-zero element.
    static HermitianElement zero(int dim);

    // Identity matrix.
    static HermitianElement identity(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMat& entries() const { return entries_; }

    HermitianElement operator+(const HermitianElement& o) const;
    HermitianElement operator-(const HermitianElement& o) const;
    HermitianElement operator*(double s) const;

private:
    struct Trusted {};
    HermitianElement(CMat entries, Trusted) : entries_(std::move(entries)) {}

    CMat entries_;
};

inline HermitianElement operator*(double s, const HermitianElement& a) {
    return a * s;
}

// Hilbert-Schmidt inner product Tr(a b); real for Hermitian operands.
double hs_inner(const CMat& a, const CMat& b);
double hs_inner(const HermitianElement& a, const HermitianElement& b);
double hs_norm(const CMat& a);

// Eigenvalues in ascending order, repeated by multiplicity.
std::vector<double> spectrum(const HermitianElement& a);

// Largest |eigenvalue|; the C*-norm of the element.
double operator_norm(const HermitianElement& a);
double operator_norm(const CMat& a_hermitian);

// True iff min eigenvalue >= -tol.
bool is_positive(const HermitianElement& a, double tol);

// Eigenspace split X = P - N with P, N positive semidefinite and PN = 0.
std::pair<HermitianElement, HermitianElement>
pos_neg_decompose(const HermitianElement& x);

} // namespace ljb
