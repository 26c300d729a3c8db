#include "ljb/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "ljb/rng.hpp"

namespace ljb {

namespace {

// Isometric real vectorization of Hermitian matrices: diagonal first, then
// sqrt(2)-scaled real and imaginary parts of the upper triangle, so that the
// euclidean inner product equals Tr(ab).
RVec vec_herm(const CMat& m) {
    const int n = static_cast<int>(m.rows());
    RVec v(n * n);
    int t = 0;
    for (int p = 0; p < n; ++p) v(t++) = m(p, p).real();
    const double s2 = std::sqrt(2.0);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            v(t++) = s2 * m(p, q).real();
            v(t++) = s2 * m(p, q).imag();
        }
    }
    return v;
}

CMat unvec_herm(const RVec& v, int n) {
    CMat m(n, n);
    int t = 0;
    for (int p = 0; p < n; ++p) m(p, p) = v(t++);
    const double r2 = 1.0 / std::sqrt(2.0);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double re = v(t++) * r2;
            const double im = v(t++) * r2;
            m(p, q) = std::complex<double>(re, im);
            m(q, p) = std::complex<double>(re, -im);
        }
    }
    return m;
}

} // namespace

DensityState::DensityState(CMat matrix, double tol) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw ValidationError("DensityState: matrix must be square and nonempty");
    }
    const double herm_dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm_dev <= kHermTol)) {
        std::ostringstream os;
        os << "DensityState: matrix is not Hermitian (deviation " << herm_dev
           << ")";
        throw ValidationError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("DensityState: eigensolver failed");
    }
    const double min_eig = es.eigenvalues()(0);
    if (!(min_eig >= -tol)) {
        std::ostringstream os;
        os << "DensityState: not positive semidefinite (min eigenvalue "
           << min_eig << ")";
        throw ValidationError(os.str());
    }
    const double tr = matrix_.trace().real();
    if (!(std::abs(tr - 1.0) <= tol)) {
        std::ostringstream os;
        os << "DensityState: trace " << tr << " is not 1";
        throw ValidationError(os.str());
    }
}

DensityState DensityState::symmetrized(CMat matrix, double tol) {
    CMat h = 0.5 * (matrix + matrix.adjoint().eval());
    return DensityState(std::move(h), tol);
}

SubalgebraFunctional::SubalgebraFunctional(SubspaceBasis subspace, RVec values)
    : subspace_(std::move(subspace)), values_(std::move(values)) {
    if (values_.size() != subspace_.dimension()) {
        throw ShapeError(
            "SubalgebraFunctional: value count must match subspace dimension");
    }
    if (!values_.allFinite()) {
        throw ValidationError("SubalgebraFunctional: values must be finite");
    }
    const auto& unit = subspace_.parent().unit_coords();
    if (unit && subspace_.contains(*unit, 1e-8)) {
        const double on_unit = evaluate(*unit);
        if (!(std::abs(on_unit - 1.0) <= 1e-10)) {
            std::ostringstream os;
            os << "SubalgebraFunctional: subspace contains the unit but the "
                  "functional gives "
               << on_unit << " on it (must be 1)";
            throw ValidationError(os.str());
        }
    }
}

double SubalgebraFunctional::evaluate(const RVec& ambient_coords) const {
    if (ambient_coords.size() != subspace_.parent().basis_size()) {
        throw ShapeError("evaluate: coordinate length mismatch");
    }
    if (subspace_.dimension() == 0) return 0.0;
    RVec in_sub = subspace_.coords().transpose() *
                  (subspace_.parent().gram() * ambient_coords);
    return values_.dot(in_sub);
}

double expectation(const DensityState& rho, const HermitianElement& a) {
    if (rho.dim() != a.dim()) {
        throw ShapeError("expectation: dimension mismatch");
    }
    const std::complex<double> tr = (rho.matrix() * a.entries()).trace();
    const double scale = std::max(1.0, a.entries().norm());
    if (!(std::abs(tr.imag()) <= 1e-12 * scale)) {
        throw NumericalError("expectation: imaginary residue exceeds 1e-12");
    }
    return tr.real();
}

std::pair<double, double> check_cauchy_schwarz(const DensityState& rho,
                                               const LJBAlgebra& alg,
                                               const HermitianElement& a,
                                               const HermitianElement& b) {
    if (rho.dim() != alg.dim() || a.dim() != alg.dim() || b.dim() != alg.dim()) {
        throw ShapeError("check_cauchy_schwarz: dimension mismatch");
    }
    const double ea2 = expectation(
        rho, HermitianElement::symmetrized(jordan_mat(a.entries(), a.entries())));
    const double eb2 = expectation(
        rho, HermitianElement::symmetrized(jordan_mat(b.entries(), b.entries())));
    const double eab = expectation(
        rho, HermitianElement::symmetrized(jordan_mat(a.entries(), b.entries())));
    const double ebr = expectation(
        rho, HermitianElement::symmetrized(
                 lie_mat(a.entries(), b.entries(), alg.hbar())));
    const double h2 = alg.hbar() * alg.hbar();
    return {ea2 * eb2 - eab * eab, ea2 * eb2 / h2 - ebr * ebr};
}

SubalgebraFunctional restrict_state(const DensityState& rho,
                                    const SubspaceBasis& sub) {
    if (rho.dim() != sub.parent().dim()) {
        throw ShapeError("restrict_state: dimension mismatch");
    }
    RVec values(sub.dimension());
    for (int i = 0; i < sub.dimension(); ++i) {
        values(i) = expectation(rho, sub.represent(i));
    }
    return SubalgebraFunctional(sub, std::move(values));
}

DensityState extend_state(const SubalgebraFunctional& func,
                          const LJBAlgebra& alg, double tol) {
    const SubspaceBasis& z = func.subspace();
    if (&z.parent() != &alg) {
        throw ShapeError(
            "extend_state: functional's subspace must live on the given algebra");
    }
    if (!(tol > 0.0)) throw ValidationError("extend_state: tol must be positive");
    const auto& unit = alg.unit_coords();
    if (!unit || !z.contains(*unit, 1e-8)) {
        throw PreconditionError(
            "extend_state: subspace must contain the unit element");
    }

    const int m = z.dimension();
    const int n = alg.dim();
    std::vector<CMat> reps;
    reps.reserve(m);
    for (int i = 0; i < m; ++i) reps.push_back(z.represent(i).entries());

    // Jordan closure of the subspace plus the positivity certificate: the
    // bilinear form B_ij = func(v_i o v_j) is the functional on squares, so
    // a negative eigenvalue certifies that no extension can exist.
    RMat bform(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const CMat prod = jordan_mat(reps[i], reps[j]);
            double span_resid = 0.0;
            RVec x = alg.coordinates(prod, &span_resid);
            const double scale = std::max(1.0, prod.norm());
            if (!(span_resid <= 1e-8 * scale) || !z.contains(x, 1e-8)) {
                throw ValidationError(
                    "extend_state: subspace is not closed under the jordan "
                    "product (extension needs a unital subalgebra)");
            }
            bform(i, j) = bform(j, i) = func.evaluate(x);
        }
    }
    Eigen::SelfAdjointEigenSolver<RMat> bes(bform, Eigen::EigenvaluesOnly);
    const double bmin = m > 0 ? bes.eigenvalues()(0) : 0.0;
    const double bscale = std::max(1.0, bform.cwiseAbs().maxCoeff());
    if (bmin < -tol * bscale) {
        std::ostringstream os;
        os << "extend_state: functional is not positive on the subspace "
              "(square form min eigenvalue "
           << bmin << ")";
        throw ExtensionInfeasibleError(os.str(), bmin);
    }

    // Alternating projections between the affine set of Hermitian matrices
    // matching the prescribed expectations (plus unit trace) and the PSD
    // cone, from the minimum-norm affine solution.
    RMat a(m + 1, n * n);
    RVec b(m + 1);
    for (int i = 0; i < m; ++i) {
        a.row(i) = vec_herm(reps[i]).transpose();
        b(i) = func.values()(i);
    }
    a.row(m) = vec_herm(CMat::Identity(n, n)).transpose();
    b(m) = 1.0;
    Eigen::CompleteOrthogonalDecomposition<RMat> cod(a);

    RVec cur = cod.solve(b);
    const int budget = 10000;
    double neg = 0.0, affine_resid = 0.0;
    for (int iter = 0; iter < budget; ++iter) {
        Eigen::SelfAdjointEigenSolver<CMat> es(unvec_herm(cur, n));
        if (es.info() != Eigen::Success) {
            throw NumericalError("extend_state: eigensolver failed");
        }
        neg = std::max(0.0, -es.eigenvalues()(0));
        RVec psd = vec_herm(es.eigenvectors() *
                            es.eigenvalues().cwiseMax(0.0).asDiagonal() *
                            es.eigenvectors().adjoint());
        affine_resid = (a * psd - b).cwiseAbs().maxCoeff();
        if (affine_resid <= tol) {
            CMat rho = unvec_herm(psd, n);
            const double tr = rho.trace().real();
            if (!(tr > 0.5)) break; // hopeless; fall through to failure
            rho /= tr;
            return DensityState::symmetrized(std::move(rho),
                                             std::max(tol, 1e-10));
        }
        cur = psd + cod.solve(b - a * psd);
    }
    std::ostringstream os;
    os << "extend_state: no positive semidefinite solution within budget "
          "(affine residual "
       << affine_resid << ", negativity " << neg << ")";
    throw ExtensionInfeasibleError(os.str(), std::max(affine_resid, neg));
}

DensityState random_state(int dim, std::uint64_t seed) {
    if (dim < 1) throw ValidationError("random_state: dim must be >= 1");
    CounterRng rng(seed);
    CMat g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = std::complex<double>(rng.gaussian(), rng.gaussian());
        }
    }
    CMat h = g * g.adjoint();
    const double tr = h.trace().real();
    if (!(tr > 0.0)) {
        throw NumericalError("random_state: degenerate Gaussian sample");
    }
    return DensityState::symmetrized(h / tr);
}

} // namespace ljb
