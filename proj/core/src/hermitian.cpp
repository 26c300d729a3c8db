#include "ljb/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

namespace ljb {

namespace {

double herm_deviation(const CMat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace

HermitianElement::HermitianElement(CMat entries, double herm_tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        std::ostringstream os;
        os << "matrix must be square and nonempty, got " << entries_.rows()
           << "x" << entries_.cols();
        throw ValidationError(os.str());
    }
    const double dev = herm_deviation(entries_);
    if (!(dev <= herm_tol)) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max deviation " << dev
           << " exceeds tolerance " << herm_tol;
        throw ValidationError(os.str());
    }
}

HermitianElement HermitianElement::symmetrized(const CMat& m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError("symmetrized: matrix must be square and nonempty");
    }
    return HermitianElement(0.5 * (m + m.adjoint().eval()), Trusted{});
}

HermitianElement HermitianElement::zero(int dim) {
    if (dim < 1) throw ValidationError("zero: dim must be >= 1");
    return HermitianElement(CMat::Zero(dim, dim), Trusted{});
}

HermitianElement HermitianElement::identity(int dim) {
    if (dim < 1) throw ValidationError("identity: dim must be >= 1");
    return HermitianElement(CMat::Identity(dim, dim), Trusted{});
}

HermitianElement HermitianElement::operator+(const HermitianElement& o) const {
    if (dim() != o.dim()) throw ShapeError("operator+: dimension mismatch");
    return HermitianElement(entries_ + o.entries_, Trusted{});
}

HermitianElement HermitianElement::operator-(const HermitianElement& o) const {
    if (dim() != o.dim()) throw ShapeError("operator-: dimension mismatch");
    return HermitianElement(entries_ - o.entries_, Trusted{});
}

HermitianElement HermitianElement::operator*(double s) const {
    return HermitianElement(s * entries_, Trusted{});
}

double hs_inner(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("hs_inner: dimension mismatch");
    }
    // Tr(a b) = sum_{ij} a_ij b_ji; for Hermitian a, b this is
    // sum_{ij} a_ij conj(b_ij), whose imaginary part vanishes.
    return (a.cwiseProduct(b.adjoint().transpose())).sum().real();
}

double hs_inner(const HermitianElement& a, const HermitianElement& b) {
    return hs_inner(a.entries(), b.entries());
}

double hs_norm(const CMat& a) { return a.norm(); }

std::vector<double> spectrum(const HermitianElement& a) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a.entries(),
                                           Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("spectrum: eigensolver failed to converge");
    }
    const RVec& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double operator_norm(const CMat& a_hermitian) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a_hermitian,
                                           Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("operator_norm: eigensolver failed to converge");
    }
    const RVec& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double operator_norm(const HermitianElement& a) {
    return operator_norm(a.entries());
}

bool is_positive(const HermitianElement& a, double tol) {
    return spectrum(a).front() >= -tol;
}

std::pair<HermitianElement, HermitianElement>
pos_neg_decompose(const HermitianElement& x) {
    Eigen::SelfAdjointEigenSolver<CMat> es(x.entries());
    if (es.info() != Eigen::Success) {
        throw NumericalError("pos_neg_decompose: eigensolver failed");
    }
    const RVec& ev = es.eigenvalues();
    const CMat& u = es.eigenvectors();
    RVec pos = ev.cwiseMax(0.0);
    RVec neg = (-ev).cwiseMax(0.0);
    CMat p = u * pos.asDiagonal() * u.adjoint();
    CMat n = u * neg.asDiagonal() * u.adjoint();
    return {HermitianElement::symmetrized(p), HermitianElement::symmetrized(n)};
}

} // namespace ljb
