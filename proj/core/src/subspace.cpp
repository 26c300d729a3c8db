#include "ljb/subspace.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace ljb {

SubspaceBasis::SubspaceBasis(const LJBAlgebra& parent, RMat coords)
    : parent_(&parent), coords_(std::move(coords)) {
    if (coords_.rows() != parent.basis_size()) {
        throw ShapeError("SubspaceBasis: coordinate rows must match basis size");
    }
    if (coords_.cols() > 0) {
        RMat overlap = coords_.transpose() * parent.gram() * coords_;
        const double dev =
            (overlap - RMat::Identity(coords_.cols(), coords_.cols()))
                .cwiseAbs()
                .maxCoeff();
        if (!(dev <= 1e-10)) {
            std::ostringstream os;
            os << "SubspaceBasis: columns are not orthonormal (max deviation "
               << dev << ")";
            throw ValidationError(os.str());
        }
    }
}

SubspaceBasis SubspaceBasis::from_spanning(const LJBAlgebra& parent,
                                           const RMat& spanning, double tol) {
    if (spanning.rows() != parent.basis_size()) {
        throw ShapeError("from_spanning: coordinate rows must match basis size");
    }
    std::vector<RVec> kept;
    for (int c = 0; c < spanning.cols(); ++c) {
        RVec v = spanning.col(c);
        const double orig = std::max(1.0, parent.coord_norm(v));
        for (int pass = 0; pass < 2; ++pass) {
            for (const RVec& u : kept) v -= parent.inner(u, v) * u;
        }
        const double nrm = parent.coord_norm(v);
        if (nrm > std::max(tol, 1e-12) * orig) kept.push_back(v / nrm);
    }
    RMat coords(parent.basis_size(), static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        coords.col(static_cast<int>(i)) = kept[i];
    }
    return SubspaceBasis(parent, std::move(coords));
}

SubspaceBasis SubspaceBasis::empty(const LJBAlgebra& parent) {
    return SubspaceBasis(parent, RMat(parent.basis_size(), 0));
}

SubspaceBasis SubspaceBasis::full(const LJBAlgebra& parent) {
    return from_spanning(
        parent, RMat::Identity(parent.basis_size(), parent.basis_size()),
        1e-12);
}

HermitianElement SubspaceBasis::represent(int i) const {
    return parent_->element(coords_.col(i));
}

RVec SubspaceBasis::project(const RVec& x) const {
    if (dimension() == 0) return RVec::Zero(x.size());
    return coords_ * (coords_.transpose() * (parent_->gram() * x));
}

double SubspaceBasis::membership_residual(const RVec& x) const {
    const double nx = parent_->coord_norm(x);
    if (nx == 0.0) return 0.0;
    return parent_->coord_norm(x - project(x)) / nx;
}

bool SubspaceBasis::contains(const RVec& x, double tol) const {
    return membership_residual(x) <= tol;
}

bool SubspaceBasis::contains_subspace(const SubspaceBasis& other,
                                      double tol) const {
    for (int c = 0; c < other.dimension(); ++c) {
        if (!contains(other.vector(c), tol)) return false;
    }
    return true;
}

NullspaceResult nullspace(const RMat& a, double tol) {
    NullspaceResult out;
    const int cols = static_cast<int>(a.cols());
    if (a.rows() == 0 || cols == 0) {
        out.basis = RMat::Identity(cols, cols);
        out.threshold = 0.0;
        out.kept_rank = cols;
        return out;
    }
    if (a.rows() <= 20000) {
        Eigen::BDCSVD<RMat> svd(a, Eigen::ComputeFullV);
        RVec sv = svd.singularValues();
        const double smax = sv.size() > 0 ? sv(0) : 0.0;
        out.threshold = tol * std::max(smax, 1.0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) > out.threshold) ++rank;
        }
        out.singular_values.assign(sv.data(), sv.data() + sv.size());
        out.kept_rank = cols - rank;
        out.basis = svd.matrixV().rightCols(out.kept_rank);
    } else {
        // Normal equations: kernels of the stacks built here have singular
        // values either zero or order one, so squaring the spectrum is safe.
        RMat g = a.transpose() * a;
        g = 0.5 * (g + g.transpose().eval());
        Eigen::SelfAdjointEigenSolver<RMat> es(g);
        if (es.info() != Eigen::Success) {
            throw NumericalError("nullspace: eigensolver failed");
        }
        RVec ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        const double smax = ev(ev.size() - 1);
        // A zero singular value of A resurfaces from the Gram spectrum with
        // noise near sqrt(eps) * smax, so the cutoff cannot sit below that.
        out.threshold = std::max(tol, 1e-7) * std::max(smax, 1.0);
        int kept = 0;
        for (int i = 0; i < ev.size(); ++i) {
            if (ev(i) <= out.threshold) ++kept;
        }
        out.singular_values.resize(ev.size());
        for (int i = 0; i < ev.size(); ++i) {
            out.singular_values[static_cast<std::size_t>(i)] =
                ev(ev.size() - 1 - i);
        }
        out.kept_rank = kept;
        out.basis = es.eigenvectors().leftCols(kept);
    }
    return out;
}

} // namespace ljb
