#include "ljb/reduction.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "ljb/bases.hpp"

namespace ljb {

namespace {

std::shared_ptr<const LJBAlgebra> borrow(const LJBAlgebra& alg) {
    return std::shared_ptr<const LJBAlgebra>(&alg, [](const LJBAlgebra*) {});
}

void record_rank(ReductionLog* log, const std::string& stage,
                 const NullspaceResult& ns) {
    if (!log) return;
    RankDecision rd;
    rd.stage = stage;
    rd.threshold = ns.threshold;
    rd.kernel_dim = ns.kept_rank;
    const auto& sv = ns.singular_values;
    if (sv.size() <= 40) {
        rd.singular_values = sv;
    } else {
        // Keep a window around the rank cut; the far tails carry no signal.
        const int cut = static_cast<int>(sv.size()) - ns.kept_rank;
        const int lo = std::max(0, cut - 8);
        const int hi = std::min(static_cast<int>(sv.size()), cut + 8);
        rd.singular_values.assign(sv.begin() + lo, sv.begin() + hi);
    }
    log->rank_decisions.push_back(std::move(rd));
}

// Kernel of the real-linear map x -> A x with complex A acting on real
// coordinate vectors, i.e. kernel of [Re A; Im A].
NullspaceResult complex_column_kernel(const CMat& a, double tol) {
    RMat stacked(2 * a.rows(), a.cols());
    stacked.topRows(a.rows()) = a.real();
    stacked.bottomRows(a.rows()) = a.imag();
    return nullspace(stacked, tol);
}

// Distance of x from a subspace, relative to max(1, |x|). Unlike the
// membership_residual method this does not blow up on near-zero products.
double distance_from(const SubspaceBasis& s, const RVec& x) {
    const double nx = s.parent().coord_norm(x);
    return s.parent().coord_norm(x - s.project(x)) / std::max(1.0, nx);
}

struct PairCheck {
    double max_jordan = 0.0;
    double max_lie = 0.0;
    bool sampled = false;
};

// Worst distance of products of basis pairs of `left` and `right` from
// `target`, going through the represented matrices (cheap even for large
// coordinate dimensions). Exhaustive while the pair count stays within
// budget, otherwise a seeded sample.
PairCheck product_membership(const LJBAlgebra& alg, const SubspaceBasis& left,
                             const SubspaceBasis& right,
                             const SubspaceBasis& target, int budget,
                             std::uint64_t seed) {
    PairCheck out;
    const int ml = left.dimension();
    const int mr = right.dimension();
    if (ml == 0 || mr == 0) return out;
    const bool same = &left == &right;
    std::vector<CMat> lreps(static_cast<std::size_t>(ml));
    for (int i = 0; i < ml; ++i) lreps[static_cast<std::size_t>(i)] = left.represent(i).entries();
    std::vector<CMat> rreps;
    if (!same) {
        rreps.resize(static_cast<std::size_t>(mr));
        for (int j = 0; j < mr; ++j) rreps[static_cast<std::size_t>(j)] = right.represent(j).entries();
    }
    const auto& rr = same ? lreps : rreps;

    const long total = same ? static_cast<long>(ml) * (ml + 1) / 2
                            : static_cast<long>(ml) * mr;
    std::vector<std::pair<int, int>> pairs;
    if (total <= budget) {
        for (int i = 0; i < ml; ++i) {
            for (int j = same ? i : 0; j < mr; ++j) pairs.emplace_back(i, j);
        }
    } else {
        out.sampled = true;
        CounterRng rng(seed);
        pairs.reserve(static_cast<std::size_t>(budget));
        for (int k = 0; k < budget; ++k) {
            pairs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(ml))),
                               static_cast<int>(rng.below(static_cast<std::uint64_t>(mr))));
        }
    }

    for (const auto& [i, j] : pairs) {
        const CMat& a = lreps[static_cast<std::size_t>(i)];
        const CMat& b = rr[static_cast<std::size_t>(j)];
        double span_resid = 0.0;
        RVec xj = alg.coordinates(jordan_mat(a, b), &span_resid);
        out.max_jordan = std::max(out.max_jordan,
                                  std::max(span_resid, distance_from(target, xj)));
        if (same && i == j) continue; // bracket of equal arguments is zero
        RVec xl = alg.coordinates(lie_mat(a, b, alg.hbar()), &span_resid);
        out.max_lie = std::max(out.max_lie,
                               std::max(span_resid, distance_from(target, xl)));
    }
    return out;
}

void note_sampled(ReductionLog* log, const char* what) {
    if (!log) return;
    std::ostringstream os;
    os << what << ": pair check sampled (1500 seeded pairs), not exhaustive";
    log->warnings.push_back(os.str());
}

// Accumulated kernel of the represented elements of a subspace: an
// orthonormal basis of the joint null space of its matrices.
CMat joint_matrix_kernel(const LJBAlgebra& alg, const SubspaceBasis& v,
                         double tol) {
    const int n = alg.dim();
    CMat k = CMat::Identity(n, n);
    for (int j = 0; j < v.dimension() && k.cols() > 0; ++j) {
        CMat a = v.represent(j).entries() * k;
        Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
        const RVec& sv = svd.singularValues();
        const double smax = sv.size() > 0 ? sv(0) : 0.0;
        const double thr = tol * std::max(smax, 1.0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) > thr) ++rank;
        }
        k = k * svd.matrixV().rightCols(k.cols() - rank);
    }
    if (k.cols() > 0) {
        Eigen::HouseholderQR<CMat> qr(k);
        k = qr.householderQ() * CMat::Identity(n, static_cast<int>(k.cols()));
    }
    return k;
}

// Quotient-side bilinear square form: B(i, j) = func values applied to the
// jordan product of complement basis vectors i and j. Positive semidefinite
// exactly when the functional is nonnegative on quotient squares.
RMat quotient_square_form(const StructureTensor& jordan, const RVec& values) {
    const int q = jordan.size();
    RMat b(q, q);
    for (int i = 0; i < q; ++i) {
        b.row(i) = (jordan.slice(i) * values).transpose();
    }
    return 0.5 * (b + b.transpose().eval());
}

ReducedAlgebra quotient_detail(std::shared_ptr<const LJBAlgebra> alg_ptr,
                               const SubspaceBasis& v, const SubspaceBasis& n,
                               double tol, const CMat* isometry_in,
                               std::vector<HermitianElement> constraints,
                               ReductionLog log) {
    const LJBAlgebra& alg = *alg_ptr;
    if (&v.parent() != &alg || &n.parent() != &alg) {
        throw ShapeError("quotient: subspaces must belong to the given algebra");
    }
    if (!n.contains_subspace(v, 1e-10)) {
        throw PreconditionError("quotient: V is not contained in N");
    }
    if (alg.unit_coords() && !n.contains(*alg.unit_coords(), 1e-9)) {
        throw PreconditionError("quotient: N does not contain the unit");
    }

    const double gate = std::max(tol, 1e-9);

    // Orthogonal complement of V inside N, the coset section.
    SubspaceBasis complement = SubspaceBasis::empty(alg);
    if (v.dimension() == 0) {
        complement = n;
    } else {
        RMat overlap = v.coords().transpose() * alg.gram() * n.coords();
        NullspaceResult ns = nullspace(overlap, 1e-12);
        record_rank(&log, "complement", ns);
        if (ns.kept_rank != n.dimension() - v.dimension()) {
            throw InternalConsistencyError(
                "quotient: complement dimension does not match dim N - dim V");
        }
        complement =
            SubspaceBasis::from_spanning(alg, n.coords() * ns.basis, 1e-12);
        if (complement.dimension() != ns.kept_rank) {
            throw InternalConsistencyError(
                "quotient: complement basis lost rank during orthonormalization");
        }
    }
    const int q = complement.dimension();

    // Induced products: evaluate in the ambient, then project onto the
    // complement along V (coordinates of the coset representative).
    std::vector<CMat> reps(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) reps[static_cast<std::size_t>(i)] = complement.represent(i).entries();
    std::vector<RMat> jslices(static_cast<std::size_t>(q), RMat::Zero(q, q));
    std::vector<RMat> lslices(static_cast<std::size_t>(q), RMat::Zero(q, q));
    RMat proj = complement.coords().transpose() * alg.gram(); // q x d
    double worst_escape = 0.0;
    for (int i = 0; i < q; ++i) {
        for (int j = i; j < q; ++j) {
            double span_resid = 0.0;
            RVec pj = alg.coordinates(
                jordan_mat(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]), &span_resid);
            worst_escape = std::max(worst_escape, span_resid);
            worst_escape = std::max(worst_escape, distance_from(n, pj));
            RVec qj = proj * pj;
            jslices[static_cast<std::size_t>(i)].row(j) = qj.transpose();
            jslices[static_cast<std::size_t>(j)].row(i) = qj.transpose();
            if (i == j) continue;
            RVec pl = alg.coordinates(
                lie_mat(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)], alg.hbar()),
                &span_resid);
            worst_escape = std::max(worst_escape, span_resid);
            worst_escape = std::max(worst_escape, distance_from(n, pl));
            RVec ql = proj * pl;
            lslices[static_cast<std::size_t>(i)].row(j) = ql.transpose();
            lslices[static_cast<std::size_t>(j)].row(i) = -ql.transpose();
        }
    }
    log.checks["quotient_product_escape"] = worst_escape;
    if (worst_escape > gate) {
        throw InternalConsistencyError(
            "quotient: products of complement vectors leave the normalizer");
    }
    StructureTensor qjordan = StructureTensor::dense(std::move(jslices));
    StructureTensor qlie = StructureTensor::dense(std::move(lslices));

    // Independence of coset representatives: shifting arguments by ideal
    // vectors must not move the projected products.
    double worst_shift = 0.0;
    if (v.dimension() > 0 && q > 0) {
        CounterRng rng(20240811);
        for (int trial = 0; trial < 10; ++trial) {
            RVec cx = RVec::Zero(alg.basis_size());
            RVec cy = RVec::Zero(alg.basis_size());
            for (int i = 0; i < q; ++i) {
                cx += rng.gaussian() * complement.vector(i);
                cy += rng.gaussian() * complement.vector(i);
            }
            RVec vv = RVec::Zero(alg.basis_size());
            RVec ww = RVec::Zero(alg.basis_size());
            for (int i = 0; i < v.dimension(); ++i) {
                vv += rng.gaussian() * v.vector(i);
                ww += rng.gaussian() * v.vector(i);
            }
            const double scale =
                std::max({1.0, alg.coord_norm(cx) * alg.coord_norm(cy),
                          alg.coord_norm(vv) * alg.coord_norm(ww)});
            RVec dj = proj * (alg.jordan_coords(cx + vv, cy + ww) -
                              alg.jordan_coords(cx, cy));
            RVec dl = proj * (alg.lie_coords(cx + vv, cy + ww) -
                              alg.lie_coords(cx, cy));
            worst_shift = std::max(
                worst_shift,
                std::max(dj.cwiseAbs().maxCoeff(), dl.cwiseAbs().maxCoeff()) /
                    scale);
        }
        log.checks["representative_independence"] = worst_shift;
        if (worst_shift > gate) {
            throw InternalConsistencyError(
                "quotient: products depend on the coset representative");
        }
    } else {
        log.checks["representative_independence"] = 0.0;
    }

    // Support data: the joint kernel of the ideal's representatives.
    const int dim_n = alg.dim();
    CMat u;
    if (isometry_in) {
        u = *isometry_in;
    } else if (v.dimension() == 0) {
        u = CMat::Identity(dim_n, dim_n);
    } else {
        u = joint_matrix_kernel(alg, v, std::max(tol, 1e-12));
        if (u.cols() == 0) {
            throw NoDiracStatesError(
                "quotient: the ideal annihilates no nonzero vector");
        }
    }
    CMat p = u * u.adjoint();
    p = 0.5 * (p + p.adjoint().eval());
    {
        const double idem = (p * p - p).cwiseAbs().maxCoeff();
        log.checks["support_idempotency"] = idem;
        if (idem > 1e-10) {
            throw InternalConsistencyError(
                "quotient: support projector is not idempotent");
        }
    }

    RVec qunit;
    if (alg.unit_coords()) qunit = proj * (*alg.unit_coords());

    // Concrete realization on the support: compress the complement basis.
    std::shared_ptr<const LJBAlgebra> model;
    double compression_residual = std::numeric_limits<double>::quiet_NaN();
    try {
        std::vector<HermitianElement> compressed;
        compressed.reserve(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) {
            compressed.push_back(HermitianElement::symmetrized(
                u.adjoint() * reps[static_cast<std::size_t>(i)] * u));
        }
        model = std::make_shared<const LJBAlgebra>(
            LJBAlgebra::from_basis(alg.hbar(), std::move(compressed),
                                   std::max(tol, 1e-10)));
    } catch (const ValidationError& e) {
        log.warnings.push_back(
            std::string("compression model unavailable: ") + e.what());
        model.reset();
    }
    if (model) {
        double worst = 0.0;
        for (int i = 0; i < q; ++i) {
            worst = std::max(worst, (model->jordan_structure().slice(i) -
                                     qjordan.slice(i))
                                        .cwiseAbs()
                                        .maxCoeff());
            worst = std::max(
                worst,
                (model->lie_structure().slice(i) - qlie.slice(i))
                    .cwiseAbs()
                    .maxCoeff());
        }
        compression_residual = worst;
        log.checks["compression_residual"] = worst;
        if (qunit.size() > 0 && model->unit_coords()) {
            const double udev =
                (*model->unit_coords() - qunit).cwiseAbs().maxCoeff();
            log.checks["compressed_unit_deviation"] = udev;
            if (udev > 1e-6) {
                throw InternalConsistencyError(
                    "quotient: compressed unit disagrees with the projected unit");
            }
        }
    }

    ReducedAlgebra red{std::move(alg_ptr),
                       std::move(p),
                       std::move(u),
                       0,
                       v,
                       n,
                       std::move(complement),
                       std::move(qjordan),
                       std::move(qlie),
                       q,
                       std::move(qunit),
                       std::move(model),
                       compression_residual,
                       std::move(constraints),
                       std::move(log)};
    red.support_rank = static_cast<int>(red.support_isometry.cols());
    return red;
}

} // namespace

ConstraintSystem::ConstraintSystem(std::shared_ptr<const LJBAlgebra> algebra,
                                   std::vector<HermitianElement> constraints)
    : algebra_(std::move(algebra)), constraints_(std::move(constraints)) {
    validate();
}

ConstraintSystem::ConstraintSystem(const LJBAlgebra& algebra,
                                   std::vector<HermitianElement> constraints)
    : algebra_(borrow(algebra)), constraints_(std::move(constraints)) {
    validate();
}

void ConstraintSystem::validate() {
    if (!algebra_) throw ValidationError("ConstraintSystem: null algebra");
    coords_.reserve(constraints_.size());
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
        const HermitianElement& c = constraints_[k];
        if (c.dim() != algebra_->dim()) {
            throw ShapeError("ConstraintSystem: constraint dimension mismatch");
        }
        double resid = 0.0;
        RVec x = algebra_->coordinates(c.entries(), &resid);
        if (!(resid <= 1e-10 * std::max(1.0, c.entries().norm()))) {
            std::ostringstream os;
            os << "ConstraintSystem: constraint " << k
               << " lies outside the algebra span (residual " << resid << ")";
            throw ValidationError(os.str());
        }
        coords_.push_back(std::move(x));
    }
}

SymmetrySystem::SymmetrySystem(std::shared_ptr<const LJBAlgebra> algebra,
                               std::vector<HermitianElement> generators)
    : algebra_(std::move(algebra)), generators_(std::move(generators)) {
    validate();
}

SymmetrySystem::SymmetrySystem(const LJBAlgebra& algebra,
                               std::vector<HermitianElement> generators)
    : algebra_(borrow(algebra)), generators_(std::move(generators)) {
    validate();
}

void SymmetrySystem::validate() {
    if (!algebra_) throw ValidationError("SymmetrySystem: null algebra");
    coords_.reserve(generators_.size());
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const HermitianElement& g = generators_[k];
        if (g.dim() != algebra_->dim()) {
            throw ShapeError("SymmetrySystem: generator dimension mismatch");
        }
        double resid = 0.0;
        RVec x = algebra_->coordinates(g.entries(), &resid);
        if (!(resid <= 1e-10 * std::max(1.0, g.entries().norm()))) {
            std::ostringstream os;
            os << "SymmetrySystem: generator " << k
               << " lies outside the algebra span (residual " << resid << ")";
            throw ValidationError(os.str());
        }
        coords_.push_back(std::move(x));
    }
}

SubspaceBasis symmetry_reduce(const SymmetrySystem& sys) {
    const LJBAlgebra& alg = sys.algebra();
    const int d = alg.basis_size();
    if (sys.generators().empty()) return SubspaceBasis::full(alg);

    RMat stacked(static_cast<long>(d) * static_cast<long>(sys.generators().size()), d);
    for (std::size_t k = 0; k < sys.generator_coords().size(); ++k) {
        // Row block k: coordinates of [J_k, x] as a linear map of x.
        stacked.middleRows(static_cast<long>(k) * d, d) =
            alg.lie_structure().contract_left(sys.generator_coords()[k]).transpose();
    }
    NullspaceResult ns = nullspace(stacked, 1e-10);
    SubspaceBasis fixed = SubspaceBasis::from_spanning(alg, ns.basis, 1e-12);
    if (fixed.dimension() != ns.kept_rank) {
        throw InternalConsistencyError(
            "symmetry_reduce: fixed-point basis lost rank");
    }

    PairCheck pc = product_membership(alg, fixed, fixed, fixed, 1500, 9001);
    if (std::max(pc.max_jordan, pc.max_lie) > 1e-9) {
        throw InternalConsistencyError(
            "symmetry_reduce: fixed-point subspace is not closed under the "
            "products");
    }
    if (alg.unit_coords() && !fixed.contains(*alg.unit_coords(), 1e-8)) {
        throw InternalConsistencyError(
            "symmetry_reduce: fixed-point subspace misses the unit");
    }
    return fixed;
}

CMat dirac_support(const ConstraintSystem& cs, double tol, CMat* isometry_out,
                   ReductionLog* log) {
    if (!(tol > 0.0)) throw ValidationError("dirac_support: tol must be positive");
    const int n = cs.algebra().dim();
    CMat k = CMat::Identity(n, n);
    for (std::size_t idx = 0; idx < cs.constraints().size(); ++idx) {
        if (k.cols() == 0) break;
        CMat a = cs.constraints()[idx].entries() * k;
        Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
        const RVec& sv = svd.singularValues();
        const double smax = sv.size() > 0 ? sv(0) : 0.0;
        const double thr = tol * std::max(smax, 1.0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) > thr) ++rank;
        }
        if (log) {
            NullspaceResult ns;
            ns.singular_values.assign(sv.data(), sv.data() + sv.size());
            ns.threshold = thr;
            ns.kept_rank = static_cast<int>(k.cols()) - rank;
            std::ostringstream os;
            os << "support:constraint " << idx;
            record_rank(log, os.str(), ns);
        }
        k = k * svd.matrixV().rightCols(k.cols() - rank);
    }
    if (k.cols() == 0) {
        throw NoDiracStatesError(
            "dirac_support: the constraints have trivial joint kernel; the "
            "constrained theory has no states");
    }
    Eigen::HouseholderQR<CMat> qr(k);
    CMat u = qr.householderQ() * CMat::Identity(n, static_cast<int>(k.cols()));
    if (isometry_out) *isometry_out = u;
    CMat p = u * u.adjoint();
    return 0.5 * (p + p.adjoint().eval());
}

bool is_dirac_state(const DensityState& rho, const ConstraintSystem& cs,
                    double tol) {
    if (rho.dim() != cs.algebra().dim()) {
        throw ShapeError("is_dirac_state: dimension mismatch");
    }
    for (const HermitianElement& c : cs.constraints()) {
        const CMat sq = c.entries() * c.entries();
        const double e = (rho.matrix() * sq).trace().real();
        if (!(e <= tol)) return false;
    }
    return true;
}

SubspaceBasis vanishing_subalgebra(const ConstraintSystem& cs, const CMat& p,
                                   double tol, ReductionLog* log) {
    const LJBAlgebra& alg = cs.algebra();
    const int n = alg.dim();
    const int d = alg.basis_size();
    if (p.rows() != n || p.cols() != n) {
        throw ShapeError("vanishing_subalgebra: projector dimension mismatch");
    }
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-8 ||
        (p * p - p).cwiseAbs().maxCoeff() > 1e-8) {
        throw PreconditionError(
            "vanishing_subalgebra: p is not an orthogonal projector");
    }

    CMat columns(n * n, d);
    for (int i = 0; i < d; ++i) {
        CMat bp = alg.basis()[static_cast<std::size_t>(i)].entries() * p;
        columns.col(i) = Eigen::Map<const CVec>(bp.data(), n * n);
    }
    NullspaceResult ns = complex_column_kernel(columns, std::max(tol, 1e-12));
    record_rank(log, "vanishing", ns);
    SubspaceBasis v = SubspaceBasis::from_spanning(alg, ns.basis, 1e-12);
    if (v.dimension() != ns.kept_rank) {
        throw InternalConsistencyError(
            "vanishing_subalgebra: basis lost rank during orthonormalization");
    }

    PairCheck pc = product_membership(alg, v, v, v, 1500, 9001);
    if (pc.sampled) note_sampled(log, "vanishing closure");
    if (log) {
        log->checks["vanishing_closure_jordan"] = pc.max_jordan;
        log->checks["vanishing_closure_lie"] = pc.max_lie;
    }
    if (std::max(pc.max_jordan, pc.max_lie) > 1e-9) {
        throw InternalConsistencyError(
            "vanishing_subalgebra: computed ideal is not closed under the "
            "products; rerun with tighter tol");
    }
    if (alg.unit_coords() && v.contains(*alg.unit_coords(), 1e-6)) {
        throw InternalConsistencyError(
            "vanishing_subalgebra: unit found inside the vanishing ideal");
    }
    for (std::size_t k = 0; k < cs.constraint_coords().size(); ++k) {
        if (distance_from(v, cs.constraint_coords()[k]) > 1e-8) {
            std::ostringstream os;
            os << "vanishing_subalgebra: constraint " << k
               << " is not inside the computed ideal";
            throw InternalConsistencyError(os.str());
        }
    }
    return v;
}

bool check_dirac_equivalence(const ConstraintSystem& cs, const SubspaceBasis& v,
                             int samples, std::uint64_t seed, double tol) {
    const LJBAlgebra& alg = cs.algebra();
    if (&v.parent() != &alg) {
        throw ShapeError("check_dirac_equivalence: V belongs to another algebra");
    }
    if (samples < 1) {
        throw ValidationError("check_dirac_equivalence: samples must be >= 1");
    }
    CMat u;
    dirac_support(cs, std::min(tol, 1e-10), &u);
    const int n = alg.dim();
    const int k = static_cast<int>(u.cols());

    std::vector<CMat> vreps(static_cast<std::size_t>(v.dimension()));
    for (int i = 0; i < v.dimension(); ++i) vreps[static_cast<std::size_t>(i)] = v.represent(i).entries();

    CounterRng master(seed);
    for (int s = 0; s < samples; ++s) {
        const std::uint64_t sub = master.next_u64();
        DensityState rho =
            (s % 2 == 0)
                ? DensityState::symmetrized(u * random_state(k, sub).matrix() *
                                            u.adjoint())
                : random_state(n, sub);
        const bool dirac = is_dirac_state(rho, cs, tol);
        bool vanishes = true;
        for (const CMat& w : vreps) {
            if (std::abs((rho.matrix() * w).trace().real()) > tol) {
                vanishes = false;
                break;
            }
        }
        if (dirac != vanishes) return false;
    }
    return true;
}

SubspaceBasis normalizer(const LJBAlgebra& alg, const SubspaceBasis& v,
                         double tol, ReductionLog* log) {
    if (&v.parent() != &alg) {
        throw ShapeError("normalizer: V belongs to another algebra");
    }
    const int d = alg.basis_size();
    const int m = v.dimension();
    SubspaceBasis n = SubspaceBasis::full(alg);
    if (m > 0) {
        const RMat& cv = v.coords();
        const bool orthonormal_gram =
            (alg.gram() - RMat::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12;
        RMat stacked(static_cast<long>(d) * m, d);
        for (int i = 0; i < d; ++i) {
            // Column i, all row blocks: coordinates of [b_i, v_j], then the
            // component orthogonal to V (what must vanish for membership).
            RMat bi = alg.lie_structure().slice(i).transpose() * cv; // d x m
            RMat gbi = orthonormal_gram ? bi : RMat(alg.gram() * bi);
            bi -= cv * (cv.transpose() * gbi);
            for (int j = 0; j < m; ++j) {
                stacked.block(static_cast<long>(j) * d, i, d, 1) = bi.col(j);
            }
        }
        NullspaceResult ns = nullspace(stacked, tol);
        record_rank(log, "normalizer", ns);
        n = SubspaceBasis::from_spanning(alg, ns.basis, 1e-12);
        if (n.dimension() != ns.kept_rank) {
            throw InternalConsistencyError(
                "normalizer: basis lost rank during orthonormalization");
        }
    } else if (log) {
        NullspaceResult ns;
        ns.kept_rank = d;
        record_rank(log, "normalizer", ns);
    }

    if (alg.unit_coords() && !n.contains(*alg.unit_coords(), 1e-9)) {
        throw InternalConsistencyError("normalizer: unit not in N");
    }
    if (!n.contains_subspace(v, 1e-9)) {
        throw InternalConsistencyError("normalizer: V not contained in N");
    }
    PairCheck closure = product_membership(alg, n, n, n, 1500, 9002);
    if (closure.sampled) note_sampled(log, "normalizer closure");
    PairCheck ideal = product_membership(alg, v, n, v, 1500, 9003);
    if (ideal.sampled) note_sampled(log, "ideal property");
    if (log) {
        log->checks["normalizer_closure_jordan"] = closure.max_jordan;
        log->checks["normalizer_closure_lie"] = closure.max_lie;
        log->checks["ideal_jordan"] = ideal.max_jordan;
        log->checks["ideal_lie"] = ideal.max_lie;
    }
    if (std::max(closure.max_jordan, closure.max_lie) > 1e-9) {
        throw InternalConsistencyError(
            "normalizer: N is not closed under the products");
    }
    if (std::max(ideal.max_jordan, ideal.max_lie) > 1e-9) {
        throw InternalConsistencyError(
            "normalizer: V is not an ideal of N (products escape V)");
    }
    return n;
}

ReducedAlgebra quotient(const LJBAlgebra& alg, const SubspaceBasis& v,
                        const SubspaceBasis& n, double tol) {
    return quotient_detail(borrow(alg), v, n, tol, nullptr, {}, {});
}

double quotient_norm(const ReducedAlgebra& red, const RVec& a_coords,
                     double tol, bool* approximate_out) {
    const LJBAlgebra& alg = *red.ambient;
    if (a_coords.size() != alg.basis_size()) {
        throw ShapeError("quotient_norm: coordinate length mismatch");
    }
    if (approximate_out) *approximate_out = false;
    const double mem = distance_from(red.normalizer, a_coords);
    if (mem > std::max(tol, 1e-8)) {
        throw DomainError(
            "quotient_norm: coordinates do not lie in the normalizer", mem);
    }
    CMat a = alg.represent(a_coords);
    if (red.vanishing.dimension() == 0) return operator_norm(a);

    const int n = alg.dim();
    const CMat& p = red.support_projector;
    const CMat& u = red.support_isometry;

    // Closed form: when V annihilates the support and a is block-diagonal,
    // the off-support block can be cancelled exactly by a shift inside V,
    // and no shift can change the on-support compression.
    double vp = 0.0;
    for (int j = 0; j < red.vanishing.dimension(); ++j) {
        vp = std::max(
            vp, (red.vanishing.represent(j).entries() * p).cwiseAbs().maxCoeff());
    }
    if (vp <= 1e-8) {
        const CMat q = CMat::Identity(n, n) - p;
        const double off = (p * a * q).cwiseAbs().maxCoeff();
        const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
        if (off <= std::max(tol, 1e-9) * scale) {
            CMat shift = -(q * a * q);
            double span_resid = 0.0;
            RVec shift_coords = alg.coordinates(shift, &span_resid);
            if (span_resid <= 1e-8 * std::max(1.0, shift.norm()) &&
                red.vanishing.contains(shift_coords, 1e-8)) {
                return operator_norm(CMat(u.adjoint() * a * u));
            }
        }
    }

    // Fallback: subgradient descent on the largest absolute eigenvalue over
    // the affine family a + span(V). Nonsmooth and only an upper bound.
    if (approximate_out) *approximate_out = true;
    const int m = red.vanishing.dimension();
    std::vector<CMat> w(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(j)] = red.vanishing.represent(j).entries();

    auto evaluate = [&](const RVec& t, RVec* grad) -> double {
        CMat cur = a;
        for (int j = 0; j < m; ++j) cur += t(j) * w[static_cast<std::size_t>(j)];
        Eigen::SelfAdjointEigenSolver<CMat> es(cur);
        if (es.info() != Eigen::Success) {
            throw NumericalError("quotient_norm: eigensolver failed");
        }
        const RVec& ev = es.eigenvalues();
        const int idx =
            std::abs(ev(0)) >= std::abs(ev(ev.size() - 1)) ? 0 : static_cast<int>(ev.size()) - 1;
        const double lam = ev(idx);
        if (grad) {
            const CVec vec = es.eigenvectors().col(idx);
            const double sgn = lam >= 0.0 ? 1.0 : -1.0;
            grad->resize(m);
            for (int j = 0; j < m; ++j) {
                (*grad)(j) = sgn * (vec.adjoint() * w[static_cast<std::size_t>(j)] * vec)(0, 0).real();
            }
        }
        return std::abs(lam);
    };

    double best = evaluate(RVec::Zero(m), nullptr);
    CounterRng rng(4242);
    const int restarts = 3;
    const int per_budget = 5000 / restarts;
    for (int r = 0; r < restarts; ++r) {
        RVec t = RVec::Zero(m);
        if (r > 0) {
            for (int j = 0; j < m; ++j) t(j) = 0.5 * rng.gaussian();
        }
        RVec grad(m);
        double f0 = evaluate(t, &grad);
        best = std::min(best, f0);
        int stall = 0;
        const double step0 = std::max(1.0, f0);
        for (int k = 0; k < per_budget; ++k) {
            const double f = evaluate(t, &grad);
            if (f < best - 1e-14) {
                best = f;
                stall = 0;
            } else if (++stall > 600) {
                break;
            }
            const double gn = grad.norm();
            if (gn <= 1e-12) break; // flat: this eigenvalue cannot move
            t -= (step0 / (10.0 * std::sqrt(static_cast<double>(k) + 1.0)) / gn) * grad;
        }
    }
    return best;
}

ReducedAlgebra reduce_constraints(const ConstraintSystem& cs, double tol) {
    ReductionLog log;
    CMat u;
    CMat p = dirac_support(cs, tol, &u, &log);
    SubspaceBasis v = vanishing_subalgebra(cs, p, tol, &log);
    SubspaceBasis n = normalizer(cs.algebra(), v, tol, &log);
    ReducedAlgebra red =
        quotient_detail(cs.algebra_ptr(), v, n, tol, &u, cs.constraints(),
                        std::move(log));
    if (red.model) {
        AxiomReport ar = verify_axioms(*red.model, 25, std::max(tol, 1e-9), 97);
        for (const auto& [name, value] : ar.residuals) {
            red.log.checks["quotient_axiom:" + name] = value;
        }
        if (!ar.passed) {
            throw InternalConsistencyError(
                "reduce_constraints: quotient fails axiom verification");
        }
    } else {
        red.log.warnings.push_back(
            "quotient axioms unverified: no compression model");
    }
    return red;
}

ReducedAlgebra reduce_angular_momentum(int l, int l_max) {
    if (l < 0 || l_max < l) {
        throw ValidationError(
            "reduce_angular_momentum: need 0 <= l <= l_max");
    }
    const int n = (l_max + 1) * (l_max + 1);
    auto alg = std::make_shared<const LJBAlgebra>(
        LJBAlgebra::full_hermitian(n, 1.0));
    HermitianElement casimir = casimir_tower(l_max);
    CMat c = casimir.entries() -
             static_cast<double>(l * (l + 1)) * CMat::Identity(n, n);
    ConstraintSystem cs(alg, {HermitianElement(std::move(c))});
    ReducedAlgebra red = reduce_constraints(cs, 1e-10);
    const int k = 2 * l + 1;
    if (red.support_rank != k || red.quotient_dim != k * k) {
        std::ostringstream os;
        os << "reduce_angular_momentum: expected support rank " << k
           << " and quotient dimension " << k * k << ", got "
           << red.support_rank << " and " << red.quotient_dim;
        throw InternalConsistencyError(os.str());
    }
    return red;
}

SubalgebraFunctional reduce_dirac_states(const ConstraintSystem& cs,
                                         const ReducedAlgebra& red,
                                         const DensityState& rho, double tol) {
    const LJBAlgebra& alg = *red.ambient;
    if (cs.algebra().dim() != alg.dim() || rho.dim() != alg.dim()) {
        throw ShapeError("reduce_dirac_states: dimension mismatch");
    }
    if (!is_dirac_state(rho, cs, tol)) {
        throw PreconditionError("reduce_dirac_states: input is not a Dirac state");
    }
    const double gate = std::max(tol, 1e-8);
    for (int j = 0; j < red.vanishing.dimension(); ++j) {
        const double e =
            (rho.matrix() * red.vanishing.represent(j).entries()).trace().real();
        if (std::abs(e) > gate) {
            std::ostringstream os;
            os << "reduce_dirac_states: state does not vanish on the ideal "
                  "(expectation "
               << e << ")";
            throw PreconditionError(os.str());
        }
    }
    RVec values(red.quotient_dim);
    for (int i = 0; i < red.quotient_dim; ++i) {
        values(i) = expectation(rho, red.complement.represent(i));
    }
    if (red.quotient_unit.size() > 0) {
        const double nu = values.dot(red.quotient_unit);
        if (std::abs(nu - 1.0) > gate) {
            throw InternalConsistencyError(
                "reduce_dirac_states: pushforward is not normalized");
        }
    }
    RMat square_form = quotient_square_form(red.quotient_jordan, values);
    Eigen::SelfAdjointEigenSolver<RMat> es(square_form, Eigen::EigenvaluesOnly);
    const double min_eig = red.quotient_dim > 0 ? es.eigenvalues()(0) : 0.0;
    if (min_eig < -std::max(tol, 1e-9) *
                      std::max(1.0, square_form.cwiseAbs().maxCoeff())) {
        throw InternalConsistencyError(
            "reduce_dirac_states: pushforward is negative on a quotient square");
    }
    return SubalgebraFunctional(red.complement, std::move(values));
}

DensityState lift_reduced_state(const ReducedAlgebra& red,
                                const SubalgebraFunctional& func, double tol) {
    const LJBAlgebra& alg = *red.ambient;
    if (&func.subspace().parent() != &alg ||
        func.subspace().dimension() != red.complement.dimension() ||
        (func.subspace().coords() - red.complement.coords())
                .cwiseAbs()
                .maxCoeff() > 1e-10) {
        throw ShapeError(
            "lift_reduced_state: functional does not live on the quotient "
            "complement");
    }
    const RVec& q = func.values();

    RMat square_form = quotient_square_form(red.quotient_jordan, q);
    Eigen::SelfAdjointEigenSolver<RMat> es(square_form, Eigen::EigenvaluesOnly);
    const double min_eig = red.quotient_dim > 0 ? es.eigenvalues()(0) : 0.0;
    if (min_eig < -std::max(tol, 1e-9) *
                      std::max(1.0, square_form.cwiseAbs().maxCoeff())) {
        std::ostringstream os;
        os << "lift_reduced_state: functional is negative on a quotient square "
              "(min eigenvalue "
           << min_eig << ")";
        throw ExtensionInfeasibleError(os.str(), min_eig);
    }

    double nu = 1.0;
    if (red.quotient_unit.size() > 0) {
        nu = q.dot(red.quotient_unit);
        if (!(std::abs(nu - 1.0) <= 1e-6)) {
            throw PreconditionError(
                "lift_reduced_state: functional is not normalized on the "
                "quotient unit");
        }
    }
    RVec qn = q / nu;

    // Pull back to the normalizer: vanish on V, reproduce qn on the
    // complement. evaluate() on complement coordinates does exactly that.
    RMat proj = red.complement.coords().transpose() * alg.gram();
    RVec xi(red.normalizer.dimension());
    for (int j = 0; j < red.normalizer.dimension(); ++j) {
        xi(j) = qn.dot(proj * red.normalizer.vector(j));
    }
    SubalgebraFunctional on_normalizer(red.normalizer, std::move(xi));
    const double extension_tol = std::max(std::min(tol, 1e-8), 1e-10);
    DensityState rho = extend_state(on_normalizer, alg, extension_tol);

    // The lift must be a Dirac state and must push forward to func again.
    if (!red.constraints.empty()) {
        for (const HermitianElement& c : red.constraints) {
            const CMat sq = c.entries() * c.entries();
            const double e = (rho.matrix() * sq).trace().real();
            if (!(e <= std::max(tol, 1e-8))) {
                throw InternalConsistencyError(
                    "lift_reduced_state: extension is not a Dirac state");
            }
        }
    } else {
        const double outside =
            (rho.matrix() * (CMat::Identity(alg.dim(), alg.dim()) -
                             red.support_projector))
                .trace()
                .real();
        if (!(outside <= 1e-6 * alg.dim())) {
            throw InternalConsistencyError(
                "lift_reduced_state: extension carries mass off the support");
        }
    }
    double worst = 0.0;
    for (int i = 0; i < red.quotient_dim; ++i) {
        worst = std::max(worst, std::abs(expectation(
                                    rho, red.complement.represent(i)) -
                                qn(i)));
    }
    if (worst > std::max(tol, 1e-7)) {
        throw InternalConsistencyError(
            "lift_reduced_state: pushforward of the lift deviates from the "
            "input functional");
    }
    return rho;
}

} // namespace ljb
