#include "ljb/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "ljb/bases.hpp"

namespace ljb {

namespace {

constexpr double kTiny = 1e-300;
const std::complex<double> I{0.0, 1.0};

CVec vectorize(const CMat& m) {
    CVec v(m.size());
    int t = 0;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) v(t++) = m(r, c);
    }
    return v;
}

} // namespace

StructureTensor StructureTensor::dense(std::vector<RMat> slices) {
    StructureTensor t;
    t.d_ = static_cast<int>(slices.size());
    for (const RMat& s : slices) {
        if (s.rows() != t.d_ || s.cols() != t.d_) {
            throw ValidationError("StructureTensor: slice shape mismatch");
        }
    }
    t.dense_ = std::move(slices);
    return t;
}

StructureTensor StructureTensor::sparse(
    int d, const std::vector<std::vector<Eigen::Triplet<double>>>& by_slice) {
    if (static_cast<int>(by_slice.size()) != d) {
        throw ValidationError("StructureTensor: slice count mismatch");
    }
    StructureTensor t;
    t.d_ = d;
    t.sparse_mode_ = true;
    t.sparse_.reserve(by_slice.size());
    for (const auto& trips : by_slice) {
        Eigen::SparseMatrix<double> s(d, d);
        s.setFromTriplets(trips.begin(), trips.end());
        s.makeCompressed();
        t.sparse_.push_back(std::move(s));
    }
    return t;
}

double StructureTensor::coeff(int i, int j, int k) const {
    return sparse_mode_ ? sparse_[i].coeff(j, k) : dense_[i](j, k);
}

RMat StructureTensor::slice(int i) const {
    return sparse_mode_ ? RMat(sparse_[i]) : dense_[i];
}

RMat StructureTensor::contract_left(const RVec& x) const {
    RMat m = RMat::Zero(d_, d_);
    if (sparse_mode_) {
        for (int i = 0; i < d_; ++i) {
            const double xi = x(i);
            if (xi == 0.0) continue;
            for (int outer = 0; outer < sparse_[i].outerSize(); ++outer) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(sparse_[i],
                                                                   outer);
                     it; ++it) {
                    m(it.row(), it.col()) += xi * it.value();
                }
            }
        }
    } else {
        for (int i = 0; i < d_; ++i) {
            if (x(i) != 0.0) m.noalias() += x(i) * dense_[i];
        }
    }
    return m;
}

RVec StructureTensor::apply(const RVec& x, const RVec& y) const {
    if (x.size() != d_ || y.size() != d_) {
        throw ShapeError("StructureTensor::apply: coordinate length mismatch");
    }
    return contract_left(x).transpose() * y;
}

namespace {

// Exact symbolic products for the canonical orthonormal Hermitian basis.
// Each basis element has at most two nonzero entries, so every product has
// at most eight, and its canonical coordinates read off the upper triangle.
struct SparseTerm {
    int r, c;
    std::complex<double> v;
};
using TermList = std::vector<SparseTerm>;

int canonical_pair_index(int n, int p, int q) {
    return n + 2 * (p * n - p * (p + 1) / 2 + (q - p - 1));
}

TermList canonical_terms(int n, int idx) {
    const double r2 = 1.0 / std::sqrt(2.0);
    if (idx < n) return {{idx, idx, 1.0}};
    int rem = idx - n;
    const bool antisym = rem % 2 == 1;
    rem /= 2;
    int p = 0;
    while (rem >= n - 1 - p) rem -= n - 1 - p, ++p;
    const int q = p + 1 + rem;
    if (antisym) return {{p, q, I * r2}, {q, p, -I * r2}};
    return {{p, q, r2}, {q, p, r2}};
}

void accumulate_product(const TermList& a, const TermList& b,
                        std::complex<double> scale,
                        std::map<std::pair<int, int>, std::complex<double>>& out) {
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            if (ta.c == tb.r) out[{ta.r, tb.c}] += scale * ta.v * tb.v;
        }
    }
}

std::vector<std::pair<int, double>> canonical_coords(
    int n, const std::map<std::pair<int, int>, std::complex<double>>& entries) {
    const double s2 = std::sqrt(2.0);
    std::vector<std::pair<int, double>> out;
    for (const auto& [rc, v] : entries) {
        const auto [r, c] = rc;
        if (r == c) {
            if (std::abs(v.real()) > 0.0) out.emplace_back(r, v.real());
        } else if (r < c) {
            const double s = s2 * v.real();
            const double a = s2 * v.imag();
            const int base = canonical_pair_index(n, r, c);
            if (s != 0.0) out.emplace_back(base, s);
            if (a != 0.0) out.emplace_back(base + 1, a);
        }
    }
    return out;
}

std::pair<StructureTensor, StructureTensor> canonical_tensors(int n,
                                                              double hbar) {
    const int d = n * n;
    std::vector<TermList> terms(d);
    for (int i = 0; i < d; ++i) terms[i] = canonical_terms(n, i);

    std::vector<std::vector<Eigen::Triplet<double>>> jtrips(d), ltrips(d);
    const std::complex<double> lie_scale = I / (2.0 * hbar);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            std::map<std::pair<int, int>, std::complex<double>> jmap, lmap;
            accumulate_product(terms[i], terms[j], 0.5, jmap);
            accumulate_product(terms[j], terms[i], 0.5, jmap);
            accumulate_product(terms[i], terms[j], lie_scale, lmap);
            accumulate_product(terms[j], terms[i], -lie_scale, lmap);
            for (const auto& [k, v] : canonical_coords(n, jmap)) {
                jtrips[i].emplace_back(j, k, v);
                if (i != j) jtrips[j].emplace_back(i, k, v);
            }
            if (i != j) {
                for (const auto& [k, v] : canonical_coords(n, lmap)) {
                    ltrips[i].emplace_back(j, k, v);
                    ltrips[j].emplace_back(i, k, -v);
                }
            }
        }
    }
    return {StructureTensor::sparse(d, jtrips), StructureTensor::sparse(d, ltrips)};
}

bool matches_canonical_basis(const std::vector<HermitianElement>& basis) {
    if (basis.empty()) return false;
    const int n = basis[0].dim();
    if (static_cast<int>(basis.size()) != n * n) return false;
    const auto canonical = canonical_hermitian_basis(n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].entries() != canonical[k].entries()) return false;
    }
    return true;
}

} // namespace

CMat jordan_mat(const CMat& a, const CMat& b) {
    return 0.5 * (a * b + b * a);
}

CMat lie_mat(const CMat& a, const CMat& b, double hbar) {
    return (I / (2.0 * hbar)) * (a * b - b * a).eval();
}

void LJBAlgebra::finalize_gram() {
    const int d = basis_size();
    basis_stack_.resize(d, n_ * n_);
    for (int k = 0; k < d; ++k) {
        basis_stack_.row(k) = vectorize(basis_[k].entries()).conjugate();
    }
    gram_ = (basis_stack_ * basis_stack_.adjoint()).real();
    gram_ = 0.5 * (gram_ + gram_.transpose().eval());
    Eigen::SelfAdjointEigenSolver<RMat> es(gram_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("gram matrix eigensolver failed");
    }
    const double lo = es.eigenvalues()(0);
    const double hi = es.eigenvalues()(d - 1);
    if (!(lo > hi * 1e-14) || !(lo > 0.0)) {
        std::ostringstream os;
        os << "basis is not real-linearly independent (gram eigenvalues span ["
           << lo << ", " << hi << "])";
        throw ValidationError(os.str());
    }
    gram_condition_ = hi / lo;
    gram_ldlt_.compute(gram_);
}

void LJBAlgebra::detect_unit() {
    RVec t(basis_size());
    for (int k = 0; k < basis_size(); ++k) {
        t(k) = basis_[k].entries().trace().real();
    }
    RVec u = gram_ldlt_.solve(t);
    CMat recon = represent(u);
    const double resid = (recon - CMat::Identity(n_, n_)).norm();
    if (resid <= 1e-12 * std::sqrt(static_cast<double>(n_)) * gram_condition_) {
        unit_coords_ = u;
    } else {
        unit_coords_.reset();
    }
}

LJBAlgebra LJBAlgebra::from_basis(double hbar,
                                  std::vector<HermitianElement> basis,
                                  double tol) {
    if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
    if (basis.empty()) throw ValidationError("basis must be nonempty");
    const int n = basis[0].dim();
    for (const auto& e : basis) {
        if (e.dim() != n) throw ShapeError("basis elements have mixed dims");
    }

    LJBAlgebra alg;
    alg.hbar_ = hbar;
    alg.n_ = n;
    alg.basis_ = std::move(basis);
    alg.finalize_gram();

    const int d = alg.basis_size();
    if (matches_canonical_basis(alg.basis_)) {
        auto [jt, lt] = canonical_tensors(n, hbar);
        alg.jordan_ = std::move(jt);
        alg.lie_ = std::move(lt);
        // The closed forms are exact; certify with a seeded spot check of
        // direct matrix products against tensor reconstruction.
        CounterRng rng(12345);
        double worst = 0.0;
        const int checks = std::min(500, d * d);
        for (int t = 0; t < checks; ++t) {
            const int i = static_cast<int>(rng.below(d));
            const int j = static_cast<int>(rng.below(d));
            for (int which = 0; which < 2; ++which) {
                const StructureTensor& tensor =
                    which == 0 ? alg.jordan_ : alg.lie_;
                CMat direct = which == 0
                                  ? jordan_mat(alg.basis_[i].entries(),
                                               alg.basis_[j].entries())
                                  : lie_mat(alg.basis_[i].entries(),
                                            alg.basis_[j].entries(), hbar);
                CMat recon = CMat::Zero(n, n);
                RMat sl = tensor.slice(i);
                for (int k = 0; k < d; ++k) {
                    const double c = sl(j, k);
                    if (c != 0.0) recon += c * alg.basis_[k].entries();
                }
                worst = std::max(worst, (direct - recon).norm());
            }
        }
        alg.closure_residual_ = worst;
        if (worst > tol) {
            throw InternalConsistencyError(
                "canonical structure-constant spot check failed");
        }
    } else {
        std::vector<RMat> jsl(d, RMat::Zero(d, d)), lsl(d, RMat::Zero(d, d));
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) {
                for (int which = 0; which < 2; ++which) {
                    if (which == 1 && i == j) continue; // [a, a] = 0 exactly
                    CMat m = which == 0
                                 ? jordan_mat(alg.basis_[i].entries(),
                                              alg.basis_[j].entries())
                                 : lie_mat(alg.basis_[i].entries(),
                                           alg.basis_[j].entries(), hbar);
                    double resid = 0.0;
                    RVec x = alg.coordinates(m, &resid);
                    worst = std::max(worst, resid);
                    if (!(resid <= tol * std::max(1.0, m.norm()))) {
                        std::ostringstream os;
                        os << "basis is not closed under the "
                           << (which == 0 ? "jordan product" : "lie bracket")
                           << ": pair (" << i << ", " << j
                           << ") reconstruction residual " << resid;
                        throw ValidationError(os.str());
                    }
                    if (which == 0) {
                        jsl[i].row(j) = x.transpose();
                        if (i != j) jsl[j].row(i) = x.transpose();
                    } else {
                        lsl[i].row(j) = x.transpose();
                        lsl[j].row(i) = -x.transpose();
                    }
                }
            }
        }
        alg.closure_residual_ = worst;
        alg.jordan_ = StructureTensor::dense(std::move(jsl));
        alg.lie_ = StructureTensor::dense(std::move(lsl));
    }
    alg.detect_unit();
    return alg;
}

LJBAlgebra LJBAlgebra::full_hermitian(int n, double hbar) {
    return from_basis(hbar, canonical_hermitian_basis(n));
}

LJBAlgebra LJBAlgebra::unchecked(double hbar,
                                 std::vector<HermitianElement> basis,
                                 StructureTensor jordan, StructureTensor lie) {
    if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
    if (basis.empty()) throw ValidationError("basis must be nonempty");
    LJBAlgebra alg;
    alg.hbar_ = hbar;
    alg.n_ = basis[0].dim();
    alg.basis_ = std::move(basis);
    alg.jordan_ = std::move(jordan);
    alg.lie_ = std::move(lie);
    alg.finalize_gram();
    alg.detect_unit();
    return alg;
}

RVec LJBAlgebra::coordinates(const CMat& m, double* residual_out) const {
    if (m.rows() != n_ || m.cols() != n_) {
        throw ShapeError("coordinates: matrix dimension mismatch");
    }
    RVec t = (basis_stack_ * vectorize(m)).real();
    RVec x = gram_ldlt_.solve(t);
    if (residual_out) *residual_out = (m - represent(x)).norm();
    return x;
}

CMat LJBAlgebra::represent(const RVec& coords) const {
    if (coords.size() != basis_size()) {
        throw ShapeError("represent: coordinate length mismatch");
    }
    CMat m = CMat::Zero(n_, n_);
    for (int k = 0; k < basis_size(); ++k) {
        if (coords(k) != 0.0) m += coords(k) * basis_[k].entries();
    }
    return m;
}

HermitianElement LJBAlgebra::element(const RVec& coords) const {
    return HermitianElement::symmetrized(represent(coords));
}

RVec LJBAlgebra::jordan_coords(const RVec& x, const RVec& y) const {
    return jordan_.apply(x, y);
}

RVec LJBAlgebra::lie_coords(const RVec& x, const RVec& y) const {
    return lie_.apply(x, y);
}

double LJBAlgebra::inner(const RVec& x, const RVec& y) const {
    return x.dot(gram_ * y);
}

double LJBAlgebra::coord_norm(const RVec& x) const {
    return std::sqrt(std::max(0.0, inner(x, x)));
}

HermitianElement jordan_product(const LJBAlgebra& alg, const HermitianElement& a,
                                const HermitianElement& b) {
    if (a.dim() != alg.dim() || b.dim() != alg.dim()) {
        throw ShapeError("jordan_product: dimension mismatch");
    }
    return HermitianElement(jordan_mat(a.entries(), b.entries()));
}

HermitianElement lie_bracket(const LJBAlgebra& alg, const HermitianElement& a,
                             const HermitianElement& b) {
    if (a.dim() != alg.dim() || b.dim() != alg.dim()) {
        throw ShapeError("lie_bracket: dimension mismatch");
    }
    return HermitianElement(lie_mat(a.entries(), b.entries(), alg.hbar()));
}

namespace {

RVec sample_unit_coords(const LJBAlgebra& alg, CounterRng& rng) {
    RVec x(alg.basis_size());
    for (int k = 0; k < x.size(); ++k) x(k) = rng.gaussian();
    const double nrm = alg.coord_norm(x);
    if (nrm > 0.0) x /= nrm;
    return x;
}

} // namespace

AxiomReport verify_axioms(const LJBAlgebra& alg, int sample_count, double tol,
                          std::uint64_t seed) {
    if (sample_count < 1) {
        throw ValidationError("verify_axioms: sample_count must be >= 1");
    }
    AxiomReport report;
    report.samples = sample_count;
    report.tol = tol;
    report.seed = seed;
    report.gram_condition = alg.gram_condition();
    report.closure_residual = alg.closure_residual();

    auto& res = report.residuals;
    const char* keys[] = {"jacobi",
                          "leibniz",
                          "associator",
                          "weak-associativity",
                          "norm-jordan-bound",
                          "norm-lie-bound",
                          "norm-square-identity",
                          "norm-square-monotonicity"};
    for (const char* k : keys) res[k] = 0.0;

    CounterRng rng(seed);
    const double h2 = alg.hbar() * alg.hbar();
    auto gn = [&alg](const RVec& v) { return alg.coord_norm(v); };
    auto rel = [&res](const char* key, double num, double den) {
        res[key] = std::max(res[key], num / std::max(den, kTiny));
    };

    for (int s = 0; s < sample_count; ++s) {
        const RVec x = sample_unit_coords(alg, rng);
        const RVec y = sample_unit_coords(alg, rng);
        const RVec z = sample_unit_coords(alg, rng);

        // Identities evaluated through the structure tensors.
        {
            RVec t1 = alg.lie_coords(alg.lie_coords(x, y), z);
            RVec t2 = alg.lie_coords(alg.lie_coords(z, x), y);
            RVec t3 = alg.lie_coords(alg.lie_coords(y, z), x);
            rel("jacobi", gn(t1 + t2 + t3),
                std::max({gn(t1), gn(t2), gn(t3)}));
        }
        {
            RVec t1 = alg.lie_coords(x, alg.jordan_coords(y, z));
            RVec t2 = alg.jordan_coords(alg.lie_coords(x, y), z);
            RVec t3 = alg.jordan_coords(y, alg.lie_coords(x, z));
            rel("leibniz", gn(t1 - t2 - t3),
                std::max({gn(t1), gn(t2), gn(t3)}));
        }
        {
            RVec t1 = alg.jordan_coords(alg.jordan_coords(x, y), z);
            RVec t2 = alg.jordan_coords(x, alg.jordan_coords(y, z));
            RVec t3 = h2 * alg.lie_coords(y, alg.lie_coords(z, x));
            rel("associator", gn(t1 - t2 - t3),
                std::max({gn(t1), gn(t2), gn(t3)}));
        }
        {
            RVec x2 = alg.jordan_coords(x, x);
            RVec t1 = alg.jordan_coords(alg.jordan_coords(x2, y), x);
            RVec t2 = alg.jordan_coords(x2, alg.jordan_coords(y, x));
            rel("weak-associativity", gn(t1 - t2), std::max(gn(t1), gn(t2)));
        }

        // Norm axioms on the represented matrices.
        const CMat a = alg.represent(x);
        const CMat b = alg.represent(y);
        const double na = operator_norm(a);
        const double nb = operator_norm(b);
        const CMat a2 = jordan_mat(a, a);
        const CMat b2 = jordan_mat(b, b);
        const double na2 = operator_norm(a2);
        rel("norm-jordan-bound",
            std::max(0.0, operator_norm(jordan_mat(a, b)) - na * nb), na * nb);
        rel("norm-lie-bound",
            std::max(0.0,
                     operator_norm(lie_mat(a, b, alg.hbar())) -
                         na * nb / alg.hbar()),
            na * nb / alg.hbar());
        rel("norm-square-identity", std::abs(na2 - na * na), na * na);
        rel("norm-square-monotonicity",
            std::max(0.0, na2 - operator_norm(a2 + b2)), std::max(na2, 1.0));
    }

    report.passed = true;
    for (const auto& [k, v] : res) {
        if (!(v <= tol)) report.passed = false;
    }
    return report;
}

double product_reconstruction_residual(const LJBAlgebra& alg, int sample_count,
                                       std::uint64_t seed) {
    if (sample_count < 1) {
        throw ValidationError(
            "product_reconstruction_residual: sample_count must be >= 1");
    }
    CounterRng rng(CounterRng(seed).fork(2));
    double worst = 0.0;
    const std::complex<double> ih(0.0, alg.hbar());
    for (int s = 0; s < sample_count; ++s) {
        const CMat a = alg.represent(sample_unit_coords(alg, rng));
        const CMat b = alg.represent(sample_unit_coords(alg, rng));
        const CMat recon =
            jordan_mat(a, b) - ih * lie_mat(a, b, alg.hbar());
        const double dev = (recon - a * b).cwiseAbs().maxCoeff();
        worst = std::max(
            worst, dev / std::max(operator_norm(a) * operator_norm(b), kTiny));
    }
    return worst;
}

bool check_resolvent_inverse(const LJBAlgebra& alg, const HermitianElement& a1,
                          const HermitianElement& a2, double lam, double z,
                          double tol, double* residual_out) {
    if (a1.dim() != alg.dim() || a2.dim() != alg.dim()) {
        throw ShapeError("check_resolvent_inverse: dimension mismatch");
    }
    const int n = alg.dim();
    const CMat& m1 = a1.entries();
    const CMat& m2 = a2.entries();
    const CMat sq1 = jordan_mat(m1, m1);
    const CMat sq2 = jordan_mat(m2, m2);
    const CMat br = lie_mat(m1, m2, alg.hbar());
    const CMat sp = sq1 + sq2 + lam * br;
    const CMat sm = sq1 + sq2 - lam * br;

    const double scale =
        std::max({1.0, std::abs(z), operator_norm(sp), operator_norm(sm)});
    if (std::abs(z) <= 1e-12 * scale) {
        throw PreconditionError("check_resolvent_inverse: z must be nonzero");
    }
    double dist = std::numeric_limits<double>::infinity();
    for (double ev : spectrum(HermitianElement::symmetrized(sp))) {
        dist = std::min(dist, std::abs(z - ev));
    }
    for (double ev : spectrum(HermitianElement::symmetrized(sm))) {
        dist = std::min(dist, std::abs(z - ev));
    }
    if (dist <= 1e-9 * scale) {
        std::ostringstream os;
        os << "check_resolvent_inverse: z = " << z
           << " lies in (or within " << 1e-9 * scale
           << " of) a spectrum involved in the identity";
        throw PreconditionError(os.str());
    }

    const CMat id = CMat::Identity(n, n);
    const CMat b = (sp - z * id).partialPivLu().solve(id);
    const CMat rhs =
        (2.0 * jordan_mat(m1, jordan_mat(b, m1)) - jordan_mat(sq1, b) +
         2.0 * jordan_mat(m2, jordan_mat(b, m2)) - jordan_mat(sq2, b) -
         lam * lie_mat(m1, jordan_mat(b, m2), alg.hbar()) -
         lam * jordan_mat(m1, lie_mat(b, m2, alg.hbar())) - id) /
        z;
    const CMat prod = rhs * (sm - z * id);
    const double resid = (prod - id).cwiseAbs().maxCoeff() /
                         std::max(1.0, prod.cwiseAbs().maxCoeff());
    if (residual_out) *residual_out = resid;
    return resid <= tol;
}

HermitianElement positivity_combination(const LJBAlgebra& alg,
                                        const HermitianElement& a1,
                                        const HermitianElement& a2,
                                        double lam) {
    if (a1.dim() != alg.dim() || a2.dim() != alg.dim()) {
        throw ShapeError("positivity_combination: dimension mismatch");
    }
    const CMat x = jordan_mat(a1.entries(), a1.entries()) +
                   jordan_mat(a2.entries(), a2.entries()) -
                   lam * lie_mat(a1.entries(), a2.entries(), alg.hbar());
    HermitianElement result = HermitianElement::symmetrized(x);
    if (std::abs(lam) > 2.0 * alg.hbar() * (1.0 + 1e-12)) {
        const double min_eig = spectrum(result).front();
        std::ostringstream os;
        os << "positivity_combination: |lambda| = " << std::abs(lam)
           << " exceeds 2*hbar = " << 2.0 * alg.hbar()
           << "; positivity is not guaranteed there (computed min eigenvalue "
           << min_eig << ")";
        throw DomainError(os.str(), min_eig);
    }
    return result;
}

LJBAlgebra build_algebra(double hbar,
                         const std::vector<HermitianElement>& generators,
                         double tol) {
    if (!(hbar > 0.0)) throw ValidationError("build_algebra: hbar must be positive");
    if (generators.empty()) {
        throw ValidationError("build_algebra: generator list is empty");
    }
    const int n = generators[0].dim();
    for (const auto& g : generators) {
        if (g.dim() != n) {
            throw ShapeError("build_algebra: generators have mixed dims");
        }
    }

    // An already independent and closed list passes through unchanged (this
    // also preserves exact canonical bases for the fast tensor path).
    try {
        return LJBAlgebra::from_basis(hbar, generators, tol);
    } catch (const ValidationError&) {
    }

    // Modified Gram-Schmidt working basis; a second projection pass keeps
    // orthogonality at roundoff level.
    std::vector<CMat> w;
    auto try_insert = [&](const CMat& candidate) {
        CMat v = candidate;
        const double orig = std::max(1.0, v.norm());
        for (int pass = 0; pass < 2; ++pass) {
            for (const CMat& u : w) v -= hs_inner(u, v) * u;
        }
        const double nrm = v.norm();
        if (nrm <= std::max(tol, 1e-12) * orig) return false;
        w.push_back(v / nrm);
        return true;
    };

    for (const auto& g : generators) try_insert(g.entries());
    if (w.empty()) {
        throw ValidationError("build_algebra: generators span only {0}");
    }

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = w.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i; j < count; ++j) {
                if (try_insert(jordan_mat(w[i], w[j]))) grew = true;
                if (i != j && try_insert(lie_mat(w[i], w[j], hbar))) grew = true;
            }
        }
    }

    std::vector<HermitianElement> basis;
    basis.reserve(w.size());
    for (const CMat& m : w) basis.push_back(HermitianElement::symmetrized(m));
    return LJBAlgebra::from_basis(hbar, std::move(basis), tol);
}

} // namespace ljb
