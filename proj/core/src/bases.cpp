#include "ljb/bases.hpp"

#include <cmath>

namespace ljb {

namespace {
const std::complex<double> I{0.0, 1.0};
}

HermitianElement pauli_x() {
    CMat m(2, 2);
    m << 0, 1, 1, 0;
    return HermitianElement(m);
}

HermitianElement pauli_y() {
    CMat m(2, 2);
    m << 0, -I, I, 0;
    return HermitianElement(m);
}

HermitianElement pauli_z() {
    CMat m(2, 2);
    m << 1, 0, 0, -1;
    return HermitianElement(m);
}

std::vector<HermitianElement> pauli_basis() {
    return {HermitianElement::identity(2), pauli_x(), pauli_y(), pauli_z()};
}

std::vector<HermitianElement> gell_mann_basis() {
    std::vector<HermitianElement> out;
    out.push_back(HermitianElement::identity(3));
    auto push = [&out](std::initializer_list<std::complex<double>> v) {
        CMat m(3, 3);
        int k = 0;
        for (auto z : v) m(k / 3, k % 3) = z, ++k;
        out.push_back(HermitianElement(m));
    };
    push({0, 1, 0, 1, 0, 0, 0, 0, 0});
    push({0, -I, 0, I, 0, 0, 0, 0, 0});
    push({1, 0, 0, 0, -1, 0, 0, 0, 0});
    push({0, 0, 1, 0, 0, 0, 1, 0, 0});
    push({0, 0, -I, 0, 0, 0, I, 0, 0});
    push({0, 0, 0, 0, 0, 1, 0, 1, 0});
    push({0, 0, 0, 0, 0, -I, 0, I, 0});
    const double s = 1.0 / std::sqrt(3.0);
    push({s, 0, 0, 0, s, 0, 0, 0, -2.0 * s});
    return out;
}

std::vector<HermitianElement> canonical_hermitian_basis(int n) {
    if (n < 1) throw ValidationError("canonical_hermitian_basis: n must be >= 1");
    std::vector<HermitianElement> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p) {
        CMat m = CMat::Zero(n, n);
        m(p, p) = 1.0;
        out.push_back(HermitianElement(std::move(m)));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            CMat s = CMat::Zero(n, n);
            s(p, q) = r;
            s(q, p) = r;
            out.push_back(HermitianElement(std::move(s)));
            CMat a = CMat::Zero(n, n);
            a(p, q) = I * r;
            a(q, p) = -I * r;
            out.push_back(HermitianElement(std::move(a)));
        }
    }
    return out;
}

std::vector<HermitianElement> spin_operators(int two_j) {
    if (two_j < 0) throw ValidationError("spin_operators: two_j must be >= 0");
    const int n = two_j + 1;
    const double j = 0.5 * two_j;
    // Ladder operator J+ in the basis |j, m> with m = j, j-1, .., -j.
    CMat jp = CMat::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double m = j - k;
        jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    CMat jm = jp.adjoint();
    CMat jx = 0.5 * (jp + jm);
    CMat jy = -0.5 * I * (jp - jm);
    CMat jz = CMat::Zero(n, n);
    for (int k = 0; k < n; ++k) jz(k, k) = j - k;
    return {HermitianElement::symmetrized(jx), HermitianElement::symmetrized(jy),
            HermitianElement(jz)};
}

HermitianElement casimir_tower(int l_max) {
    if (l_max < 0) throw ValidationError("casimir_tower: l_max must be >= 0");
    const int n = (l_max + 1) * (l_max + 1);
    CMat m = CMat::Zero(n, n);
    int off = 0;
    for (int j = 0; j <= l_max; ++j) {
        const int size = 2 * j + 1;
        for (int k = 0; k < size; ++k) {
            m(off + k, off + k) = static_cast<double>(j) * (j + 1);
        }
        off += size;
    }
    return HermitianElement(std::move(m));
}

HermitianElement random_hermitian(int dim, CounterRng& rng) {
    if (dim < 1) throw ValidationError("random_hermitian: dim must be >= 1");
    CMat g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = std::complex<double>(rng.gaussian(), rng.gaussian());
        }
    }
    return HermitianElement::symmetrized(g);
}

} // namespace ljb
