#pragma once

#include <vector>

#include "ljb/hermitian.hpp"
#include "ljb/rng.hpp"

namespace ljb {

// 2x2 Pauli matrices and the Pauli basis {1, sx, sy, sz} of Herm(2).
HermitianElement pauli_x();
HermitianElement pauli_y();
HermitianElement pauli_z();
std::vector<HermitianElement> pauli_basis();

// {1, l1..l8}: identity plus the eight Gell-Mann matrices, a basis of
// Herm(3).
std::vector<HermitianElement> gell_mann_basis();

// Canonical Hilbert-Schmidt-orthonormal basis of Herm(n), ordered
// E_00, .., E_(n-1)(n-1), then for each p < q the symmetric element
// (E_pq + E_qp)/sqrt(2) followed by the antisymmetric i(E_pq - E_qp)/sqrt(2).
std::vector<HermitianElement> canonical_hermitian_basis(int n);

// Spin-j angular momentum triple (Jx, Jy, Jz) on the (2j+1)-dimensional
// representation, built from ladder operators; two_j = 2j must be >= 0.
// Uses hbar = 1 units; Casimir Jx^2+Jy^2+Jz^2 = j(j+1).
std::vector<HermitianElement> spin_operators(int two_j);

// Block-diagonal total angular momentum squared on the direct sum of the
// sectors j = 0..l_max: acts as j(j+1) on the (2j+1)-dimensional sector j.
// Ambient dimension is (l_max+1)^2.
HermitianElement casimir_tower(int l_max);

// Random Hermitian matrix with independent Gaussian entries (GUE-like,
// unnormalized); deterministic in the generator state.
HermitianElement random_hermitian(int dim, CounterRng& rng);

} // namespace ljb
