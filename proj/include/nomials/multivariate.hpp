#pragma once

// Multiset-indexed coefficients and the distributions they normalise:
// hypergeometric, Polya, the N-nomial distribution on draws, and the
// Boltzmann distribution on tuples of configurations.

#include "nomials/dist.hpp"
#include "nomials/multiset.hpp"
#include "nomials/numbers.hpp"

#include <cstdint>
#include <vector>

namespace nomials {

/// prod_x binom(psi(x), phi(x)); requires phi <= psi.
Natural mult_binom(const Multiset& psi, const Multiset& phi);

/// prod_x multichoose(psi(x), phi(x)); requires psi(x) >= 1 for every x.
Natural mult_multichoose(const Multiset& psi, const Multiset& phi);

/// Draw-and-remove: weights mult_binom(psi, phi) / binom(L, K) over
/// phi <=_K psi. Requires K <= ||psi||.
Dist<Multiset> hypergeometric(Count draws, const Multiset& urn);

/// Draw-and-duplicate: weights mult_multichoose(psi, phi) / multichoose(L, K)
/// over M[K](X). Requires psi(x) >= 1 for every x.
Dist<Multiset> polya(Count draws, const Multiset& urn);

/// prod_x C_N(psi(x), phi(x)); requires phi <= (N-1) psi.
Natural nomial_coeff_multisets(std::uint64_t levels, const Multiset& psi, const Multiset& phi);

/// Weights C_N(psi, phi) / C_N(L, i) over phi <=_i (N-1) psi.
/// Requires 0 <= i <= (N-1) ||psi||.
Dist<Multiset> nomial_distribution(std::uint64_t levels, Count total, const Multiset& urn);
/// The pinned form with N = |X|.
Dist<Multiset> nomial_distribution(Count total, const Multiset& urn);

using MultisetTuple = std::vector<Multiset>;
using LevelTuple = std::vector<Level>;

/// Over tuples (phi_1..phi_L) with phi_j in M[psi(x_j)](N) and
/// sum_j som(phi_j) = i: weight prod_j (phi_j) / C_N(||psi||, i).
/// One component per ground label of `sizes`, in ground order.
Dist<MultisetTuple> boltzmann_multi(std::uint64_t levels, const Multiset& sizes, Count total);

/// Pushforward of boltzmann_multi along the product of per-component flrn.
/// Requires sizes(x) >= 1 for every x.
Dist<LevelTuple> boltzmann_multi_numbers(std::uint64_t levels, const Multiset& sizes, Count total);

}  // namespace nomials
