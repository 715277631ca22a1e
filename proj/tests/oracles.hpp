#ifndef PNB_TEST_ORACLES_HPP
#define PNB_TEST_ORACLES_HPP

#include "pnb/exterior.hpp"
#include "pnb/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

// Independent oracles for the test suites. Everything here recomputes
// expected values along a different route than the library under test.
namespace pnb::oracle {

/// Coefficients of the inverse of a truncated power series with t[0] = 1,
/// by schoolbook long division of 1 by t.
std::vector<Int> series_inverse(const std::vector<Int>& t);

/// h^0..h^n of Omega^p(l) on P^n computed from the Koszul strand
/// (alternating sums of section-space dimensions) and the Euler-sequence
/// long exact sequences; no use of Bott's closed formula.
std::vector<Int> koszul_euler_h(int n, int p, long l);

/// h^0(Omega^p(l)) as the kernel dimension of the explicit Koszul
/// differential Lambda^p V^dual x S_{l-p} -> Lambda^{p-1} V^dual x S_{l-p+1}
/// over Q. Intended for small instances only.
long koszul_kernel_h0_direct(int n, int p, long l);

/// Skew rank of a 2-vector as 2 * max{k : omega^k != 0}, via wedge powers.
long skew_rank_by_wedge_powers(const Multivector& omega);

/// Contraction computed directly from the defining adjunction: every
/// coefficient of the result is obtained as a pairing against omega ^ e_J.
Multivector contract_by_adjunction(const Multivector& alpha, const Multivector& omega);

/// Factors a 2-vector with omega ^ omega = 0 as v ^ w (scaled), verifying
/// the reconstruction; nullopt if omega ^ omega != 0 or omega = 0.
std::optional<std::pair<Multivector, Multivector>> factor_decomposable(const Multivector& omega);

/// Brute-force spectrum enumeration over all weakly decreasing tuples in
/// [-2, 1]^m with the stated sum, connectedness rules and exclusion list.
std::vector<std::vector<int>> spectra_brute_force(int m, long sum, bool k1_nonpositive);

/// Random multivector with small integer coefficients (deterministic given
/// the generator state).
Multivector random_multivector(int dimV, int grade, std::mt19937& rng, bool covariant = false);

/// Random 2-vector of exact skew rank 2k.
Multivector random_two_vector(int dimV, int k, std::mt19937& rng);

} // namespace pnb::oracle

#endif
