#ifndef PNB_EXTERIOR_HPP
#define PNB_EXTERIOR_HPP

#include "pnb/linalg.hpp"
#include "pnb/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pnb {

/// Exact element of Lambda^p(k^dimV) in the basis of strictly increasing
/// index tuples, stored as bitmasks. Dual-side elements (Lambda^p V^dual)
/// carry the covariant tag; the pairing <e*_I, e_J> = delta_IJ identifies
/// the two bases.
class Multivector {
  public:
    Multivector() = default;
    Multivector(int dimV, int grade, bool covariant = false);

    int dim_v() const { return dim_v_; }
    int grade() const { return grade_; }
    bool covariant() const { return covariant_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<std::uint32_t, Rat>& coeffs() const { return coeffs_; }

    /// Sets the coefficient of the basis element with the given index set;
    /// zero coefficients are dropped (canonical form).
    void set(std::uint32_t mask, const Rat& value);
    Rat coeff(std::uint32_t mask) const;

    static Multivector basis(int dimV, std::uint32_t mask, bool covariant = false);
    static Multivector scalar_unit(int dimV, bool covariant = false); // grade 0, value 1

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator-() const;
    Multivector operator*(const Rat& s) const;
    bool operator==(const Multivector& o) const;

    /// Coefficients in the lexicographic tuple order of lambda_basis().
    std::vector<Rat> dense(const std::vector<std::uint32_t>& basis_masks) const;

    std::string to_string() const;

  private:
    int dim_v_ = 0;
    int grade_ = 0;
    bool covariant_ = false;
    std::map<std::uint32_t, Rat> coeffs_;
};

/// Strictly increasing p-tuples out of {0..dimV-1} as bitmasks, in
/// lexicographic order of the tuples.
std::vector<std::uint32_t> lambda_basis(int dimV, int p);

/// Sign of merging the increasing tuples I and J into I followed by J
/// (0 if they intersect).
int merge_sign(std::uint32_t maskI, std::uint32_t maskJ);

std::string mask_to_string(std::uint32_t mask, bool covariant);

Multivector wedge(const Multivector& a, const Multivector& b);

/// <alpha, eta> for alpha covariant and eta contravariant of equal grade.
Rat pairing(const Multivector& alpha, const Multivector& eta);

/// alpha . omega, defined by <alpha . omega, eta> = <alpha, omega ^ eta>.
Multivector contract(const Multivector& alpha, const Multivector& omega);

/// Parses "e0^e1 + 2 e2^e3 - 1/2 e0^e4" (homogeneous; "1" alone is the
/// grade-0 unit). Whitespace insensitive.
Multivector parse_multivector(const std::string& text, int dimV, bool covariant = false);

struct SkewNormalForm {
    int rank = 0;                   // even
    std::vector<Multivector> basis; // v_0..v_{dimV-1}, omega = sum v_{2i} ^ v_{2i+1}, i < rank/2
};

long skew_rank(const Multivector& omega);
SkewNormalForm skew_normal_form(const Multivector& omega);

/// A morphism (+)_i Omega^{p_i}(t_i) -> (+)_j Omega^{q_j}(t_j) whose (j,i)
/// component is contraction with omega_{ij} in Lambda^{p_i-q_j}V. Missing
/// entries are the zero map. The section-level identification below needs
/// the natural Koszul twists, so t_i = p_i and t_j = q_j are required.
struct ContractionMorphismSpec {
    int dimV = 0;
    std::vector<std::pair<int, int>> source_terms; // (p_i, twist)
    std::vector<std::pair<int, int>> target_terms; // (q_j, twist)
    std::map<std::pair<int, int>, Multivector> entries; // key (j, i)
};

struct H0Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Rat>> matrix; // rows = target basis, cols = source basis
    long rank = 0;
    std::vector<std::string> row_labels, col_labels;
};

/// The matrix of H^0(phi(1)) : (+) Lambda^{p_i+1}V^dual -> (+) Lambda^{q_j+1}V^dual
/// in the standard bases, blockwise (-1)^{p_i-q_j} (* . omega_{ij}).
H0Matrix h0_matrix(const ContractionMorphismSpec& spec);

/// Canonical specs used by the epimorphism criteria below.
ContractionMorphismSpec make_horrocks_spec(const Multivector& omega);                         // Om^3(3) -> Om^1(1), dimV = 6
ContractionMorphismSpec make_sasakura_spec(const Multivector& omega, const Multivector& v);   // Om^3(3)+Om^2(2) -> Om^1(1), dimV = 5

/// Om^3(3) -> Om^1(1) on P^5 is an epimorphism iff skew rank 6.
bool horrocks_epi_check(const Multivector& omega);

/// Ker of the contraction epimorphism Om^2(2)+Om^1(1) -> O on P^4, twisted
/// by 1, is globally generated iff omega has skew rank 4 and v lies outside
/// the support of omega.
bool sasakura_gg_check(const Multivector& omega, const Multivector& v);

/// Cor of the Horrocks criterion: for an epimorphism Om^2(2) -> O on P^5
/// (skew rank >= 4 required, else error), Ker phi(1) is globally generated
/// iff skew rank 6.
bool horrocks_ker_gg_check(const Multivector& omega);

/// A decomposable element of Lambda^2 V, possibly with coordinates in a
/// quadratic extension Q[th]/(minpoly): witness = primary + th * extension.
struct DecomposableWitness {
    Multivector primary;
    std::optional<Multivector> extension; // absent for rational witnesses
    std::vector<Rat> minpoly;             // monic, constant term first; empty for rational witnesses
};

enum class DecompStatus { None, Found, Undecided };

struct DecompResult {
    DecompStatus status = DecompStatus::None;
    std::optional<DecomposableWitness> witness;
};

/// Checks w ^ w = 0 exactly (in Q[th]/(minpoly) when the witness is
/// algebraic).
bool verify_decomposable(const DecomposableWitness& w);

/// Searches the span of the given grade-2 multivectors for a nonzero
/// decomposable element over the algebraic closure. Exact decision for
/// span dimension <= 2 (pencil method); for higher dimensions a heuristic
/// that returns Found-with-witness or Undecided, never a false None.
DecompResult decomposable_in_subspace(const std::vector<Multivector>& span);

enum class GgStatus { Yes, No, Undecided };

struct GgResult {
    GgStatus status = GgStatus::Undecided;
    std::optional<DecomposableWitness> witness; // present when status == No
    int perp_dim = 0;
};

/// W generates Omega^1(2) globally iff W-perp in Lambda^2 V contains no
/// decomposable element. Exact when dim W-perp <= 2.
GgResult gg_omega12_check(const std::vector<Multivector>& w_covariant);

} // namespace pnb

#endif
