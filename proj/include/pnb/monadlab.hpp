#ifndef PNB_MONADLAB_HPP
#define PNB_MONADLAB_HPP

#include "pnb/chowring.hpp"
#include "pnb/cohomtab.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pnb {

/// Symbolic bundle expression: line bundles, twisted differentials Om^p(t),
/// T(-1), duals, twists, direct sums, and P(O(b)). Value semantics over a
/// shared immutable tree.
class BundleExpr {
  public:
    enum class Kind { Line, Omega, TangentTwist, Dual, Twist, Sum, PofLine };

    static BundleExpr line(long a);
    static BundleExpr omega(int p, long t);
    static BundleExpr tangent_twist();
    static BundleExpr dual(BundleExpr e);
    static BundleExpr twist(BundleExpr e, long t);
    static BundleExpr sum(std::vector<BundleExpr> parts);
    static BundleExpr p_of_line(long b);

    Kind kind() const;
    long line_degree() const;   // Line
    int omega_p() const;        // Omega
    long omega_t() const;       // Omega
    long twist_by() const;      // Twist
    long p_of_line_b() const;   // PofLine
    BundleExpr child() const;                     // Dual, Twist
    std::vector<BundleExpr> children() const;     // Sum

    std::string to_string() const;

  private:
    struct Node;
    explicit BundleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar: `O(a)`, `Om(p,t)`, `T(-1)`, `P(O(b))`, `dual(...)`,
/// `twist(...,t)`, `+`, with optional multiplicities like `4O(1)`.
BundleExpr parse_bundle_expr(const std::string& text);

Int expr_rank(const BundleExpr& e, int n);
ChernVector expr_chern(const BundleExpr& e, int n);

/// h^0..h^n of E(l); always fully determined for bundle expressions.
std::vector<Int> expr_h(const BundleExpr& e, int n, long l);

struct ExprData {
    Int rank;
    ChernVector chern;
    CohomologyTable table;
};

ExprData expr_data(const BundleExpr& e, int n, long l_min, long l_max);

/// Bounded complex of bundle expressions with the target bundle read off a
/// marked cohomology position:
///   LeftResolution : 0 -> t_0 -> ... -> t_{k-1} -> E -> 0
///   ShortExactSub  : 0 -> E -> t_0 -> ... -> t_{k-1} -> 0
///   Monad          : 0 -> t_0 -> t_1 -> t_2 -> 0, E the middle cohomology
struct ComplexExpr {
    enum class Kind { LeftResolution, ShortExactSub, Monad };
    Kind kind = Kind::LeftResolution;
    std::vector<BundleExpr> terms;
};

/// Rank and Chern class of the cohomology bundle (alternating Whitney sum);
/// throws if the alternating rank is negative.
std::pair<Int, ChernVector> complex_cohomology_bundle(const ComplexExpr& cx, int n);

/// Cohomology of the cohomology bundle over a twist window, derived from
/// the long exact sequences of the display. Entries whose connecting maps
/// are not forced stay undetermined.
CohomologyTable monad_cohomology_table(const ComplexExpr& cx, int n, long l_min, long l_max);

struct CatalogEntry {
    std::string name;
    int n = 0;
    Int rank;
    ChernVector chern;
    std::string partner;        // name of the P-functor partner, if catalogued
    bool rr_rank_applies = true; // rank formula with h^2(E^dual) = 0 holds
    std::string display;        // human-readable construction

    // construction data: exactly one of expr / complex_display is set
    std::optional<BundleExpr> expr;
    std::optional<ComplexExpr> complex_display;
    long complex_twist = 0;
    std::optional<BundleExpr> extra_summand;
};

/// The indecomposable globally generated bundles with c_1 = 5 on P^n known
/// to the classification, n in {4, 5, 6}, with exact invariants computed
/// from their defining expressions/displays.
std::vector<CatalogEntry> named_bundle_catalog(int n);

/// h^q(E(l)) for a catalog entry, recomputed from its construction;
/// nullopt when the display does not force the value.
std::optional<Int> catalog_h(const CatalogEntry& e, int q, long l);

} // namespace pnb

#endif
