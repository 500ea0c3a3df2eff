// SPDX-License-Identifier: MIT
//
// Explicit divisor computations on weak del Pezzo surfaces: fundamental-cycle
// type Q-divisors with prescribed pairings, their closed forms for chains and
// the D_5 / E_6 forks, self-intersection bounds, the special divisors D and
// their decompositions into lines, the Corti inequality systems, pencil
// degeneration and the boundary cycle witnesses.

#ifndef DVDP_DIVISOR_CALCULUS_HPP
#define DVDP_DIVISOR_CALCULUS_HPP

#include "dvdp/galois_model.hpp"
#include "dvdp/singularity_config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dvdp {

// ---------------------------------------------------------------------------
// Prescribed pairings

struct PrescribedPairing {
    SingularPointData point;
    /// Values -(M . M_j) indexed by the point's components in canonical order.
    QVector targets;
};

/// A Q-divisor supported on the components of one singular point.
struct ComponentDivisor {
    /// Coefficients b_j in canonical component order.
    QVector coefficients;
    /// The same divisor in lattice coordinates (empty when no profile is involved).
    QDivisor divisor;
    Rational self_pairing;
};

/// Solves pair(-M, M_j) = targets_j against the Gram matrix of the point's
/// actual root classes. Throws PreconditionError on a length mismatch.
ComponentDivisor solve_prescribed_pairings(const SingularityProfile& profile, const PrescribedPairing& req);

/// Same solve against the negated Cartan matrix of an abstract ADE type.
ComponentDivisor solve_cartan(const AdeType& type, const QVector& targets);

/// Self-pairing of sum b_j M_j for an abstract ADE type (direct Gram evaluation).
Rational cartan_self_pairing(const AdeType& type, const QVector& b);

/// One closed-form row: targets, coefficients and self-pairing.
struct ClosedForm {
    std::string label;
    AdeType type;
    QVector targets;
    QVector coefficients;
    Rational self_pairing;
};

/// Chain with -(M . M_j) = delta_{j0,j}: the formulaic coefficients and
/// self-pairing -(n-j0+1) j0 / (n+1). Requires 1 <= j0 <= n <= 8.
ClosedForm closed_form_chain(int n, int j0);

/// Chain with -(M . M_j) = delta_{j0,j} + delta_{n-j0+1,j}, 1 <= j0 <= ceil(n/2);
/// for the middle vertex of an odd chain the target is 2 delta. Self-pairing -2 j0.
ClosedForm closed_form_chain_symmetric(int n, int j0);

/// The five D_5 and six E_6 closed forms in canonical component order.
std::vector<ClosedForm> fork_closed_forms(Family family);

// ---------------------------------------------------------------------------
// Self-intersection bounds for integral coefficients

/// Completed-square expression of (M)^2 for A_n, D_5 and E_6.
Rational completed_square_self_pairing(const AdeType& type, const std::vector<std::int64_t>& b);

/// Checks one case (1..6) of the integral self-intersection bounds:
///   1: (M)^2 is a non-positive even integer (any A_n, D_5, E_6);
///   2: A_n, all b_j >= 1 gives (M)^2 <= -2, equality iff all b_j = 1;
///   3: A_n (n >= 3), ends >= 1, interior >= 2 gives <= -4, equality at (1,2,..,2,1);
///   4: A_n (n >= 5), ends >= 1, next >= 2, interior >= 3 gives <= -6, equality at (1,2,3,..,3,2,1);
///   5: D_5 with (2,2,3,2,1) lower bounds gives <= -4, equality at the bound;
///   6: E_6 with (2,2,3,3,4,2) lower bounds gives <= -4, equality at the bound.
/// The completed-square identity is checked on every call. Throws
/// PreconditionError when the hypothesis of the case is not met.
bool ade1_check(const AdeType& type, const std::vector<std::int64_t>& b, int case_no);

/// Lower bounds and equality vector of a bound case, or nothing when the case
/// does not apply to the type.
struct BoundCase {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> equality;
    std::int64_t bound = 0;
};
std::optional<BoundCase> bound_case(const AdeType& type, int case_no);

struct SweepReport {
    std::uint64_t checked = 0;
    std::optional<std::vector<std::int64_t>> counterexample;
};

/// Exhaustive comparison of the completed-square formula with the Gram
/// evaluation for every integer vector with entries in [lo, hi].
SweepReport completed_square_sweep(const AdeType& type, std::int64_t lo, std::int64_t hi);

/// Exhaustive check of a bound case over vectors between its lower bounds and `hi`.
SweepReport bound_case_sweep(const AdeType& type, int case_no, std::int64_t hi);

// ---------------------------------------------------------------------------
// Lines of the form -K - M on degree-1 surfaces

enum class ForkKind { Chain, ForkD5, ForkE6 };

/// E = -K - M for M = sum M_j (chain), M_1+M_2+2M_3+2M_4+M_5 (D_5) or
/// M_1+M_2+2M_3+2M_4+3M_5+2M_6 (E_6). E meets the point in M_1 + M_n, M_4
/// and M_6 respectively. Checks that E is a line meeting every
/// profile root non-negatively and, when `surface` is given, that it is fixed
/// by the Galois action. Throws PreconditionError or ConfigError.
DivisorClass anticanonical_line(const SingularityProfile& profile, const std::string& point_id, ForkKind kind,
                                const SurfaceOverK* surface = nullptr);

// ---------------------------------------------------------------------------
// Special divisors D

enum class DivDCase { a, b, c, d, e, f, g };

char case_letter(DivDCase c);
DivDCase parse_divd_case(char letter);

struct DivDResult {
    DivDCase which = DivDCase::a;
    DivisorClass divisor;
    /// Chains (points) in assignment order, roots in canonical order.
    std::vector<std::vector<DivisorClass>> chains;
    std::vector<int> chain_lengths;
    /// (D . M_{i,j}) per chain.
    std::vector<std::vector<std::int64_t>> pairings;
};

/// Builds the divisor of a row from the listed points (point ids, chain i = 1..r).
/// Verifies D^2 = -2, D.(-K) = 2 and the pairing pattern of the row, throwing
/// PreconditionError on a constraint violation and ConfigError when a
/// verification fails.
DivDResult table_divD(DivDCase which, const SingularityProfile& profile, const std::vector<std::string>& chain_ids);

/// Expected pairing pattern (D . M_{i,j}) of a row for the given chain lengths.
std::vector<std::vector<std::int64_t>> divd_expected_pattern(DivDCase which, const std::vector<int>& chain_lengths);

enum class SpecialCondition { A, B };

struct Decomposition {
    SpecialCondition condition = SpecialCondition::A;
    std::vector<DivisorClass> parts;  // E1, E2 (A) or E (B)
    /// Coefficients of D - (sum of parts) on the chain roots, chain by chain.
    std::vector<std::vector<std::int64_t>> remainder;
    std::vector<int> chain_lengths;
    /// D is linearly equivalent to the sum of the parts (no root remainder).
    bool equivalent_to_parts = false;
    /// Every part meets every chain with total multiplicity one.
    bool meets_each_chain_once = false;
    /// Every part lies in the Q-span of K and the chain roots.
    bool parts_in_span = false;
    /// The chain lengths are among those admitted for this condition and row.
    bool lengths_admissible = false;
    std::vector<std::string> notes;
};

/// Searches the lines of the surface for Condition (A) first, then (B).
/// Throws ConfigError when neither exists.
Decomposition decompose_special(const DivDResult& d, const SingularityProfile& profile);

/// Admissible chain-length tuples for a row and condition (empty for rows
/// where the condition cannot occur).
std::vector<std::vector<int>> admissible_lengths(DivDCase which, SpecialCondition condition);

// ---------------------------------------------------------------------------
// Corti systems and pencils

struct CortiParams {
    int d = 2;
    Rational alpha, beta, gamma;
};

/// The four inequalities of the degree-appropriate system at (u, v); u >= 0.
bool corti_evaluate(const CortiParams& p, const Rational& u, const Rational& v);

/// The two-inequality special systems: d=2 needs 2 alpha^2 - gamma > 0 and
/// gamma - alpha^2 <= 0; d=1 needs alpha^2 - gamma > 0 and 4 gamma - 3 alpha^2 <= 0.
bool corti_special(int d, const Rational& alpha, const Rational& gamma);

/// The analytic witness (gamma / (2 alpha), 0) for d=2 or (gamma / alpha, 0) for d=1.
std::pair<Rational, Rational> corti_special_witness(int d, const Rational& alpha, const Rational& gamma);

/// Bounded search over u = p/q >= 0, v = p'/q' with |p| <= 8 bound and
/// 1 <= q <= bound. A miss is not a proof of infeasibility.
std::optional<std::pair<Rational, Rational>> corti_search(const CortiParams& p, int denominator_bound);

/// True iff gamma / d is the square of a rational.
bool pencil_degeneration(int d, const Rational& gamma);

// ---------------------------------------------------------------------------
// Boundary cycles

struct CycleWitness {
    DivisorClass curve;
    /// Components of the point (canonical indices, 0-based) forming the cycle with the curve.
    std::vector<int> cycle_components;
    DualGraph cycle;
    bool is_cycle = false;
    /// (C . M_j) for every component of the point.
    std::vector<std::int64_t> pairings;
    /// The degenerate pencil a(-K) - M: the symmetric chain pattern at
    /// i0 = 1 (d = 2) or i0 = 2 (d = 1), or for D_5 the tail position whose
    /// gamma is a square.
    std::optional<QDivisor> degenerate_pencil;
    std::optional<Rational> pencil_pairing;
};

/// The curve C for a chain point (d=2, or d=1 with n >= 3) or a D_5 point (d=1).
CycleWitness boundary_cycle_witness(const SingularityProfile& profile, const std::string& point_id);

// ---------------------------------------------------------------------------
// One-parameter families for D_5^+ and E_6^+

enum class FamilyPosition { D5_M3M4, D5_M5, E6_M5M6 };

struct FamilyValue {
    QVector coefficients;
    /// gamma from the closed polynomial.
    Rational gamma;
    /// gamma recomputed from the Cartan form.
    Rational gamma_gram;
    Rational t_min, t_max;
};

/// Throws PreconditionError when t lies outside the row's range.
FamilyValue de_plus_family(FamilyPosition position, const Rational& t);

std::string position_label(FamilyPosition position);

}  // namespace dvdp

#endif  // DVDP_DIVISOR_CALCULUS_HPP
