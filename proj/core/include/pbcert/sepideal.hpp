#pragma once

#include <optional>
#include <vector>

#include "pbcert/blowup.hpp"
#include "pbcert/branch.hpp"

namespace pbcert {

enum class IdealKind { zero, height_one, height_two, unit };

// Separating ideal of two branch points, in one of its normal forms:
//   zero       - the points coincide (membership means value infinity);
//   height_one - same oriented germ approached from different sides, the
//                ideal is the principal prime of the curve;
//   height_two - distinct germs, the ideal is the inverse-transform fold of
//                the final maximal ideal of the blow-up chain;
//   unit       - distinct centers (reserved for translated inputs).
struct SeparatingIdeal {
    IdealKind kind = IdealKind::zero;
    std::vector<Poly2> generators;  // plane coordinates
    ExtValue threshold;             // v_alpha of the ideal (inf for kind zero)
    std::optional<BlowupChain> chain;  // present for height_two
    std::optional<Poly2> curve;        // present for height_one
    // Minimal-value sign changer, oriented >= 0 at alpha and <= 0 at beta.
    std::optional<Poly2> changer;
};

SeparatingIdeal separating_ideal(const BranchPoint& alpha, const BranchPoint& beta,
                                 unsigned max_steps = 64);

/// Membership: value threshold for height two (the ideal is a v-ideal),
/// exact divisibility by the curve for height one.
bool member(const Poly2& g, const SeparatingIdeal& S, const BranchPoint& alpha,
            const BranchPoint& beta);

/// For a member a with a(alpha) >= 0, produce h with h(alpha) >= a(alpha) and
/// h(beta) <= 0. The candidate is a scaled copy of the stored sign changer;
/// both inequalities are verified exactly before returning.
Poly2 h_witness(const Poly2& a, const SeparatingIdeal& S, const BranchPoint& alpha,
                const BranchPoint& beta);

struct Specialization {
    enum class Kind { origin, curve_point, point } kind = Kind::origin;
    std::optional<Poly2> curve;        // curve_point
    std::optional<BranchPoint> gamma;  // curve_point (side on) or point
};

/// Least common specialization of the pair, per the kind of the ideal.
Specialization common_specialization(const BranchPoint& alpha, const BranchPoint& beta,
                                     const SeparatingIdeal& S);

/// Caller-facing factorization: checks membership first (members have no
/// unit factorization witness role) and requires a height-two pair.
MonomialFactorization monomial_factor_checked(const Poly2& g, const SeparatingIdeal& S,
                                              const BranchPoint& alpha, const BranchPoint& beta);

struct OracleResult {
    ExtValue min_value;
    Poly2 witness;
};

/// Brute-force search over polynomials with total degree <= degree_cap, at
/// most support_cap monomials and integer coefficients in
/// [-coeff_range, coeff_range] for elements >= 0 at alpha and <= 0 at beta
/// (not both zero); returns the minimal v_alpha value attained. Independent
/// of the blow-up machinery by construction.
OracleResult signchanger_oracle(const BranchPoint& alpha, const BranchPoint& beta,
                                unsigned degree_cap, long coeff_range, unsigned support_cap);

}  // namespace pbcert
