#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbcert/sepideal.hpp"

namespace pbcert {

enum class Relation { ge, le, eq };

struct SignCondition {
    Poly2 poly;
    Relation rel = Relation::ge;
};

/// Closed sign-condition region; a conjunction of weak conditions.
using SignConditionSet = std::vector<SignCondition>;

struct Piece {
    SignConditionSet where;
    Poly2 value;
};

// Piecewise polynomial presented by finitely many closed pieces whose union
// is asserted (not verified) to cover the points of interest.
struct PiecewiseFunction {
    std::vector<Piece> pieces;
};

/// Sup of infs of polynomials; exactly two levels.
struct SupInfExpression {
    std::vector<std::vector<Poly2>> rows;  // sup over rows, inf within a row

    Rational eval(const Rational& x, const Rational& y) const;
};

struct ChainCertificate {
    std::size_t t_alpha_index = 0;
    std::size_t t_beta_index = 0;
    std::vector<std::size_t> chain;   // piece indices, first contains alpha
    std::vector<Poly2> differences;   // consecutive t_j - t_k, all members
};

struct ChainTransferResult {
    bool ok = false;
    std::optional<ChainCertificate> certificate;
    std::vector<std::size_t> reachable;  // the set K on failure
};

struct PairCheckResult {
    bool pass = false;
    Poly2 difference;
    ExtValue value;      // v_alpha of the difference
    ExtValue threshold;  // of the separating ideal
};

struct SampleOptions {
    unsigned samples = 49;
    std::uint64_t seed = 0;
};

/// Least piece index whose conditions all hold at alpha (sign 0 satisfies
/// both weak relations). Errors when no piece contains the point.
std::size_t locate_piece(const PiecewiseFunction& t, const BranchPoint& alpha);

/// The pairwise representability criterion: t_alpha - t_beta must lie in the
/// separating ideal.
PairCheckResult pw_pair_check(const PiecewiseFunction& t, const BranchPoint& alpha,
                              const BranchPoint& beta, unsigned max_steps = 64);

/// Reachability transfer: prune edges whose difference is not a member, then
/// search from the pieces containing alpha to those containing beta. A
/// returned certificate carries the telescoping differences (all verified
/// members); a failure returns the reachable index set.
ChainTransferResult chain_transfer(const PiecewiseFunction& t, const BranchPoint& alpha,
                                   const BranchPoint& beta,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& adjacency,
                                   unsigned max_steps = 64);

struct AssembleResult {
    SupInfExpression expression;
    std::vector<std::string> warnings;  // grid disagreements, never fatal
};

/// Assemble sup_i inf_j witnesses[i][j] after verifying the two sign
/// conditions of every witness; checks exact agreement with t at each
/// supplied point, and samples agreement on a rational grid inside each
/// piece (failures are warnings: finitely many points cannot certify global
/// equality).
AssembleResult assemble_supinf(const PiecewiseFunction& t, const std::vector<BranchPoint>& points,
                               const std::vector<std::vector<Poly2>>& witnesses,
                               const SampleOptions& opts = {});

/// Sampled compatibility check of a piecewise function: wherever two pieces
/// overlap on grid points their polynomials must agree.
std::vector<std::string> piecewise_compatibility_warnings(const PiecewiseFunction& t,
                                                          const SampleOptions& opts = {});

// Connectedness witness set. For a height-two pair this is a ball in the
// final chart intersected with positivity of the nonchanging parameters,
// together with the polynomial map to the plane; every g is nonzero on the
// region by the monomial factorization, and the sampled image points carry
// the testable part of that claim. For a height-one pair it is the component
// of the complement of {prod g = 0} through the common specialization, with
// samples on the curve and on both sides.
struct WitnessSet {
    enum class Kind { chart_ball, curve_component, single_point } kind = Kind::chart_ball;

    // chart_ball
    Rational epsilon;
    std::vector<std::string> positive;  // chart coordinates required positive
    Poly2 map_x, map_y;                 // polynomial map to the plane
    std::size_t r = 0;
    struct MonomialData {
        Poly2 g;
        unsigned e = 0, f = 0;
        Poly2 w;
    };
    std::vector<MonomialData> factors;
    struct Sample {
        Rational cx, cy;  // chart coordinates
        Rational px, py;  // image in the plane
        std::vector<Rational> g_values;
    };
    std::vector<Sample> samples;

    // curve_component
    std::optional<Poly2> curve;
    std::optional<BranchPoint> gamma;
    std::optional<Poly2> product;
    struct CurveSample {
        Rational t;
        Rational px, py;
        Rational on_value, above_value, below_value;  // of the product
    };
    std::vector<CurveSample> curve_samples;

    bool all_nonzero = true;
};

/// Build the witness set for the finitely many non-members gs.
WitnessSet connectedness_witness(const BranchPoint& alpha, const BranchPoint& beta,
                                 const std::vector<Poly2>& gs, const SampleOptions& opts = {},
                                 unsigned max_steps = 64);

}  // namespace pbcert
