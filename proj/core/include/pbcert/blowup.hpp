#pragma once

#include <optional>
#include <vector>

#include "pbcert/branch.hpp"
#include "pbcert/poly.hpp"

namespace pbcert {

enum class StepCase { root, I1, I2, II1, II2 };

// One chart of the quadratic-transform sequence. Chart coordinates are the
// formal (x, y) of the Poly2/RatFunc2 values stored here; x_param/y_param
// express them as rational functions of the plane coordinates, and
// (down_x, down_y) is the polynomial map back to the plane. Parameters are
// kept sign-normalized so that x_i(alpha) > 0 and y_i(alpha) > 0 (a parameter
// lying in the support keeps sign +1 formally) and swapped so that
// v(x_i) <= v(y_i).
struct Chart {
    int index = 0;
    RatFunc2 x_param = RatFunc2::var_x();
    RatFunc2 y_param = RatFunc2::var_y();
    Poly2 down_x = Poly2::var_x();
    Poly2 down_y = Poly2::var_y();
    StepCase step_case = StepCase::root;
    Rational shift = Rational(0);  // the unit u subtracted in case II
    int sign_x = +1, sign_y = +1;  // normalization applied to this chart

    // Relation to the previous chart (identity at the root):
    // previous coordinates as polynomials in this chart's coordinates, and
    // this chart's coordinates as rational functions of the previous ones.
    Poly2 step_down_x = Poly2::var_x();
    Poly2 step_down_y = Poly2::var_y();
    RatFunc2 step_up_x = RatFunc2::var_x();
    RatFunc2 step_up_y = RatFunc2::var_y();

    /// x^dx y^dy of this chart, for dx, dy in {0,1}: exceptional coordinate of
    /// the step into this chart (x for I1/II1, y for I2/II2).
    bool exceptional_is_x() const { return step_case == StepCase::I1 || step_case == StepCase::II1; }
};

enum class StopReason { separating_ideal_is_maximal, iteration_limit };

struct BlowupChain {
    std::vector<Chart> charts;
    StopReason stop_reason = StopReason::separating_ideal_is_maximal;
    // Signs of the final chart parameters at the two points (alpha is +1 or 0
    // by normalization).
    int sign_x_alpha = +1, sign_x_beta = +1;
    int sign_y_alpha = +1, sign_y_beta = +1;
    Poly2 witness_chart;  // minimal-value sign changer in chart-r coordinates
    Poly2 witness_root;   // the same element folded back to the plane

    std::size_t r() const { return charts.size() - 1; }
    const Chart& last() const { return charts.back(); }
    bool x_nonchanger() const { return sign_x_alpha == 1 && sign_x_beta == 1; }
    bool y_nonchanger() const { return sign_y_alpha == 1 && sign_y_beta == 1; }
    bool x_changes_sign() const { return sign_x_alpha * sign_x_beta == -1; }
    bool y_changes_sign() const { return sign_y_alpha * sign_y_beta == -1; }
};

/// Carries the partial chain when the step budget runs out.
class ChainLimitError : public LimitError {
public:
    ChainLimitError(const std::string& message, BlowupChain partial)
        : LimitError(message), partial_(std::move(partial)) {}
    const BlowupChain& partial() const { return partial_; }

private:
    BlowupChain partial_;
};

/// Chart 0 for a chain along v_alpha: the identity chart, swapped so that
/// v(x_0) <= v(y_0) and sign-normalized at alpha.
Chart root_chart(const BranchPoint& alpha);

/// One quadratic transform along v_alpha, by the four parameter-update rules.
/// The input chart is re-normalized (swap + signs) first if needed; the step
/// relations of the result refer to the normalized input.
Chart blowup_step(const Chart& chart, const BranchPoint& alpha);

/// Minimal-value sign changer of the chart's maximal ideal, when one exists:
/// examines x_i, y_i and the pencils x_i + d y_i, y_i + d x_i over the
/// critical ratios where alpha- or beta-leading terms cancel (plus those
/// ratios +-1 and d = +-1). Returns the changer oriented >= 0 at alpha.
std::optional<Poly2> stopping_test(const Chart& chart, const BranchPoint& alpha,
                                   const BranchPoint& beta);

/// Iterate blowup_step along v_alpha until the stopping test fires.
BlowupChain run_chain(const BranchPoint& alpha, const BranchPoint& beta,
                      unsigned max_steps = 64);

/// Transform of an ideal one chart up: substitute the step relations and
/// strip the largest common power of the exceptional coordinate.
std::vector<Poly2> transform_ideal(const std::vector<Poly2>& gens, const Chart& target);

/// Inverse transform one chart down: rewrite in the previous coordinates and
/// clear denominators by the smallest power of the previous chart's x.
std::vector<Poly2> inverse_transform_ideal(const std::vector<Poly2>& gens, const Chart& source);

/// Same, after reducing the generators against each other under the cost
/// order of the coordinate whose rewrite carries the denominator. The
/// recombination can lower the clearing exponent of the whole list (the
/// generator-wise exponent may overshoot the ideal-level inverse transform);
/// the generated ideal is unchanged.
std::vector<Poly2> inverse_transform_ideal_reduced(const std::vector<Poly2>& gens,
                                                   const Chart& source);

/// Singleton inverse transform of a chart-r element all the way to the plane.
Poly2 fold_to_root(const Poly2& g, const BlowupChain& chain);

/// g composed with the chart's polynomial map to the plane (g as an element
/// of the chart ring).
Poly2 to_chart(const Poly2& g, const Chart& chart);

struct MonomialFactorization {
    unsigned e = 0, f = 0;
    Poly2 w;  // unit cofactor, w(0,0) != 0
};

/// Factor g = x_r^e y_r^f w in the final chart, exponents accumulated
/// through the exceptional divisors of the chain. Errors when the cofactor
/// vanishes at the origin (exactly the members of the separating ideal).
MonomialFactorization monomial_factor(const Poly2& g, const BlowupChain& chain);

}  // namespace pbcert
