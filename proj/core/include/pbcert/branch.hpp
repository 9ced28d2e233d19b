#pragma once

#include "pbcert/ext_value.hpp"
#include "pbcert/poly.hpp"

namespace pbcert {

enum class Side { above, below, on };

// Half-branch point of the real spectrum centered at the origin. Along the
// branch x = orientation * t and y = phi(t) + side * u, where t is a positive
// infinitesimal of value 1 and u a second-level infinitesimal of value Omega
// (smaller than every positive power of t). side == on places the point on
// the algebraic curve of phi itself; its support is the principal prime of
// that curve and all values are purely rational.
struct BranchPoint {
    int orientation = +1;  // +1: x = t, -1: x = -t (t -> 0+)
    PuiseuxPoly series;
    Side side = Side::above;

    friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// Sign and value of a function germ at a branch point; sign 0 iff value inf.
struct SignValue {
    int sign = 0;
    ExtValue value;
};

/// Value together with the coefficient of the dominant term (0 when the germ
/// vanishes identically). eval_at_branch is derived from this.
struct LeadingData {
    ExtValue value;
    Rational coeff;
    int sign() const { return sign_of(coeff); }
};

LeadingData leading_at_branch(const Poly2& f, const BranchPoint& alpha);
LeadingData leading_at_branch(const RatFunc2& f, const BranchPoint& alpha);

SignValue eval_at_branch(const Poly2& f, const BranchPoint& alpha);
SignValue eval_at_branch(const RatFunc2& f, const BranchPoint& alpha);

/// Implicit equation of the branch germ for orientation +1: the resultant of
/// (z^N - x, y - phi_hat(z)), primitive with the graded-lex minimal term
/// positive. Defined for the empty series as well (gives y).
Poly2 curve_equation(const PuiseuxPoly& phi);

/// Same with x = orientation * t^N; this is the equation that vanishes along
/// the oriented germ.
Poly2 oriented_curve_equation(const PuiseuxPoly& phi, int orientation);

enum class CenterRelation { origin, distinct };

/// Branch points of this library are origin-centered by construction; the
/// distinct case is reserved for translated inputs handled by the CLI.
CenterRelation common_center(const BranchPoint& a, const BranchPoint& b);

}  // namespace pbcert
