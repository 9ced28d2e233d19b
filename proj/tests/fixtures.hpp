#pragma once

#include <utility>
#include <vector>

#include "pbcert/branch.hpp"
#include "pbcert/parse.hpp"

namespace pbcert::fixtures {

inline BranchPoint make_branch(int orientation,
                               std::vector<std::pair<const char*, const char*>> series,
                               Side side) {
    std::vector<PuiseuxTerm> terms;
    for (const auto& [q, c] : series)
        terms.push_back(PuiseuxTerm{parse_rational(q), parse_rational(c)});
    return BranchPoint{orientation, PuiseuxPoly(std::move(terms)), side};
}

inline Poly2 P(const char* text) { return parse_polynomial(text); }

// The main worked pair: r = 2, separating ideal (x^3, y - x^2), threshold 3.
inline BranchPoint main_alpha() { return make_branch(+1, {{"2", "1"}}, Side::above); }
inline BranchPoint main_beta() {
    return make_branch(+1, {{"2", "1"}, {"3", "1"}}, Side::below);
}

// Puiseux pair (ramification 2).
inline BranchPoint puiseux_alpha() { return make_branch(+1, {{"3/2", "1"}}, Side::above); }
inline BranchPoint puiseux_beta() {
    return make_branch(+1, {{"3/2", "1"}, {"5/2", "1"}}, Side::below);
}

// Chain-corpus pairs for the transform round-trip suites.
inline std::vector<std::pair<BranchPoint, BranchPoint>> chain_corpus() {
    return {
        {main_alpha(), main_beta()},
        {puiseux_alpha(), puiseux_beta()},
        // same first term, contact at order 2
        {make_branch(+1, {{"1", "1"}, {"2", "1"}}, Side::above),
         make_branch(+1, {{"1", "1"}, {"3", "1"}}, Side::above)},
        // same exponent, different leading coefficient
        {make_branch(+1, {{"2", "1"}}, Side::above), make_branch(+1, {{"2", "2"}}, Side::above)},
        // negative orientation pair (exercises sign normalization)
        {make_branch(-1, {{"2", "1"}}, Side::above),
         make_branch(-1, {{"2", "1"}, {"4", "1"}}, Side::below)},
        // opposite orientations separate at the root chart (r = 0)
        {make_branch(+1, {{"1", "1"}}, Side::above), make_branch(-1, {{"1", "1"}}, Side::above)},
    };
}

// Height-one pairs: two sides of the same oriented germ.
inline std::pair<BranchPoint, BranchPoint> parabola_sides() {
    return {make_branch(+1, {{"2", "1"}}, Side::above), make_branch(+1, {{"2", "1"}}, Side::below)};
}
inline std::pair<BranchPoint, BranchPoint> xaxis_sides() {
    return {make_branch(+1, {}, Side::above), make_branch(+1, {}, Side::below)};
}

}  // namespace pbcert::fixtures
