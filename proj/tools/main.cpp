// pbcert command-line front end: parse inputs, dispatch to the core library,
// print structured (JSON, default) or text output.
//
// Exit codes: 0 success, 2 parse error, 3 iteration/search limit,
// 4 domain error (precondition violation), 5 internal invariant failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pbcert/blowup.hpp"
#include "pbcert/errors.hpp"
#include "pbcert/parse.hpp"
#include "pbcert/pbcheck.hpp"
#include "pbcert/sepideal.hpp"
#include "pbcert/serialize.hpp"

namespace {

using namespace pbcert;

struct GlobalOptions {
    std::string format = "json";
    unsigned max_blowups = 64;
    unsigned oracle_degree = 3;
    long oracle_coeff = 2;
    unsigned oracle_support = 3;
    unsigned samples = 49;
    std::uint64_t seed = 0;
    std::string center;  // "cx,cy" translation applied to polynomial inputs

    SampleOptions sample_options() const { return SampleOptions{samples, seed}; }
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Resolve an input argument: "-" reads stdin, a leading '{' or '[' is
/// inline JSON, anything else is a file path.
std::string load_text(const std::string& arg) {
    if (arg == "-") return slurp(std::cin);
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read input file '" + arg + "'");
    return slurp(in);
}

Json load_json(const std::string& arg) { return parse_json_text(load_text(arg)); }

class Translator {
public:
    explicit Translator(const std::string& center) {
        if (center.empty()) return;
        const auto comma = center.find(',');
        if (comma == std::string::npos)
            throw ParseError("--center expects 'cx,cy'");
        cx_ = parse_rational(center.substr(0, comma));
        cy_ = parse_rational(center.substr(comma + 1));
        active_ = cx_ != 0 || cy_ != 0;
    }

    Poly2 operator()(const Poly2& p) const {
        if (!active_) return p;
        return substitute_poly(p, Poly2::var_x() + Poly2(cx_), Poly2::var_y() + Poly2(cy_));
    }

private:
    bool active_ = false;
    Rational cx_{0}, cy_{0};
};

void render_text(const Json& j, std::ostream& os, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                os << prefix << key << ":\n";
                render_text(value, os, prefix + "  ");
            } else {
                os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << prefix << "-\n";
                render_text(value, os, prefix + "  ");
            } else {
                os << prefix << "- "
                   << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
        return;
    }
    os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Json& j, const GlobalOptions& opts) {
    if (opts.format == "text")
        render_text(j, std::cout, "");
    else
        std::cout << j.dump(2) << "\n";
}

PiecewiseFunction load_piecewise(const std::string& arg, const Translator& translate) {
    PiecewiseFunction t = piecewise_from_json(load_json(arg));
    for (Piece& p : t.pieces) {
        p.value = translate(p.value);
        for (SignCondition& c : p.where) c.poly = translate(c.poly);
    }
    return t;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact computations with half-branch points of the real plane spectrum:\n"
                 "valuations, blow-up chains, separating ideals and Pierce-Birkhoff "
                 "certificates"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-blowups,--max-steps", opts.max_blowups, "Blow-up iteration cap");
    app.add_option("--oracle-degree", opts.oracle_degree, "Oracle total degree cap");
    app.add_option("--oracle-coeff", opts.oracle_coeff, "Oracle coefficient range");
    app.add_option("--oracle-support", opts.oracle_support, "Oracle monomial count cap");
    app.add_option("--samples", opts.samples, "Sample count for grids");
    app.add_option("--seed", opts.seed, "Sampling seed (0 = plain grid)");
    app.add_option("--center", opts.center,
                   "Translate polynomial inputs so this point becomes the origin (cx,cy)");

    std::string f_arg, den_arg, alpha_arg, beta_arg, g_arg, a_arg, series_arg;
    std::string pw_arg, adjacency_arg, points_arg, witnesses_arg;
    std::vector<std::string> gs_args;

    auto* val = app.add_subcommand("val", "Value of a function at a branch point");
    val->add_option("--f", f_arg, "Polynomial (numerator)")->required();
    val->add_option("--den", den_arg, "Optional denominator polynomial");
    val->add_option("--alpha", alpha_arg, "Branch point")->required();

    auto* sign = app.add_subcommand("sign", "Sign of a function at a branch point");
    sign->add_option("--f", f_arg, "Polynomial (numerator)")->required();
    sign->add_option("--den", den_arg, "Optional denominator polynomial");
    sign->add_option("--alpha", alpha_arg, "Branch point")->required();

    auto* curveeq = app.add_subcommand("curve-eq", "Implicit equation of a branch germ");
    curveeq->add_option("--alpha", alpha_arg, "Branch point (uses its orientation)");
    curveeq->add_option("--series", series_arg, "Bare series (orientation +)");

    auto* blowup = app.add_subcommand("blowup", "Blow-up chain along v_alpha for a pair");
    blowup->add_option("--alpha", alpha_arg, "First branch point")->required();
    blowup->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* sepideal_cmd = app.add_subcommand("sepideal", "Separating ideal of a pair");
    sepideal_cmd->add_option("--alpha", alpha_arg, "First branch point")->required();
    sepideal_cmd->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* member_cmd = app.add_subcommand("member", "Separating-ideal membership");
    member_cmd->add_option("--g", g_arg, "Polynomial to test")->required();
    member_cmd->add_option("--alpha", alpha_arg, "First branch point")->required();
    member_cmd->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* factor = app.add_subcommand("factor", "Monomial factorization in the final chart");
    factor->add_option("--g", g_arg, "Non-member polynomial")->required();
    factor->add_option("--alpha", alpha_arg, "First branch point")->required();
    factor->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* witness = app.add_subcommand("witness", "h-witness for a member of the ideal");
    witness->add_option("--a", a_arg, "Member with a(alpha) >= 0")->required();
    witness->add_option("--alpha", alpha_arg, "First branch point")->required();
    witness->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* connect = app.add_subcommand("connect", "Connectedness witness set");
    connect->add_option("--alpha", alpha_arg, "First branch point")->required();
    connect->add_option("--beta", beta_arg, "Second branch point")->required();
    connect->add_option("--g", gs_args, "Non-member polynomial (repeatable)");

    auto* pwcheck = app.add_subcommand("pwcheck", "Pairwise representability check");
    pwcheck->add_option("--pw", pw_arg, "Piecewise function")->required();
    pwcheck->add_option("--alpha", alpha_arg, "First branch point")->required();
    pwcheck->add_option("--beta", beta_arg, "Second branch point")->required();

    auto* chain = app.add_subcommand("chain", "Piece-chain transfer certificate");
    chain->add_option("--pw", pw_arg, "Piecewise function")->required();
    chain->add_option("--alpha", alpha_arg, "First branch point")->required();
    chain->add_option("--beta", beta_arg, "Second branch point")->required();
    chain->add_option("--adjacency", adjacency_arg, "Symmetric piece adjacency, [[i,j],...]")
        ->required();

    auto* assemble = app.add_subcommand("assemble", "Assemble a sup-inf expression");
    assemble->add_option("--pw", pw_arg, "Piecewise function")->required();
    assemble->add_option("--points", points_arg, "Branch points (array)")->required();
    assemble->add_option("--witnesses", witnesses_arg, "Witness matrix")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force sign-changer search");
    oracle->add_option("--alpha", alpha_arg, "First branch point")->required();
    oracle->add_option("--beta", beta_arg, "Second branch point")->required();

    // Global options may appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    app.parse(argc, argv);

    const Translator translate(opts.center);
    auto load_poly = [&](const std::string& text) { return translate(parse_polynomial(text)); };
    auto load_branch = [&](const std::string& arg) { return branch_from_json(load_json(arg)); };
    auto load_func = [&]() {
        const Poly2 num = load_poly(f_arg);
        if (den_arg.empty()) return RatFunc2(num);
        return RatFunc2(num, load_poly(den_arg));
    };

    if (val->parsed()) {
        emit(Json{{"value", to_json(eval_at_branch(load_func(), load_branch(alpha_arg)).value)}},
             opts);
        return 0;
    }
    if (sign->parsed()) {
        emit(Json{{"sign", eval_at_branch(load_func(), load_branch(alpha_arg)).sign}}, opts);
        return 0;
    }
    if (curveeq->parsed()) {
        Poly2 curve;
        if (!alpha_arg.empty()) {
            const BranchPoint b = load_branch(alpha_arg);
            curve = oriented_curve_equation(b.series, b.orientation);
        } else if (!series_arg.empty()) {
            curve = curve_equation(series_from_json(load_json(series_arg)));
        } else {
            throw DomainError("curve-eq needs --alpha or --series");
        }
        emit(Json{{"curve", poly_to_string(curve)}}, opts);
        return 0;
    }
    if (blowup->parsed()) {
        try {
            const BlowupChain bc =
                run_chain(load_branch(alpha_arg), load_branch(beta_arg), opts.max_blowups);
            emit(to_json(bc), opts);
            return 0;
        } catch (const ChainLimitError& e) {
            emit(to_json(e.partial()), opts);
            return 3;
        }
    }
    if (sepideal_cmd->parsed()) {
        emit(to_json(separating_ideal(load_branch(alpha_arg), load_branch(beta_arg),
                                      opts.max_blowups)),
             opts);
        return 0;
    }
    if (member_cmd->parsed()) {
        const BranchPoint a = load_branch(alpha_arg);
        const BranchPoint b = load_branch(beta_arg);
        const SeparatingIdeal S = separating_ideal(a, b, opts.max_blowups);
        const Poly2 g = load_poly(g_arg);
        emit(Json{{"member", member(g, S, a, b)},
                  {"value", to_json(eval_at_branch(g, a).value)},
                  {"threshold", to_json(S.threshold)}},
             opts);
        return 0;
    }
    if (factor->parsed()) {
        const BranchPoint a = load_branch(alpha_arg);
        const BranchPoint b = load_branch(beta_arg);
        const SeparatingIdeal S = separating_ideal(a, b, opts.max_blowups);
        emit(to_json(monomial_factor_checked(load_poly(g_arg), S, a, b)), opts);
        return 0;
    }
    if (witness->parsed()) {
        const BranchPoint a = load_branch(alpha_arg);
        const BranchPoint b = load_branch(beta_arg);
        const SeparatingIdeal S = separating_ideal(a, b, opts.max_blowups);
        emit(Json{{"h", poly_to_string(h_witness(load_poly(a_arg), S, a, b))}}, opts);
        return 0;
    }
    if (connect->parsed()) {
        std::vector<Poly2> gs;
        for (const std::string& g : gs_args) gs.push_back(load_poly(g));
        emit(to_json(connectedness_witness(load_branch(alpha_arg), load_branch(beta_arg), gs,
                                           opts.sample_options(), opts.max_blowups)),
             opts);
        return 0;
    }
    if (pwcheck->parsed()) {
        emit(to_json(pw_pair_check(load_piecewise(pw_arg, translate), load_branch(alpha_arg),
                                   load_branch(beta_arg), opts.max_blowups)),
             opts);
        return 0;
    }
    if (chain->parsed()) {
        emit(to_json(chain_transfer(load_piecewise(pw_arg, translate), load_branch(alpha_arg),
                                    load_branch(beta_arg),
                                    adjacency_from_json(load_json(adjacency_arg)),
                                    opts.max_blowups)),
             opts);
        return 0;
    }
    if (assemble->parsed()) {
        auto witnesses = poly_matrix_from_json(load_json(witnesses_arg));
        for (auto& row : witnesses)
            for (Poly2& p : row) p = translate(p);
        const AssembleResult r =
            assemble_supinf(load_piecewise(pw_arg, translate),
                            branch_list_from_json(load_json(points_arg)), witnesses,
                            opts.sample_options());
        Json warnings = Json::array();
        for (const std::string& w : r.warnings) warnings.push_back(w);
        emit(Json{{"supinf", to_json(r.expression)}, {"warnings", warnings}}, opts);
        return 0;
    }
    if (oracle->parsed()) {
        emit(to_json(signchanger_oracle(load_branch(alpha_arg), load_branch(beta_arg),
                                        opts.oracle_degree, opts.oracle_coeff,
                                        opts.oracle_support)),
             opts);
        return 0;
    }
    throw InternalError("no subcommand dispatched");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        const int rc = dummy.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const pbcert::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const pbcert::LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const pbcert::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const pbcert::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
