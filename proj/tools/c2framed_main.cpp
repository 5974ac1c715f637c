// Command line front end: evaluate Pontryagin-Thom images of framed
// C2-manifold expressions, decide cobordance, normalize and rewrite
// expressions, and run the numeric verification suite.
//
// Exit codes: 0 success / cobordant / all checks passed, 1 not cobordant or
// a failed check, 2 usage error (bad flags, malformed expression, wrong grade).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "c2framed/errors.hpp"
#include "c2framed/expr.hpp"
#include "c2framed/json_io.hpp"
#include "c2framed/numeric_verify.hpp"
#include "c2framed/pt_map.hpp"

namespace {

c2framed::FramingGrade to_grade(const std::string& name) {
    // CLI11 already restricted the value to {"R", "sigma"}.
    return *c2framed::grade_from_name(name);
}

int run_eval(const std::string& grade_name, const std::string& expr, bool json) {
    const auto grade = to_grade(grade_name);
    const auto manifold = c2framed::parse_manifold(expr, grade);
    if (grade == c2framed::FramingGrade::TrivialR) {
        const auto image = c2framed::pt_image_r(manifold);
        if (json) {
            std::cout << c2framed::to_json(image).dump() << '\n';
        } else {
            std::cout << "pi1=" << static_cast<int>(image.pi1_sphere)
                      << " h0=" << static_cast<int>(image.h0_bc2)
                      << " h1=" << static_cast<int>(image.h1_bc2) << '\n';
        }
    } else {
        const auto image = c2framed::pt_image_sigma(manifold);
        std::cout << c2framed::to_json(image).dump() << '\n';
    }
    return 0;
}

int run_cobordant(const std::string& grade_name, const std::string& lhs_expr,
                  const std::string& rhs_expr, bool json) {
    const auto grade = to_grade(grade_name);
    const auto lhs = c2framed::parse_manifold(lhs_expr, grade);
    const auto rhs = c2framed::parse_manifold(rhs_expr, grade);
    const bool cobordant = c2framed::is_cobordant(lhs, rhs);
    if (json) {
        std::cout << c2framed::OrderedJson{{"cobordant", cobordant}}.dump() << '\n';
    } else {
        std::cout << (cobordant ? "cobordant" : "not cobordant") << '\n';
    }
    return cobordant ? 0 : 1;
}

int run_expression_command(const std::string& grade_name, const std::string& expr,
                           bool rewrite, bool json) {
    const auto grade = to_grade(grade_name);
    auto manifold = c2framed::parse_manifold(expr, grade);
    if (rewrite) manifold = c2framed::rewrite_antipodal(manifold);
    const std::string text = c2framed::format_manifold(manifold);
    if (json) {
        std::cout << c2framed::OrderedJson{{"expr", text}}.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
    return 0;
}

int run_verify(int samples, double tol, bool json) {
    c2framed::VerifyOptions options;
    options.grid_samples = samples;
    options.tol = tol;
    const auto reports = c2framed::run_all_checks(options);
    bool all_passed = true;
    for (const auto& report : reports) {
        all_passed = all_passed && report.passed;
        if (json) {
            std::cout << c2framed::to_json(report).dump() << '\n';
        } else {
            std::cout << (report.passed ? "PASS " : "FAIL ") << report.name
                      << " max_error=" << report.max_error
                      << " samples=" << report.samples_used;
            if (!report.passed) std::cout << " (" << report.details << ')';
            std::cout << '\n';
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for C2-equivariant framed cobordism classes "
                 "in the 1- and sigma-indexed stems, with a numeric verification suite"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "line-oriented JSON output, one object per result");

    const auto grade_check = CLI::IsMember({"R", "sigma"});
    std::string grade;

    auto* eval = app.add_subcommand("eval", "evaluate the image of a manifold expression");
    std::string eval_expr;
    eval->add_option("--grade", grade, "framing grade")->required()->check(grade_check);
    eval->add_option("expr", eval_expr, "manifold expression, e.g. \"S1[3] + 2*S2s[0]\"")
        ->required();
    eval->fallthrough();

    auto* cobordant = app.add_subcommand("cobordant", "decide whether two manifolds are cobordant");
    std::string lhs_expr;
    std::string rhs_expr;
    cobordant->add_option("--grade", grade, "framing grade")->required()->check(grade_check);
    cobordant->add_option("lhs", lhs_expr, "first manifold expression")->required();
    cobordant->add_option("rhs", rhs_expr, "second manifold expression")->required();
    cobordant->fallthrough();

    auto* normalize_cmd = app.add_subcommand("normalize", "print the canonical form of an expression");
    std::string normalize_expr;
    normalize_cmd->add_option("--grade", grade, "framing grade")->required()->check(grade_check);
    normalize_cmd->add_option("expr", normalize_expr, "manifold expression")->required();
    normalize_cmd->fallthrough();

    auto* rewrite_cmd = app.add_subcommand(
        "rewrite", "replace every twisted antipodal circle S2s[n] by S2s[0] + C2xS1[n]");
    std::string rewrite_expr;
    rewrite_cmd->add_option("--grade", grade, "framing grade")->required()->check(grade_check);
    rewrite_cmd->add_option("expr", rewrite_expr, "manifold expression")->required();
    rewrite_cmd->fallthrough();

    auto* verify = app.add_subcommand("verify", "run the numeric verification suite");
    int samples = 1024;
    double tol = 1e-9;
    verify->add_option("--samples", samples, "grid samples per check")
        ->check(CLI::Range(8, 1 << 24))
        ->capture_default_str();
    verify->add_option("--tol", tol, "numeric tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(grade, eval_expr, json);
        if (cobordant->parsed()) return run_cobordant(grade, lhs_expr, rhs_expr, json);
        if (normalize_cmd->parsed())
            return run_expression_command(grade, normalize_expr, /*rewrite=*/false, json);
        if (rewrite_cmd->parsed())
            return run_expression_command(grade, rewrite_expr, /*rewrite=*/true, json);
        if (verify->parsed()) return run_verify(samples, tol, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
