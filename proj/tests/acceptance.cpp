// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [path-to-cli-binary]
// The CLI path is needed by the last criterion; without it that criterion fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "c2framed/errors.hpp"
#include "c2framed/expr.hpp"
#include "c2framed/numeric_verify.hpp"
#include "c2framed/pt_map.hpp"

using namespace c2framed;

namespace {

constexpr auto kGradeR = FramingGrade::TrivialR;
constexpr auto kGradeSigma = FramingGrade::SignSigma;

int parity(std::int64_t n) { return n % 2 != 0 ? 1 : 0; }

FramedManifold single(ComponentKind kind, std::int64_t twist, FramingGrade grade) {
    return {grade, {make_component(kind, twist, grade)}};
}

FramedManifold random_manifold(FramingGrade grade, std::mt19937_64& rng) {
    static const std::vector<ComponentKind> r_kinds = {
        ComponentKind::TrivialCircle, ComponentKind::FreeDoubleCircle,
        ComponentKind::AntipodalCircle};
    static const std::vector<ComponentKind> sigma_kinds = {
        ComponentKind::FreeDoubleCircle, ComponentKind::ReflectionCircle};
    const auto& kinds = grade == kGradeR ? r_kinds : sigma_kinds;

    std::uniform_int_distribution<std::size_t> size_dist(0, 8);
    std::uniform_int_distribution<std::size_t> kind_dist(0, kinds.size() - 1);
    std::uniform_int_distribution<std::int64_t> twist_dist(-10, 10);

    std::vector<FramedComponent> comps;
    const std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        comps.push_back(make_component(kinds[kind_dist(rng)], twist_dist(rng), grade));
    }
    return {grade, std::move(comps)};
}

std::array<int, 3> as_triple(const Pi1Element& e) {
    return {e.pi1_sphere, e.h0_bc2, e.h1_bc2};
}

struct CommandResult {
    std::string output;
    int exit_code = -1;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    while (!result.output.empty() && result.output.back() == '\n') result.output.pop_back();
    return result;
}

struct Criterion {
    int id;
    const char* label;
    bool passed;
    std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool within(bool ok, double elapsed, double limit, std::string& note) {
    if (elapsed >= limit) {
        note += " exceeded the " + std::to_string(limit) + " s budget (" +
                std::to_string(elapsed) + " s)";
        return false;
    }
    return ok;
}

Criterion criterion_theorem1_table() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t n = -8; n <= 8; ++n) {
        ok = ok && as_triple(pt_image_r(single(ComponentKind::TrivialCircle, n, kGradeR))) ==
                       std::array<int, 3>{parity(n), 0, 0};
        ok = ok && as_triple(pt_image_r(single(ComponentKind::FreeDoubleCircle, n, kGradeR))) ==
                       std::array<int, 3>{0, parity(n), 0};
        ok = ok && as_triple(pt_image_r(single(ComponentKind::AntipodalCircle, n, kGradeR))) ==
                       std::array<int, 3>{0, 1 - parity(n), 1};
    }
    std::string note;
    ok = within(ok, seconds_since(start), 1.0, note);
    return {1, "classification table of the R-graded stem, n in [-8,8]", ok, note};
}

Criterion criterion_theorem2() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t n = -8; n <= 8; ++n) {
        ok = ok && pt_image_sigma(single(ComponentKind::ReflectionCircle, n, kGradeSigma)).value ==
                       parity(n);
        ok = ok &&
             pt_image_sigma(single(ComponentKind::FreeDoubleCircle, n, kGradeSigma)).value == 0;
    }
    FramedManifold copies(kGradeSigma);
    for (int k = 0; k <= 16; ++k) {
        ok = ok && pt_image_sigma(copies).value == k;
        copies = disjoint_union(copies, single(ComponentKind::ReflectionCircle, 1, kGradeSigma));
    }
    std::string note;
    ok = within(ok, seconds_since(start), 1.0, note);
    return {2, "sigma-graded images: reflection circles by twist parity, free circles to zero",
            ok, note};
}

Criterion criterion_relation_soundness() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t n = -8; n <= 8; ++n) {
        const auto related =
            disjoint_union(single(ComponentKind::AntipodalCircle, 0, kGradeR),
                           single(ComponentKind::FreeDoubleCircle, n, kGradeR));
        ok = ok && is_cobordant(single(ComponentKind::AntipodalCircle, n, kGradeR), related);
    }
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = random_manifold(kGradeR, rng);
        ok = ok && pt_image_r(rewrite_antipodal(m)) == pt_image_r(m);
    }
    std::string note;
    ok = within(ok, seconds_since(start), 1.0, note);
    return {3, "antipodal rewrite relation is cobordance- and image-preserving", ok, note};
}

Criterion criterion_pair_of_pants() {
    bool ok = true;
    for (std::int64_t n = -8; n <= 8; ++n) {
        const auto gen = single(ComponentKind::ReflectionCircle, n, kGradeSigma);
        const auto doubled = disjoint_union(gen, gen);
        const auto joined = single(ComponentKind::ReflectionCircle, 2 * n, kGradeSigma);
        ok = ok && is_cobordant(doubled, joined) == (parity(n) == 0);
    }
    return {4, "doubled reflection circles merge only at even twists", ok, {}};
}

Criterion criterion_fixed_points() {
    bool ok =
        fixed_points_sigma(single(ComponentKind::ReflectionCircle, 1, kGradeSigma)).value == 2;
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = random_manifold(kGradeSigma, rng);
        ok = ok && fixed_points_sigma(m).value == 2 * pt_image_sigma(m).value;
    }
    return {5, "fixed-point count doubles the sigma-graded image", ok, {}};
}

Criterion criterion_homomorphism() {
    bool ok = true;
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_manifold(kGradeR, rng);
        const auto b = random_manifold(kGradeR, rng);
        ok = ok && pt_image_r(disjoint_union(a, b)) == pt_image_r(a) + pt_image_r(b);

        const auto s = random_manifold(kGradeSigma, rng);
        const auto t = random_manifold(kGradeSigma, rng);
        ok = ok &&
             pt_image_sigma(disjoint_union(s, t)) == pt_image_sigma(s) + pt_image_sigma(t);
    }
    return {6, "images are additive over disjoint union at both grades", ok, {}};
}

Criterion criterion_numeric_suite() {
    const auto start = Clock::now();
    std::string note;
    bool ok = true;

    const auto equivariance = check_f_equivariance(1024, 1e-9);
    ok = ok && equivariance.passed && equivariance.max_error < 1e-9;
    const auto grid = check_f_so3_grid(1024, 1e-9);
    ok = ok && grid.passed && grid.max_error < 1e-9;
    const auto hopf = check_hopf_properties(10000, 1e-9);
    ok = ok && hopf.passed && hopf.max_error < 1e-9;
    const auto so4 = check_so4_identity(1024, 1e-12);
    ok = ok && so4.passed && so4.max_error < 1e-12;

    if (!ok) {
        std::ostringstream detail;
        detail << " max errors: equivariance " << equivariance.max_error << ", grid "
               << grid.max_error << ", hopf " << hopf.max_error << ", so4 " << so4.max_error;
        note += detail.str();
    }
    ok = within(ok, seconds_since(start), 5.0, note);
    return {7, "frame matrix, SO(3) grid, Hopf and SO(4) identities within tolerance", ok, note};
}

Criterion criterion_parity_bridge() {
    bool ok = true;
    for (std::int64_t n = -8; n <= 8; ++n) {
        ok = ok && so3_loop_class(so3_rotation_loop(n, 4096)) == parity(n);
        ok = ok && winding_number(so2_rotation_loop(n, 4096)) == n;
    }
    for (std::int64_t n = 0; n <= 4; ++n) {
        try {
            ok = ok && check_equivariant_degree_even(so2_rotation_loop(2 * n, 4096), 1e-9).passed;
        } catch (const std::exception&) {
            ok = false;
        }
        bool rejected = false;
        try {
            check_equivariant_degree_even(so2_rotation_loop(2 * n + 1, 4096), 1e-9);
        } catch (const SymmetryViolatedError&) {
            rejected = true;
        }
        ok = ok && rejected;
    }
    return {8, "loop degree, its stabilized parity, and equivariant evenness", ok, {}};
}

Criterion criterion_cli(const std::string& cli) {
    std::string note;
    if (cli.empty()) {
        return {9, "expression round-trip and command line examples", false,
                " no CLI binary path supplied"};
    }
    bool ok = true;

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 500; ++trial) {
        for (auto grade : {kGradeR, kGradeSigma}) {
            const auto m = normalize(random_manifold(grade, rng));
            const auto text = format_manifold(m);
            const auto reparsed = parse_manifold(text, grade);
            ok = ok && reparsed == m && format_manifold(reparsed) == text;
        }
    }
    if (!ok) note += " round-trip failure";

    const auto eval_r = run_command(cli + " eval --grade R 'S2s[0]' 2>/dev/null");
    if (eval_r.output != "pi1=0 h0=1 h1=1" || eval_r.exit_code != 0) {
        ok = false;
        note += " [eval R: got \"" + eval_r.output + "\" code " +
                std::to_string(eval_r.exit_code) + "]";
    }

    const auto cobordant =
        run_command(cli + " cobordant --grade sigma '2*S1s[1]' 'S1s[2]' 2>/dev/null");
    if (cobordant.exit_code != 1) {
        ok = false;
        note += " [cobordant: expected exit 1, got " + std::to_string(cobordant.exit_code) + "]";
    }

    const auto eval_empty = run_command(cli + " eval --grade sigma '' 2>/dev/null");
    if (eval_empty.output != "0" || eval_empty.exit_code != 0) {
        ok = false;
        note += " [eval empty: got \"" + eval_empty.output + "\" code " +
                std::to_string(eval_empty.exit_code) + "]";
    }

    return {9, "expression round-trip and command line examples", ok, note};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    const std::vector<Criterion> results = {
        criterion_theorem1_table(),
        criterion_theorem2(),
        criterion_relation_soundness(),
        criterion_pair_of_pants(),
        criterion_fixed_points(),
        criterion_homomorphism(),
        criterion_numeric_suite(),
        criterion_parity_bridge(),
        criterion_cli(cli),
    };

    int failures = 0;
    for (const auto& criterion : results) {
        if (!criterion.passed) ++failures;
        std::cout << (criterion.passed ? "PASS" : "FAIL") << "  criterion " << criterion.id
                  << ": " << criterion.label << criterion.note << '\n';
    }
    if (failures != 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << results.size() << " criteria passed\n";
    return 0;
}
