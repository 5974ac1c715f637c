#include "c2framed/numeric_verify.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "c2framed/errors.hpp"

namespace c2framed {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Candidate quaternion lifts closer than this (gap between the two inner
// products) cannot be told apart.
constexpr double kLiftSeparationGap = 0.1;

Eigen::Matrix2d rotation2(double theta) {
    Eigen::Matrix2d r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

double special_orthogonal_error(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    const double ortho =
        (m.transpose() * m - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    const double det = std::abs(m.determinant() - 1.0);
    return std::max(ortho, det);
}

void require_samples(int num_samples, int minimum, const char* what) {
    if (num_samples < minimum) {
        throw std::invalid_argument(std::string(what) + " needs at least " +
                                    std::to_string(minimum) + " samples, got " +
                                    std::to_string(num_samples));
    }
}

// Unit quaternion (w, x, y, z) of a 3x3 rotation, up to sign. Branches on the
// largest of the trace and the diagonal entries so the conversion stays
// stable for rotation angles near pi.
Eigen::Vector4d quaternion_of_rotation(const Eigen::MatrixXd& m) {
    Eigen::Vector4d q;
    const double trace = m(0, 0) + m(1, 1) + m(2, 2);
    if (trace > m(0, 0) && trace > m(1, 1) && trace > m(2, 2)) {
        const double s = std::sqrt(trace + 1.0) * 2.0;  // 4w
        q << s / 4.0, (m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s, (m(1, 0) - m(0, 1)) / s;
    } else if (m(0, 0) >= m(1, 1) && m(0, 0) >= m(2, 2)) {
        const double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;  // 4x
        q << (m(2, 1) - m(1, 2)) / s, s / 4.0, (m(0, 1) + m(1, 0)) / s, (m(0, 2) + m(2, 0)) / s;
    } else if (m(1, 1) >= m(2, 2)) {
        const double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;  // 4y
        q << (m(0, 2) - m(2, 0)) / s, (m(0, 1) + m(1, 0)) / s, s / 4.0, (m(1, 2) + m(2, 1)) / s;
    } else {
        const double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;  // 4z
        q << (m(1, 0) - m(0, 1)) / s, (m(0, 2) + m(2, 0)) / s, (m(1, 2) + m(2, 1)) / s, s / 4.0;
    }
    return q.normalized();
}

}  // namespace

LoopSamples::LoopSamples(std::vector<Eigen::MatrixXd> samples, double tol)
    : samples_(std::move(samples)) {
    if (samples_.size() < 8) {
        throw std::invalid_argument("a loop needs at least 8 samples, got " +
                                    std::to_string(samples_.size()));
    }
    const auto rows = samples_.front().rows();
    if (rows < 2 || rows > 4) {
        throw std::invalid_argument("loop samples must be 2x2, 3x3 or 4x4 matrices");
    }
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        const auto& m = samples_[k];
        if (m.rows() != rows || m.cols() != rows) {
            throw std::invalid_argument("sample " + std::to_string(k) +
                                        " does not match the loop's matrix size");
        }
        const double err = special_orthogonal_error(m);
        if (err > tol) {
            std::ostringstream msg;
            msg << "sample " << k << " is not special orthogonal (error " << err
                << " > tol " << tol << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

Eigen::Matrix3d frame_matrix_f(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    Eigen::Matrix3d f;
    f << c * c, s * c, -s,
         s * c, s * s, c,
         s, -c, 0.0;
    return f;
}

CheckReport check_f_so3_grid(int num_samples, double tol) {
    require_samples(num_samples, 8, "check_f_so3_grid");
    double max_error = 0.0;
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        const Eigen::Matrix3d f = frame_matrix_f(theta);
        const Eigen::Vector3d tangent(-std::sin(theta), std::cos(theta), 0.0);
        max_error = std::max(max_error, special_orthogonal_error(f));
        max_error = std::max(
            max_error, (f * Eigen::Vector3d::UnitZ() - tangent).cwiseAbs().maxCoeff());
    }
    return {"f_so3_grid", max_error, num_samples, max_error <= tol,
            "orthogonality, determinant and tangent-column checks of the frame rotation matrix"};
}

CheckReport check_f_equivariance(int num_samples, double tol) {
    require_samples(num_samples, 8, "check_f_equivariance");
    const Eigen::DiagonalMatrix<double, 3> a(-1.0, -1.0, 1.0);
    double max_error = 0.0;
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        const Eigen::Matrix3d lhs = a * frame_matrix_f(theta) * a;
        const Eigen::Matrix3d rhs = frame_matrix_f(theta + kPi);
        max_error = std::max(max_error, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return {"f_equivariance", max_error, num_samples, max_error <= tol,
            "A F(t) A = F(t + pi) with A = diag(-1, -1, 1)"};
}

CheckReport check_so4_identity(int num_samples, double tol) {
    require_samples(num_samples, 8, "check_so4_identity");
    double max_error = 0.0;
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        const Eigen::Matrix2d r = rotation2(theta);
        Eigen::Matrix4d diag = Eigen::Matrix4d::Zero();
        diag.block<2, 2>(0, 0) = r;
        diag.block<2, 2>(2, 2) = r;
        Eigen::Matrix4d generator = Eigen::Matrix4d::Zero();
        generator.block<2, 2>(0, 2) = r;
        generator.block<2, 2>(2, 0) = Eigen::Matrix2d::Identity();
        max_error =
            std::max(max_error, (diag - generator * generator).cwiseAbs().maxCoeff());
    }
    return {"so4_block_identity", max_error, num_samples, max_error <= tol,
            "diag(R(t), R(t)) equals the square of the off-diagonal block generator"};
}

std::int64_t winding_number(const LoopSamples& loop) {
    if (loop.matrix_size() != 2) {
        throw std::invalid_argument("winding_number expects a loop of 2x2 rotations");
    }
    const std::size_t n = loop.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = loop[k];
        const auto& b = loop[(k + 1) % n];
        const double ta = std::atan2(a(1, 0), a(0, 0));
        const double tb = std::atan2(b(1, 0), b(0, 0));
        const double step = std::remainder(tb - ta, kTwoPi);
        if (std::abs(step) >= kPi / 2.0) {
            std::ostringstream msg;
            msg << "samples " << k << " and " << (k + 1) % n << " differ by " << std::abs(step)
                << " rad (>= pi/2); increase the sampling density";
            throw StepTooLargeError(msg.str());
        }
        total += step;
    }
    return std::llround(total / kTwoPi);
}

int so3_loop_class(const LoopSamples& loop) {
    if (loop.matrix_size() != 3) {
        throw std::invalid_argument("so3_loop_class expects a loop of 3x3 rotations");
    }
    const std::size_t n = loop.size();
    const Eigen::Vector4d first = quaternion_of_rotation(loop[0]);
    Eigen::Vector4d prev = first;
    for (std::size_t k = 1; k <= n; ++k) {
        const Eigen::Vector4d q = (k == n) ? first : quaternion_of_rotation(loop[k]);
        const double dot = prev.dot(q);
        if (2.0 * std::abs(dot) < kLiftSeparationGap) {
            std::ostringstream msg;
            msg << "the two candidate lifts at sample " << k % n
                << " are equidistant from the previous lift (inner product " << dot << ")";
            throw LiftAmbiguousError(msg.str());
        }
        // step rotation angle >= pi/2 iff |<q_prev, q>| <= cos(pi/4)
        if (std::abs(dot) <= std::cos(kPi / 4.0)) {
            std::ostringstream msg;
            msg << "samples " << (k - 1) % n << " and " << k % n
                << " are separated by a rotation of pi/2 or more";
            throw StepTooLargeError(msg.str());
        }
        prev = (dot < 0.0) ? Eigen::Vector4d(-q) : q;
    }
    return first.dot(prev) > 0.0 ? 0 : 1;
}

CheckReport check_equivariant_degree_even(const LoopSamples& loop, double tol) {
    if (loop.matrix_size() != 2) {
        throw std::invalid_argument(
            "check_equivariant_degree_even expects a loop of 2x2 rotations");
    }
    const std::size_t n = loop.size();
    if (n % 2 != 0) {
        throw SymmetryViolatedError(
            "half-period symmetry needs an even sample count, got " + std::to_string(n));
    }
    double max_violation = 0.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        max_violation =
            std::max(max_violation, (loop[k] - loop[k + n / 2]).cwiseAbs().maxCoeff());
    }
    if (max_violation > tol) {
        std::ostringstream msg;
        msg << "loop is not half-period symmetric: max violation " << max_violation
            << " > tol " << tol;
        throw SymmetryViolatedError(msg.str());
    }
    const std::int64_t degree = winding_number(loop);
    std::ostringstream details;
    details << "winding number " << degree << " of a half-period symmetric loop";
    return {"equivariant_degree_even", max_violation, static_cast<long>(n),
            degree % 2 == 0, details.str()};
}

std::pair<std::complex<double>, double> hopf_map(std::complex<double> z0,
                                                 std::complex<double> z1) {
    return {2.0 * z0 * std::conj(z1), std::norm(z0) - std::norm(z1)};
}

CheckReport check_hopf_properties(int num_samples, double tol, std::uint64_t seed) {
    require_samples(num_samples, 100, "check_hopf_properties");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    double max_error = 0.0;
    for (int k = 0; k < num_samples; ++k) {
        Eigen::Vector4d v(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        if (v.norm() < 1e-6) {
            --k;
            continue;
        }
        v.normalize();
        const std::complex<double> z0(v[0], v[1]);
        const std::complex<double> z1(v[2], v[3]);
        const auto [w, t] = hopf_map(z0, z1);

        // (a) the image lies on the unit 2-sphere
        max_error = std::max(max_error, std::abs(std::norm(w) + t * t - 1.0));

        // (b) conjugation on the source matches conjugation on the target
        const auto [wc, tc] = hopf_map(std::conj(z0), std::conj(z1));
        max_error = std::max(max_error, std::abs(wc - std::conj(w)));
        max_error = std::max(max_error, std::abs(tc - t));

        // (c) the image is constant along the unit-scalar fiber
        const std::complex<double> lambda = std::polar(1.0, angle(rng));
        const auto [wf, tf] = hopf_map(lambda * z0, lambda * z1);
        max_error = std::max(max_error, std::abs(wf - w));
        max_error = std::max(max_error, std::abs(tf - t));
    }
    return {"hopf_properties", max_error, num_samples, max_error <= tol,
            "image on the 2-sphere, conjugation equivariance, fiber invariance"};
}

LoopSamples so2_rotation_loop(std::int64_t degree, int num_samples) {
    require_samples(num_samples, 8, "so2_rotation_loop");
    std::vector<Eigen::MatrixXd> samples;
    samples.reserve(static_cast<std::size_t>(num_samples));
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        samples.emplace_back(rotation2(static_cast<double>(degree) * theta));
    }
    return LoopSamples(std::move(samples));
}

LoopSamples so3_rotation_loop(std::int64_t degree, int num_samples) {
    require_samples(num_samples, 8, "so3_rotation_loop");
    std::vector<Eigen::MatrixXd> samples;
    samples.reserve(static_cast<std::size_t>(num_samples));
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
        m.block<2, 2>(0, 0) = rotation2(static_cast<double>(degree) * theta);
        samples.emplace_back(std::move(m));
    }
    return LoopSamples(std::move(samples));
}

LoopSamples so4_rotation_loop(std::int64_t degree, int num_samples) {
    require_samples(num_samples, 8, "so4_rotation_loop");
    std::vector<Eigen::MatrixXd> samples;
    samples.reserve(static_cast<std::size_t>(num_samples));
    for (int k = 0; k < num_samples; ++k) {
        const double theta = kTwoPi * k / num_samples;
        Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
        m.block<2, 2>(0, 0) = rotation2(static_cast<double>(degree) * theta);
        samples.emplace_back(std::move(m));
    }
    return LoopSamples(std::move(samples));
}

LoopSamples read_loop_samples(std::istream& in, double tol) {
    std::vector<Eigen::MatrixXd> samples;
    std::string line;
    std::size_t line_number = 0;
    long rows = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::vector<double> entries;
        double value = 0.0;
        while (tokens >> value) entries.push_back(value);
        if (!tokens.eof()) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": non-numeric entry in loop sample");
        }
        if (entries.empty()) continue;  // blank line

        long n = 0;
        if (entries.size() == 4) n = 2;
        else if (entries.size() == 9) n = 3;
        else if (entries.size() == 16) n = 4;
        else {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": expected 4, 9 or 16 entries, got " +
                                        std::to_string(entries.size()));
        }
        if (rows == 0) rows = n;
        if (n != rows) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": matrix size differs from the first sample");
        }
        Eigen::MatrixXd m(n, n);
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) m(r, c) = entries[static_cast<std::size_t>(r * n + c)];
        samples.push_back(std::move(m));
    }
    return LoopSamples(std::move(samples), tol);
}

void write_loop_samples(std::ostream& out, const LoopSamples& loop) {
    const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const auto& m = loop[k];
        for (long r = 0; r < m.rows(); ++r) {
            for (long c = 0; c < m.cols(); ++c) {
                if (r != 0 || c != 0) out << ' ';
                out << m(r, c);
            }
        }
        out << '\n';
    }
    out.precision(precision);
}

namespace {

// Twist parity, as in pt_map but local to the suite below.
int parity(std::int64_t n) { return n % 2 != 0 ? 1 : 0; }

CheckReport run_winding_recovery(int num_samples) {
    double max_error = 0.0;
    for (std::int64_t n = -8; n <= 8; ++n) {
        const std::int64_t recovered = winding_number(so2_rotation_loop(n, num_samples));
        max_error = std::max(max_error, std::abs(static_cast<double>(recovered - n)));
    }
    return {"winding_recovery", max_error, num_samples, max_error == 0.0,
            "winding_number recovers the analytic degree for |n| <= 8"};
}

CheckReport run_stabilization_parity(int num_samples) {
    int mismatches = 0;
    for (std::int64_t n = -8; n <= 8; ++n) {
        if (so3_loop_class(so3_rotation_loop(n, num_samples)) != parity(n)) ++mismatches;
    }
    return {"so3_stabilization_parity", static_cast<double>(mismatches), num_samples,
            mismatches == 0,
            "quaternion lift of the embedded degree-n loop detects n mod 2 for |n| <= 8"};
}

CheckReport run_parity_controls(int num_samples, double tol) {
    bool ok = true;
    double max_violation = 0.0;
    for (std::int64_t n = 0; n <= 4; ++n) {
        const auto even = check_equivariant_degree_even(so2_rotation_loop(2 * n, num_samples), tol);
        ok = ok && even.passed;
        max_violation = std::max(max_violation, even.max_error);

        bool rejected = false;
        try {
            check_equivariant_degree_even(so2_rotation_loop(2 * n + 1, num_samples), tol);
        } catch (const SymmetryViolatedError&) {
            rejected = true;
        }
        ok = ok && rejected;
    }
    return {"equivariant_degree_even", max_violation, num_samples, ok,
            "half-period symmetric loops have even degree; odd-degree loops are rejected"};
}

}  // namespace

std::vector<CheckReport> run_all_checks(const VerifyOptions& options) {
    using Runner = CheckReport (*)(const VerifyOptions&);
    struct NamedRunner {
        const char* name;
        Runner run;
    };
    static constexpr NamedRunner runners[] = {
        {"f_so3_grid",
         [](const VerifyOptions& o) { return check_f_so3_grid(o.grid_samples, o.tol); }},
        {"f_equivariance",
         [](const VerifyOptions& o) { return check_f_equivariance(o.grid_samples, o.tol); }},
        {"so4_block_identity",
         [](const VerifyOptions& o) { return check_so4_identity(o.grid_samples, o.so4_tol); }},
        {"hopf_properties",
         [](const VerifyOptions& o) { return check_hopf_properties(o.hopf_samples, o.tol); }},
        {"winding_recovery",
         [](const VerifyOptions& o) { return run_winding_recovery(o.grid_samples); }},
        {"so3_stabilization_parity",
         [](const VerifyOptions& o) { return run_stabilization_parity(o.grid_samples); }},
        {"equivariant_degree_even",
         [](const VerifyOptions& o) { return run_parity_controls(o.grid_samples, o.tol); }},
    };

    std::vector<CheckReport> reports;
    reports.reserve(std::size(runners));
    for (const auto& [name, run] : runners) {
        try {
            reports.push_back(run(options));
        } catch (const std::exception& e) {
            reports.push_back(
                {name, std::numeric_limits<double>::infinity(), 0, false, e.what()});
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return reports;
}

}  // namespace c2framed
