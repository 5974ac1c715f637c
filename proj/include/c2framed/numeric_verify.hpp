#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace c2framed {

/// A loop in a rotation group SO(k), k in {2,3,4}, given by N >= 8 samples
/// read cyclically: sample N-1 is adjacent to sample 0. Construction checks
/// that every sample is orthogonal with determinant +1 within tol; the
/// adjacency guard (consecutive rotation angle < pi/2) is enforced by the
/// consuming classifiers, which throw StepTooLargeError on undersampled input.
class LoopSamples {
public:
    explicit LoopSamples(std::vector<Eigen::MatrixXd> samples, double tol = 1e-9);

    int matrix_size() const { return static_cast<int>(samples_.front().rows()); }
    std::size_t size() const { return samples_.size(); }
    const Eigen::MatrixXd& operator[](std::size_t k) const { return samples_[k]; }
    const std::vector<Eigen::MatrixXd>& samples() const { return samples_; }

private:
    std::vector<Eigen::MatrixXd> samples_;
};

/// Outcome of one verification check. For numeric checks passed means
/// max_error <= tolerance; for integer-valued checks it means exact match.
struct CheckReport {
    std::string name;
    double max_error = 0.0;
    long samples_used = 0;
    bool passed = false;
    std::string details;
};

/// The frame-rotation matrix
///
///   [ cos^2 t     sin t cos t   -sin t ]
///   [ sin t cos t   sin^2 t      cos t ]
///   [ sin t        -cos t          0   ]
///
/// It lies in SO(3) for every t and rotates e3 to the unit circle tangent
/// (-sin t, cos t, 0).
Eigen::Matrix3d frame_matrix_f(double theta);

/// Grid check that frame_matrix_f is special orthogonal and carries e3 to the
/// circle tangent at num_samples evenly spaced angles.
CheckReport check_f_so3_grid(int num_samples, double tol);

/// Checks the equivariance identity A F(t) A = F(t + pi), A = diag(-1,-1,1),
/// at num_samples evenly spaced angles. Requires num_samples >= 8.
CheckReport check_f_equivariance(int num_samples, double tol);

/// Checks the 4x4 block identity diag(R(t), R(t)) = ([[0, R(t)], [I, 0]])^2
/// at num_samples evenly spaced angles, R(t) the 2x2 rotation by t.
CheckReport check_so4_identity(int num_samples, double tol);

/// Degree of a loop of 2x2 rotations: the total unwrapped angle divided by
/// 2 pi. Exact for every loop respecting the adjacency guard.
std::int64_t winding_number(const LoopSamples& loop);

/// Class of a loop of 3x3 rotations in the two-element fundamental group of
/// SO(3), detected by lifting stepwise to unit quaternions: each lift sign is
/// chosen to maximize continuity with the previous sample, and the loop is
/// nontrivial iff the lift closes up to the antipode. Throws
/// LiftAmbiguousError when a step's two candidate lifts are equidistant.
int so3_loop_class(const LoopSamples& loop);

/// For a 2x2 loop with the half-period symmetry f(t + pi) = f(t): verifies
/// the symmetry within tol (throws SymmetryViolatedError past that, and
/// requires an even sample count), then passes iff the winding number is
/// even. max_error reports the worst symmetry violation.
CheckReport check_equivariant_degree_even(const LoopSamples& loop, double tol);

/// (z0, z1) -> (2 z0 conj(z1), |z0|^2 - |z1|^2).
std::pair<std::complex<double>, double> hopf_map(std::complex<double> z0,
                                                 std::complex<double> z1);

/// Samples num_samples >= 100 random points of the unit 3-sphere and checks
/// that the image lands on the unit 2-sphere, intertwines complex conjugation
/// on both sides, and is constant along unit-scalar fibers. The seed fixes
/// the sample stream, so reports are reproducible.
CheckReport check_hopf_properties(int num_samples, double tol,
                                  std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// The loop t -> R(degree * t) sampled at num_samples evenly spaced angles.
LoopSamples so2_rotation_loop(std::int64_t degree, int num_samples);
/// The same loop embedded in SO(3) as rotations about the third axis.
LoopSamples so3_rotation_loop(std::int64_t degree, int num_samples);
/// The same loop embedded in SO(4) as R(degree * t) on the first block.
LoopSamples so4_rotation_loop(std::int64_t degree, int num_samples);

/// Plain text loop format: one matrix per line, entries row-major, whitespace
/// separated; 4, 9 or 16 entries per line. Blank lines are skipped.
LoopSamples read_loop_samples(std::istream& in, double tol = 1e-9);
void write_loop_samples(std::ostream& out, const LoopSamples& loop);

struct VerifyOptions {
    int grid_samples = 1024;
    int hopf_samples = 10000;
    double tol = 1e-9;
    double so4_tol = 1e-12;
};

/// Runs the full verification suite and returns the reports sorted by name.
/// A check that throws is reported as failed with the message in details.
std::vector<CheckReport> run_all_checks(const VerifyOptions& options = {});

}  // namespace c2framed
