#pragma once

#include <optional>
#include <string_view>

namespace c2framed {

/// The two C2-representations that can grade a framing: the trivial
/// one-dimensional representation R and the sign representation sigma.
enum class FramingGrade {
    TrivialR,
    SignSigma,
};

/// Dimension data of a C2-representation of the form n + k*sigma.
struct ReprDims {
    int trivial_copies = 0;
    int sign_copies = 0;

    constexpr int total() const { return trivial_copies + sign_copies; }

    /// Dimension of the subspace fixed by the involution.
    constexpr int fixed_dim() const { return trivial_copies; }

    friend constexpr bool operator==(const ReprDims&, const ReprDims&) = default;
};

constexpr ReprDims dims_of(FramingGrade grade) {
    return grade == FramingGrade::TrivialR ? ReprDims{1, 0} : ReprDims{0, 1};
}

/// Grade names as they are spelled in every textual format: "R" and "sigma".
constexpr std::string_view grade_name(FramingGrade grade) {
    return grade == FramingGrade::TrivialR ? "R" : "sigma";
}

constexpr std::optional<FramingGrade> grade_from_name(std::string_view name) {
    if (name == "R") return FramingGrade::TrivialR;
    if (name == "sigma") return FramingGrade::SignSigma;
    return std::nullopt;
}

}  // namespace c2framed
