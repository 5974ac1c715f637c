#include "c2framed/manifold.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "c2framed/errors.hpp"

namespace c2framed {

std::string_view kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::TrivialCircle: return "S1";
        case ComponentKind::FreeDoubleCircle: return "C2xS1";
        case ComponentKind::AntipodalCircle: return "S2s";
        case ComponentKind::ReflectionCircle: return "S1s";
    }
    return "?";
}

std::optional<ComponentKind> kind_from_name(std::string_view name) {
    if (name == "S1") return ComponentKind::TrivialCircle;
    if (name == "C2xS1") return ComponentKind::FreeDoubleCircle;
    if (name == "S2s") return ComponentKind::AntipodalCircle;
    if (name == "S1s") return ComponentKind::ReflectionCircle;
    return std::nullopt;
}

bool kind_legal_at(ComponentKind kind, FramingGrade grade) {
    switch (kind) {
        case ComponentKind::TrivialCircle:
        case ComponentKind::AntipodalCircle:
            return grade == FramingGrade::TrivialR;
        case ComponentKind::ReflectionCircle:
            return grade == FramingGrade::SignSigma;
        case ComponentKind::FreeDoubleCircle:
            return true;
    }
    return false;
}

namespace {

[[noreturn]] void throw_kind_grade_mismatch(ComponentKind kind, FramingGrade grade) {
    const ReprDims dims = dims_of(grade);
    throw GradeMismatchError("generator " + std::string(kind_name(kind)) +
                             " admits no framing graded by " + std::string(grade_name(grade)) +
                             " (" + std::to_string(dims.trivial_copies) + " trivial + " +
                             std::to_string(dims.sign_copies) + " sign directions)");
}

}  // namespace

FramedComponent make_component(ComponentKind kind, std::int64_t twist, FramingGrade grade) {
    if (!kind_legal_at(kind, grade)) throw_kind_grade_mismatch(kind, grade);
    return {kind, twist};
}

FramedManifold::FramedManifold(FramingGrade grade, std::vector<FramedComponent> components)
    : grade_(grade), components_(std::move(components)) {
    for (const auto& c : components_) {
        if (!kind_legal_at(c.kind, grade_)) throw_kind_grade_mismatch(c.kind, grade_);
    }
}

bool operator==(const FramedManifold& lhs, const FramedManifold& rhs) {
    if (lhs.grade_ != rhs.grade_ || lhs.size() != rhs.size()) return false;
    auto a = lhs.components_;
    auto b = rhs.components_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

FramedManifold disjoint_union(const FramedManifold& lhs, const FramedManifold& rhs) {
    if (lhs.grade() != rhs.grade()) {
        throw GradeMismatchError(
            "cannot take the disjoint union of a manifold graded by " +
            std::string(grade_name(lhs.grade())) + " and one graded by " +
            std::string(grade_name(rhs.grade())));
    }
    std::vector<FramedComponent> merged(lhs.components().begin(), lhs.components().end());
    merged.insert(merged.end(), rhs.components().begin(), rhs.components().end());
    return {lhs.grade(), std::move(merged)};
}

FramedManifold normalize(const FramedManifold& m) {
    std::vector<FramedComponent> sorted(m.components().begin(), m.components().end());
    std::sort(sorted.begin(), sorted.end());
    return {m.grade(), std::move(sorted)};
}

}  // namespace c2framed
