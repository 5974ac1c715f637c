#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "c2framed/grading.hpp"

namespace c2framed {

/// The connected framed one-dimensional C2-manifolds, i.e. the generators of
/// the cobordism monoid under disjoint union. Declaration order is the
/// canonical sort order used by normal forms.
enum class ComponentKind {
    TrivialCircle,     ///< S^1 with the trivial action; R-graded only.
    FreeDoubleCircle,  ///< C2 x S^1, two circles swapped by the involution; legal at both grades.
    AntipodalCircle,   ///< S(2 sigma), the circle with the antipodal action; R-graded only.
    ReflectionCircle,  ///< S(1 + sigma), the circle with the reflection action; sigma-graded only.
};

/// Textual generator names: "S1", "C2xS1", "S2s", "S1s".
std::string_view kind_name(ComponentKind kind);
std::optional<ComponentKind> kind_from_name(std::string_view name);

bool kind_legal_at(ComponentKind kind, FramingGrade grade);

/// One connected generator together with its framing twist.
///
/// The twist is the integer classifying the framing against the reference
/// framing of the kind: the degree of the classifying map S^1 -> SO(2) for
/// TrivialCircle and FreeDoubleCircle, the n of the degree-2n equivariant map
/// for AntipodalCircle, and the n of the degree-n equivariant map for
/// ReflectionCircle. Twists are signed 64-bit; parsers reject anything
/// outside that range instead of wrapping.
struct FramedComponent {
    ComponentKind kind;
    std::int64_t twist;

    friend constexpr auto operator<=>(const FramedComponent&, const FramedComponent&) = default;
};

/// A finite formal disjoint union (multiset) of framed components, all of one
/// grade. The empty union is a valid manifold at either grade. Equality
/// compares normal forms, so the stored component order never matters.
class FramedManifold {
public:
    explicit FramedManifold(FramingGrade grade) : grade_(grade) {}

    /// Throws GradeMismatchError if any component kind is illegal at the grade.
    FramedManifold(FramingGrade grade, std::vector<FramedComponent> components);

    FramingGrade grade() const { return grade_; }
    std::span<const FramedComponent> components() const { return components_; }
    bool empty() const { return components_.empty(); }
    std::size_t size() const { return components_.size(); }

    friend bool operator==(const FramedManifold& lhs, const FramedManifold& rhs);

private:
    FramingGrade grade_;
    std::vector<FramedComponent> components_;
};

/// Builds one component, rejecting kinds that are illegal at the grade.
FramedComponent make_component(ComponentKind kind, std::int64_t twist, FramingGrade grade);

/// Multiset union. Throws GradeMismatchError when the grades differ.
FramedManifold disjoint_union(const FramedManifold& lhs, const FramedManifold& rhs);

/// Canonical normal form: components sorted by kind, then twist ascending.
FramedManifold normalize(const FramedManifold& m);

}  // namespace c2framed
