#include "c2framed/pt_map.hpp"

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "c2framed/errors.hpp"

namespace c2framed {

namespace {

// Twist parity as an element of {0,1}; correct for negative twists.
int mod2(std::int64_t n) { return n % 2 != 0 ? 1 : 0; }

void require_grade(const FramedManifold& m, FramingGrade grade, const char* op) {
    if (m.grade() != grade) {
        throw GradeMismatchError(std::string(op) + " takes a manifold graded by " +
                                 std::string(grade_name(grade)) + ", got grade " +
                                 std::string(grade_name(m.grade())));
    }
}

// Rows of the classification table for the R-graded stem.
Pi1Element component_image_r(const FramedComponent& c) {
    const auto bit = [](int b) { return static_cast<std::uint8_t>(b); };
    switch (c.kind) {
        case ComponentKind::TrivialCircle:
            return {bit(mod2(c.twist)), 0, 0};
        case ComponentKind::FreeDoubleCircle:
            return {0, bit(mod2(c.twist)), 0};
        case ComponentKind::AntipodalCircle:
            return {0, bit(1 ^ mod2(c.twist)), 1};
        case ComponentKind::ReflectionCircle:
            break;  // unreachable at grade R
    }
    std::abort();
}

}  // namespace

Pi1Element pt_image_r(const FramedManifold& m) {
    require_grade(m, FramingGrade::TrivialR, "pt_image_r");
    Pi1Element image;
    for (const auto& c : m.components()) image += component_image_r(c);
    return image;
}

PiSigmaElement pt_image_sigma(const FramedManifold& m) {
    require_grade(m, FramingGrade::SignSigma, "pt_image_sigma");
    PiSigmaElement image;
    for (const auto& c : m.components()) {
        if (c.kind == ComponentKind::ReflectionCircle) image += PiSigmaElement{mod2(c.twist)};
        // FreeDoubleCircle is null regardless of its twist.
    }
    return image;
}

bool is_cobordant(const FramedManifold& lhs, const FramedManifold& rhs) {
    if (lhs.grade() != rhs.grade()) {
        throw GradeMismatchError("cobordance is only defined between manifolds of one grade");
    }
    if (lhs.grade() == FramingGrade::TrivialR) return pt_image_r(lhs) == pt_image_r(rhs);
    return pt_image_sigma(lhs) == pt_image_sigma(rhs);
}

FramedManifold rewrite_antipodal(const FramedManifold& m) {
    require_grade(m, FramingGrade::TrivialR, "rewrite_antipodal");
    std::vector<FramedComponent> out;
    out.reserve(m.size());
    for (const auto& c : m.components()) {
        if (c.kind == ComponentKind::AntipodalCircle && c.twist != 0) {
            out.push_back({ComponentKind::AntipodalCircle, 0});
            out.push_back({ComponentKind::FreeDoubleCircle, c.twist});
        } else {
            out.push_back(c);
        }
    }
    return {m.grade(), std::move(out)};
}

TomDieckSplit tom_dieck_split_r(const FramedManifold& m) {
    require_grade(m, FramingGrade::TrivialR, "tom_dieck_split_r");
    std::vector<FramedComponent> fixed;
    std::vector<FramedComponent> free_comps;
    for (const auto& c : m.components()) {
        (c.kind == ComponentKind::TrivialCircle ? fixed : free_comps).push_back(c);
    }
    return {FramedManifold(m.grade(), std::move(fixed)),
            FramedManifold(m.grade(), std::move(free_comps))};
}

Omega0Element fixed_points_sigma(const FramedManifold& m) {
    require_grade(m, FramingGrade::SignSigma, "fixed_points_sigma");
    Omega0Element count;
    for (const auto& c : m.components()) {
        if (c.kind == ComponentKind::ReflectionCircle && mod2(c.twist) == 1) {
            count += Omega0Element{2};
        }
    }
    return count;
}

int forget_r(const FramedManifold& m) {
    require_grade(m, FramingGrade::TrivialR, "forget_r");
    int parity = 0;
    for (const auto& c : m.components()) {
        switch (c.kind) {
            case ComponentKind::TrivialCircle: parity ^= mod2(c.twist); break;
            case ComponentKind::FreeDoubleCircle: break;  // underlying degree 2n
            case ComponentKind::AntipodalCircle: parity ^= 1; break;  // underlying degree 2n+1
            case ComponentKind::ReflectionCircle: break;  // unreachable at grade R
        }
    }
    return parity;
}

}  // namespace c2framed
