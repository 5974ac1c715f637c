#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "c2framed/errors.hpp"
#include "c2framed/manifold.hpp"

using namespace c2framed;

namespace {

constexpr auto kGradeR = FramingGrade::TrivialR;
constexpr auto kGradeSigma = FramingGrade::SignSigma;

FramedManifold random_manifold(FramingGrade grade, std::mt19937_64& rng) {
    static const std::vector<ComponentKind> r_kinds = {
        ComponentKind::TrivialCircle, ComponentKind::FreeDoubleCircle,
        ComponentKind::AntipodalCircle};
    static const std::vector<ComponentKind> sigma_kinds = {
        ComponentKind::FreeDoubleCircle, ComponentKind::ReflectionCircle};
    const auto& kinds = grade == kGradeR ? r_kinds : sigma_kinds;

    std::uniform_int_distribution<std::size_t> size_dist(0, 6);
    std::uniform_int_distribution<std::size_t> kind_dist(0, kinds.size() - 1);
    std::uniform_int_distribution<std::int64_t> twist_dist(-10, 10);

    std::vector<FramedComponent> comps;
    const std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        comps.push_back(make_component(kinds[kind_dist(rng)], twist_dist(rng), grade));
    }
    return {grade, std::move(comps)};
}

}  // namespace

TEST_CASE("make_component enforces kind/grade legality") {
    const auto c = make_component(ComponentKind::TrivialCircle, 3, kGradeR);
    CHECK(c.kind == ComponentKind::TrivialCircle);
    CHECK(c.twist == 3);

    CHECK_THROWS_AS(make_component(ComponentKind::ReflectionCircle, 1, kGradeR),
                    GradeMismatchError);
    CHECK_THROWS_AS(make_component(ComponentKind::TrivialCircle, 0, kGradeSigma),
                    GradeMismatchError);
    CHECK_THROWS_AS(make_component(ComponentKind::AntipodalCircle, 2, kGradeSigma),
                    GradeMismatchError);

    // negative twists are legal, and C2xS1 lives at both grades
    const auto free_sigma = make_component(ComponentKind::FreeDoubleCircle, -2, kGradeSigma);
    CHECK(free_sigma.twist == -2);
    CHECK_NOTHROW(make_component(ComponentKind::FreeDoubleCircle, -2, kGradeR));
}

TEST_CASE("manifold constructor validates every component") {
    CHECK_THROWS_AS(FramedManifold(kGradeSigma,
                                   {{ComponentKind::ReflectionCircle, 1},
                                    {ComponentKind::AntipodalCircle, 0}}),
                    GradeMismatchError);
    const FramedManifold empty(kGradeR);
    CHECK(empty.empty());
}

TEST_CASE("disjoint_union is a multiset union") {
    const FramedManifold a(kGradeR, {{ComponentKind::AntipodalCircle, 0}});
    const FramedManifold b(kGradeR, {{ComponentKind::FreeDoubleCircle, 1}});
    const auto ab = disjoint_union(a, b);
    CHECK(ab.size() == 2);

    // unit law
    CHECK(disjoint_union(a, FramedManifold(kGradeR)) == a);

    // multiplicity is preserved
    const FramedManifold s(kGradeSigma, {{ComponentKind::ReflectionCircle, 1}});
    const auto ss = disjoint_union(s, s);
    CHECK(ss.size() == 2);
    CHECK(std::count(ss.components().begin(), ss.components().end(),
                     FramedComponent{ComponentKind::ReflectionCircle, 1}) == 2);

    CHECK_THROWS_AS(disjoint_union(a, s), GradeMismatchError);
}

TEST_CASE("normalize sorts by kind then twist") {
    const FramedManifold m(kGradeR, {{ComponentKind::FreeDoubleCircle, 1},
                                     {ComponentKind::TrivialCircle, 0}});
    const auto n = normalize(m);
    REQUIRE(n.size() == 2);
    CHECK(n.components()[0] == FramedComponent{ComponentKind::TrivialCircle, 0});
    CHECK(n.components()[1] == FramedComponent{ComponentKind::FreeDoubleCircle, 1});

    const FramedManifold twisted(kGradeR, {{ComponentKind::TrivialCircle, 5},
                                           {ComponentKind::TrivialCircle, -3}});
    const auto t = normalize(twisted);
    CHECK(t.components()[0].twist == -3);
    CHECK(t.components()[1].twist == 5);
}

TEST_CASE("monoid laws hold up to normal form") {
    std::mt19937_64 rng(20260809);
    for (auto grade : {kGradeR, kGradeSigma}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_manifold(grade, rng);
            const auto b = random_manifold(grade, rng);
            const auto c = random_manifold(grade, rng);

            CHECK(normalize(disjoint_union(disjoint_union(a, b), c)) ==
                  normalize(disjoint_union(a, disjoint_union(b, c))));
            CHECK(normalize(disjoint_union(a, b)) == normalize(disjoint_union(b, a)));
            CHECK(disjoint_union(a, FramedManifold(grade)) == a);

            // idempotence and multiset soundness of the normal form
            CHECK(normalize(normalize(a)) == normalize(a));
            auto sorted_original = std::vector<FramedComponent>(a.components().begin(),
                                                                a.components().end());
            std::sort(sorted_original.begin(), sorted_original.end());
            const auto norm = normalize(a);
            CHECK(std::equal(sorted_original.begin(), sorted_original.end(),
                             norm.components().begin(), norm.components().end()));
        }
    }
}

TEST_CASE("equality is normal-form equality") {
    const FramedManifold a(kGradeR, {{ComponentKind::TrivialCircle, 1},
                                     {ComponentKind::AntipodalCircle, 0}});
    const FramedManifold b(kGradeR, {{ComponentKind::AntipodalCircle, 0},
                                     {ComponentKind::TrivialCircle, 1}});
    CHECK(a == b);
    CHECK(FramedManifold(kGradeR) == FramedManifold(kGradeR));
    CHECK_FALSE(FramedManifold(kGradeR) == FramedManifold(kGradeSigma));

    const FramedManifold c(kGradeR, {{ComponentKind::TrivialCircle, 2},
                                     {ComponentKind::AntipodalCircle, 0}});
    CHECK_FALSE(a == c);
}
