#pragma once

#include <cstdint>

namespace c2framed {

/// Element of the first equivariant stable stem, (Z/2)^3, in tom Dieck
/// coordinates: (pi_1 of the sphere spectrum, H_0(BC2; Z/2), H_1(BC2; Z)).
/// Coordinates take values in {0,1}; addition is coordinatewise mod 2 and
/// every element is its own inverse.
struct Pi1Element {
    std::uint8_t pi1_sphere = 0;
    std::uint8_t h0_bc2 = 0;
    std::uint8_t h1_bc2 = 0;

    friend constexpr Pi1Element operator+(Pi1Element a, Pi1Element b) {
        return {static_cast<std::uint8_t>(a.pi1_sphere ^ b.pi1_sphere),
                static_cast<std::uint8_t>(a.h0_bc2 ^ b.h0_bc2),
                static_cast<std::uint8_t>(a.h1_bc2 ^ b.h1_bc2)};
    }
    constexpr Pi1Element& operator+=(Pi1Element other) { return *this = *this + other; }
    constexpr Pi1Element operator-() const { return *this; }

    friend constexpr bool operator==(const Pi1Element&, const Pi1Element&) = default;
};

/// Element of the sigma-indexed equivariant stable stem, which is infinite
/// cyclic; the generator 1 is the class of the equivariant Hopf map.
struct PiSigmaElement {
    std::int64_t value = 0;

    friend constexpr PiSigmaElement operator+(PiSigmaElement a, PiSigmaElement b) {
        return {a.value + b.value};
    }
    constexpr PiSigmaElement& operator+=(PiSigmaElement o) { return *this = *this + o; }
    constexpr PiSigmaElement operator-() const { return {-value}; }

    friend constexpr bool operator==(const PiSigmaElement&, const PiSigmaElement&) = default;
};

/// Element of the zeroth framed cobordism group, an integer signed point count.
struct Omega0Element {
    std::int64_t value = 0;

    friend constexpr Omega0Element operator+(Omega0Element a, Omega0Element b) {
        return {a.value + b.value};
    }
    constexpr Omega0Element& operator+=(Omega0Element o) { return *this = *this + o; }
    constexpr Omega0Element operator-() const { return {-value}; }

    friend constexpr bool operator==(const Omega0Element&, const Omega0Element&) = default;
};

enum class TomDieckSummand {
    Pi1Sphere,
    H0,
    H1,
};

/// Projects onto the named coordinate of the splitting; returns 0 or 1.
constexpr int tom_dieck_project(Pi1Element a, TomDieckSummand summand) {
    switch (summand) {
        case TomDieckSummand::Pi1Sphere: return a.pi1_sphere;
        case TomDieckSummand::H0: return a.h0_bc2;
        case TomDieckSummand::H1: return a.h1_bc2;
    }
    return 0;
}

}  // namespace c2framed
