#pragma once

#include "c2framed/manifold.hpp"
#include "c2framed/stem_groups.hpp"

namespace c2framed {

// Exact evaluation of the equivariant Pontryagin-Thom isomorphism on framed
// manifolds. Every operation below that takes a manifold of a specific grade
// throws GradeMismatchError when handed the other grade.

/// Image of an R-framed manifold in the first equivariant stem. Summed over
/// components: S1[n] -> (n,0,0), C2xS1[n] -> (0,n,0), S2s[n] -> (0,n+1,1),
/// coordinates read mod 2.
Pi1Element pt_image_r(const FramedManifold& m);

/// Image of a sigma-framed manifold in the sigma-indexed stem. Summed over
/// components as ordinary integers: C2xS1[n] -> 0, S1s[n] -> n mod 2.
PiSigmaElement pt_image_sigma(const FramedManifold& m);

/// Two manifolds of the same grade are cobordant iff their images agree.
bool is_cobordant(const FramedManifold& lhs, const FramedManifold& rhs);

/// Replaces every S2s[n] with n != 0 by S2s[0] + C2xS1[n]; other components
/// are untouched. Preserves pt_image_r.
FramedManifold rewrite_antipodal(const FramedManifold& m);

/// Partition of an R-graded manifold into the components without a free
/// action (trivial circles) and those with one (free double and antipodal
/// circles). Their union recovers the input up to normal form.
struct TomDieckSplit {
    FramedManifold fixed_part;
    FramedManifold free_part;
};
TomDieckSplit tom_dieck_split_r(const FramedManifold& m);

/// Signed count of C2-fixed points of a sigma-framed manifold: S1s[n]
/// contributes 2 for odd n and 0 for even n; C2xS1 is free and contributes 0.
Omega0Element fixed_points_sigma(const FramedManifold& m);

/// Class of the underlying non-equivariant framed manifold in Z/2. Only the
/// parity of the underlying degree survives stabilization: S1[n] -> n,
/// C2xS1[n] -> 2n = 0, S2s[n] -> 2n+1 = 1, summed mod 2.
int forget_r(const FramedManifold& m);

}  // namespace c2framed
