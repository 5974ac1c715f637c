#pragma once

#include <string>
#include <string_view>

#include "c2framed/manifold.hpp"

namespace c2framed {

/// Parses a manifold expression at the given grade.
///
/// Grammar (whitespace between tokens is insignificant):
///
///   manifold  := <empty> | term ('+' term)*
///   term      := [count '*'] generator '[' signed-int ']'
///   generator := 'S1' | 'C2xS1' | 'S2s' | 'S1s'
///   count     := positive integer
///
/// The empty string denotes the empty manifold. Counts expand to repeated
/// components ("3*S1s[1]" is three copies of S1s[1]) and are capped at 10^6.
/// Twists must fit in a signed 64-bit integer; out-of-range literals are
/// rejected, never wrapped.
///
/// Throws ParseError on malformed input and GradeMismatchError when a
/// generator is illegal at the grade.
FramedManifold parse_manifold(std::string_view text, FramingGrade grade);

/// Canonical text form: normalized component order, runs of equal components
/// collapsed to 'count*generator[twist]'. The empty manifold prints as the
/// empty string. parse_manifold(format_manifold(m), m.grade()) == m for all m.
std::string format_manifold(const FramedManifold& m);

}  // namespace c2framed
