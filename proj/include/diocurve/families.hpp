#pragma once

#include <array>

#include "diocurve/triple.hpp"

namespace diocurve {

/// Mixed-sign family {a, −1/a, c} with a = (ut+1)/(t−u),
/// c = 4ut/((ut+1)(t−u)). Degenerate when t = u, ut = −1, or an element
/// collapses to zero / a duplicate.
Triple mixed_sign_family(const Rat& u, const Rat& t);

/// One-parameter family whose induced curves carry torsion Z/2 x Z/6:
///   a = −2r(r−1)(r+1)/(2r²−1),
///   b = −(2r²−1)/(2r),
///   c = (2r−1)(2r+1)/(2r(2r²−1)).
/// Degenerate at r ∈ {0, ±1, ±1/2} and 2r² = 1.
Triple z2z6_family(const Rat& r);

/// The same family re-parametrized:
///   a = −t(t−2)(t+2)/(2(t²−2)),
///   b = 2(t−1)(t+1)/((t²−2)t),
///   c = −(t²−2)/(2t).
/// Substituting r = 1/t into z2z6_family gives (−b, −c, −a), the global
/// negation of this triple, so both induce the same curve.
/// Degenerate at t ∈ {0, ±1, ±2} (t² = 2 has no rational solution).
Triple z2z6_family_t(const Rat& t);

/// One-parameter family with torsion Z/2 x Z/8:
///   a = 2T/(T²−1), b = (1−T²)/(2T), c = (6T²−T⁴−1)/(2T(T²−1)).
/// ab = −1 identically. Degenerate at T ∈ {0, ±1} and where c collides
/// with a or b.
Triple z2z8_family(const Rat& T);

enum class FamilyTag { MixedSign, Z2Z6a, Z2Z6t, Z2Z8T };

/// Dispatch by tag; MixedSign takes (params[0], params[1]) = (u,t),
/// the others use params[0].
Triple make_family(FamilyTag tag, const std::array<Rat, 2>& params);

/// Exact signs of (a, b, c), each in {−1, +1}.
std::array<int, 3> sign_pattern(const Triple& tr);

bool all_same_sign(const Triple& tr);

}  // namespace diocurve
