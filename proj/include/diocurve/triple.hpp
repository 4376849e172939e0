#pragma once

#include <optional>

#include "diocurve/ec.hpp"
#include "diocurve/rat.hpp"

namespace diocurve {

/// Rational Diophantine triple {a,b,c}: pairwise distinct, nonzero, and
/// ab+1, ac+1, bc+1 all rational squares. Stores the nonnegative roots
/// r, s, t once at validation; several identities downstream are
/// sign-sensitive, so the convention is fixed here and nowhere else.
class Triple {
 public:
  static Triple validate(const Rat& a, const Rat& b, const Rat& c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& r() const { return r_; }  // √(ab+1)
  const Rat& s() const { return s_; }  // √(ac+1)
  const Rat& t() const { return t_; }  // √(bc+1)

  std::string str() const;  // "{a, b, c}"

 private:
  Triple(Rat a, Rat b, Rat c, Rat r, Rat s, Rat t)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {}

  Rat a_, b_, c_, r_, s_, t_;
};

/// Equality as unordered sets (search output deduplication).
bool set_equal(const Triple& t1, const Triple& t2);

/// The induced curve y² = (x+ab)(x+ac)(x+bc).
Curve induced_curve(const Triple& tr);

/// The named points of the induced curve. R satisfies 2R = S; the
/// closed form below is one specific rational half (others differ by
/// 2-torsion).
struct CanonicalPoints {
  Point A, B, C;  // (−bc,0), (−ac,0), (−ab,0)
  Point P;        // (0, abc)
  Point S;        // (1, rst)
  Point R;        // (rs+rt+st+1, (r+s)(r+t)(s+t))
};
CanonicalPoints canonical_points(const Triple& tr);

/// Transport a point from y² = (ax+1)(bx+1)(cx+1) to the induced curve:
/// (x,y) ↦ (abc·x, abc·y).
Point transform_to_Eprime(const Triple& tr, const Point& pt_on_E);

/// c = a+b+sign·2r with sign ∈ {+1,−1}. Regular triples are exactly
/// those with S = ±2P on the induced curve; the signed form uses the
/// branch roots r̂ = sign·r, s̃ = a+r̂, t̃ = b+r̂ (s̃² = ac+1, t̃² = bc+1),
/// for which (1, r̂s̃t̃) = −2P always. The canonical S = (1, rst) with
/// nonnegative roots equals −2P when r̂s̃t̃ ≥ 0 and +2P otherwise, so the
/// branch sign alone does not determine which; see the regularity tests.
/// With r = 0 both signs coincide; +1 is reported.
struct Regularity {
  bool regular;
  int sign;  // meaningful only when regular
};
Regularity is_regular(const Triple& tr);

/// Checks the three role assignments (which element plays "c").
/// Squaring c = a+b±2r gives a²+b²+c²−2ab−2ac−2bc = 4, which is
/// symmetric in a,b,c: regularity does not depend on the assignment, so
/// this returns 2 (the first role checked) for any regular triple and
/// nothing otherwise.
std::optional<int> regular_role(const Triple& tr);

}  // namespace diocurve
