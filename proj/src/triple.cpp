#include "diocurve/triple.hpp"

#include <algorithm>
#include <array>

#include "diocurve/errors.hpp"

namespace diocurve {

namespace {

Rat pair_root(const Rat& x, const Rat& y, const char* xn, const char* yn) {
  Rat v = x * y + Rat(1);
  if (v.sign() < 0 || !is_perfect_square(v))
    throw InvalidTriple(
        InvalidTriple::Reason::nonsquare_pair,
        std::string("pair (") + xn + "," + yn + "): " + (x * y).str() +
            " + 1 = " + v.str() + " is not a rational square");
  return sqrt_exact(v);
}

}  // namespace

Triple Triple::validate(const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw InvalidTriple(InvalidTriple::Reason::zero_element,
                        "triple elements must be nonzero");
  if (a == b || a == c || b == c)
    throw InvalidTriple(InvalidTriple::Reason::duplicate_element,
                        "triple elements must be pairwise distinct");
  Rat r = pair_root(a, b, "a", "b");
  Rat s = pair_root(a, c, "a", "c");
  Rat t = pair_root(b, c, "b", "c");
  return Triple(a, b, c, std::move(r), std::move(s), std::move(t));
}

std::string Triple::str() const {
  return "{" + a_.str() + ", " + b_.str() + ", " + c_.str() + "}";
}

bool set_equal(const Triple& t1, const Triple& t2) {
  std::array<Rat, 3> u{t1.a(), t1.b(), t1.c()};
  std::array<Rat, 3> v{t2.a(), t2.b(), t2.c()};
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  return u == v;
}

Curve induced_curve(const Triple& tr) {
  return Curve::from_shifts(tr.a() * tr.b(), tr.a() * tr.c(),
                            tr.b() * tr.c());
}

CanonicalPoints canonical_points(const Triple& tr) {
  Curve c = induced_curve(tr);
  Rat abc = tr.a() * tr.b() * tr.c();
  CanonicalPoints pts{
      Point::affine(-tr.b() * tr.c(), Rat(0)),
      Point::affine(-tr.a() * tr.c(), Rat(0)),
      Point::affine(-tr.a() * tr.b(), Rat(0)),
      Point::affine(Rat(0), abc),
      Point::affine(Rat(1), tr.r() * tr.s() * tr.t()),
      Point::affine(tr.r() * tr.s() + tr.r() * tr.t() + tr.s() * tr.t() + Rat(1),
                    (tr.r() + tr.s()) * (tr.r() + tr.t()) * (tr.s() + tr.t()))};
  for (const Point* p : {&pts.A, &pts.B, &pts.C, &pts.P, &pts.S, &pts.R})
    if (!on_curve(c, *p))
      throw Error("canonical point off the induced curve for " + tr.str());
  if (mul(c, 2, pts.R) != pts.S)
    throw Error("2R != S on the induced curve for " + tr.str());
  return pts;
}

Point transform_to_Eprime(const Triple& tr, const Point& pt_on_E) {
  if (pt_on_E.is_identity()) return pt_on_E;
  const Rat& x = pt_on_E.x();
  const Rat& y = pt_on_E.y();
  Rat rhs = (tr.a() * x + Rat(1)) * (tr.b() * x + Rat(1)) *
            (tr.c() * x + Rat(1));
  if (y * y != rhs)
    throw DomainError("transform_to_Eprime: point not on y² = (ax+1)(bx+1)(cx+1)");
  Rat abc = tr.a() * tr.b() * tr.c();
  return Point::affine(abc * x, abc * y);
}

Regularity is_regular(const Triple& tr) {
  Rat two_r = Rat(2) * tr.r();
  if (tr.c() == tr.a() + tr.b() + two_r) return {true, +1};
  if (tr.c() == tr.a() + tr.b() - two_r) return {true, -1};
  return {false, 0};
}

std::optional<int> regular_role(const Triple& tr) {
  // The written role (c against a,b) first, then the other two.
  if (is_regular(tr).regular) return 2;
  auto check = [](const Rat& x, const Rat& y, const Rat& z) {
    // z plays c; pair root of {x,y} needed.
    Rat v = x * y + Rat(1);
    if (!is_perfect_square(v)) return false;  // unreachable for valid triples
    Rat root2 = Rat(2) * sqrt_exact(v);
    return z == x + y + root2 || z == x + y - root2;
  };
  if (check(tr.b(), tr.c(), tr.a())) return 0;
  if (check(tr.a(), tr.c(), tr.b())) return 1;
  return std::nullopt;
}

}  // namespace diocurve
