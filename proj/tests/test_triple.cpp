#include <doctest.h>

#include "diocurve/errors.hpp"
#include "diocurve/triple.hpp"

using namespace diocurve;

TEST_CASE("validation computes the pair roots") {
  Triple t = Triple::validate(Rat(1), Rat(3), Rat(8));
  CHECK(t.r() == Rat(2));
  CHECK(t.s() == Rat(3));
  CHECK(t.t() == Rat(5));
  CHECK(t.str() == "{1, 3, 8}");
  // ab + 1 = 0 is legal and gives r = 0.
  Triple z = Triple::validate(Rat(3), Rat(-1, 3), Rat(8, 3));
  CHECK(z.r() == Rat(0));
  CHECK(z.s() == Rat(3));
  CHECK(z.t() == Rat(1, 3));
}

TEST_CASE("validation errors carry the reason") {
  CHECK_THROWS_AS(Triple::validate(Rat(1), Rat(2), Rat(3)), InvalidTriple);
  try {
    Triple::validate(Rat(1), Rat(2), Rat(3));
  } catch (const InvalidTriple& e) {
    CHECK(e.reason() == InvalidTriple::Reason::nonsquare_pair);
    CHECK(std::string(e.what()).find("(a,b)") != std::string::npos);
  }
  try {
    Triple::validate(Rat(1), Rat(3), Rat(120));  // 3·120+1 = 361 ✓, 1·120+1 = 121 ✓, 1·3+1 = 4 ✓ — valid!
  } catch (const InvalidTriple&) {
    CHECK(false);
  }
  try {
    Triple::validate(Rat(1), Rat(3), Rat(7));
  } catch (const InvalidTriple& e) {
    // 1·7+1 = 8: the (a,c) pair fails.
    CHECK(std::string(e.what()).find("(a,c)") != std::string::npos);
  }
  CHECK_THROWS_AS(Triple::validate(Rat(0), Rat(3), Rat(8)), InvalidTriple);
  CHECK_THROWS_AS(Triple::validate(Rat(3), Rat(3), Rat(8)), InvalidTriple);
  try {
    Triple::validate(Rat(0), Rat(3), Rat(8));
  } catch (const InvalidTriple& e) {
    CHECK(e.reason() == InvalidTriple::Reason::zero_element);
  }
  try {
    Triple::validate(Rat(3), Rat(8), Rat(3));
  } catch (const InvalidTriple& e) {
    CHECK(e.reason() == InvalidTriple::Reason::duplicate_element);
  }
}

TEST_CASE("classical quadruples validate pairwise") {
  // Diophantus: {1/16, 33/16, 17/4, 105/16}.
  const Rat d1(1, 16), d2(33, 16), d3(17, 4), d4(105, 16);
  CHECK_NOTHROW(Triple::validate(d1, d2, d3));
  CHECK_NOTHROW(Triple::validate(d1, d2, d4));
  CHECK_NOTHROW(Triple::validate(d1, d3, d4));
  CHECK_NOTHROW(Triple::validate(d2, d3, d4));
  // Fermat: {1, 3, 8, 120}.
  const Rat f1(1), f2(3), f3(8), f4(120);
  CHECK_NOTHROW(Triple::validate(f1, f2, f3));
  CHECK_NOTHROW(Triple::validate(f1, f2, f4));
  CHECK_NOTHROW(Triple::validate(f1, f3, f4));
  CHECK_NOTHROW(Triple::validate(f2, f3, f4));
}

TEST_CASE("set equality ignores order") {
  Triple t1 = Triple::validate(Rat(1), Rat(3), Rat(8));
  Triple t2 = Triple::validate(Rat(8), Rat(1), Rat(3));
  Triple t3 = Triple::validate(Rat(1), Rat(3), Rat(120));
  CHECK(set_equal(t1, t2));
  CHECK_FALSE(set_equal(t1, t3));
}

TEST_CASE("induced curve shifts are the pair products") {
  Curve c = induced_curve(Triple::validate(Rat(1), Rat(3), Rat(8)));
  CHECK(c == Curve::from_shifts(Rat(3), Rat(8), Rat(24)));
  Curve c2 = induced_curve(Triple::validate(Rat(3), Rat(-1, 3), Rat(8, 3)));
  CHECK(c2 == Curve::from_shifts(Rat(-1), Rat(8), Rat(-8, 9)));
  Curve c3 = induced_curve(Triple::validate(Rat(4, 3), Rat(-3, 4), Rat(7, 12)));
  CHECK(c3 == Curve::from_shifts(Rat(-1), Rat(7, 9), Rat(-7, 16)));
}

TEST_CASE("negating all elements keeps the induced curve") {
  Triple t = Triple::validate(Rat(1), Rat(3), Rat(8));
  Triple neg = Triple::validate(Rat(-1), Rat(-3), Rat(-8));
  CHECK(induced_curve(t) == induced_curve(neg));
}

TEST_CASE("canonical points") {
  Triple t = Triple::validate(Rat(1), Rat(3), Rat(8));
  Curve c = induced_curve(t);
  CanonicalPoints pts = canonical_points(t);
  CHECK(pts.A == Point::affine(Rat(-24), Rat(0)));
  CHECK(pts.B == Point::affine(Rat(-8), Rat(0)));
  CHECK(pts.C == Point::affine(Rat(-3), Rat(0)));
  CHECK(pts.P == Point::affine(Rat(0), Rat(24)));
  CHECK(pts.S == Point::affine(Rat(1), Rat(30)));
  CHECK(pts.R == Point::affine(Rat(32), Rat(280)));
  CHECK(mul(c, 2, pts.R) == pts.S);
  // P is never 2-torsion: its y-coordinate is abc ≠ 0.
  CHECK(order_of(c, pts.P) != Order::finite(2));

  // rst = 0 collapses S onto the 2-torsion point C.
  Triple z = Triple::validate(Rat(3), Rat(-1, 3), Rat(8, 3));
  CanonicalPoints zp = canonical_points(z);
  CHECK(zp.S == Point::affine(Rat(1), Rat(0)));
  CHECK(zp.S == zp.C);
  CHECK(zp.R == Point::affine(Rat(2), Rat(10, 3)));
  CHECK(mul(induced_curve(z), 2, zp.R) == zp.S);
}

TEST_CASE("transport from the (ax+1)(bx+1)(cx+1) model") {
  Triple t = Triple::validate(Rat(1), Rat(3), Rat(8));
  CHECK(transform_to_Eprime(t, Point::affine(Rat(1, 24), Rat(30, 24))) ==
        Point::affine(Rat(1), Rat(30)));
  CHECK(transform_to_Eprime(t, Point::affine(Rat(0), Rat(1))) ==
        Point::affine(Rat(0), Rat(24)));
  CHECK(transform_to_Eprime(t, Point::affine(Rat(-1), Rat(0))) ==
        Point::affine(Rat(-24), Rat(0)));
  CHECK(transform_to_Eprime(t, Point::identity()) == Point::identity());
  CHECK_THROWS_AS(transform_to_Eprime(t, Point::affine(Rat(1), Rat(1))),
                  DomainError);
  // The Fermat-extension abscissa x = 120 lands on x′ = 2880.
  Point big = transform_to_Eprime(
      t, Point::affine(Rat(120), Rat(11 * 19 * 31)));
  CHECK(big.x() == Rat(2880));
  CHECK(on_curve(induced_curve(t), big));
}

TEST_CASE("regularity") {
  auto reg = is_regular(Triple::validate(Rat(1), Rat(3), Rat(8)));
  CHECK(reg.regular);
  CHECK(reg.sign == 1);
  // r = 0: both signs coincide, reported as +.
  auto reg0 = is_regular(Triple::validate(Rat(3), Rat(-1, 3), Rat(8, 3)));
  CHECK(reg0.regular);
  CHECK(reg0.sign == 1);
  auto reg1 = is_regular(Triple::validate(Rat(1, 16), Rat(33, 16), Rat(17, 4)));
  CHECK(reg1.regular);
  CHECK(reg1.sign == 1);
  CHECK_FALSE(
      is_regular(Triple::validate(Rat(1, 16), Rat(33, 16), Rat(105, 16)))
          .regular);
  // The minus sign: {3, 8, 1} has 1 = 3 + 8 − 2·√(25).
  auto regm = is_regular(Triple::validate(Rat(3), Rat(8), Rat(1)));
  CHECK(regm.regular);
  CHECK(regm.sign == -1);
}

TEST_CASE("regularity matches S = ±2P on the induced curve") {
  // The branch-signed identity: for c = a+b+2r̂ (r̂ = sign·r), the roots
  // s̃ = a+r̂ and t̃ = b+r̂ satisfy s̃² = ac+1, t̃² = bc+1, and the point
  // (1, r̂s̃t̃) is exactly −2P. The canonical S = (1, rst) with
  // nonnegative roots is that point or its negative, depending on the
  // sign of r̂s̃t̃ — e.g. the permutation {3,8,1} of Fermat's triple takes
  // the minus branch yet still has S = −2P.
  auto link = [](const Triple& t) {
    Curve c = induced_curve(t);
    CanonicalPoints pts = canonical_points(t);
    Point twoP = mul(c, 2, pts.P);
    Regularity reg = is_regular(t);
    bool s_is_double = pts.S == twoP || pts.S == negate(c, twoP);
    CHECK(reg.regular == s_is_double);
    if (reg.regular) {
      Rat rh = reg.sign > 0 ? t.r() : -t.r();
      Rat sh = t.a() + rh;
      Rat th = t.b() + rh;
      CHECK(sh * sh == t.a() * t.c() + Rat(1));
      CHECK(th * th == t.b() * t.c() + Rat(1));
      CHECK(Point::affine(Rat(1), rh * sh * th) == negate(c, twoP));
    }
  };
  link(Triple::validate(Rat(1), Rat(3), Rat(8)));
  link(Triple::validate(Rat(3), Rat(8), Rat(1)));
  link(Triple::validate(Rat(3), Rat(-1, 3), Rat(8, 3)));
  // Mixed signs can flip the canonical S onto +2P: this regular triple
  // (plus branch) has S = 2P because s̃ = a+r̂ = −6 is negative.
  link(Triple::validate(Rat(-20, 3), Rat(1, 12), Rat(-21, 4)));
  link(Triple::validate(Rat(1, 16), Rat(33, 16), Rat(105, 16)));  // irregular
  link(Triple::validate(Rat(1), Rat(8), Rat(120)));               // irregular
  Triple flip = Triple::validate(Rat(-20, 3), Rat(1, 12), Rat(-21, 4));
  CHECK(canonical_points(flip).S ==
        mul(induced_curve(flip), 2, canonical_points(flip).P));
}

TEST_CASE("regular role search") {
  CHECK(regular_role(Triple::validate(Rat(1), Rat(3), Rat(8))) == 2);
  // c = a + b ± 2√(ab+1) squares to the symmetric equation
  // a² + b² + c² − 2ab − 2ac − 2bc = 4, so every permutation of a regular
  // triple is regular with c in the sum role.
  CHECK(regular_role(Triple::validate(Rat(8), Rat(1), Rat(3))) == 2);
  CHECK(regular_role(Triple::validate(Rat(1), Rat(8), Rat(3))) == 2);
  CHECK(is_regular(Triple::validate(Rat(8), Rat(1), Rat(3))).regular);
  CHECK_FALSE(regular_role(Triple::validate(Rat(1), Rat(8), Rat(120))).has_value());
}
