#include "diocurve/ec.hpp"

#include <algorithm>

#include "diocurve/errors.hpp"

namespace diocurve {

Order Order::finite(int n) {
  if (n < 1 || n > 12) throw DomainError("finite point order outside 1..12");
  return Order(n);
}

int Order::value() const {
  if (!is_finite()) throw DomainError("value() on infinite order");
  return n_;
}

std::string Order::str() const {
  return is_finite() ? std::to_string(n_) : std::string("inf");
}

Curve Curve::from_shifts(const Rat& p, const Rat& q, const Rat& w) {
  if (p == q || p == w || q == w)
    throw DomainError("singular curve: repeated root");
  // (x+p)(x+q)(x+w) expanded.
  Rat a2 = p + q + w;
  Rat a4 = p * q + p * w + q * w;
  Rat a6 = p * q * w;
  return Curve(std::move(a2), std::move(a4), std::move(a6), true,
               {-p, -q, -w});
}

Curve Curve::from_roots(const Rat& e1, const Rat& e2, const Rat& e3) {
  return from_shifts(-e1, -e2, -e3);
}

Curve Curve::from_cubic(const Rat& a2, const Rat& a4, const Rat& a6) {
  // Cubic discriminant: zero iff a repeated (complex) root.
  Rat disc = Rat(18) * a2 * a4 * a6 - Rat(4) * a2.pow(3) * a6 +
             a2.pow(2) * a4.pow(2) - Rat(4) * a4.pow(3) -
             Rat(27) * a6.pow(2);
  if (disc.is_zero()) throw DomainError("singular curve: zero discriminant");
  return Curve(a2, a4, a6, false, {Rat(0), Rat(0), Rat(0)});
}

const std::array<Rat, 3>& Curve::roots() const {
  if (!split_)
    throw DomainError("curve was not constructed with split 2-torsion");
  return roots_;
}

bool on_curve(const Curve& c, const Point& pt) {
  if (pt.is_identity()) return true;
  return pt.y() * pt.y() == c.rhs(pt.x());
}

namespace {

void require_on_curve(const Curve& c, const Point& pt, const char* who) {
  if (!on_curve(c, pt))
    throw DomainError(std::string(who) + ": point not on curve");
}

// Group law without incidence checks; callers validate entry points once.
Point add_raw(const Curve& c, const Point& p1, const Point& p2) {
  if (p1.is_identity()) return p2;
  if (p2.is_identity()) return p1;
  Rat lambda;
  if (p1.x() == p2.x()) {
    if (p1.y() == -p2.y()) return Point::identity();  // inverse pair, incl. y=0
    // Tangent: lambda = (3x² + 2·a2·x + a4) / 2y.
    lambda = (Rat(3) * p1.x() * p1.x() + Rat(2) * c.a2() * p1.x() + c.a4()) /
             (Rat(2) * p1.y());
  } else {
    lambda = (p2.y() - p1.y()) / (p2.x() - p1.x());
  }
  Rat x3 = lambda * lambda - c.a2() - p1.x() - p2.x();
  Rat y3 = lambda * (p1.x() - x3) - p1.y();
  return Point::affine(std::move(x3), std::move(y3));
}

Point mul_raw(const Curve& c, long n, const Point& pt) {
  if (n == 0) return Point::identity();
  Point base = pt;
  if (n < 0) {
    base = base.is_identity() ? base : Point::affine(base.x(), -base.y());
    n = -n;
  }
  Point acc = Point::identity();
  while (n > 0) {
    if (n & 1) acc = add_raw(c, acc, base);
    n >>= 1;
    if (n) base = add_raw(c, base, base);
  }
  return acc;
}

}  // namespace

Point negate(const Curve& c, const Point& pt) {
  require_on_curve(c, pt, "negate");
  if (pt.is_identity()) return pt;
  return Point::affine(pt.x(), -pt.y());
}

Point add(const Curve& c, const Point& p1, const Point& p2) {
  require_on_curve(c, p1, "add");
  require_on_curve(c, p2, "add");
  return add_raw(c, p1, p2);
}

Point mul(const Curve& c, long n, const Point& pt) {
  require_on_curve(c, pt, "mul");
  return mul_raw(c, n, pt);
}

Order order_of(const Curve& c, const Point& pt) {
  require_on_curve(c, pt, "order_of");
  Point acc = pt;
  for (int n = 1; n <= 12; ++n) {
    if (acc.is_identity()) return Order::finite(n);
    acc = add_raw(c, acc, pt);
  }
  return Order::infinite();
}

ShortForm short_form(const Curve& c) {
  // x = X − a2/3 kills the quadratic term; points move by x_shift = a2/3.
  Rat shift = c.a2() / Rat(3);
  Rat A = c.a4() - c.a2() * c.a2() / Rat(3);
  Rat B = c.a6() - c.a2() * c.a4() / Rat(3) +
          Rat(2) * c.a2().pow(3) / Rat(27);
  return ShortForm{std::move(A), std::move(B), std::move(shift)};
}

Rat j_invariant(const Curve& c) {
  ShortForm sf = short_form(c);
  Rat a3 = Rat(4) * sf.A.pow(3);
  Rat denom = a3 + Rat(27) * sf.B * sf.B;
  // denom = −disc/16 ≠ 0 for nonsingular curves.
  return Rat(1728) * a3 / denom;
}

bool is_isomorphic_over_Q(const Curve& c1, const Curve& c2) {
  ShortForm f1 = short_form(c1);
  ShortForm f2 = short_form(c2);
  bool a1z = f1.A.is_zero(), a2z = f2.A.is_zero();
  bool b1z = f1.B.is_zero(), b2z = f2.B.is_zero();
  if (a1z != a2z || b1z != b2z) return false;
  if (a1z) return exact_root(f2.B / f1.B, 6).has_value();  // j = 0
  if (b1z) return exact_root(f2.A / f1.A, 4).has_value();  // j = 1728
  // Generic: u² = A1·B2 / (A2·B1) must be a rational square and
  // consistent with both u⁴ = A2/A1 and u⁶ = B2/B1.
  Rat v = (f1.A * f2.B) / (f2.A * f1.B);
  return is_perfect_square(v) && v * v == f2.A / f1.A &&
         v.pow(3) == f2.B / f1.B;
}

std::vector<Point> halves_of(const Curve& c, const Point& pt) {
  require_on_curve(c, pt, "halves_of");
  if (pt.is_identity())
    throw DomainError("halves_of: identity input (its halves are the 2-torsion)");
  const auto& roots = c.roots();
  std::array<Rat, 3> delta;
  for (int i = 0; i < 3; ++i) {
    Rat d2 = pt.x() - roots[i];
    if (!is_perfect_square(d2)) return {};
    delta[i] = sqrt_exact(d2);
  }
  std::vector<Point> out;
  for (int mask = 0; mask < 8; ++mask) {
    Rat d1 = (mask & 1) ? -delta[0] : delta[0];
    Rat d2 = (mask & 2) ? -delta[1] : delta[1];
    Rat d3 = (mask & 4) ? -delta[2] : delta[2];
    Rat xq = pt.x() + d1 * d2 + d1 * d3 + d2 * d3;
    Rat yq = (d1 + d2) * (d1 + d3) * (d2 + d3);
    Point q = Point::affine(std::move(xq), std::move(yq));
    if (!on_curve(c, q)) continue;
    if (mul_raw(c, 2, q) != pt) continue;
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

}  // namespace diocurve
