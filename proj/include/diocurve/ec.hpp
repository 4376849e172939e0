#pragma once

#include <array>
#include <vector>

#include "diocurve/rat.hpp"

namespace diocurve {

/// Rational point on a curve: the identity, or an affine pair.
class Point {
 public:
  static Point identity() { return Point(); }
  static Point affine(Rat x, Rat y) { return Point(std::move(x), std::move(y)); }

  bool is_identity() const { return inf_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf_ != b.inf_) return false;
    if (a.inf_) return true;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  Point() : inf_(true) {}
  Point(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool inf_;
  Rat x_, y_;
};

/// Order of a rational point: finite (1..12 by Mazur) or infinite.
class Order {
 public:
  static Order finite(int n);
  static Order infinite() { return Order(0); }

  bool is_finite() const { return n_ != 0; }
  int value() const;  // finite orders only

  std::string str() const;  // "4" or "inf"

  friend bool operator==(const Order& a, const Order& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Order& a, const Order& b) { return a.n_ != b.n_; }

 private:
  explicit Order(int n) : n_(n) {}
  int n_;  // 0 encodes infinite
};

/// Nonsingular cubic y² = x³ + a2·x² + a4·x + a6 over the rationals.
/// Curves built from shifts/roots additionally know their three rational
/// 2-torsion abscissae, which the halving machinery requires.
class Curve {
 public:
  /// y² = (x+p)(x+q)(x+w); p,q,w must be pairwise distinct.
  static Curve from_shifts(const Rat& p, const Rat& q, const Rat& w);
  /// y² = (x−e1)(x−e2)(x−e3).
  static Curve from_roots(const Rat& e1, const Rat& e2, const Rat& e3);
  /// y² = x³ + a2·x² + a4·x + a6; must be nonsingular. Roots unknown.
  static Curve from_cubic(const Rat& a2, const Rat& a4, const Rat& a6);

  const Rat& a2() const { return a2_; }
  const Rat& a4() const { return a4_; }
  const Rat& a6() const { return a6_; }

  bool has_split_two_torsion() const { return split_; }
  /// The three rational roots of the cubic (x-coordinates of 2-torsion).
  const std::array<Rat, 3>& roots() const;

  Rat rhs(const Rat& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }
  friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

 private:
  Curve(Rat a2, Rat a4, Rat a6, bool split, std::array<Rat, 3> roots)
      : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)),
        split_(split), roots_(std::move(roots)) {}

  Rat a2_, a4_, a6_;
  bool split_;
  std::array<Rat, 3> roots_;
};

bool on_curve(const Curve& c, const Point& pt);

/// (x,y) ↦ (x,−y). Throws DomainError off-curve.
Point negate(const Curve& c, const Point& pt);

/// Chord-tangent sum. Throws DomainError off-curve.
Point add(const Curve& c, const Point& p1, const Point& p2);

/// n·pt by double-and-add; negative n via negation, 0·pt = identity.
Point mul(const Curve& c, long n, const Point& pt);

/// Smallest n in 1..12 with n·pt = identity, else infinite (Mazur).
Order order_of(const Curve& c, const Point& pt);

/// Depressed model Y² = X³ + A·X + B with transport (x,y) ↦ (x+x_shift, y).
struct ShortForm {
  Rat A, B, x_shift;
};
ShortForm short_form(const Curve& c);

Rat j_invariant(const Curve& c);

/// True iff the short forms differ by (A,B) ↦ (u⁴A, u⁶B), u ∈ ℚ*.
bool is_isomorphic_over_Q(const Curve& c1, const Curve& c2);

/// All rational Q with 2Q = pt (possibly empty). Requires split
/// 2-torsion and pt ≠ identity; halvability reduces to x₀ − eᵢ being a
/// perfect square for each root eᵢ, and candidates built from the sign
/// choices of δᵢ = √(x₀−eᵢ) are validated by doubling.
std::vector<Point> halves_of(const Curve& c, const Point& pt);

}  // namespace diocurve
