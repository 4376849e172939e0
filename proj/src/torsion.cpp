#include "diocurve/torsion.hpp"

#include <algorithm>

#include "diocurve/errors.hpp"

namespace diocurve {

std::string to_string(TorsionClass tc) {
  switch (tc) {
    case TorsionClass::Z2xZ2: return "Z2xZ2";
    case TorsionClass::Z2xZ4: return "Z2xZ4";
    case TorsionClass::Z2xZ6: return "Z2xZ6";
    case TorsionClass::Z2xZ8: return "Z2xZ8";
  }
  throw Error("unreachable torsion class");
}

bool lemma_2S(const Triple& tr) {
  Rat p = (tr.a() * tr.b() + Rat(1)) * (tr.a() * tr.c() + Rat(1)) *
          (tr.b() * tr.c() + Rat(1));
  return p.is_zero();
}

Rat lemma_3S_value(const Triple& tr) {
  const Rat &a = tr.a(), &b = tr.b(), &c = tr.c();
  Rat ab = a * b, ac = a * c, bc = b * c;
  Rat abc = a * b * c;
  return Rat(3) + Rat(4) * (ab + ac + bc) + Rat(6) * abc * (a + b + c) +
         Rat(12) * abc * abc -
         abc * abc *
             (a * a + b * b + c * c - Rat(2) * ab - Rat(2) * ac - Rat(2) * bc);
}

Lemma4SFactors lemma_4S_factors(const Triple& tr) {
  const Rat &a = tr.a(), &b = tr.b(), &c = tr.c();
  Rat ab = a * b, ac = a * c, bc = b * c;
  auto sq = [](const Rat& v) { return v * v; };
  return Lemma4SFactors{
      sq(ab + Rat(1)) - ab * (c - a) * (c - b),
      sq(ac + Rat(1)) - ac * (b - a) * (b - c),
      sq(bc + Rat(1)) - bc * (a - b) * (a - c)};
}

OrderConsistency order_consistency(const Triple& tr) {
  Curve curve = induced_curve(tr);
  CanonicalPoints pts = canonical_points(tr);
  OrderConsistency rep{order_of(curve, pts.S), lemma_2S(tr),
                       lemma_3S_value(tr).is_zero(), false, {}};
  rep.l4 = lemma_4S_factors(tr).any_zero() && !rep.l2;
  auto check = [&rep](int m, bool predicate, const char* name) {
    bool direct = rep.s_order.is_finite() && rep.s_order.value() == m;
    if (direct != predicate)
      rep.mismatches.push_back(
          std::string(name) + ": predicate " + (predicate ? "true" : "false") +
          " but order_of(S) = " + rep.s_order.str());
  };
  check(2, rep.l2, "2S");
  check(3, rep.l3, "3S");
  check(4, rep.l4, "4S");
  return rep;
}

namespace {

std::vector<Point> two_torsion(const Curve& c) {
  std::vector<Point> out;
  for (const Rat& e : c.roots()) out.push_back(Point::affine(e, Rat(0)));
  return out;
}

}  // namespace

TorsionReport classify_detailed(const Curve& c, const std::vector<Point>& probes) {
  std::vector<Point> t2 = two_torsion(c);

  // 2-power part, exact: any rational order-4 point halves some (eᵢ,0),
  // and any rational order-8 point halves such an order-4 point, so the
  // halving search below cannot miss either level.
  std::vector<Point> order4;
  for (const Point& t : t2)
    for (const Point& h : halves_of(c, t)) order4.push_back(h);
  int two_part = 2;
  bool order8 = false;
  if (!order4.empty()) {
    two_part = 4;
    for (const Point& q : order4) {
      if (!halves_of(c, q).empty()) {
        order8 = true;
        two_part = 8;
        break;
      }
    }
  }

  // 3-part by probing: each probe and its 2-torsion translates.
  bool three_part = false;
  for (const Point& probe : probes) {
    if (!on_curve(c, probe))
      throw DomainError("classify: probe not on curve");
    std::vector<Point> candidates{probe};
    for (const Point& t : t2) candidates.push_back(add(c, probe, t));
    for (const Point& cand : candidates) {
      Order o = order_of(c, cand);
      if (o.is_finite() && o.value() % 3 == 0) {
        three_part = true;
        break;
      }
    }
    if (three_part) break;
  }

  if (three_part && two_part > 2)
    throw Error("torsion Z/2 x Z/" + std::to_string(3 * two_part) +
                " exceeds the rational bound");
  TorsionClass cls;
  if (two_part == 8) cls = TorsionClass::Z2xZ8;
  else if (two_part == 4) cls = TorsionClass::Z2xZ4;
  else cls = three_part ? TorsionClass::Z2xZ6 : TorsionClass::Z2xZ2;
  return TorsionReport{cls, three_part, order8};
}

TorsionClass classify(const Curve& c, const std::vector<Point>& probes) {
  return classify_detailed(c, probes).cls;
}

TorsionReport classify_triple_detailed(const Triple& tr) {
  Curve c = induced_curve(tr);
  CanonicalPoints pts = canonical_points(tr);
  return classify_detailed(c, {pts.P, pts.S, pts.R});
}

TorsionClass classify_triple(const Triple& tr) {
  return classify_triple_detailed(tr).cls;
}

}  // namespace diocurve
