#pragma once

#include <string>
#include <vector>

#include "diocurve/ec.hpp"
#include "diocurve/triple.hpp"

namespace diocurve {

/// The four torsion groups possible for rational curves with full
/// rational 2-torsion (Mazur).
enum class TorsionClass { Z2xZ2, Z2xZ4, Z2xZ6, Z2xZ8 };

std::string to_string(TorsionClass tc);

/// True iff 2S = O, i.e. (ab+1)(ac+1)(bc+1) = 0.
bool lemma_2S(const Triple& tr);

/// Value whose vanishing is equivalent to 3S = O:
/// 3 + 4(ab+ac+bc) + 6abc(a+b+c) + 12(abc)²
///   − (abc)²(a²+b²+c²−2ab−2ac−2bc).
Rat lemma_3S_value(const Triple& tr);

/// The three factors whose product vanishing (with 2S ≠ O) is
/// equivalent to S having order 4; factor k vanishing means 2S lands on
/// the k-th 2-torsion point:
///   (ab+1)² − ab(c−a)(c−b),
///   (ac+1)² − ac(b−a)(b−c),
///   (bc+1)² − bc(a−b)(a−c).
struct Lemma4SFactors {
  Rat f1, f2, f3;
  bool any_zero() const { return f1.is_zero() || f2.is_zero() || f3.is_zero(); }
};
Lemma4SFactors lemma_4S_factors(const Triple& tr);

/// Cross-check of the three predicates against order_of(S) on the
/// induced curve; mismatches lists each direction that fails (empty in
/// correct operation).
struct OrderConsistency {
  Order s_order;
  bool l2, l3, l4;
  std::vector<std::string> mismatches;
  bool consistent() const { return mismatches.empty(); }
};
OrderConsistency order_consistency(const Triple& tr);

/// Torsion classification for a curve with split rational 2-torsion.
/// The 2-power part is exact (halving chains). The 3-part is detected
/// by probing the supplied points and their 2-torsion translates for
/// orders divisible by 3; when no probe witnesses it, the curve may
/// still have one, so three_part_witnessed is false and the class
/// reflects probes only.
struct TorsionReport {
  TorsionClass cls;
  bool three_part_witnessed;  // a probe of order 3 or 6 was found
  bool order8_witnessed;      // a rational order-8 point was constructed
};
TorsionReport classify_detailed(const Curve& c, const std::vector<Point>& probes);
TorsionClass classify(const Curve& c, const std::vector<Point>& probes);

/// classify on the induced curve with the canonical points as probes.
TorsionClass classify_triple(const Triple& tr);
TorsionReport classify_triple_detailed(const Triple& tr);

}  // namespace diocurve
