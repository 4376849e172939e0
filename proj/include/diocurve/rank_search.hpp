#pragma once

#include <vector>

#include "diocurve/ec.hpp"

namespace diocurve {

struct FoundPoint {
  Point pt;  // the y ≥ 0 representative; (x,−y) is implied
  Order order;
};

/// Outcome of a bounded point search. Finding an infinite-order point
/// proves rank ≥ 1; finding none proves nothing (this is evidence, not
/// a rank-0 certificate).
struct EvidenceReport {
  long height_bound = 0;
  std::vector<FoundPoint> torsion;
  std::vector<FoundPoint> infinite;
  bool rank_ge_1() const { return !infinite.empty(); }
  size_t total_found() const { return torsion.size() + infinite.size(); }
};

/// Enumerate x = p/q in lowest terms (q ≥ 1, |p| ≤ H, q ≤ H) ascending
/// by max(|p|,q), keep those where the curve's cubic is a rational
/// square, and partition the resulting points by order. The enumeration
/// order is deterministic, so a lower bound's report is a prefix of a
/// higher bound's.
///
/// rank_evidence runs the level kernel OpenMP-parallel with an integer
/// hit test (clears denominators once; candidate x survives iff
/// M·D·q is a perfect square, where M is the cleared numerator cubic
/// and D the coefficient common denominator). rank_evidence_serial is
/// the plain exact-rational reference; both produce identical reports.
EvidenceReport rank_evidence(const Curve& c, long height_bound);
EvidenceReport rank_evidence_serial(const Curve& c, long height_bound);

}  // namespace diocurve
