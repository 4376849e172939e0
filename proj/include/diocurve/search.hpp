#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diocurve/ec.hpp"
#include "diocurve/torsion.hpp"
#include "diocurve/triple.hpp"

namespace diocurve {

/// The rank-1 curve Y² = X³ + X² + X + 1 with generator P₁ = (0,1) and
/// 2-torsion point T₁ = (−1,0), plus a ladder cache of multiples of P₁.
/// Extend the cache before sharing it across threads; reads are safe.
class E1Context {
 public:
  E1Context();

  const Curve& curve() const { return curve_; }
  const Point& P1() const { return ladder_[0]; }
  Point T1() const { return Point::affine(Rat(-1), Rat(0)); }

  /// n·P₁ for n ≥ 1, cached.
  const Point& multiple(long n);

 private:
  Curve curve_;
  std::vector<Point> ladder_;  // ladder_[i] = (i+1)·P₁
};

/// The parameter r worn by a point of E₁ under the birational map to
/// the quartic d² = 1 − 4r⁴ + 4r²:  r = Y/(X²+1), d = 2r²X − 1.
/// Calibration: composing with inversion or T₁-translation yields the
/// other valid maps; this artifact fixes sign +1 and no translation,
/// which reproduces the n=6 anchor (see kMapSign/kMapTranslateByT1 and
/// the pinned test). Exceptional set: the identity only.
inline constexpr int kMapSign = +1;
inline constexpr bool kMapTranslateByT1 = false;
std::optional<Rat> point_to_r(const Point& pt_on_E1);

/// Section of point_to_r: the E₁ point with X = (d+1)/(2r²),
/// Y = r(X²+1), d = +√(1−4r⁴+4r²). Requires r ≠ 0 and square
/// discriminant.
Point r_to_point(const E1Context& ctx, const Rat& r);

/// 1 − 4r⁴ + 4r², the discriminant of the quadratic below.
Rat quartic_disc(const Rat& r);

enum class RootBranch { plus, minus };
std::string to_string(RootBranch b);

struct RootTriple {
  RootBranch branch;
  Rat a_root;
  Triple triple;
};

/// Rational roots a of (2r³−2r)a² + (4r⁴−6r²+1)a + (2r⁵+2r−4r³) = 0,
/// each completed to {a, b=(r²−1)/a, c=a+b+2r} and validated; element
/// collisions drop a root. Throws DegenerateParameter for r ∈ {0,±1};
/// non-square discriminant yields an empty list.
std::vector<RootTriple> r_to_triples(const Rat& r);

/// One line of the scan record stream: either a candidate (triple with
/// its classification data) or a skip with a reason.
struct CandidateRecord {
  long n = 0;
  std::optional<Rat> r;
  std::optional<RootBranch> root_branch;
  std::optional<Triple> triple;  // sign-normalized
  bool all_positive = false;
  std::optional<TorsionClass> torsion;
  std::optional<Order> s_order;
  std::optional<Rat> j;
  bool skipped = false;
  std::string skip_reason;
};

/// Serialize/parse one record as a single JSON object line with fields
/// {"n","r","root_branch","a","b","c","all_positive","torsion",
///  "s_order","j","skipped","skip_reason"}; rationals as "p/q" strings,
/// absent values as null.
std::string to_json_line(const CandidateRecord& rec);
CandidateRecord record_from_json_line(const std::string& line);
std::string csv_header();
std::string to_csv_line(const CandidateRecord& rec);

/// The multiples pipeline for n in [n_from, n_max]: map n·P₁ to r,
/// solve for triples, dedup the two roots (same unordered triple; the
/// numerically larger a is kept), normalize same-sign triples to
/// positive, classify, and emit one record per n through the sink.
/// Mixed-sign triples become full records only when verbose; otherwise
/// a skip record marks the n as processed.
void scan_range(E1Context& ctx, long n_from, long n_max, bool verbose,
                const std::function<void(const CandidateRecord&)>& sink);

/// scan_range from 1 collecting records.
std::vector<CandidateRecord> scan(long n_max, bool verbose = false);

/// True iff c is ℚ-isomorphic to the curve induced by the Z2xZ8 family
/// at parameter T.
bool verify_family_T(const Curve& c, const Rat& T);

}  // namespace diocurve
