#include "diocurve/rank_search.hpp"

#include <gmpxx.h>

#include <numeric>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diocurve/errors.hpp"

namespace diocurve {

namespace {

// Candidates (p,q) at level m = max(|p|,q), reduced fractions only,
// ordered by (q, p). Both implementations below share this enumeration,
// which fixes the report order.
std::vector<std::pair<long, long>> level_candidates(long m) {
  std::vector<std::pair<long, long>> out;
  for (long q = 1; q <= m; ++q) {
    if (q < m) {
      if (std::gcd(m, q) == 1) {
        out.emplace_back(-m, q);
        out.emplace_back(m, q);
      }
    } else {
      for (long p = -m; p <= m; ++p)
        if (std::gcd(p < 0 ? -p : p, m) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

void partition_hit(const Curve& c, Point pt, EvidenceReport& report) {
  Order o = order_of(c, pt);
  (o.is_finite() ? report.torsion : report.infinite)
      .push_back(FoundPoint{std::move(pt), o});
}

// Integer form of the hit test. With D the common denominator of the
// cubic's coefficients and Ai = ai·D, the cubic at x = p/q equals
// M/(D·q³) with M = p³D + A2p²q + A4pq² + A6q³; y is rational iff
// N = M·D·q is a perfect square, and then y = √N/(D·q²).
struct IntegerKernel {
  mpz_class D, A2, A4, A6;

  explicit IntegerKernel(const Curve& c) {
    mpz_class l = lcm(c.a2().den(), c.a4().den());
    D = lcm(l, c.a6().den());
    A2 = c.a2().num() * (D / c.a2().den());
    A4 = c.a4().num() * (D / c.a4().den());
    A6 = c.a6().num() * (D / c.a6().den());
  }

  // Scratch avoids re-allocating limbs on the (hot) miss path.
  struct Scratch {
    mpz_class m, u, n;
  };

  // Returns true and sets y ≥ 0 when x = p/q lands on the curve.
  bool hit(Scratch& sc, long p, long q, Rat& y_out) const {
    // Horner in p: M = ((p·D + A2·q)·p + A4·q²)·p + A6·q³.
    mpz_set(sc.m.get_mpz_t(), D.get_mpz_t());
    mpz_mul_si(sc.m.get_mpz_t(), sc.m.get_mpz_t(), p);
    mpz_mul_si(sc.u.get_mpz_t(), A2.get_mpz_t(), q);
    mpz_add(sc.m.get_mpz_t(), sc.m.get_mpz_t(), sc.u.get_mpz_t());
    mpz_mul_si(sc.m.get_mpz_t(), sc.m.get_mpz_t(), p);
    mpz_mul_si(sc.u.get_mpz_t(), A4.get_mpz_t(), q);
    mpz_mul_si(sc.u.get_mpz_t(), sc.u.get_mpz_t(), q);
    mpz_add(sc.m.get_mpz_t(), sc.m.get_mpz_t(), sc.u.get_mpz_t());
    mpz_mul_si(sc.m.get_mpz_t(), sc.m.get_mpz_t(), p);
    mpz_mul_si(sc.u.get_mpz_t(), A6.get_mpz_t(), q);
    mpz_mul_si(sc.u.get_mpz_t(), sc.u.get_mpz_t(), q);
    mpz_mul_si(sc.u.get_mpz_t(), sc.u.get_mpz_t(), q);
    mpz_add(sc.m.get_mpz_t(), sc.m.get_mpz_t(), sc.u.get_mpz_t());
    // N = M·D·q.
    mpz_mul(sc.n.get_mpz_t(), sc.m.get_mpz_t(), D.get_mpz_t());
    mpz_mul_si(sc.n.get_mpz_t(), sc.n.get_mpz_t(), q);
    if (mpz_sgn(sc.n.get_mpz_t()) < 0) return false;
    if (!mpz_perfect_square_p(sc.n.get_mpz_t())) return false;
    mpz_sqrt(sc.u.get_mpz_t(), sc.n.get_mpz_t());
    mpz_class denom = D * q * q;
    y_out = Rat(sc.u, denom);
    return true;
  }
};

}  // namespace

EvidenceReport rank_evidence_serial(const Curve& c, long height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be >= 1");
  EvidenceReport report;
  report.height_bound = height_bound;
  for (long m = 1; m <= height_bound; ++m) {
    for (auto [p, q] : level_candidates(m)) {
      Rat x(p, q);
      Rat v = c.rhs(x);
      if (v.sign() < 0 || !is_perfect_square(v)) continue;
      partition_hit(c, Point::affine(std::move(x), sqrt_exact(v)), report);
    }
  }
  return report;
}

EvidenceReport rank_evidence(const Curve& c, long height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be >= 1");
  IntegerKernel kernel(c);
  EvidenceReport report;
  report.height_bound = height_bound;
  struct Hit {
    size_t index;
    Point pt;
  };
  for (long m = 1; m <= height_bound; ++m) {
    std::vector<std::pair<long, long>> cands = level_candidates(m);
    std::vector<std::vector<Hit>> per_thread;
#ifdef _OPENMP
    per_thread.resize(static_cast<size_t>(omp_get_max_threads()));
#else
    per_thread.resize(1);
#endif
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
#ifdef _OPENMP
      std::vector<Hit>& mine =
          per_thread[static_cast<size_t>(omp_get_thread_num())];
#else
      std::vector<Hit>& mine = per_thread[0];
#endif
      IntegerKernel::Scratch sc;
      Rat y;
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
      for (size_t i = 0; i < cands.size(); ++i) {
        auto [p, q] = cands[i];
        if (!kernel.hit(sc, p, q, y)) continue;
        mine.push_back(Hit{i, Point::affine(Rat(p, q), y)});
      }
    }
    // Deterministic merge: restore enumeration order within the level.
    std::vector<Hit> level_hits;
    for (auto& v : per_thread)
      for (auto& h : v) level_hits.push_back(std::move(h));
    std::sort(level_hits.begin(), level_hits.end(),
              [](const Hit& a, const Hit& b) { return a.index < b.index; });
    for (Hit& h : level_hits) partition_hit(c, std::move(h.pt), report);
  }
  return report;
}

}  // namespace diocurve
