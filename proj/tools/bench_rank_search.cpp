// Compares the OpenMP integer-kernel point search against the serial
// exact-rational reference on the curve induced by {1,3,8}, checking
// that both report identical points.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diocurve/rank_search.hpp"
#include "diocurve/triple.hpp"

using namespace diocurve;

namespace {

template <typename F>
double time_run(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same_reports(const EvidenceReport& a, const EvidenceReport& b) {
  if (a.torsion.size() != b.torsion.size()) return false;
  if (a.infinite.size() != b.infinite.size()) return false;
  for (size_t i = 0; i < a.torsion.size(); ++i)
    if (a.torsion[i].pt != b.torsion[i].pt ||
        a.torsion[i].order != b.torsion[i].order)
      return false;
  for (size_t i = 0; i < a.infinite.size(); ++i)
    if (a.infinite[i].pt != b.infinite[i].pt) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<long> heights;
  for (int i = 1; i < argc; ++i) heights.push_back(std::atol(argv[i]));
  if (heights.empty()) heights = {100, 200, 400};

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  Curve c = induced_curve(Triple::validate(Rat(1), Rat(3), Rat(8)));
  std::cout << "curve: y^2 = (x+3)(x+8)(x+24)\n\n";
  std::cout << "  height     serial[s]    kernel[s]   speedup  points\n";

  bool all_equal = true;
  for (long h : heights) {
    EvidenceReport serial, kernel;
    double ts = time_run([&] { serial = rank_evidence_serial(c, h); });
    double tk = time_run([&] { kernel = rank_evidence(c, h); });
    bool eq = same_reports(serial, kernel);
    all_equal = all_equal && eq;
    std::printf("  %6ld   %10.4f   %10.4f   %6.2fx  %5zu%s\n", h, ts, tk,
                ts / tk, kernel.total_found(), eq ? "" : "  MISMATCH");
  }
  if (!all_equal) {
    std::cout << "\nreports differ between implementations\n";
    return 1;
  }
  return 0;
}
