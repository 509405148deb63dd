// Wall-clock comparison of the parallel scan kernels against their serial
// references. Each pair is checked for equality before the times are printed,
// so a divergence fails the run. Single-shot timings, not a statistical
// harness.
#include <chrono>
#include <cstdio>
#include <functional>

#include "nwg/namikawa.hpp"
#include "nwg/roots.hpp"

#ifdef NWG_HAVE_OPENMP
#include <omp.h>
#endif

using namespace nwg;

namespace {

double seconds(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double box_size(const Vec& bound) {
  double total = 1;
  for (Int b : bound) total *= (double)(b + 1);
  return total;
}

Quiver path(int n) {
  Quiver q = Quiver::make(n);
  for (int i = 0; i + 1 < n; ++i) q.add_edge(i, i + 1);
  return q;
}

}  // namespace

int main() {
#ifdef NWG_HAVE_OPENMP
  std::printf("OpenMP enabled, max %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both kernels run serial\n");
#endif

  {
    Quiver q = path(4);
    Vec bound{60, 60, 60, 60};
    std::vector<ClassifiedRoot> ser, par;
    double ts = seconds([&] { ser = positive_roots_leq_serial(q, bound); });
    double tp = seconds([&] { par = positive_roots_leq(q, bound); });
    if (ser.size() != par.size()) {
      std::fprintf(stderr, "positive_roots_leq: size mismatch\n");
      return 1;
    }
    for (size_t i = 0; i < ser.size(); ++i)
      if (ser[i].root != par[i].root || ser[i].kind != par[i].kind) {
        std::fprintf(stderr, "positive_roots_leq: entry %zu differs\n", i);
        return 1;
      }
    std::printf("positive_roots_leq   box %.2e  serial %7.3fs  parallel %7.3fs  speedup %.2fx  (%zu roots)\n",
                box_size(bound), ts, tp, ts / tp, ser.size());
  }

  {
    Quiver q = path(3);
    q.add_edge(0, 2);  // 3-cycle
    FramedSetting fs{q, Vec{150, 150, 150}, Vec{1, 0, 0}};
    std::vector<CodimTwoRoot> ser, par;
    double ts = seconds([&] { ser = find_codim2_roots_serial(fs); });
    double tp = seconds([&] { par = find_codim2_roots(fs); });
    if (!(ser == par)) {
      std::fprintf(stderr, "find_codim2_roots: outputs differ\n");
      return 1;
    }
    std::printf("find_codim2_roots    box %.2e  serial %7.3fs  parallel %7.3fs  speedup %.2fx  (%zu walls)\n",
                box_size(fs.v), ts, tp, ts / tp, ser.size());
  }

  return 0;
}
