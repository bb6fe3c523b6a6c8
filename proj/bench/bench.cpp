// Compares the OpenMP kernels against their serial reference implementations
// and checks that the outputs are identical.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cycas/cases.hpp"
#include "cycas/matfact.hpp"

using namespace cycas;

namespace {

double seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n\n", threads);

  // Matrix product: the 6x6 length-3 pair, repeated.
  {
    Length3Factorization f = build_length3_factorization();
    PolyMatrix serial_out, parallel_out;
    double ts = seconds([&] {
      for (int i = 0; i < 40; ++i) serial_out = matmul_serial(f.A, f.B);
    });
    double tp = seconds([&] {
      for (int i = 0; i < 40; ++i) parallel_out = matmul(f.A, f.B);
    });
    bool same = serial_out.entries == std::vector<Polynomial>(parallel_out.entries);
    std::printf("6x6 polynomial matrix product x40:  serial %.3fs  parallel %.3fs  (x%.2f)%s\n",
                ts, tp, ts / tp, same ? "" : "  MISMATCH");
  }

  // Deformed D relations verification (entry-parallel products inside).
  {
    double ts = seconds([&] {
      DRelations rel = build_D_relations(4, 3, true);
      (void)det(rel.R);
    });
    std::printf("deformed D(4,3) determinant:        %.3fs\n", ts);
  }

  // Blow-down searches: per-degree slice reduction runs in parallel; the
  // discovery pass is serialized, so outputs are identical by construction
  // and asserted here.
  for (auto [name, k, md] : std::vector<std::tuple<const char*, int, long>>{
           {"E7", 0, 30}, {"E6", 0, 22}, {"Dk", 4, 0}}) {
    CaseSpec spec = make_case(name, k);
    RunReport rs, rp;
    double ts = seconds([&] { rs = run_registered_case(spec, md, std::nullopt, false); });
    double tp = seconds([&] { rp = run_registered_case(spec, md, std::nullopt, true); });
    bool same = rs.result.ghfs.size() == rp.result.ghfs.size();
    if (same)
      for (std::size_t i = 0; i < rs.result.ghfs.size(); ++i)
        if (!(rs.result.ghfs[i] == rp.result.ghfs[i])) same = false;
    std::printf("%-10s blow-down (degree %2ld):     serial %.3fs  parallel %.3fs  (x%.2f)%s\n",
                spec.display_name().c_str(), rs.max_degree, ts, tp, ts / tp,
                same ? "" : "  MISMATCH");
  }
  return 0;
}
