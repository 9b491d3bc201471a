#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "ruukin/design.hpp"
#include "ruukin/grid.hpp"
#include "ruukin/singularity.hpp"

// Times the serial reference sampling kernel against the OpenMP one on the
// limb-1 torus residual field and reports the element-wise agreement. On a
// single hardware thread the parallel kernel degenerates to the serial path,
// so the interesting numbers there are the overhead, not the speedup.

int main(int argc, char** argv) {
    using clock = std::chrono::steady_clock;
    std::size_t n = 72;
    if (argc > 1) n = static_cast<std::size_t>(std::stoul(argv[1]));

    const ruukin::Design d = ruukin::Design::pars();
    const ruukin::MPoly tor = ruukin::torus_equation(1, d);
    std::array<double, ruukin::kNumVars> base{};
    d.fill(base);
    const ruukin::GridFn fn = [&](const std::array<double, 3>& v) {
        auto pt = base;
        pt[ruukin::VY1] = v[0];
        pt[ruukin::VY2] = v[1];
        pt[ruukin::VY3] = v[2];
        return tor.eval_double(pt);
    };
    const std::array<ruukin::AxisSpec, 3> axes{{{-10, 10, n}, {-10, 10, n}, {-10, 10, n}}};

    const auto t0 = clock::now();
    const auto serial = ruukin::sample_grid_serial(axes, fn);
    const auto t1 = clock::now();
    const auto parallel = ruukin::sample_grid_parallel(axes, fn);
    const auto t2 = clock::now();

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        if (serial[i] != parallel[i]) ++mismatches;

    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("grid %zu^3 = %zu samples, %d worker(s)\n", n, serial.size(),
                ruukin::worker_count());
    std::printf("serial   %.3f s  (%.1f Msamples/s)\n", ts, serial.size() / ts / 1e6);
    std::printf("parallel %.3f s  (%.1f Msamples/s)  speedup x%.2f\n", tp,
                parallel.size() / tp / 1e6, ts / tp);
    std::printf("element-wise mismatches: %zu\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
