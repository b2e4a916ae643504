// Serial vs OpenMP comparison for the node-local compute kernels. The
// communication ledger is identical in both modes; only wall time differs.

#include <chrono>
#include <cstdio>

#include "cclique/matmul.hpp"
#include "cclique/oracle.hpp"
#include "cclique/rng.hpp"
#include "cclique/subgraph.hpp"

using namespace cclique;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
    const char* name;
    double serial_ms, omp_ms;
};

}  // namespace

int main() {
    std::vector<Row> rows;
    Rng rng(0xbe);

    auto bench = [&](const char* name, auto make_input, auto run) {
        auto input = make_input();
        NetworkOptions ser, par;
        ser.exec = ExecMode::Serial;
        par.exec = ExecMode::OpenMP;
        double ts = 0, tp = 0;
        for (int rep = 0; rep < 3; ++rep) {
            ts += time_ms([&] {
                CliqueNetwork net(input.second, 1, ser);
                run(input.first, net);
            });
            tp += time_ms([&] {
                CliqueNetwork net(input.second, 1, par);
                run(input.first, net);
            });
        }
        rows.push_back(Row{name, ts / 3, tp / 3});
    };

    bench(
        "mm_semiring boolean n=216",
        [&] {
            SrMatrix<BooleanSR> a(BooleanSR{}, 216);
            for (int u = 0; u < 216; ++u)
                for (int v = 0; v < 216; ++v) a(u, v) = rng.below(2) ? 1 : 0;
            return std::pair{a, 216};
        },
        [](const SrMatrix<BooleanSR>& a, CliqueNetwork& net) { mm_semiring(a, a, net); });

    bench(
        "mm_semiring min-plus n=125",
        [&] {
            SrMatrix<MinPlusSR> a(MinPlusSR{}, 125);
            for (int u = 0; u < 125; ++u)
                for (int v = 0; v < 125; ++v)
                    a(u, v) = rng.chance(1, 4) ? Weight::inf() : Weight(rng.range(0, 99));
            return std::pair{a, 125};
        },
        [](const SrMatrix<MinPlusSR>& a, CliqueNetwork& net) { mm_semiring(a, a, net); });

    bench(
        "mm_bilinear strassen L=2 n=49",
        [&] {
            SrMatrix<IntRing> a(IntRing{}, 49);
            for (int u = 0; u < 49; ++u)
                for (int v = 0; v < 49; ++v) a(u, v) = rng.range(-99, 99);
            return std::pair{a, 49};
        },
        [](const SrMatrix<IntRing>& a, CliqueNetwork& net) {
            mm_bilinear(a, a, BilinearAlgorithm::strassen_power(2), net);
        });

    bench(
        "count_triangles n=64",
        [&] {
            Rng grng(7);
            return std::pair{make_gnp(64, 1, 2, grng), 64};
        },
        [](const Graph& g, CliqueNetwork& net) { count_triangles(g, net); });

    std::printf("%-32s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup");
    for (const auto& r : rows)
        std::printf("%-32s %12.1f %12.1f %8.2fx\n", r.name, r.serial_ms, r.omp_ms,
                    r.serial_ms / (r.omp_ms > 0 ? r.omp_ms : 1));
    return 0;
}
