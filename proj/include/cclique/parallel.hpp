#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cclique {

/// Execution mode for data-parallel node loops. The serial path is the
/// reference implementation; the OpenMP path must produce identical results
/// because every node writes only to its own slot.
enum class ExecMode { Serial, OpenMP };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
    if (const char* e = std::getenv("CCLIQUE_SERIAL"); e && e[0] == '1') return ExecMode::Serial;
    return ExecMode::OpenMP;
#else
    return ExecMode::Serial;
#endif
}

/// Run fn(i) for i in [0, count). Iterations must be independent.
template <class Fn>
void for_each_index(int count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
#else
    (void)mode;
#endif
    for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace cclique
