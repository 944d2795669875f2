#include "hypershell/parallel.hpp"

#ifdef HYPERSHELL_OPENMP
#include <omp.h>
#endif

namespace hypershell {

bool openmp_enabled() {
#ifdef HYPERSHELL_OPENMP
    return true;
#else
    return false;
#endif
}

void parallel_for(long n, int threads, const std::function<void(long)>& body) {
#ifdef HYPERSHELL_OPENMP
    if (threads != 1) {
        if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long i = 0; i < n; ++i) body(i);
        } else {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < n; ++i) body(i);
        }
        return;
    }
#endif
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace hypershell
