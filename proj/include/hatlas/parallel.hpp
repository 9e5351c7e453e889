#ifndef HATLAS_PARALLEL_HPP
#define HATLAS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hatlas {

// Worker cap: HARMONIC_ATLAS_THREADS when set (>= 1), otherwise the
// hardware parallelism.
int worker_count();

/* Runs body(i) for i in [0, count) across workers. Callers get
 * determinism by writing to disjoint slots and reducing in index order
 * afterwards; the scheduling itself carries no information. */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hatlas

#endif
