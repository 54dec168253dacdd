#pragma once

#include <cstddef>

namespace monogamy {

// Every data-parallel kernel in the library takes an Execution argument. The
// serial path is the reference implementation; the OpenMP path must produce
// bit-identical results because each index writes only its own output slot.
enum class Execution { serial, parallel };

template <class Body>
void for_each_index(Execution execution, std::ptrdiff_t count, Body&& body) {
  if (execution == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
}

}  // namespace monogamy
