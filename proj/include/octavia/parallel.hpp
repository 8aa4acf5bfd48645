#pragma once

// Fixed-chunk parallel loops. Work is split into chunks of a fixed size independent of the
// thread count, and per-chunk results are combined in chunk order, so reductions are
// bitwise reproducible for any OCTAVIA_THREADS.

#include <cstddef>
#include <functional>
#include <vector>

namespace octavia::parallel {

/// OCTAVIA_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_count();

/// Runs body(chunk_index, begin, end) for the chunks of [0, n).
void for_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t, size_t)>& body);

/// Neumaier-compensated sum.
class Accumulator {
public:
    void add(double x);
    void add(const Accumulator& other);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

/// Deterministic parallel sum of f(i) for i in [0, n).
double sum(size_t n, const std::function<double(size_t)>& f, size_t chunk = 4096);

}  // namespace octavia::parallel
