#include "octavia/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace octavia::parallel {

unsigned thread_count() {
    if (const char* env = std::getenv("OCTAVIA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void for_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t, size_t)>& body) {
    if (n == 0) return;
    if (chunk == 0) chunk = 1;
    const size_t chunks = (n + chunk - 1) / chunk;
    const unsigned workers = static_cast<unsigned>(std::min<size_t>(thread_count(), chunks));
    auto run = [&](size_t k) { body(k, k * chunk, std::min(n, (k + 1) * chunk)); };
    if (workers <= 1) {
        for (size_t k = 0; k < chunks; ++k) run(k);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t k; (k = next.fetch_add(1)) < chunks;) {
                try {
                    run(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = chunks;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void Accumulator::add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

void Accumulator::add(const Accumulator& other) {
    add(other.sum_);
    add(other.comp_);
}

double sum(size_t n, const std::function<double(size_t)>& f, size_t chunk) {
    const size_t chunks = n == 0 ? 0 : (n + chunk - 1) / chunk;
    std::vector<Accumulator> parts(chunks);
    for_chunks(n, chunk, [&](size_t k, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) parts[k].add(f(i));
    });
    Accumulator total;
    for (const auto& p : parts) total.add(p);
    return total.value();
}

}  // namespace octavia::parallel
