#include "pagefem/parallel.hpp"

#include "pagefem/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pagefem {

SingularPageError::SingularPageError(std::size_t page, double det_magnitude)
    : std::runtime_error("singular page " + std::to_string(page) +
                         " (|det| = " + std::to_string(det_magnitude) + ")"),
      page_(page), det_(det_magnitude) {}

ConvergenceError::ConvergenceError(std::size_t iterations, double residual)
    : std::runtime_error("solver did not converge after " +
                         std::to_string(iterations) +
                         " iterations, relative residual " +
                         std::to_string(residual)),
      iterations_(iterations), residual_(residual) {}

namespace {
std::atomic<std::size_t> g_threads{1};
constexpr std::size_t kMinChunk = 2048;
} // namespace

std::size_t num_threads() { return g_threads.load(); }

void set_num_threads(std::size_t n) { g_threads.store(std::max<std::size_t>(n, 1)); }

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers =
        std::min(num_threads(), std::max<std::size_t>(count / kMinChunk, 1));
    if (workers <= 1) {
        if (count > 0) body(0, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                try {
                    body(lo, hi);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace pagefem
