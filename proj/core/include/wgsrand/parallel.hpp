#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wgsrand {

inline std::size_t resolve_threads(std::size_t requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(begin, end, chunk_index) over [0, count) split into fixed-size
/// chunks. Workers pull chunk indices from an atomic counter, so the
/// assignment of chunks to threads is arbitrary but the chunk boundaries
/// depend only on (count, chunk_size). Callers that want thread-count
/// independent results must write per-chunk outputs into chunk-indexed
/// slots and reduce them in chunk order afterwards.
inline void parallel_for_chunks(std::size_t count, std::size_t chunk_size, std::size_t threads,
                                const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (count == 0) {
        return;
    }
    if (chunk_size == 0) {
        chunk_size = 1;
    }
    const std::size_t num_chunks = (count + chunk_size - 1) / chunk_size;
    threads = std::min(resolve_threads(threads), num_chunks);

    if (threads <= 1) {
        for (std::size_t c = 0; c < num_chunks; ++c) {
            const std::size_t begin = c * chunk_size;
            fn(begin, std::min(begin + chunk_size, count), c);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= num_chunks) {
                return;
            }
            try {
                const std::size_t begin = c * chunk_size;
                fn(begin, std::min(begin + chunk_size, count), c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace wgsrand
