#include "torusq/numeric.hpp"

#include <cstdlib>
#include <thread>

namespace torusq {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw PreconditionError("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw PreconditionError("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw PreconditionError("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("TORUSQ_THREADS");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < 1 << 16)
            return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
    }
    return hw;
}

void parallel_for_index(size_t n, const std::function<void(size_t)>& fn) {
    unsigned workers = thread_count();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                // strided assignment keeps per-thread work balanced when
                // cost grows with i (larger colours cost more)
                for (size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace torusq
