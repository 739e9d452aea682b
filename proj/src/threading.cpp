#include "acind/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace acind {

namespace {
std::atomic<int> g_max_threads{-1};  // -1 = not set

int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}
}  // namespace

int max_threads() {
    int v = g_max_threads.load();
    if (v > 0) return v;
    if (v == -1) {
        if (const char* env = std::getenv("ACIND_THREADS")) {
            const int n = std::atoi(env);
            if (n > 0) {
                g_max_threads.store(n);
                return n;
            }
        }
        g_max_threads.store(0);
    }
    return hardware_threads();
}

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

}  // namespace acind
