#include "qhurwitz/parallel.hpp"

namespace qhurwitz {

namespace {

std::atomic<int> g_threads{0};

} // namespace

int thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void set_thread_count(int n) { g_threads = n > 0 ? n : 0; }

} // namespace qhurwitz
