#include "hermcodes/span_enum.hpp"

#include <atomic>

namespace hermcodes {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned count) { g_threads = count == 0 ? std::max(1u, std::thread::hardware_concurrency()) : count; }

unsigned thread_count() { return g_threads; }

}  // namespace hermcodes
