#include "gevreylab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace gvl::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// FFTW's planner is not thread safe; execution via fftw_execute_dft is.
PlanPair& plans_1d(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cd> a(n), b(n);
    PlanPair p;
    p.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

PlanPair& plans_2d(int m, int n) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cd> a(static_cast<std::size_t>(m) * n), b(a.size());
    PlanPair p;
    p.fwd = fftw_plan_dft_2d(m, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_2d(m, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()),
                             FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(key, p).first->second;
}

void run(fftw_plan plan, const cd* in, cd* out) {
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward(int n, const cd* in, cd* out) { run(plans_1d(n).fwd, in, out); }
void backward(int n, const cd* in, cd* out) { run(plans_1d(n).bwd, in, out); }

void forward_2d(int m, int n, const cd* in, cd* out) {
    run(plans_2d(m, n).fwd, in, out);
}
void backward_2d(int m, int n, const cd* in, cd* out) {
    run(plans_2d(m, n).bwd, in, out);
}

}  // namespace gvl::fft
