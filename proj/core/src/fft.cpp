#include "smolns/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace smolns::fft {

namespace {

// Planning is not thread safe in FFTW; executing a plan on new arrays is.
// Plans are created once per shape with FFTW_UNALIGNED so they can run on
// arbitrary std::vector storage.
std::mutex g_plan_mutex;

using Key = std::tuple<int, int, int, int, int, int>;  // kind,n0,n1/howmany,stride,dist,sign

fftw_plan get_plan_2d(int n0, int n1, int sign) {
    static std::map<Key, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    Key key{0, n0, n1, 0, 0, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    fftw_complex* scratch = fftw_alloc_complex(static_cast<std::size_t>(n0) * n1);
    fftw_plan plan = fftw_plan_dft_2d(n0, n1, scratch, scratch, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    cache.emplace(key, plan);
    return plan;
}

fftw_plan get_plan_many(int n, int howmany, int stride, int dist, int sign) {
    static std::map<Key, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    Key key{1, n, howmany, stride, dist, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::size_t span = static_cast<std::size_t>(stride) * (n - 1) +
                       static_cast<std::size_t>(dist) * (howmany - 1) + 1;
    fftw_complex* scratch = fftw_alloc_complex(span);
    fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, scratch, nullptr, stride, dist,
                                        scratch, nullptr, stride, dist, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    cache.emplace(key, plan);
    return plan;
}

inline fftw_complex* as_fftw(std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(p);
}

}  // namespace

void forward_2d(int n0, int n1, std::complex<double>* data) {
    fftw_execute_dft(get_plan_2d(n0, n1, FFTW_FORWARD), as_fftw(data), as_fftw(data));
}

void backward_2d(int n0, int n1, std::complex<double>* data) {
    fftw_execute_dft(get_plan_2d(n0, n1, FFTW_BACKWARD), as_fftw(data), as_fftw(data));
}

void forward_many(int n, int howmany, int stride, int dist, std::complex<double>* data) {
    fftw_execute_dft(get_plan_many(n, howmany, stride, dist, FFTW_FORWARD),
                     as_fftw(data), as_fftw(data));
}

void backward_many(int n, int howmany, int stride, int dist, std::complex<double>* data) {
    fftw_execute_dft(get_plan_many(n, howmany, stride, dist, FFTW_BACKWARD),
                     as_fftw(data), as_fftw(data));
}

}  // namespace smolns::fft
