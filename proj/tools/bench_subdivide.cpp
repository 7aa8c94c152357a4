// Benchmark of the subdivision kernel: serial reference vs the OpenMP path,
// with an exact equality check between the two.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hsub/spectral.hpp"
#include "hsub/subdivision.hpp"

using namespace hsub;

namespace {

double now_s() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

VecSeq random_seq(int d, int len, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<RatVec> vecs;
    vecs.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        RatVec v;
        for (int k = 0; k <= d; ++k) v.emplace_back(num(rng), den(rng));
        vecs.push_back(std::move(v));
    }
    return VecSeq(d, 0, std::move(vecs));
}

}  // namespace

int main(int argc, char** argv) {
    int d = argc > 1 ? std::atoi(argv[1]) : 2;
    int levels = argc > 2 ? std::atoi(argv[2]) : 12;
    int initial = argc > 3 ? std::atoi(argv[3]) : 32;

    Mask A = mask_construct(d, d + 1, -2, 2);
    VecSeq c = random_seq(d, initial, 7u);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-6s %-10s %-12s %-12s %-8s\n", "level", "length", "serial_s", "parallel_s", "speedup");

    for (int level = 0; level < levels; ++level) {
        Mask level_mask = hermite_level_mask(A, level);

        double t0 = now_s();
        VecSeq serial = mask_apply_serial(level_mask, c);
        double t1 = now_s();
        VecSeq parallel = mask_apply(level_mask, c);
        double t2 = now_s();

        if (serial != parallel) {
            std::fprintf(stderr, "MISMATCH at level %d\n", level);
            return 1;
        }
        int len = serial.is_zero() ? 0 : serial.hi() - serial.lo() + 1;
        double ts = t1 - t0, tp = t2 - t1;
        std::printf("%-6d %-10d %-12.6f %-12.6f %-8.2f\n", level, len, ts, tp, tp > 0 ? ts / tp : 0.0);
        c = std::move(parallel);
    }
    return 0;
}
