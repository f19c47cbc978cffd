#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "csdjwt/accumulator.hpp"

// Compares the serial reference implementations of the batch accumulator
// kernels against their OpenMP counterparts and checks that both produce
// identical bytes.

using namespace csdjwt;
using namespace csdjwt::accumulator;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warmup
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
               .count() /
           reps;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    printf("threads available: %d\n", omp_get_max_threads());
    printf("%-8s %-22s %12s %12s %8s\n", "batch", "kernel", "serial_ms",
           "openmp_ms", "speedup");

    auto [params, kp] = setup(128, RandomSource(0xbe11));
    Drbg rng(0x4242);

    for (size_t n : {8, 32, 128, 512}) {
        auto v0 = init_accumulator(params, RandomSource(n));
        std::vector<Element> elements;
        for (size_t i = 0; i < n; ++i) {
            auto raw = rng.bytes(32);
            elements.push_back(bn254::Fr::from_bytes_be_mod(raw));
        }
        auto value = accumulate_batch(v0, elements, kp.sk);

        std::vector<Witness> ws, wp;
        double t_serial = time_ms(
            [&] {
                ws = compute_witnesses_batch(value, elements, kp.sk,
                                             Exec::serial);
            },
            reps);
        double t_parallel = time_ms(
            [&] {
                wp = compute_witnesses_batch(value, elements, kp.sk,
                                             Exec::parallel);
            },
            reps);
        for (size_t i = 0; i < n; ++i) {
            if (!(ws[i] == wp[i])) {
                fprintf(stderr, "kernel mismatch at %zu\n", i);
                return 1;
            }
        }
        printf("%-8zu %-22s %12.3f %12.3f %7.2fx\n", n, "witness_batch",
               t_serial, t_parallel, t_serial / t_parallel);

        std::vector<std::pair<Element, Witness>> pairs;
        for (size_t i = 0; i < n; ++i) pairs.push_back({elements[i], ws[i]});
        bool ok_s = false, ok_p = false;
        double v_serial = time_ms(
            [&] {
                ok_s = verify_witness_batch(value, pairs, kp.pk, params,
                                            Exec::serial);
            },
            reps);
        double v_parallel = time_ms(
            [&] {
                ok_p = verify_witness_batch(value, pairs, kp.pk, params,
                                            Exec::parallel);
            },
            reps);
        if (!ok_s || !ok_p) {
            fprintf(stderr, "batch verification failed\n");
            return 1;
        }
        printf("%-8zu %-22s %12.3f %12.3f %7.2fx\n", n, "verify_batch",
               v_serial, v_parallel, v_serial / v_parallel);
    }
    return 0;
}
