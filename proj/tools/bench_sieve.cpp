// Times the serial reference sieve against the OpenMP kernel and checks that
// both produce identical mark sets.

#include "irrpoly/brute.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    CLI::App app{"benchmark: serial vs OpenMP reducibility sieve"};
    int d = 4, n = 2, p = 3, repeat = 3, threads = 0;
    std::uint64_t cap = irrpoly::BruteContext::kDefaultStateCap;
    app.add_option("-d,--degree", d, "total degree (default 4)");
    app.add_option("-n,--vars", n, "number of variables (default 2)");
    app.add_option("-p,--prime", p, "prime field size (default 3)");
    app.add_option("--repeat", repeat, "timing repetitions (default 3)");
    app.add_option("--threads", threads, "OpenMP thread count (default: all)");
    app.add_option("--state-cap", cap, "state-space budget (default 2^24)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (const char* env = std::getenv("IRRPOLY_THREADS"))
        if (std::atoi(env) > 0) omp_set_num_threads(std::atoi(env));
    if (threads > 0) omp_set_num_threads(threads);
#else
    std::cout << "built without OpenMP; both runs use the serial kernel\n";
#endif

    try {
        irrpoly::BruteContext ctx(d, n, p, cap);
        // warm the normalized lists so only the mark kernel is timed
        for (int a = 1; a < d; ++a) ctx.normalized(a);

        auto time_marks = [&](bool parallel) {
            double best = 1e300;
            std::vector<std::uint64_t> bits;
            for (int r = 0; r < repeat; ++r) {
                auto t0 = Clock::now();
                bits = ctx.reducible_marks(d, parallel);
                double s = std::chrono::duration<double>(Clock::now() - t0).count();
                if (s < best) best = s;
            }
            return std::make_pair(best, bits);
        };

        auto [serial_s, serial_bits] = time_marks(false);
        auto [parallel_s, parallel_bits] = time_marks(true);

        if (serial_bits != parallel_bits) {
            std::cerr << "MISMATCH: parallel mark set differs from the serial reference\n";
            return 1;
        }
        std::uint64_t reducible = 0;
        for (std::uint64_t w : serial_bits) reducible += std::uint64_t(__builtin_popcountll(w));

        std::cout << "sieve d=" << d << " n=" << n << " p=" << p << ": " << reducible
                  << " reducible states\n";
        std::cout << "serial   " << serial_s << " s\n";
        std::cout << "parallel " << parallel_s << " s  (speedup " << serial_s / parallel_s
                  << "x)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
