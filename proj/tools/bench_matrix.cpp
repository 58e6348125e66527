// Compares the serial and OpenMP exact-matrix multiply kernels on the
// structure-identity workload (leg-embedded products on the three-fold
// space) and on dense random exact matrices.

#include <chrono>
#include <iostream>
#include <random>

#include "qorbit/rmatrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qorbit;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int threads_in_use() {
#ifdef _OPENMP
    int n = 0;
#pragma omp parallel
    {
#pragma omp single
        n = omp_get_num_threads();
    }
    return n;
#else
    return 1;
#endif
}

} // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 5;
    ParameterContext ctx = ParameterContext::make({"v"});
    std::cout << "threads: " << threads_in_use() << "\n";
    std::cout << "workload                      serial[s]  parallel[s]  speedup  equal\n";

    bool all_equal = true;
    for (int N = 3; N <= max_n; ++N) {
        StructureSet s = build_a_series(ctx, N);
        Matrix r12 = leg_embed(s.R, N, 1, 2);
        Matrix r13 = leg_embed(s.R, N, 1, 3);
        Matrix r23 = leg_embed(s.R, N, 2, 3);

        auto t0 = std::chrono::steady_clock::now();
        Matrix a = r12.multiply_serial(r13).multiply_serial(r23);
        double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        Matrix b = r12.multiply_parallel(r13).multiply_parallel(r23);
        double tp = seconds(t0);

        bool eq = a == b;
        all_equal = all_equal && eq;
        std::printf("braid product  N=%d (%4dx%-4d)  %8.3f  %10.3f  %6.2fx  %s\n", N,
                    N * N * N, N * N * N, ts, tp, tp > 0 ? ts / tp : 0.0,
                    eq ? "yes" : "NO");
    }

    // dense random entries stress the scalar arithmetic rather than sparsity
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expo(-4, 4), coef(-9, 9);
    for (int n : {48, 96}) {
        Matrix a(n, ctx), b(n, ctx);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                LaurentScalar x = LaurentScalar::zero(ctx);
                for (int t = 0; t < 2; ++t) x.add_term({expo(rng)}, Rational(coef(rng)));
                a.at(i, j) = Scalar(x);
                LaurentScalar y = LaurentScalar::zero(ctx);
                for (int t = 0; t < 2; ++t) y.add_term({expo(rng)}, Rational(coef(rng)));
                b.at(i, j) = Scalar(y);
            }
        auto t0 = std::chrono::steady_clock::now();
        Matrix s1 = a.multiply_serial(b);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        Matrix s2 = a.multiply_parallel(b);
        double tp = seconds(t0);
        bool eq = s1 == s2;
        all_equal = all_equal && eq;
        std::printf("dense random   %4dx%-9d  %8.3f  %10.3f  %6.2fx  %s\n", n, n, ts, tp,
                    tp > 0 ? ts / tp : 0.0, eq ? "yes" : "NO");
    }
    if (!all_equal) {
        std::cerr << "kernel mismatch\n";
        return 1;
    }
    return 0;
}
