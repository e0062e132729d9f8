#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "lqbetti/field.hpp"
#include "lqbetti/rank.hpp"

using namespace lqb;
using Clock = std::chrono::steady_clock;

namespace {

DenseMatrix<PrimeField> random_matrix(int rows, int cols, double density,
                                      const PrimeField& K, std::mt19937_64& rng) {
    DenseMatrix<PrimeField> m(rows, cols, K);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long long> val(1, 32002);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) m.at(r, c) = K.from_int(val(rng));
    return m;
}

template <class Kernel>
double time_ms(Kernel&& kernel, int reps, int& rank_out) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        rank_out = kernel();
        auto t1 = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int size = argc > 1 ? std::atoi(argv[1]) : 512;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    PrimeField K(32003);
    std::mt19937_64 rng(91);

    std::cout << "rank kernels over GF(32003), best of " << reps << " runs\n";
    std::cout << "size      density  serial(ms)  parallel(ms)  rank\n";
    for (double density : {1.0, 0.05}) {
        auto m = random_matrix(size, size, density, K, rng);
        int r_serial = 0, r_parallel = 0;
        double t_serial = time_ms([&] { return rank_serial(m, K); }, reps, r_serial);
        double t_parallel =
            time_ms([&] { return rank_parallel(m, K); }, reps, r_parallel);
        if (r_serial != r_parallel) {
            std::cerr << "kernel disagreement: " << r_serial << " vs " << r_parallel
                      << "\n";
            return 1;
        }
        std::printf("%4dx%-4d  %.2f     %9.2f  %11.2f  %5d\n", size, size, density,
                    t_serial, t_parallel, r_serial);
    }
    return 0;
}
