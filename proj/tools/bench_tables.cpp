// Timing harness comparing the three n=2 table builders: the naive serial
// reference, the incremental serial builder, and the level-parallel OpenMP
// kernel. All three must produce identical tables.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "nimlab/sg.hpp"

using namespace nimlab;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

template <class F>
double time_best_of(int repeat, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int x0 = 3, x1 = 32, x2 = 512, repeat = 3;
    bool with_naive = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() { return std::atoi(argv[++i]); };
        if (a == "--x0" && i + 1 < argc) x0 = next();
        else if (a == "--x1" && i + 1 < argc) x1 = next();
        else if (a == "--x2" && i + 1 < argc) x2 = next();
        else if (a == "--repeat" && i + 1 < argc) repeat = next();
        else if (a == "--with-naive") with_naive = true;
        else {
            std::fprintf(stderr,
                         "usage: %s [--x0 N] [--x1 N] [--x2 N] [--repeat N] [--with-naive]\n",
                         argv[0]);
            return 2;
        }
    }
    std::printf("box (%d, %d, %d), best of %d\n", x0, x1, x2, repeat);

    SgTable incremental = sg_table_n2(x0, x1, x2);
    double t_inc = time_best_of(repeat, [&] { sg_table_n2(x0, x1, x2); });
    std::printf("  incremental serial : %9.2f ms\n", t_inc);

    SgTable parallel = sg_table_n2_parallel(x0, x1, x2);
    double t_par = time_best_of(repeat, [&] { sg_table_n2_parallel(x0, x1, x2); });
    std::printf("  wavefront omp      : %9.2f ms\n", t_par);

    bool ok = incremental == parallel;
    if (with_naive) {
        std::vector<int> box{x0, x1, x2};
        SgTable naive = build_table(GameRules::exco_nim(2), box);
        double t_naive = time_best_of(repeat, [&] { build_table(GameRules::exco_nim(2), box); });
        std::printf("  naive reference    : %9.2f ms\n", t_naive);
        ok = ok && naive == incremental;
    }
    std::printf("tables identical: %s\n", ok ? "yes" : "NO");
    return ok ? 0 : 1;
}
