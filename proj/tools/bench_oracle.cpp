// Timing comparison of the serial reference kernels against the
// OpenMP-parallel ones on mid-size enumeration instances.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccr/oracle.hpp"

using namespace ccr;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

CodeParams bench_params(int p, int r, int e, int s, long long m) {
    RingContext R = make_ring(p, r, e);
    RingElement lam = R.zero();
    lam.v[0] = R.field.one();
    if (e >= 2) lam.v[1] = R.field.one();
    return make_code_params(R, m, s, lam);
}

void bench_case(const char* tag, const CodeParams& P) {
    PrincipalCode c = build_principal(P, std::vector<long long>(P.fac.l, 1));
    RingPoly gen = principal_generator(c);

    CodewordSet cs, cp;
    double t_close_s = time_ms([&] { cs = close_ideal(P, {gen}, Exec::Serial); });
    double t_close_p = time_ms([&] { cp = close_ideal(P, {gen}, Exec::Parallel); });
    bool close_eq = cs.words == cp.words;

    CodewordSet ds, dp;
    double t_dual_s = time_ms([&] { ds = exhaustive_dual(cs, Exec::Serial); });
    double t_dual_p = time_ms([&] { dp = exhaustive_dual(cs, Exec::Parallel); });
    bool dual_eq = ds.words == dp.words;

    double t_ideals_s = 0, t_ideals_p = 0;
    size_t n_ideals_s = 0, n_ideals_p = 0;
    bool ideals_eq = true;
    if (ambient_size(P) <= kAllIdealsCap) {
        std::vector<CodewordSet> is, ip;
        t_ideals_s = time_ms([&] { is = all_ideals(P, Exec::Serial); });
        t_ideals_p = time_ms([&] { ip = all_ideals(P, Exec::Parallel); });
        n_ideals_s = is.size();
        n_ideals_p = ip.size();
        ideals_eq = is.size() == ip.size();
        for (size_t i = 0; i < is.size() && ideals_eq; ++i)
            ideals_eq = is[i].words == ip[i].words;
    }

    std::printf("%-28s ambient=%-8lld |C|=%-6lld\n", tag, ambient_size(P), cs.size());
    std::printf("  close_ideal      serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                t_close_s, t_close_p, t_close_p > 0 ? t_close_s / t_close_p : 0.0,
                close_eq ? "match" : "MISMATCH");
    std::printf("  exhaustive_dual  serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n", t_dual_s,
                t_dual_p, t_dual_p > 0 ? t_dual_s / t_dual_p : 0.0,
                dual_eq ? "match" : "MISMATCH");
    if (n_ideals_s)
        std::printf("  all_ideals (%3zu) serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                    n_ideals_s, t_ideals_s, t_ideals_p,
                    t_ideals_p > 0 ? t_ideals_s / t_ideals_p : 0.0,
                    ideals_eq && n_ideals_s == n_ideals_p ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel falls back to serial\n\n");
#endif
    bench_case("(2,1,2,1,3) lambda=1+u", bench_params(2, 1, 2, 1, 3));
    bench_case("(3,1,2,0,4) lambda=1+u", bench_params(3, 1, 2, 0, 4));
    bench_case("(2,1,2,1,5) lambda=1+u", bench_params(2, 1, 2, 1, 5));
    return 0;
}
