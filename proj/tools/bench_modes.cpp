#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "recoil/constants.hpp"
#include "recoil/dynamics.hpp"
#include "recoil/emission.hpp"
#include "recoil/exec.hpp"
#include "recoil/modesum.hpp"
#include "recoil/pair.hpp"
#include "recoil/species.hpp"

namespace cn = recoil::constants;
using recoil::Exec;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Row {
    const char* name;
    double serial_s = 0.0;
    double parallel_s = 0.0;
    bool bitwise = false;
};

void print(const Row& r) {
    std::cout << r.name << ": serial " << r.serial_s << " s, parallel " << r.parallel_s
              << " s, speedup " << (r.serial_s / r.parallel_s) << ", bitwise "
              << (r.bitwise ? "yes" : "NO") << "\n";
}

template <typename Fn, typename Eq>
Row bench(const char* name, const Fn& fn, const Eq& eq) {
    Row r{name};
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = fn(Exec::serial);
    r.serial_s = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = fn(Exec::parallel);
    r.parallel_s = seconds(t0);
    r.bitwise = eq(serial, parallel);
    print(r);
    return r;
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::cout << "openmp " << (recoil::openmp_enabled() ? "on" : "off") << ", threads "
              << recoil::max_threads() << (quick ? ", quick mode" : "") << "\n";

    const double kA = 1e6;
    const auto synth = [&](const std::string& label, double k) {
        return recoil::make_species(label, cn::c0 * k, 0.0065 * cn::c0 * k, {0.0, 0.0, 1.0},
                                    "benchmark fixture");
    };
    const recoil::AtomPair pair = recoil::make_pair(
        synth("BENCH_A", kA), synth("BENCH_B", 1.13 * kA), 1.28 / kA, {1.0, 0.0, 0.0},
        recoil::Orientation::fixed, 10.0);
    const recoil::ModeGrid grid =
        recoil::make_mode_grid((quick ? 60.0 : 200.0) / kA, 3.0 * kA);
    const double T = 30.0 / pair.excited.gamma;
    const int scan_samples = quick ? 400 : 2000;
    const int quad_order = quick ? 96 : 256;

    std::cout << "mode grid: nmax " << grid.nmax() << ", " << grid.mode_count()
              << " modes\n";

    bool all_bitwise = true;

    all_bitwise &= bench(
                       "scan_separation",
                       [&](Exec e) { return recoil::scan_separation(pair, 0.5, 20.0, scan_samples, e); },
                       [](const auto& a, const auto& b) {
                           if (a.size() != b.size()) return false;
                           for (std::size_t i = 0; i < a.size(); ++i)
                               if (std::memcmp(&a[i], &b[i], sizeof(a[i])) != 0) return false;
                           return true;
                       })
                       .bitwise;

    all_bitwise &= bench(
                       "emitted_momentum",
                       [&](Exec e) { return recoil::emitted_momentum(pair, quad_order, e); },
                       [](const auto& a, const auto& b) {
                           if (a.sphere_integral != b.sphere_integral) return false;
                           if (std::memcmp(&a.total_momentum, &b.total_momentum,
                                           sizeof(a.total_momentum)) != 0)
                               return false;
                           return a.values == b.values;
                       })
                       .bitwise;

    all_bitwise &= bench(
                       "modesum_pa",
                       [&](Exec e) { return recoil::modesum_pa(grid, pair, T, e); },
                       [](double a, double b) { return a == b; })
                       .bitwise;

    all_bitwise &= bench(
                       "asymmetry_check",
                       [&](Exec e) { return recoil::asymmetry_check(grid, pair, T, e); },
                       [](const recoil::FwdBwd& a, const recoil::FwdBwd& b) {
                           return a.forward == b.forward && a.backward == b.backward;
                       })
                       .bitwise;

    if (!all_bitwise) {
        std::cout << "serial/parallel mismatch detected\n";
        return 1;
    }
    return 0;
}
