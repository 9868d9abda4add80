#include "recoil/modesum.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"
#include "recoil/greens.hpp"

namespace recoil {

namespace cn = constants;

namespace {

constexpr std::complex<double> iu{0.0, 1.0};

// largest n >= 0 with n^2 <= rem2, exact against the double predicate
int floor_sqrt(double rem2) {
    int n = static_cast<int>(std::floor(std::sqrt(rem2)));
    while (n > 0 && static_cast<double>(n) * n > rem2) --n;
    while (static_cast<double>(n + 1) * (n + 1) <= rem2) ++n;
    return n;
}

void check_asymptotic(const ModeGrid& grid, const AtomPair& pair, double T) {
    if (!(grid.k_cutoff >= 1.5 * pair.excited.k()))
        throw ValidationError("mode sum: k_cutoff below 1.5 k_A does not capture the "
                              "emission line");
    if (!(T >= 0.0)) throw ValidationError("mode sum: emission time must be >= 0");
    const double gT = pair.excited.gamma * T;
    if (gT > 0.0 && gT < 20.0)
        throw ValidationError("mode sum: 0 < Gamma_A T < 20 is neither the empty-integral "
                              "edge case nor asymptotic");
}

template <typename SliceFn>
void run_slices(int nslices, Exec exec, const SliceFn& fn) {
    // slices fill independent slots; the caller reduces them in index order,
    // so both policies produce bitwise identical results
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < nslices; ++i) fn(i);
    } else {
        for (int i = 0; i < nslices; ++i) fn(i);
    }
}

} // namespace

int ModeGrid::nmax() const { return floor_sqrt(std::pow(k_cutoff * L / (2.0 * cn::pi), 2)); }

std::int64_t ModeGrid::mode_count() const {
    const double r2 = std::pow(k_cutoff * L / (2.0 * cn::pi), 2);
    const int nm = nmax();
    std::int64_t count = -1; // excludes the origin
    for (int n1 = -nm; n1 <= nm; ++n1)
        for (int n2 = -nm; n2 <= nm; ++n2) {
            const double rem2 = r2 - static_cast<double>(n1) * n1 - static_cast<double>(n2) * n2;
            if (rem2 < 0.0) continue;
            count += 2 * floor_sqrt(rem2) + 1;
        }
    return count;
}

ModeGrid make_mode_grid(double L, double k_cutoff) {
    if (!(L > 0.0)) throw ValidationError("mode grid: box side must be positive");
    if (!(k_cutoff > 0.0)) throw ValidationError("mode grid: k_cutoff must be positive");
    return {L, k_cutoff};
}

std::pair<Vec3, Vec3> polarization_basis(const Vec3& khat) {
    require_unit(khat, "propagation direction");
    const Vec3 helper = std::abs(khat.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
    const Vec3 e1 = normalized(cross(helper, khat));
    const Vec3 e2 = cross(khat, e1);
    return {e1, e2};
}

std::complex<double> amp1_time_factor(double omega, double omega_A, double gamma_A, double T) {
    if (!(T >= 0.0)) throw ValidationError("time factor: T must be >= 0");
    const std::complex<double> d{-gamma_A / 2.0, omega - omega_A};
    return std::exp(-iu * omega * T) * (std::exp(d * T) - 1.0) / d;
}

std::complex<double> amp3_time_factor(double omega, const AtomPair& pair, double T) {
    if (!(T >= 0.0)) throw ValidationError("time factor: T must be >= 0");
    const std::complex<double> a{-pair.excited.gamma / 2.0, -pair.excited.omega};
    const std::complex<double> b{-pair.ground.gamma / 2.0, -pair.ground.omega};
    const std::complex<double> dA = a + iu * omega;
    const std::complex<double> dB = b + iu * omega;
    return std::exp(-iu * omega * T) *
           ((std::exp(dA * T) - 1.0) / dA - (std::exp(dB * T) - 1.0) / dB) / (a - b);
}

namespace {

// composite Simpson with panel doubling until successive estimates agree
template <typename F>
std::complex<double> simpson_doubling(const F& f, double T, double tol) {
    std::complex<double> prev{0.0, 0.0};
    bool have_prev = false;
    for (int panels = 64; panels <= (1 << 22); panels *= 2) {
        const double h = T / static_cast<double>(panels);
        std::complex<double> odd{0.0, 0.0}, even{0.0, 0.0};
        for (int j = 1; j < panels; j += 2) odd += f(h * static_cast<double>(j));
        for (int j = 2; j < panels; j += 2) even += f(h * static_cast<double>(j));
        const std::complex<double> cur =
            h / 3.0 * (f(0.0) + f(T) + 4.0 * odd + 2.0 * even);
        if (have_prev && std::abs(cur - prev) <= tol) return cur;
        prev = cur;
        have_prev = true;
    }
    return prev;
}

} // namespace

std::complex<double> amp1_time_factor_quad(double omega, double omega_A, double gamma_A,
                                           double T, double tol) {
    if (!(T >= 0.0)) throw ValidationError("time factor: T must be >= 0");
    if (T == 0.0) return {0.0, 0.0};
    const auto f = [&](double t) {
        return std::exp(std::complex<double>(-gamma_A * t / 2.0, -omega * (T - t) - omega_A * t));
    };
    return simpson_doubling(f, T, tol);
}

std::complex<double> amp3_time_factor_quad(double omega, const AtomPair& pair, double T,
                                           double tol) {
    if (!(T >= 0.0)) throw ValidationError("time factor: T must be >= 0");
    if (T == 0.0) return {0.0, 0.0};
    const std::complex<double> a{-pair.excited.gamma / 2.0, -pair.excited.omega};
    const std::complex<double> b{-pair.ground.gamma / 2.0, -pair.ground.omega};
    // the inner t' integral is elementary: int_0^t e^{b(t-t')} e^{a t'} dt'
    // = (e^{a t} - e^{b t}) / (a - b); the oscillatory outer integral is the
    // part worth an independent quadrature
    const auto f = [&](double t) {
        return std::exp(std::complex<double>(0.0, -omega * (T - t))) *
               (std::exp(a * t) - std::exp(b * t)) / (a - b);
    };
    return simpson_doubling(f, T, tol);
}

std::complex<double> pair_coupling(const AtomPair& pair) {
    const double kA = pair.excited.k();
    return kA * kA / cn::eps0 *
           dot(pair.ground.mu, dyadic_green(kA, pair.Rvec), pair.excited.mu);
}

std::complex<double> amp1_closed(const Vec3& kvec, const Vec3& pol, const AtomPair& pair,
                                 double T, double volume) {
    const double k = norm(kvec);
    if (!(k > 0.0)) throw ValidationError("amp1: zero wavevector");
    const double pref = std::sqrt(cn::c0 * k / (2.0 * cn::hbar * volume * cn::eps0));
    const Vec3 R_A = 0.5 * pair.Rvec;
    return pref * dot(pair.excited.mu, pol) * std::exp(-iu * dot(kvec, R_A)) *
           amp1_time_factor(cn::c0 * k, pair.excited.omega, pair.excited.gamma, T);
}

std::complex<double> amp3_closed(const Vec3& kvec, const Vec3& pol, const AtomPair& pair,
                                 double T, double volume) {
    const double k = norm(kvec);
    if (!(k > 0.0)) throw ValidationError("amp3: zero wavevector");
    const double pref = std::sqrt(cn::c0 * k / (2.0 * cn::hbar * volume * cn::eps0));
    const Vec3 R_B = -0.5 * pair.Rvec;
    return -iu * pref * dot(pair.ground.mu, pol) * std::exp(-iu * dot(kvec, R_B)) *
           (pair_coupling(pair) / cn::hbar) * amp3_time_factor(cn::c0 * k, pair, T);
}

double modesum_pa(const ModeGrid& grid, const AtomPair& pair, double T, Exec exec) {
    check_asymptotic(grid, pair, T);
    if (T == 0.0) return 0.0;

    const double r2 = std::pow(grid.k_cutoff * grid.L / (2.0 * cn::pi), 2);
    const int nm = grid.nmax();
    const double kstep = 2.0 * cn::pi / grid.L;
    const double V = grid.L * grid.L * grid.L;
    const double wA = pair.excited.omega;
    const double gA = pair.excited.gamma;
    const Vec3 muA = pair.excited.mu;
    const double muA2 = dot(muA, muA);
    const double eGT = std::exp(-gA * T);
    const double eGT2 = std::exp(-gA * T / 2.0);

    std::vector<double> partial(static_cast<std::size_t>(2 * nm + 1), 0.0);
    const auto slice = [&](int i) {
        const int n1 = i - nm;
        double sum = 0.0;
        for (int n2 = -nm; n2 <= nm; ++n2) {
            const double rem2 =
                r2 - static_cast<double>(n1) * n1 - static_cast<double>(n2) * n2;
            if (rem2 < 0.0) continue;
            const int n3m = floor_sqrt(rem2);
            for (int n3 = -n3m; n3 <= n3m; ++n3) {
                if (n1 == 0 && n2 == 0 && n3 == 0) continue;
                const Vec3 kvec = kstep * Vec3{static_cast<double>(n1),
                                               static_cast<double>(n2),
                                               static_cast<double>(n3)};
                const double k2 = dot(kvec, kvec);
                const double k = std::sqrt(k2);
                const double w = cn::c0 * k;
                const double muk = dot(muA, kvec);
                const double polsum = muA2 - muk * muk / k2; // sum over both polarizations
                const double dw = w - wA;
                const double lor =
                    (1.0 + eGT - 2.0 * eGT2 * std::cos(dw * T)) / (dw * dw + gA * gA / 4.0);
                sum += cn::c0 * k / (2.0 * cn::hbar * V * cn::eps0) * polsum * lor;
            }
        }
        partial[static_cast<std::size_t>(i)] = sum;
    };
    run_slices(2 * nm + 1, exec, slice);

    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

FwdBwd asymmetry_check(const ModeGrid& grid, const AtomPair& pair, double T, Exec exec) {
    check_asymptotic(grid, pair, T);
    if (T == 0.0) return {};

    const double r2 = std::pow(grid.k_cutoff * grid.L / (2.0 * cn::pi), 2);
    const int nm = grid.nmax();
    const double kstep = 2.0 * cn::pi / grid.L;
    const double V = grid.L * grid.L * grid.L;
    const double wA = pair.excited.omega;
    const double wB = pair.ground.omega;
    const double gA = pair.excited.gamma;
    const double gB = pair.ground.gamma;
    const Vec3 muA = pair.excited.mu;
    const Vec3 muB = pair.ground.mu;
    const double muA2 = dot(muA, muA);
    const double muB2 = dot(muB, muB);
    const std::complex<double> a{-gA / 2.0, -wA};
    const std::complex<double> b{-gB / 2.0, -wB};
    const std::complex<double> W = pair_coupling(pair) / cn::hbar;
    const double W2 = std::norm(W);

    std::vector<FwdBwd> partial(static_cast<std::size_t>(2 * nm + 1));
    const auto slice = [&](int i) {
        const int n1 = i - nm;
        FwdBwd acc;
        for (int n2 = -nm; n2 <= nm; ++n2) {
            const double rem2 =
                r2 - static_cast<double>(n1) * n1 - static_cast<double>(n2) * n2;
            if (rem2 < 0.0) continue;
            const int n3m = floor_sqrt(rem2);
            for (int n3 = -n3m; n3 <= n3m; ++n3) {
                if (n1 == 0 && n2 == 0 && n3 == 0) continue;
                const Vec3 kvec = kstep * Vec3{static_cast<double>(n1),
                                               static_cast<double>(n2),
                                               static_cast<double>(n3)};
                const double proj = dot(kvec, pair.axis);
                if (proj == 0.0) continue; // transverse plane belongs to neither side
                const double k2 = dot(kvec, kvec);
                const double k = std::sqrt(k2);
                const double w = cn::c0 * k;
                // overall e^{-i w T} phases cancel inside every |.|^2 and
                // cross term, so the cores omit them
                const std::complex<double> dA = a + iu * w;
                const std::complex<double> dB = b + iu * w;
                const std::complex<double> tf1 = (std::exp(dA * T) - 1.0) / dA;
                const std::complex<double> tf3 =
                    (tf1 - (std::exp(dB * T) - 1.0) / dB) / (a - b);
                const double mukA = dot(muA, kvec);
                const double mukB = dot(muB, kvec);
                const double C = cn::c0 * k / (2.0 * cn::hbar * V * cn::eps0);
                const double t11 = C * (muA2 - mukA * mukA / k2) * std::norm(tf1);
                const double t33 = C * (muB2 - mukB * mukB / k2) * W2 * std::norm(tf3);
                const double tAB = dot(muA, muB) - mukA * mukB / k2;
                const std::complex<double> cross_phase =
                    std::exp(iu * dot(kvec, pair.Rvec));
                const double t13 =
                    2.0 * C * tAB * (std::conj(tf1) * (-iu * W) * tf3 * cross_phase).real();
                const double p1 = t11 + t33 + t13;
                if (proj > 0.0)
                    acc.forward += p1;
                else
                    acc.backward += p1;
            }
        }
        partial[static_cast<std::size_t>(i)] = acc;
    };
    run_slices(2 * nm + 1, exec, slice);

    FwdBwd total;
    for (const FwdBwd& p : partial) {
        total.forward += p.forward;
        total.backward += p.backward;
    }
    return total;
}

double interference_density(const AtomPair& pair, const Vec3& khat) {
    require_unit(khat, "emission direction");
    if (pair.orientation == Orientation::isotropic)
        throw ValidationError("interference density requires fixed dipole orientations");
    const double kA = pair.excited.k();
    const Vec3 muA = pair.excited.mu;
    const Vec3 muB = pair.ground.mu;
    const double tAB = dot(muA, muB) - dot(muA, khat) * dot(muB, khat);
    const std::complex<double> a{-pair.excited.gamma / 2.0, -pair.excited.omega};
    const std::complex<double> b{-pair.ground.gamma / 2.0, -pair.ground.omega};
    const double gamma_mean = 0.5 * (pair.excited.gamma + pair.ground.gamma);
    // residues of the asymptotic-T mode integral over the emission line
    const std::complex<double> omega_int =
        2.0 * cn::pi / (a - b) *
        (1.0 / std::complex<double>(-gamma_mean, pair.detuning) + 1.0 / pair.excited.gamma);
    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, pair.x() * dot(khat, pair.axis)));
    const double pref = kA * kA * kA /
                        (8.0 * cn::pi * cn::pi * cn::pi * cn::hbar * cn::hbar * cn::eps0);
    return pref * tAB * (-iu * phase * pair_coupling(pair) * omega_int).real();
}

} // namespace recoil
