#include "haarbvp/haar.hpp"

#include <cmath>
#include <string>

namespace haarbvp {

ResolutionConfig::ResolutionConfig(int level) : J(level) {
    if (level < 0) throw ResolutionCeiling("resolution level must be nonnegative, got " +
                                           std::to_string(level));
    if (level > kMaxLevel)
        throw ResolutionCeiling("resolution level " + std::to_string(level) +
                                " exceeds ceiling " + std::to_string(kMaxLevel));
    M = 1 << level;
    n = 2 * M;
    dx = 1.0 / n;
}

ResolutionConfig config_for_size(int n) {
    int level = 0;
    while (level <= ResolutionConfig::kMaxLevel && 2 * (1 << level) < n) ++level;
    if (2 * (1 << level) != n)
        throw IndexOutOfRange("coefficient vector length " + std::to_string(n) +
                              " is not 2*2^J");
    return ResolutionConfig(level);
}

namespace {

// Support breakpoints depend only on i: for i >= 2, j = floor(log2(i-1)),
// m = 2^j, k = i - m - 1, and the support is [k/m, (k+1)/m].
WaveletIndex shape_for(int i) {
    WaveletIndex idx{};
    idx.i = i;
    if (i == 1) {
        idx.j = 0;
        idx.k = 0;
        idx.m = 1;
        idx.scaling = true;
        return idx;
    }
    int j = 0;
    while ((1 << (j + 1)) < i) ++j;
    const int m = 1 << j;
    idx.j = j;
    idx.k = i - m - 1;
    idx.m = m;
    idx.scaling = false;
    idx.alpha1 = static_cast<double>(idx.k) / m;
    idx.alpha2 = (idx.k + 0.5) / m;
    idx.alpha3 = static_cast<double>(idx.k + 1) / m;
    return idx;
}

double factorial(int v) {
    double f = 1.0;
    for (int q = 2; q <= v; ++q) f *= q;
    return f;
}

}  // namespace

WaveletIndex wavelet_index(int i, const ResolutionConfig& config) {
    if (i < 1 || i > config.n)
        throw IndexOutOfRange("wavelet number " + std::to_string(i) + " outside [1, " +
                              std::to_string(config.n) + "]");
    WaveletIndex idx = shape_for(i);
    idx.mu = config.M / idx.m;
    return idx;
}

double haar_fn(const WaveletIndex& idx, double x) {
    if (idx.scaling) return 1.0;
    if (x >= idx.alpha1 && x < idx.alpha2) return 1.0;
    if (x >= idx.alpha2 && x < idx.alpha3) return -1.0;
    return 0.0;
}

double haar_integral(int v, const WaveletIndex& idx, double x) {
    if (v < 1) throw Error("integration order must be >= 1, got " + std::to_string(v));
    const double vf = factorial(v);
    if (idx.scaling) return std::pow(x, v) / vf;
    if (x < idx.alpha1) return 0.0;
    double s = std::pow(x - idx.alpha1, v);
    if (x > idx.alpha2) s -= 2.0 * std::pow(x - idx.alpha2, v);
    if (x > idx.alpha3) s += std::pow(x - idx.alpha3, v);
    return s / vf;
}

double haar_fn(int i, double x) { return haar_fn(shape_for(i), x); }

double haar_integral(int v, int i, double x) { return haar_integral(v, shape_for(i), x); }

std::vector<double> grid_points(const ResolutionConfig& config) {
    std::vector<double> grid(config.n + 1);
    for (int c = 0; c <= config.n; ++c) grid[c] = c * config.dx;
    return grid;
}

std::vector<double> collocation_points(const ResolutionConfig& config) {
    std::vector<double> colloc(config.n);
    for (int c = 0; c < config.n; ++c) colloc[c] = (c + 0.5) * config.dx;
    return colloc;
}

HaarSystem build_system(const ResolutionConfig& config) {
    HaarSystem sys{config,
                   collocation_points(config),
                   DenseMatrix(config.n),
                   DenseMatrix(config.n),
                   DenseMatrix(config.n),
                   std::vector<double>(config.n),
                   std::vector<double>(config.n)};
    for (int i = 1; i <= config.n; ++i) {
        const WaveletIndex idx = wavelet_index(i, config);
        for (int c = 0; c < config.n; ++c) {
            const double x = sys.colloc[c];
            sys.H(i - 1, c) = haar_fn(idx, x);
            sys.P1(i - 1, c) = haar_integral(1, idx, x);
            sys.P2(i - 1, c) = haar_integral(2, idx, x);
        }
        sys.p1_at_1[i - 1] = haar_integral(1, idx, 1.0);
        sys.p2_at_1[i - 1] = haar_integral(2, idx, 1.0);
    }
    return sys;
}

}  // namespace haarbvp
