#pragma once

#include <vector>

#include "haarbvp/errors.hpp"
#include "haarbvp/linsolve.hpp"

namespace haarbvp {

struct ResolutionConfig {
    static constexpr int kMaxLevel = 10;

    int J;
    int M;   // 2^J
    int n;   // 2M, system size
    double dx;

    explicit ResolutionConfig(int level);
};

struct WaveletIndex {
    int i;
    int j;
    int k;
    int m;    // 2^j
    int mu;   // M / m
    double alpha1;
    double alpha2;
    double alpha3;
    bool scaling;  // true for i = 1 (constant function, no breakpoints)
};

WaveletIndex wavelet_index(int i, const ResolutionConfig& config);

double haar_fn(const WaveletIndex& idx, double x);
double haar_integral(int v, const WaveletIndex& idx, double x);

// Same evaluations addressed by wavelet number alone (support breakpoints do
// not depend on the resolution level).
double haar_fn(int i, double x);
double haar_integral(int v, int i, double x);

std::vector<double> grid_points(const ResolutionConfig& config);         // 2M+1 nodes
std::vector<double> collocation_points(const ResolutionConfig& config);  // 2M midpoints

// Matrices are stored with row = wavelet number i, column = collocation point c.
struct HaarSystem {
    ResolutionConfig config;
    std::vector<double> colloc;
    DenseMatrix H;
    DenseMatrix P1;
    DenseMatrix P2;
    std::vector<double> p1_at_1;
    std::vector<double> p2_at_1;
};

HaarSystem build_system(const ResolutionConfig& config);

// Resolution implied by a coefficient vector of length 2*2^J.
ResolutionConfig config_for_size(int n);

}  // namespace haarbvp
