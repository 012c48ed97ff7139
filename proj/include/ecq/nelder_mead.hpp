#pragma once

#include <functional>
#include <vector>

namespace ecq {

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double fspread_tol = 1e-10;  // stop when max f - min f over the simplex is below this
    int max_iter = 0;            // 0 -> 400 * n^2
    double init_step = 0.1;      // simplex edge; 0.05 on zero coordinates
};

/// Downhill simplex minimization of an arbitrary objective.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start,
                             const NelderMeadOptions& opt = {});

}  // namespace ecq
