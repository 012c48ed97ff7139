#include "ecq/nelder_mead.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace ecq {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start, const NelderMeadOptions& opt) {
    const std::size_t n = start.size();
    const int max_iter = opt.max_iter > 0 ? opt.max_iter : static_cast<int>(400 * n * n);

    std::vector<std::vector<double>> pts;
    pts.reserve(n + 1);
    pts.push_back(start);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = start;
        p[i] += p[i] != 0.0 ? opt.init_step : 0.05;
        pts.push_back(std::move(p));
    }
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xx(n);

    NelderMeadResult res;
    for (int it = 0; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        if (fs[worst] - fs[best] < opt.fspread_tol) {
            res.x = pts[best];
            res.fx = fs[best];
            res.iterations = it;
            res.converged = true;
            return res;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[k][i];
        }
        for (auto& c : centroid) c /= static_cast<double>(n);

        for (std::size_t i = 0; i < n; ++i)
            xr[i] = centroid[i] + opt.reflection * (centroid[i] - pts[worst][i]);
        const double fr = f(xr);

        if (fr < fs[best]) {
            for (std::size_t i = 0; i < n; ++i)
                xx[i] = centroid[i] + opt.expansion * (centroid[i] - pts[worst][i]);
            const double fe = f(xx);
            if (fe < fr) {
                pts[worst] = xx;
                fs[worst] = fe;
            } else {
                pts[worst] = xr;
                fs[worst] = fr;
            }
        } else if (fr < fs[second_worst]) {
            pts[worst] = xr;
            fs[worst] = fr;
        } else {
            // Contract toward the better of the reflected and current worst.
            if (fr < fs[worst]) {
                for (std::size_t i = 0; i < n; ++i)
                    xx[i] = centroid[i] + opt.contraction * (xr[i] - centroid[i]);
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    xx[i] = centroid[i] + opt.contraction * (pts[worst][i] - centroid[i]);
            }
            const double fc = f(xx);
            if (fc < std::min(fr, fs[worst])) {
                pts[worst] = xx;
                fs[worst] = fc;
            } else {
                for (std::size_t k = 0; k <= n; ++k) {
                    if (k == best) continue;
                    for (std::size_t i = 0; i < n; ++i)
                        pts[k][i] = pts[best][i] + opt.shrink * (pts[k][i] - pts[best][i]);
                    fs[k] = f(pts[k]);
                }
            }
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(fs.begin(), fs.end()) - fs.begin());
    res.x = pts[best];
    res.fx = fs[best];
    res.iterations = max_iter;
    res.converged = false;
    return res;
}

}  // namespace ecq
