#include "qpdiag/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qpdiag::opt {

SimplexResult nelder_mead(const std::function<double(const RealVector&)>& f,
                          const RealVector& x0, double step, int max_iter,
                          double ftol) {
    const auto n = x0.size();
    std::vector<RealVector> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    pts.push_back(x0);
    for (Eigen::Index i = 0; i < n; ++i) {
        RealVector p = x0;
        p[i] += step;
        pts.push_back(std::move(p));
    }
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f(pts[i]);

    std::vector<std::size_t> order(pts.size());
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front(), worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];
        if (std::abs(vals[worst] - vals[best]) <= ftol) break;

        RealVector centroid = RealVector::Zero(n);
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != worst) centroid += pts[i];
        centroid /= static_cast<double>(pts.size() - 1);

        const RealVector reflected = centroid + (centroid - pts[worst]);
        const double fr = f(reflected);
        if (fr < vals[best]) {
            const RealVector expanded = centroid + 2.0 * (centroid - pts[worst]);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[worst] = expanded;
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second_worst]) {
            pts[worst] = reflected;
            vals[worst] = fr;
            continue;
        }
        const RealVector contracted = centroid + 0.5 * (pts[worst] - centroid);
        const double fc = f(contracted);
        if (fc < vals[worst]) {
            pts[worst] = contracted;
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) { // shrink toward the best
            if (i == best) continue;
            pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
            vals[i] = f(pts[i]);
        }
    }
    const auto best_it = std::min_element(vals.begin(), vals.end());
    const auto best_idx = static_cast<std::size_t>(best_it - vals.begin());
    return SimplexResult{pts[best_idx], *best_it, iter};
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations && (b - a) > 1e-14; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace qpdiag::opt
