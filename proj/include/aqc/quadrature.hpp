#pragma once

#include <algorithm>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "aqc/common.hpp"

namespace aqc {

/// Adaptive Gauss-Kronrod (G7/K15) integration on [a, b].
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10, int max_depth = 17) {
    if (!(b > a)) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol);
}

/// Same, but the interval is split at the given interior breakpoints first so
/// the adaptive scheme never straddles a kink.
template <class F>
double integrate_adaptive_split(F&& f, double a, double b, const std::vector<double>& breaks,
                                double rel_tol = 1e-10, int max_depth = 17) {
    if (!(b > a)) return 0.0;
    std::vector<double> pts{a};
    for (double s : breaks)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate_adaptive(f, pts[i], pts[i + 1], rel_tol, max_depth);
    return total;
}

}  // namespace aqc
