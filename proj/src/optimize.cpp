#include "selfcomm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace selfcomm {

std::pair<double, double> golden_section_min(const std::function<double(double)>& f, double a,
                                             double b, double x_tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

std::pair<double, double> periodic_min_scan(const std::function<double(double)>& f, double lo,
                                            double hi, int n, double refine_tol) {
    const double step = (hi - lo) / n;
    std::vector<double> fv(n);
    for (int i = 0; i < n; ++i) fv[i] = f(lo + i * step);

    double best_t = lo;
    double best_v = fv[0];
    for (int i = 1; i < n; ++i)
        if (fv[i] < best_v) {
            best_v = fv[i];
            best_t = lo + i * step;
        }

    // Refine every grid-local minimum; the product of two spread functions
    // need not be unimodal, so a single bracket is not enough.
    for (int i = 0; i < n; ++i) {
        const double prev = fv[(i + n - 1) % n];
        const double next = fv[(i + 1) % n];
        if (fv[i] <= prev && fv[i] <= next) {
            const double a = lo + (i - 1) * step;
            const double b = lo + (i + 1) * step;
            auto [t, v] = golden_section_min(f, a, b, refine_tol);
            // fold the refined angle back into [lo, hi)
            if (t < lo) t += (hi - lo);
            if (t >= hi) t -= (hi - lo);
            if (v < best_v || (v == best_v && t < best_t)) {
                best_v = v;
                best_t = t;
            }
        }
    }
    return {best_t, best_v};
}

NelderMeadResult nelder_mead_2d(const std::function<double(std::array<double, 2>)>& f,
                                std::array<double, 2> start, double scale, double x_tol,
                                int max_iter) {
    using P = std::array<double, 2>;
    struct Vertex {
        P x;
        double v;
    };
    std::array<Vertex, 3> s = {Vertex{start, f(start)},
                               Vertex{{start[0] + scale, start[1]}, 0.0},
                               Vertex{{start[0], start[1] + scale}, 0.0}};
    s[1].v = f(s[1].x);
    s[2].v = f(s[2].x);

    auto order = [&] { std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v < b.v; }); };
    auto diameter = [&] {
        double d = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                d = std::max(d, std::hypot(s[i].x[0] - s[j].x[0], s[i].x[1] - s[j].x[1]));
        return d;
    };

    NelderMeadResult res;
    int it = 0;
    for (; it < max_iter; ++it) {
        order();
        if (diameter() <= x_tol) {
            res.converged = true;
            break;
        }
        const P c = {0.5 * (s[0].x[0] + s[1].x[0]), 0.5 * (s[0].x[1] + s[1].x[1])};
        auto along = [&](double coef) -> P {
            return {c[0] + coef * (c[0] - s[2].x[0]), c[1] + coef * (c[1] - s[2].x[1])};
        };
        const P xr = along(1.0);
        const double fr = f(xr);
        if (fr < s[0].v) {
            const P xe = along(2.0);
            const double fe = f(xe);
            s[2] = (fe < fr) ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < s[1].v) {
            s[2] = {xr, fr};
        } else {
            const P xc = along(fr < s[2].v ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, s[2].v)) {
                s[2] = {xc, fc};
            } else {  // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    s[i].x = {0.5 * (s[i].x[0] + s[0].x[0]), 0.5 * (s[i].x[1] + s[0].x[1])};
                    s[i].v = f(s[i].x);
                }
            }
        }
    }
    order();
    res.x = s[0].x;
    res.value = s[0].v;
    res.iterations = it;
    if (!res.converged) res.converged = diameter() <= x_tol;
    return res;
}

namespace {

// Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double max_panel) {
    static std::vector<double> x, w;
    static std::once_flag flag;
    std::call_once(flag, [] { gauss_legendre_nodes(20, x, w); });

    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (size_t k = 0; k < x.size(); ++k) acc += w[k] * f(mid + 0.5 * h * x[k]);
        total += 0.5 * h * acc;
    }
    return total;
}

}  // namespace selfcomm
