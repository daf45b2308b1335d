#include "platelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "platelab/symbol.hpp"

namespace platelab {
namespace {

// Order-10 Gauss-Legendre rule on [-1, 1], nodes by Newton on P10 from the
// usual cosine starting guesses.  Computed once, nodes stored ascending.
struct GaussRule {
    double x[10];
    double w[10];
};

GaussRule make_gauss10() {
    GaussRule g{};
    const int n = 10;
    for (int i = 0; i < n / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        g.x[i] = -x;
        g.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        g.w[i] = w;
        g.w[n - 1 - i] = w;
    }
    return g;
}

const GaussRule& gauss10() {
    static const GaussRule g = make_gauss10();
    return g;
}

template <class F>
double panel_integral(const F& g, double a, double b) {
    const GaussRule& R = gauss10();
    double m = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 10; ++i) s += R.w[i] * g(m + h * R.x[i]);
    return s * h;
}

struct Panel {
    double a = 0.0, b = 0.0;
    double value = 0.0; // fine estimate: sum over the two halves
    double err = 0.0;   // |whole-panel rule - fine estimate|
};

// priority_queue top = largest error; ties resolved by left endpoint so the
// refinement order (and hence the result) is deterministic
struct PanelOrder {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.a > q.a;
    }
};

// 30 integrand evaluations per call
template <class F>
Panel make_panel(const F& g, double a, double b) {
    double m = 0.5 * (a + b);
    double whole = panel_integral(g, a, b);
    double fine = panel_integral(g, a, m) + panel_integral(g, m, b);
    return {a, b, fine, std::abs(whole - fine)};
}

// map the error of the squared-norm integral to an error of the norm itself;
// sqrt(I + e) - sqrt(I) <= e/(2 sqrt I), capped by sqrt(e) when I is tiny
double norm_error(double I, double E) {
    E = std::max(E, 0.0);
    if (I <= E) return std::sqrt(E);
    return E / (2.0 * std::sqrt(I));
}

template <class F>
QuadratureResult engine(const F& f2w, const Region& reg, double t_hint,
                        double tol, long long max_evals) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (!(reg.hi > reg.lo)) throw std::invalid_argument("empty region");

    const BranchConstants& bc = branch_constants();
    std::vector<double> cuts{reg.lo};
    for (double c : {bc.delta, bc.zeta})
        if (c > reg.lo && c < reg.hi) cuts.push_back(c);
    cuts.push_back(reg.hi);
    std::sort(cuts.begin(), cuts.end());

    // panel width cap: a half-period of the fastest oscillation gets a full
    // order-10 panel
    double cap =
        std::min(0.25, std::numbers::pi / (2.0 * std::max(t_hint, 1.0)));

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    long long evals = 0;
    double sum_v = 0.0, sum_e = 0.0;
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        double a = cuts[s], b = cuts[s + 1];
        long long m = std::max<long long>(1, (long long)std::ceil((b - a) / cap));
        if (evals + 30 * m > max_evals)
            throw NonConvergent(
                "evaluation budget too small for the oscillation-resolving "
                "base grid (needs " +
                std::to_string(evals + 30 * m) + " evals)");
        double h = (b - a) / (double)m;
        for (long long i = 0; i < m; ++i) {
            Panel p = make_panel(f2w, a + (double)i * h, a + (double)(i + 1) * h);
            evals += 30;
            sum_v += p.value;
            sum_e += p.err;
            heap.push(p);
        }
    }

    const double width_floor = 1e-13 * std::max(1.0, reg.hi);
    while (true) {
        double I = std::max(sum_v, 0.0);
        if (norm_error(I, sum_e) <= tol) break;
        Panel worst = heap.top();
        if (worst.b - worst.a <= width_floor)
            throw NonIntegrable("refinement collapsed onto r = " +
                                std::to_string(worst.a) +
                                " without converging; integral appears "
                                "divergent there");
        if (evals + 60 > max_evals)
            throw NonConvergent("evaluation budget (" +
                                std::to_string(max_evals) +
                                ") exhausted before the tolerance was met");
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = make_panel(f2w, worst.a, mid);
        Panel right = make_panel(f2w, mid, worst.b);
        evals += 60;
        sum_v += left.value + right.value - worst.value;
        sum_e += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // final pass: re-accumulate left to right so the reported value does not
    // depend on refinement history round-off
    std::vector<Panel> leaves;
    leaves.reserve(heap.size());
    while (!heap.empty()) {
        leaves.push_back(heap.top());
        heap.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    double I = 0.0, E = 0.0;
    for (const Panel& p : leaves) {
        I += p.value;
        E += p.err;
    }
    I = std::max(I, 0.0);

    QuadratureResult res;
    res.value = std::sqrt(I);
    res.est_error = norm_error(I, E);
    res.panels_used = (int)leaves.size();
    res.evals = evals;
    return res;
}

double ipow(double r, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= r;
    return v;
}

// certified upper bound for omega * coeff * int_xi^inf bound(r) r^{n-1} dr;
// +inf when the bound cannot be integrated from this xi yet
double tail_integral(const TailBound& b, double xi, int n, double omega) {
    const double inf = std::numeric_limits<double>::infinity();
    switch (b.kind) {
        case TailBound::Kind::Zero:
            return xi >= b.rate ? 0.0 : inf;
        case TailBound::Kind::Gaussian: {
            double q = b.rate;
            // int_X u^m e^{-qu} du <= X^m e^{-qX}/q * 1/(1 - m/(qX)) for
            // qX > m, with u = r^2, m = n/2 - 1, X = xi^2
            double m = 0.5 * n - 1.0;
            double X = xi * xi;
            if (!(q * X > m)) return inf;
            double geom = 1.0 / (1.0 - (m > 0.0 ? m / (q * X) : 0.0));
            return 0.5 * omega * b.coeff * std::pow(X, m) * std::exp(-q * X) /
                   q * geom;
        }
        case TailBound::Kind::Power:
            return omega * b.coeff * std::pow(xi, (double)n - b.rate) /
                   (b.rate - (double)n);
        case TailBound::Kind::None:
        default:
            return inf;
    }
}

} // namespace

Region make_region(Zone zone, double xi_max) {
    const BranchConstants& bc = branch_constants();
    switch (zone) {
        case Zone::Low:
            return {zone, 0.0, bc.delta};
        case Zone::Mid:
            return {zone, bc.delta, 1.0};
        case Zone::High:
            if (!(xi_max > 1.0))
                throw std::invalid_argument("High region needs xi_max > 1");
            return {zone, 1.0, xi_max};
        case Zone::Full:
        default:
            if (!(xi_max >= 1.0))
                throw std::invalid_argument("Full region needs xi_max >= 1");
            return {zone, 0.0, xi_max};
    }
}

const char* zone_name(Zone z) {
    switch (z) {
        case Zone::Low: return "low";
        case Zone::Mid: return "mid";
        case Zone::High: return "high";
        case Zone::Full: default: return "full";
    }
}

double unit_sphere_area(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double tail_cutoff(const std::vector<TailBound>& bounds, double tol, int n) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (bounds.empty()) throw NonIntegrable("no tail bound available");
    for (const TailBound& b : bounds) {
        switch (b.kind) {
            case TailBound::Kind::None:
                throw NonIntegrable("no tail bound available");
            case TailBound::Kind::Power:
                if (!(b.rate > (double)n))
                    throw NonIntegrable(
                        "power tail r^-p with p <= n is not integrable "
                        "against r^{n-1}");
                break;
            case TailBound::Kind::Gaussian:
                if (!(b.rate > 0.0))
                    throw NonIntegrable("gaussian tail bound does not decay");
                break;
            default:
                break;
        }
    }
    double omega = unit_sphere_area(n);
    double target = 0.25 * tol * tol;
    double xi = 1.0;
    for (const TailBound& b : bounds)
        if (b.kind == TailBound::Kind::Zero) xi = std::max(xi, b.rate);
    // geometric scan: <= 5% overshoot of the minimal certified cutoff
    for (int it = 0; it < 4000; ++it) {
        double s = 0.0;
        for (const TailBound& b : bounds) s += tail_integral(b, xi, n, omega);
        if (s < target) return xi;
        xi *= 1.05;
    }
    throw NonIntegrable("no finite cutoff meets the tail tolerance");
}

double tail_cutoff(const TailBound& bound, double tol, int n) {
    return tail_cutoff(std::vector<TailBound>{bound}, tol, n);
}

QuadratureResult l2_region_norm(const std::function<double(double)>& f,
                                const Region& region, int n, double t_hint,
                                double tol, long long max_evals) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    double omega = unit_sphere_area(n);
    auto f2w = [&f, omega, n](double r) {
        double v = f(r);
        return omega * v * v * ipow(r, n - 1);
    };
    return engine(f2w, region, t_hint, tol, max_evals);
}

QuadratureResult l2_region_norm_complex(
    const std::function<std::complex<double>(double)>& f, const Region& region,
    int n, double t_hint, double tol, long long max_evals) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    double omega = unit_sphere_area(n);
    auto f2w = [&f, omega, n](double r) {
        return omega * std::norm(f(r)) * ipow(r, n - 1);
    };
    return engine(f2w, region, t_hint, tol, max_evals);
}

} // namespace platelab
