#include "platelab/data.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace platelab {
namespace {

// grid-certified Lipschitz surrogate: max of |u_hat(r) - P|/r over 10^4
// log-spaced probes in [1e-6, 1e3]
double grid_lipschitz(const std::function<double(double)>& uhat, double P) {
    const int N = 10000;
    double best = 0.0;
    for (int i = 0; i < N; ++i) {
        double e = -6.0 + 9.0 * (double)i / (double)(N - 1);
        double r = std::pow(10.0, e);
        best = std::max(best, std::abs(uhat(r) - P) / r);
    }
    return best;
}

std::string param_label(const char* name, const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s:%s=%g", name, key, v);
    return buf;
}

} // namespace

DataSpec gaussian_datum(double a, int n) {
    if (!(a > 0.0)) throw std::invalid_argument("gaussian width must be > 0");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    double P = std::pow(std::numbers::pi / a, 0.5 * n);
    DataSpec d;
    d.label = param_label("gaussian", "a", a);
    d.uhat = [P, a](double r) { return P * std::exp(-r * r / (4.0 * a)); };
    d.moment = P;
    d.l11_surrogate = grid_lipschitz(d.uhat, P);
    d.sobolev_limit = std::numeric_limits<double>::infinity();
    d.tail = TailBound::gaussian(P * P, 0.5 / a);
    d.dim = n;
    return d;
}

DataSpec sobolev_edge_datum(double sigma, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(sigma > 0.5 * n))
        throw std::invalid_argument(
            "edge profile needs sigma > n/2 for a finite L2 norm");
    DataSpec d;
    d.label = param_label("edge", "sigma", sigma);
    d.uhat = [sigma](double r) {
        return std::pow(1.0 + r * r, -0.5 * sigma);
    };
    d.moment = 1.0;
    d.l11_surrogate = grid_lipschitz(d.uhat, 1.0);
    d.sobolev_limit = sigma - 0.5 * n;
    d.tail = TailBound::power(1.0, 2.0 * sigma);
    d.dim = n;
    return d;
}

ABParts ab_decomposition(const DataSpec& d, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    return {d.uhat(r) - d.moment, 0.0};
}

double h_norm(const DataSpec& d, double s, double tol, long long max_evals) {
    if (d.dim < 1 || !d.uhat)
        throw std::invalid_argument("data spec not initialized");
    if (s >= d.sobolev_limit)
        throw NonIntegrable("H^s norm diverges: s >= regularity ceiling " +
                            std::to_string(d.sobolev_limit));

    // shift the |u_hat|^2 tail bound by the (1+r^2)^s weight (valid r >= 1)
    TailBound t = d.tail;
    TailBound shifted = TailBound::none();
    switch (t.kind) {
        case TailBound::Kind::Zero:
            shifted = t;
            break;
        case TailBound::Kind::Power:
            // (1+r^2)^s <= (2r^2)^s for s >= 0, <= r^{2s} for s < 0
            shifted = TailBound::power(
                t.coeff * (s >= 0.0 ? std::pow(2.0, s) : 1.0),
                t.rate - 2.0 * s);
            break;
        case TailBound::Kind::Gaussian: {
            // (1+r^2)^s e^{-q r^2} <= C e^{-(q/2) r^2} with
            // C = sup_u (1+u)^s e^{-(q/2) u} = (2s/q)^s e^{q/2 - s} when
            // 2s > q, else 1
            double q = t.rate;
            double C = (s > 0.0 && 2.0 * s > q)
                           ? std::pow(2.0 * s / q, s) * std::exp(0.5 * q - s)
                           : 1.0;
            shifted = TailBound::gaussian(t.coeff * C, 0.5 * q);
            break;
        }
        default:
            break;
    }
    double xi = tail_cutoff(shifted, tol, d.dim);
    auto f = [&d, s](double r) {
        return d.uhat(r) * std::pow(1.0 + r * r, 0.5 * s);
    };
    return l2_region_norm(f, make_region(Zone::Full, xi), d.dim, 0.0, tol,
                          max_evals)
        .value;
}

double i0_norm(const DataPair& p, double tol) {
    return h_norm(p.u1, p.l, tol) + h_norm(p.u0, p.l + 1.0, tol) +
           p.u1.l11_surrogate + p.u0.l11_surrogate;
}

namespace {

struct Label {
    std::string name;
    std::string key;
    double value = 0.0;
    bool has_param = false;
};

Label parse_label(const std::string& s) {
    Label L;
    auto colon = s.find(':');
    L.name = s.substr(0, colon);
    if (colon == std::string::npos) return L;
    std::string rest = s.substr(colon + 1);
    auto eq = rest.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == rest.size())
        throw std::invalid_argument("malformed data label: " + s);
    L.key = rest.substr(0, eq);
    std::string num = rest.substr(eq + 1);
    size_t pos = 0;
    try {
        L.value = std::stod(num, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed data label: " + s);
    }
    if (pos != num.size())
        throw std::invalid_argument("malformed data label: " + s);
    L.has_param = true;
    return L;
}

} // namespace

DataPair make_pair(const std::string& label, int n, double l) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(l >= 0.0)) throw std::invalid_argument("regularity index must be >= 0");
    Label L = parse_label(label);
    DataPair p;
    p.dim = n;
    p.l = l;
    if (L.name == "gaussian") {
        double a = 1.0;
        if (L.has_param) {
            if (L.key != "a")
                throw std::invalid_argument(
                    "gaussian parameter must be a=<width>: " + label);
            a = L.value;
        }
        p.u0 = gaussian_datum(a, n);
        p.u1 = p.u0;
    } else if (L.name == "edge") {
        double sigma = l + 0.5 * n + 0.25;
        if (L.has_param) {
            if (L.key != "sigma")
                throw std::invalid_argument(
                    "edge parameter must be sigma=<value>: " + label);
            sigma = L.value;
        }
        // u0 one order smoother so the pair sits in H^{l+1} x H^l with the
        // same margin on both components
        p.u1 = sobolev_edge_datum(sigma, n);
        p.u0 = sobolev_edge_datum(sigma + 1.0, n);
    } else {
        throw std::invalid_argument("unknown data label: " + label);
    }
    return p;
}

} // namespace platelab
