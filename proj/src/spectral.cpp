#include "hamspec/spectral.hpp"

#include <cmath>
#include <numeric>

namespace hamspec {

namespace {

constexpr int kIterationCap = 2'000'000;

std::vector<double> build_matrix(const SimpleGraph& g, double alpha) {
    int n = g.order();
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u) {
        m[static_cast<std::size_t>(u) * n + u] = alpha * g.degree(u);
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                m[static_cast<std::size_t>(u) * n + v] = 1.0;
                m[static_cast<std::size_t>(v) * n + u] = 1.0;
            }
    }
    return m;
}

void matvec(const std::vector<double>& m, int n, const std::vector<double>& x,
            std::vector<double>& y) {
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = m.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

double norm(const std::vector<double>& x) {
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

void normalize(std::vector<double>& x) {
    double nrm = norm(x);
    if (nrm == 0.0) throw SpectralError("zero iterate in power iteration", 0.0);
    for (double& v : x) v /= nrm;
}

struct EigenPair {
    double value;
    double residual;
    int iterations;
    std::vector<double> vec;
};

/// Power iteration on M + shift*I where M is symmetric with eigenvalues in
/// [-shift+1, lambda_max]. If deflate is non-null the component along it is
/// projected out each step (for the second eigenvalue).
EigenPair power_iterate(const std::vector<double>& m, int n, double shift,
                        const std::vector<double>* deflate) {
    std::vector<double> x(n), y(n);
    if (!deflate) {
        // Deterministic start: all ones plus a mild index ramp.
        for (int i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i) / (7.0 * n + 1.0);
    } else {
        // The first pass converges to the eigenspace projection of its start
        // vector, so a deflated pass reusing that start would be orthogonal
        // to whatever remains of a degenerate top eigenspace. Start from a
        // deterministic golden-ratio scramble instead.
        for (int i = 0; i < n; ++i)
            x[i] = 0.5 + std::fmod(0.6180339887498949 * (i + 1), 1.0);
    }
    auto project = [&](std::vector<double>& v) {
        if (!deflate) return;
        double dot = std::inner_product(v.begin(), v.end(), deflate->begin(), 0.0);
        for (int i = 0; i < n; ++i) v[i] -= dot * (*deflate)[i];
    };
    project(x);
    normalize(x);

    double theta = 0.0, res = 0.0;
    for (int iter = 1; iter <= kIterationCap; ++iter) {
        matvec(m, n, x, y);
        for (int i = 0; i < n; ++i) y[i] += shift * x[i];
        if (deflate) {
            double dot = std::inner_product(y.begin(), y.end(), deflate->begin(), 0.0);
            for (int i = 0; i < n; ++i) y[i] -= dot * (*deflate)[i];
        }
        double rayleigh = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        theta = rayleigh - shift;
        double res2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] - rayleigh * x[i];
            res2 += r * r;
        }
        res = std::sqrt(res2);
        if (res <= kEigenTolerance * std::max(1.0, std::abs(theta)))
            return {theta, res, iter, x};
        x = y;
        project(x);
        normalize(x);
    }
    throw SpectralError("power iteration did not converge", theta);
}

}  // namespace

SpectralValue lambda_max_symmetric(const SimpleGraph& g, double alpha) {
    if (g.order() < 1) throw std::invalid_argument("eigenvalue of empty graph");
    if (alpha < 0.0) throw std::invalid_argument("alpha must be nonnegative");
    int n = g.order();
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    double shift = (1.0 + alpha) * maxdeg + 1.0;
    auto m = build_matrix(g, alpha);
    EigenPair pair = power_iterate(m, n, shift, nullptr);
    return {pair.value, pair.residual, pair.iterations};
}

SpectralValue rho2(const SimpleGraph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("rho2 needs at least 2 vertices");
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    double shift = maxdeg + 1.0;
    auto m = build_matrix(g, 0.0);
    EigenPair first = power_iterate(m, n, shift, nullptr);
    EigenPair second = power_iterate(m, n, shift, &first.vec);
    return {second.value, second.residual, first.iterations + second.iterations};
}

double epsilon0(const ThresholdParams& p) {
    double n = p.n, k = p.k, s = p.s;
    return n * (n + s - k - 2) + (k + 1) * (k + 2 - s);
}

double theta0(const ThresholdParams& p) {
    if (p.n < 1) throw std::invalid_argument("theta0 needs n >= 1");
    double e0 = epsilon0(p);
    if (e0 < 0) throw std::invalid_argument("epsilon0 negative, sqrt undefined");
    return p.alpha * (e0 / p.n + p.n) + (1.0 - p.alpha) * std::sqrt(e0);
}

double omega(const ThresholdParams& p) {
    if (p.n < 1) throw std::invalid_argument("omega needs n >= 1");
    double n = p.n, k = p.k, q = p.s;
    double radicand = n * (n + q - k - 2) + (k + 1) * (k + 1 - q);
    if (radicand < 0) throw std::invalid_argument("omega radicand negative");
    return p.alpha * (2 * n + q - k - 2 + (k + 1) * (k + 1 - q) / n) +
           (1.0 - p.alpha) * std::sqrt(radicand);
}

double theta_upper_bound(const BipartiteGraph& g, double alpha) {
    if (!g.balanced()) throw std::invalid_argument("theta_upper_bound needs a balanced graph");
    if (g.left_size() < 1) throw std::invalid_argument("graph must be nonempty");
    double n = g.left_size();
    double m = static_cast<double>(g.edge_count());
    return alpha * (m / n + n) + (1.0 - alpha) * std::sqrt(m);
}

DegreeBounds degree_bounds(const SimpleGraph& g) {
    int n = g.order();
    if (g.edge_count() == 0) throw std::invalid_argument("degree_bounds on edgeless graph");
    DegreeBounds b;
    double min_sum = 2.0 * n, min_prod = static_cast<double>(n) * n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                min_sum = std::min(min_sum, static_cast<double>(g.degree(u) + g.degree(v)));
                min_prod = std::min(min_prod, static_cast<double>(g.degree(u)) * g.degree(v));
            }
    b.mu_lower = min_sum;
    b.rho_lower = std::sqrt(min_prod);
    double mu_val = mu(g).value;
    double rho_val = rho(g).value;
    b.mu_equality = std::abs(mu_val - b.mu_lower) <= kEigenTolerance * std::max(1.0, mu_val);
    b.rho_equality = std::abs(rho_val - b.rho_lower) <= kEigenTolerance * std::max(1.0, rho_val);
    bool conn = is_connected(g);
    b.connected_regular = conn && is_regular(g).has_value();
    b.connected_semiregular_bipartite = conn && is_semiregular_bipartite(g).has_value();
    return b;
}

// ---- polynomial catalog -----------------------------------------------------

PolynomialSpec polynomial_catalog(PolyId id, const PolyParams& p) {
    double n = p.n, k = p.k, s = p.s, q = p.q, a = p.alpha;
    PolynomialSpec spec;
    double bracket_alpha = 0.0;
    double total = 0.0;

    switch (id) {
        case PolyId::PSI: {
            if (p.q < 2 || p.q > p.n || a < 0)
                throw std::invalid_argument("PSI needs 2 <= q <= n, alpha >= 0");
            double a2 = a * a;
            spec.coeffs = {
                (a2 - 1) * (n - 1) * (q - 1) * (n * q * a2 - 1),
                -a * (a2 * (2 * n * q - q - n) * (n + q - 1) - n * q * (n + q - 2)),
                a2 * (n * n + 4 * n * q - 3 * n + q * q - 3 * q + 1) - n * q + 1,
                -2 * (n + q - 1) * a,
                1.0};
            bracket_alpha = a;
            total = n + q;
            break;
        }
        case PolyId::PSI1: {
            if (p.n + p.s - p.k - 1 < 2 || p.n + p.s - p.k - 1 > p.n)
                throw std::invalid_argument("PSI1 needs 2 <= n+s-k-1 <= n");
            double qq = n + s - k - 1;
            spec.coeffs = {(qq - 1) * (n - 1), 0.0, -(n * qq - 1), 0.0, 1.0};
            bracket_alpha = 0.0;
            total = n + qq;
            break;
        }
        case PolyId::PSI2: {
            if (p.n + p.s - p.k - 1 < 2 || p.n + p.s - p.k - 1 > p.n)
                throw std::invalid_argument("PSI2 needs 2 <= n+s-k-1 <= n");
            spec.coeffs = {
                -(n - 1) * (n + s - k - 2) * (2 * n + s - k - 1),
                (k - s) * (k - s) + (n - 1) * (5 * n + 5 * s - 5 * k - 6),
                -2 * (2 * n + s - k - 2),
                1.0};
            bracket_alpha = 1.0;
            total = 2 * n + s - k - 1;
            break;
        }
        case PolyId::PSI4:
        case PolyId::PSI5: {
            if (id == PolyId::PSI5) s = 0;
            int si = static_cast<int>(s);
            if (p.k < 1 || si > p.k || si < 0 || p.k + 1 - si < 1 ||
                p.n < 2 * (p.k + 1) - si)
                throw std::invalid_argument(
                    "PSI4 needs k >= max(s,1), s >= 0, n >= 2(k+1)-s");
            // Cubic in y = x^2:
            //   y(y-A)(y-B) - ((1+A)y - A)((n-1)y - (n-k-1)B)
            double A = n + s - k - 2;
            double B = k * (k + 1 - s);
            double c3 = 1.0;
            double c2 = -(A + B + (1 + A) * (n - 1));
            double c1 = A * B + (1 + A) * (n - k - 1) * B + A * (n - 1);
            double c0 = -A * (n - k - 1) * B;
            spec.coeffs = {c0, 0.0, c1, 0.0, c2, 0.0, c3};
            bracket_alpha = 0.0;
            total = 2 * n;
            break;
        }
        case PolyId::PSI6: {
            if (p.k < 1 || p.n < 2 * (p.k + 1))
                throw std::invalid_argument("PSI6 needs k >= 1, n >= 2(k+1)");
            spec.coeffs = {
                2 * k * (n - 1) * (n - k - 1) * (n - k - 2),
                -(2 * n * n * n + (2 * k - 7) * n * n - (6 * k * k + 7 * k - 7) * n +
                  2 * k * k * k + 8 * k * k + 6 * k - 2),
                5 * n * n - (k + 11) * n - 2 * k * k + 6,
                -(4 * n - 4 - k),
                1.0};
            bracket_alpha = 1.0;
            total = 2 * n;
            break;
        }
    }
    spec.lo = 0.0;
    spec.hi = (1.0 + bracket_alpha) * total + 1.0;
    if (spec.eval(spec.hi) < 0)
        throw std::logic_error("polynomial bracket failed its sign check");
    return spec;
}

double max_real_root(const PolynomialSpec& p) {
    constexpr int kScanSteps = 20000;
    constexpr double kRootTol = 1e-12;
    double step = (p.hi - p.lo) / kScanSteps;
    if (step <= 0) throw std::invalid_argument("empty root bracket");

    double right = p.hi, fr = p.eval(right);
    for (int i = 1; i <= kScanSteps; ++i) {
        double left = (i == kScanSteps) ? p.lo : p.hi - i * step;
        double fl = p.eval(left);
        if (fr == 0.0) return right;
        if ((fl < 0) != (fr < 0)) {
            double a = left, b = right, fa = fl;
            while (b - a > kRootTol) {
                double mid = 0.5 * (a + b);
                double fm = p.eval(mid);
                if (fm == 0.0) return mid;
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        right = left;
        fr = fl;
    }
    if (fr == 0.0) return p.lo;
    throw std::runtime_error("no sign change in root bracket");
}

}  // namespace hamspec
