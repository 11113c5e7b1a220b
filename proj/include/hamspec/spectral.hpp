#pragma once

#include <stdexcept>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

struct SpectralValue {
    double value = 0.0;
    double residual = 0.0;  // 2-norm of the eigen-residual
    int iterations = 0;
};

struct SpectralError : std::runtime_error {
    double best_estimate;
    SpectralError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
};

inline constexpr double kEigenTolerance = 1e-9;

/// Largest eigenvalue of A(G) + alpha*D(G) via deterministic power iteration
/// (all-ones start, diagonal shift by (1+alpha)*maxdeg + 1). alpha = 0 gives
/// the spectral radius, alpha = 1 the signless Laplacian spectral radius.
SpectralValue lambda_max_symmetric(const SimpleGraph& g, double alpha);

inline SpectralValue rho(const SimpleGraph& g) { return lambda_max_symmetric(g, 0.0); }
inline SpectralValue mu(const SimpleGraph& g) { return lambda_max_symmetric(g, 1.0); }

/// Second largest adjacency eigenvalue (with multiplicity), via deflation of
/// the dominant eigenpair.
SpectralValue rho2(const SimpleGraph& g);

// ---- closed-form thresholds ------------------------------------------------

struct ThresholdParams {
    int n = 0;
    int k = 0;
    int s = 0;  // doubles as q for omega
    double alpha = 0.0;
};

double epsilon0(const ThresholdParams& p);
double theta0(const ThresholdParams& p);  // throws if epsilon0 < 0
double omega(const ThresholdParams& p);   // s field plays the role of q

/// alpha*(|E|/n + n) + (1-alpha)*sqrt(|E|) for a balanced bipartite graph on
/// 2n vertices; an upper bound on Theta(G, alpha) for 0 <= alpha <= 1.
double theta_upper_bound(const BipartiteGraph& g, double alpha);

struct DegreeBounds {
    double mu_lower = 0.0;   // min over edges of d(u)+d(v)
    double rho_lower = 0.0;  // min over edges of sqrt(d(u)d(v))
    bool mu_equality = false;
    bool rho_equality = false;
    bool connected_regular = false;
    bool connected_semiregular_bipartite = false;
};

DegreeBounds degree_bounds(const SimpleGraph& g);  // throws on edgeless input

// ---- characteristic polynomial catalog -------------------------------------

enum class PolyId { PSI, PSI1, PSI2, PSI4, PSI5, PSI6 };

struct PolyParams {
    int n = 0;
    int k = 0;
    int s = 0;
    int q = 0;
    double alpha = 0.0;
};

struct PolynomialSpec {
    std::vector<double> coeffs;  // ascending degree, leading != 0
    double lo = 0.0;
    double hi = 0.0;  // bracket guaranteed to contain the maximum real root

    double eval(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// PSI:  char. poly of Theta(K_{n,q} - e, alpha), 2 <= q <= n, alpha >= 0
/// PSI1: rho(K_{n,n+s-k-1} - e)     PSI2: mu(K_{n,n+s-k-1} - e)
/// PSI4: rho(F0_{n,k,s})            PSI5: PSI4 with s = 0
/// PSI6: mu(F0_{n,k,0})
PolynomialSpec polynomial_catalog(PolyId id, const PolyParams& p);

/// Largest real root in the bracket: rightmost sign change located by a grid
/// scan, then bisection to 1e-12 absolute.
double max_real_root(const PolynomialSpec& p);

}  // namespace hamspec
