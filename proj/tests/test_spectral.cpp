#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/spectral.hpp"

using namespace hamspec;
using doctest::Approx;

TEST_CASE("closed-form eigenvalues") {
    CHECK(rho(SimpleGraph::complete(6)).value == Approx(5.0).epsilon(1e-9));
    CHECK(mu(SimpleGraph::complete(6)).value == Approx(10.0).epsilon(1e-9));
    CHECK(rho(SimpleGraph::cycle(8)).value == Approx(2.0).epsilon(1e-9));
    CHECK(rho(SimpleGraph::complete_bipartite(3, 4)).value ==
          Approx(std::sqrt(12.0)).epsilon(1e-9));
    CHECK(mu(SimpleGraph::complete_bipartite(3, 3)).value == Approx(6.0).epsilon(1e-9));
    CHECK(rho(SimpleGraph::complete_bipartite(1, 3)).value ==
          Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK(rho(SimpleGraph::petersen()).value == Approx(3.0).epsilon(1e-9));
    CHECK(mu(SimpleGraph::petersen()).value == Approx(6.0).epsilon(1e-9));
    CHECK(rho(SimpleGraph::empty(4)).value == Approx(0.0));
}

TEST_CASE("second eigenvalue via deflation") {
    CHECK(rho2(SimpleGraph::petersen()).value == Approx(1.0).epsilon(1e-8));
    CHECK(rho2(SimpleGraph::complete(4)).value == Approx(-1.0).epsilon(1e-8));
    CHECK(rho2(SimpleGraph::complete_bipartite(3, 3)).value == Approx(0.0).epsilon(1e-7));
    // disjoint K_3 + K_3: top eigenvalue has multiplicity two
    SimpleGraph g = disjoint_union(SimpleGraph::complete(3), SimpleGraph::complete(3));
    CHECK(rho2(g).value == Approx(2.0).epsilon(1e-8));
}

TEST_CASE("frozen eigensolves: K_{4,5}-e") {
    SimpleGraph g = delete_edge(SimpleGraph::complete_bipartite(4, 5), 0, 4);
    CHECK(rho(g).value == Approx(4.2832117629737905).epsilon(1e-9));
    CHECK(mu(g).value == Approx(8.672823701000947).epsilon(1e-9));
    CHECK(rho2(g).value == Approx(0.8087626311365617).epsilon(1e-7));
}

TEST_CASE("frozen eigensolves: F and F0 at (8,1,1)") {
    CHECK(rho(build_F(8, 1, 1).as_simple()).value == Approx(7.491794148739183).epsilon(1e-9));
    CHECK(mu(build_F(8, 1, 1).as_simple()).value == Approx(15.071067811865468).epsilon(1e-9));
    CHECK(rho(build_F0(8, 1, 1).as_simple()).value == Approx(7.372682478802039).epsilon(1e-9));
    CHECK(mu(build_F0(8, 1, 1).as_simple()).value == Approx(14.858725360725487).epsilon(1e-9));
}

TEST_CASE("theta endpoints and interpolation") {
    SimpleGraph p = SimpleGraph::petersen();
    CHECK(lambda_max_symmetric(p, 0.0).value == Approx(rho(p).value).epsilon(1e-10));
    CHECK(lambda_max_symmetric(p, 1.0).value == Approx(mu(p).value).epsilon(1e-10));
    // regular graph: Theta(G, a) = rho + a*d exactly
    CHECK(lambda_max_symmetric(p, 0.5).value == Approx(3.0 + 0.5 * 3.0).epsilon(1e-9));
    // frozen non-regular case: Theta(K_{6,4}-e, 0.5)
    SimpleGraph g = delete_edge(SimpleGraph::complete_bipartite(6, 4), 0, 6);
    CHECK(lambda_max_symmetric(g, 0.5).value == Approx(7.178334115160676).epsilon(1e-9));
}

TEST_CASE("threshold formulas") {
    // epsilon0(s) = n(n+s-k-2) + (k+1)(k+2-s)
    CHECK(epsilon0({7, 1, 0, 0.0}) == Approx(7.0 * 4 + 2 * 3));
    CHECK(epsilon0({8, 2, 1, 0.0}) == Approx(8.0 * 5 + 3 * 3));
    CHECK(theta0({7, 1, 0, 0.0}) == Approx(std::sqrt(34.0)));
    CHECK(theta0({7, 1, 0, 1.0}) == Approx(34.0 / 7 + 7));
    double a = 0.25;
    CHECK(theta0({7, 1, 0, a}) == Approx(a * (34.0 / 7 + 7) + (1 - a) * std::sqrt(34.0)));
    // omega(alpha) with s playing the role of q
    int n = 8, k = 1, q = 0;
    double e = n * (n + q - k - 2) + (k + 1) * (k + 1 - q);
    CHECK(omega({n, k, q, 0.0}) == Approx(std::sqrt(e)));
    CHECK(omega({n, k, q, 1.0}) ==
          Approx(2.0 * n + q - k - 2 + static_cast<double>((k + 1) * (k + 1 - q)) / n));
}

TEST_CASE("theta upper bound dominates theta on balanced bipartite graphs") {
    BipartiteGraph f = build_F(6, 1, 0);
    for (double a : {0.0, 0.3, 0.7, 1.0}) {
        double ub = theta_upper_bound(f, a);
        CHECK(lambda_max_symmetric(f.as_simple(), a).value <= ub + 1e-9);
    }
}

TEST_CASE("degree bounds and equality flags") {
    DegreeBounds b = degree_bounds(SimpleGraph::petersen());
    CHECK(b.mu_lower == Approx(6.0));
    CHECK(b.rho_lower == Approx(3.0));
    CHECK(b.connected_regular);
    CHECK(b.mu_equality);
    CHECK(b.rho_equality);

    DegreeBounds sb = degree_bounds(SimpleGraph::complete_bipartite(2, 3));
    CHECK(sb.connected_semiregular_bipartite);
    CHECK(sb.rho_equality);
    CHECK(sb.rho_lower == Approx(std::sqrt(6.0)));

    DegreeBounds pb = degree_bounds(SimpleGraph::path(4));
    CHECK_FALSE(pb.connected_regular);
    CHECK(rho(SimpleGraph::path(4)).value > pb.rho_lower + 1e-6);
    CHECK_THROWS_AS(degree_bounds(SimpleGraph::empty(3)), std::invalid_argument);
}

TEST_CASE("polynomial catalog max roots match eigensolves") {
    struct Pt { int n, q; };
    for (Pt pt : {Pt{4, 3}, Pt{5, 3}, Pt{6, 4}}) {
        SimpleGraph g = delete_edge(SimpleGraph::complete_bipartite(pt.n, pt.q), 0, pt.n);
        for (double a : {0.0, 0.5, 1.0}) {
            PolynomialSpec ps = polynomial_catalog(PolyId::PSI, {pt.n, 0, 0, pt.q, a});
            CHECK(std::fabs(max_real_root(ps) - lambda_max_symmetric(g, a).value) < 1e-8);
        }
    }

    struct P3 { int n, k, s; };
    for (P3 pt : {P3{8, 2, 1}, P3{8, 1, 0}, P3{10, 3, 2}}) {
        PolynomialSpec ps = polynomial_catalog(PolyId::PSI4, {pt.n, pt.k, pt.s, 0, 0.0});
        double r = rho(build_F0(pt.n, pt.k, pt.s).as_simple()).value;
        CHECK(std::fabs(max_real_root(ps) - r) < 1e-8);
    }

    for (auto [n, k] : {std::pair{10, 1}, std::pair{12, 2}}) {
        PolynomialSpec ps = polynomial_catalog(PolyId::PSI6, {n, k, 0, 0, 0.0});
        double m = mu(build_F0(n, k, 0).as_simple()).value;
        CHECK(std::fabs(max_real_root(ps) - m) < 1e-8);
    }
}

TEST_CASE("PSI1/PSI2 match the punctured complete bipartite graph") {
    int n = 9, k = 2, s = 1;  // K_{n, n+s-k-1} - e = K_{9,7} - e
    SimpleGraph g = delete_edge(SimpleGraph::complete_bipartite(n, n + s - k - 1), 0, n);
    PolynomialSpec p1 = polynomial_catalog(PolyId::PSI1, {n, k, s, 0, 0.0});
    CHECK(std::fabs(max_real_root(p1) - rho(g).value) < 1e-8);
    PolynomialSpec p2 = polynomial_catalog(PolyId::PSI2, {n, k, s, 0, 0.0});
    CHECK(std::fabs(max_real_root(p2) - mu(g).value) < 1e-8);
}

TEST_CASE("PSI5 is PSI4 at s=0") {
    PolynomialSpec a = polynomial_catalog(PolyId::PSI4, {9, 2, 0, 0, 0.0});
    PolynomialSpec b = polynomial_catalog(PolyId::PSI5, {9, 2, 0, 0, 0.0});
    CHECK(std::fabs(max_real_root(a) - max_real_root(b)) < 1e-10);
}
