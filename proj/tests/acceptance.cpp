// Acceptance gate: one pass/fail line per criterion. Exit code = number of
// failed criteria. Tolerances are pinned here, not configurable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hamspec/closure.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/verifier.hpp"

using namespace hamspec;

namespace {

constexpr double kStrictTol = 1e-9;
constexpr double kCatalogTol = 1e-8;

int g_failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int idx, const std::string& what, bool ok, double t0,
            const std::string& detail = "") {
    double dt = now_seconds() - t0;
    std::printf("%s  criterion %2d  %-38s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx,
                what.c_str(), dt, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

SimpleGraph random_connected(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    for (;;) {
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

// 1. Petersen facts.
void criterion1() {
    double t0 = now_seconds();
    SimpleGraph p = SimpleGraph::petersen();
    bool ok = !hamiltonian_cycle(p).has_value() &&
              q_property(p, Property::Q_TRACEABLE, 1);
    report(1, "Petersen facts", ok, t0);
}

// 2. Closure stability, exhaustive n=6.
void criterion2() {
    double t0 = now_seconds();
    long mismatches = 0;
    enumerate_graphs(6, [](const SimpleGraph&) { return true; },
                     [&](const SimpleGraph& g) {
                         if (hamiltonian_path(g).has_value() !=
                             hamiltonian_path(k_closure(g, 5).first).has_value())
                             ++mismatches;
                         if (hamiltonian_cycle(g).has_value() !=
                             hamiltonian_cycle(k_closure(g, 6).first).has_value())
                             ++mismatches;
                         for (int q : {1, 2})
                             if (q_property(g, Property::Q_TRACEABLE, q) !=
                                 q_property(k_closure(g, 5 + q).first,
                                            Property::Q_TRACEABLE, q))
                                 ++mismatches;
                     });
    report(2, "closure stability (n=6 exhaustive)", mismatches == 0, t0,
           mismatches ? std::to_string(mismatches) + " mismatches" : "");
}

// 3. Bipartite closure stability, exhaustive 4x4.
void criterion3() {
    double t0 = now_seconds();
    long mismatches = 0;
    enumerate_bipartite(4, 4, [](const BipartiteGraph&) { return true; },
                        [&](const BipartiteGraph& g) {
                            for (int q : {0, 1}) {
                                BipartiteGraph cl = bipartite_closure(g, 5 + q).first;
                                if (bipartite_qq(g, Property::QQ_HAM, q, q) !=
                                    bipartite_qq(cl, Property::QQ_HAM, q, q))
                                    ++mismatches;
                                if (bipartite_qq(g, Property::QQ_TRACEABLE, q, q) !=
                                    bipartite_qq(cl, Property::QQ_TRACEABLE, q, q))
                                    ++mismatches;
                            }
                        });
    report(3, "bipartite closure stability (4x4)", mismatches == 0, t0,
           mismatches ? std::to_string(mismatches) + " mismatches" : "");
}

// 4/5. Complement-spectral stability theorems, exhaustive.
void criterion45() {
    double t0 = now_seconds();
    AuditBudget budget;  // single job: determinism is part of the contract
    TheoremSpec s4{TheoremId::T_W11T_I, {{"n", 6.0}, {"k", 2.0}, {"s", 1.0}}, ""};
    AuditReport r4 = audit(s4, AuditMode::EXHAUSTIVE, budget);
    report(4, "complement rho stability (6,2,1)",
           r4.passed() && r4.hypothesis_hits > 0, t0,
           std::to_string(r4.hypothesis_hits) + " hits, " +
               std::to_string(r4.borderline_spectral.size()) + " borderline");

    t0 = now_seconds();
    TheoremSpec s5{TheoremId::T_W11T_II, {{"n", 6.0}, {"s", 1.0}}, ""};
    AuditReport r5 = audit(s5, AuditMode::EXHAUSTIVE, budget);
    report(5, "complement mu stability (6,1)", r5.passed() && r5.hypothesis_hits > 0,
           t0, std::to_string(r5.hypothesis_hits) + " hits");
}

// 6. Kelmans monotonicity on 300 applicable triples.
void criterion6() {
    double t0 = now_seconds();
    std::mt19937_64 rng(20240817);
    int done = 0;
    long violations = 0;
    double min_gain = 1e18;
    while (done < 300) {
        int n = 5 + static_cast<int>(rng() % 6);  // n in 5..10
        SimpleGraph g = random_connected(n, 0.45, rng);
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        SimpleGraph h(0);
        try {
            h = kelmans(g, u, v);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (double a : {0.0, 0.5, 1.0}) {
            double gain = lambda_max_symmetric(h, a).value -
                          lambda_max_symmetric(g, a).value;
            min_gain = std::min(min_gain, gain);
            if (gain <= kStrictTol) ++violations;
        }
        ++done;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "min gain %.3g", min_gain);
    report(6, "Kelmans monotonicity (300 triples)", violations == 0, t0, buf);
}

// 7. Polynomial catalog cross-checks.
void criterion7() {
    double t0 = now_seconds();
    bool ok = true;
    for (auto [n, q] : {std::pair{4, 3}, std::pair{5, 3}, std::pair{6, 4}}) {
        SimpleGraph g = delete_edge(SimpleGraph::complete_bipartite(n, q), 0, n);
        for (double a : {0.0, 0.5, 1.0}) {
            double root = max_real_root(polynomial_catalog(PolyId::PSI, {n, 0, 0, q, a}));
            if (std::fabs(root - lambda_max_symmetric(g, a).value) >= kCatalogTol)
                ok = false;
        }
    }
    struct P3 { int n, k, s; };
    for (P3 p : {P3{8, 2, 1}, P3{8, 1, 0}, P3{10, 3, 2}}) {
        double root = max_real_root(polynomial_catalog(PolyId::PSI4, {p.n, p.k, p.s, 0, 0.0}));
        if (std::fabs(root - rho(build_F0(p.n, p.k, p.s).as_simple()).value) >= kCatalogTol)
            ok = false;
    }
    for (auto [n, k] : {std::pair{10, 1}, std::pair{12, 2}}) {
        double root = max_real_root(polynomial_catalog(PolyId::PSI6, {n, k, 0, 0, 0.0}));
        if (std::fabs(root - mu(build_F0(n, k, 0).as_simple()).value) >= kCatalogTol)
            ok = false;
    }
    report(7, "polynomial catalog cross-checks", ok, t0);
}

// 8. Numeric inequality grids with strict margins.
void criterion8() {
    double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    auto run = [&](TheoremId id, const std::vector<ParamMap>& grid) {
        AuditReport r = inequality_audit(id, grid);
        if (!r.passed()) {
            ok = false;
            detail += to_string(id) + " failed; ";
        }
    };
    std::vector<ParamMap> g31c;
    for (int n = 8; n <= 20; ++n) g31c.push_back({{"n", double(n)}, {"k", 1.0}, {"s", 0.0}});
    run(TheoremId::COR_31C, g31c);

    std::vector<ParamMap> g31p;
    for (int n = 8; n <= 24; ++n) g31p.push_back({{"n", double(n)}, {"k", 1.0}, {"s", 0.0}});
    for (int n = 12; n <= 24; ++n) g31p.push_back({{"n", double(n)}, {"k", 2.0}, {"s", 1.0}});
    run(TheoremId::PROP_31P, g31p);

    std::vector<ParamMap> g63;
    for (int n = 18; n <= 24; ++n) g63.push_back({{"n", double(n)}, {"k", 2.0}});
    run(TheoremId::LEM_63L, g63);

    std::vector<ParamMap> g64;
    for (int k : {1, 2})
        for (int n = 18; n <= 24; ++n) g64.push_back({{"n", double(n)}, {"k", double(k)}});
    run(TheoremId::LEM_64L, g64);

    report(8, "inequality grids", ok, t0, detail);
}

// 9. Extremal tightness, oracle-confirmed.
void criterion9() {
    double t0 = now_seconds();
    bool ok = true;
    for (const BipartiteGraph& f : {build_F(8, 1, 1), build_F0(8, 1, 1)}) {
        BipartiteGraph cl = bipartite_closure(f, 9).first;
        if (cl.edge_count() == 64) ok = false;  // closure must not reach K_{8,8}
        if (bipartite_qq(f, Property::QQ_HAM, 0, 0)) ok = false;
    }
    SimpleGraph z = build_Z(8, 1, 6, 1).as_simple();  // Z_{6,1}, 15 vertices
    if (hamiltonian_path(z).has_value()) ok = false;
    SimpleGraph ex = build_example21(6, 2, 1);  // K_{3,3}
    if (ex.edge_count() != 9 || q_property(ex, Property::Q_TRACEABLE, 2)) ok = false;
    report(9, "extremal tightness", ok, t0);
}

// 10. No connected (p,q)-semi-regular bipartite graph on p+q+1 vertices.
void criterion10() {
    double t0 = now_seconds();
    long witnesses = 0;
    auto scan = [&](const SimpleGraph& g) {
        if (!is_connected(g)) return;
        auto w = is_semiregular_bipartite(g);
        if (w && w->p > w->q && w->q >= 1 && g.order() == w->p + w->q + 1) ++witnesses;
    };
    // every bipartite graph appears under some (nl, nr) split of its order
    for (int total = 2; total <= 9; ++total)
        for (int nl = 1; 2 * nl <= total; ++nl)
            enumerate_bipartite(nl, total - nl,
                                [](const BipartiteGraph&) { return true; },
                                [&](const BipartiteGraph& bg) { scan(bg.as_simple()); });
    report(10, "no semi-regular on p+q+1 vertices", witnesses == 0, t0,
           witnesses ? std::to_string(witnesses) + " witnesses" : "");
}

// 11. Spectral inequality corpus, 10^4 seeded graphs.
void criterion11() {
    double t0 = now_seconds();
    std::mt19937_64 rng(424242);
    long violations = 0;
    for (int i = 0; i < 5000; ++i) {
        // general connected graph: degree bounds with equality characterization
        int n = 3 + static_cast<int>(rng() % 8);  // n in 3..10
        SimpleGraph g = random_connected(n, 0.3 + 0.4 * ((i % 7) / 6.0), rng);
        if (g.edge_count() == 0) continue;
        DegreeBounds b = degree_bounds(g);
        double r = rho(g).value, m = mu(g).value;
        if (r < b.rho_lower - kStrictTol) ++violations;
        if (m < b.mu_lower - kStrictTol) ++violations;
        bool structured = b.connected_regular || b.connected_semiregular_bipartite;
        if (b.rho_equality != structured) ++violations;
        if (b.mu_equality != structured) ++violations;
        // interpolation bound (alpha-convexity of the index)
        for (double a : {0.25, 0.5, 0.75})
            if (lambda_max_symmetric(g, a).value > a * m + (1 - a) * r + kStrictTol)
                ++violations;
    }
    for (int i = 0; i < 5000; ++i) {
        // balanced bipartite: edge-count bounds on mu, rho and theta
        int half = 2 + static_cast<int>(rng() % 4);  // half in 2..5
        BipartiteGraph bg = sample_bipartite(half, half, 0.3 + 0.1 * (i % 6), rng());
        SimpleGraph g = bg.as_simple();
        long e = g.edge_count();
        if (e == 0) continue;
        double r1 = rho(g).value, r2 = std::max(0.0, rho2(g).value);
        if (r1 * r1 + r2 * r2 > e + 1e-6) ++violations;
        if (mu(g).value > double(e) / half + half + kStrictTol) ++violations;
        for (double a : {0.0, 0.5, 1.0})
            if (lambda_max_symmetric(g, a).value > theta_upper_bound(bg, a) + kStrictTol)
                ++violations;
    }
    report(11, "spectral inequality corpus (10^4)", violations == 0, t0,
           violations ? std::to_string(violations) + " violations" : "");
}

// 12. Sandwich pipeline at (7,1,0) with the pinned edge threshold.
void criterion12() {
    double t0 = now_seconds();
    AuditBudget budget;
    budget.samples = 10000;
    budget.seed = 1;
    ParamMap params{{"n", 7.0}, {"k", 1.0}, {"s", 0.0}, {"min_edges", 39.0}};
    AuditReport r = sandwich_audit(params, budget);
    report(12, "sandwich audit (7,1,0)", r.passed() && r.hypothesis_hits > 0, t0,
           std::to_string(r.hypothesis_hits) + " hits");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion45();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILURE" : "SUCCESS",
                g_failures);
    return g_failures;
}
