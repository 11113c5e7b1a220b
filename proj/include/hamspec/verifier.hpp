#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

enum class TheoremId {
    T_W11T_I,
    T_W11T_II,
    COR_W11C,
    T_12T,
    COR_01C,
    T_02C,
    T_11T,
    COR_11C,
    T_13T_I,
    T_13T_II,
    STAB_W01P,
    PROP_11P,
    LEM_21L,
    THM_21T,
    PROP_31P,
    LEM_63L,
    LEM_64L,
    COR_31C,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(const std::string& s);

enum class AuditMode { EXHAUSTIVE, SAMPLED, EXTREMAL };
std::string to_string(AuditMode m);
std::optional<AuditMode> parse_audit_mode(const std::string& s);

/// Loose bag of named numeric parameters (n, k, s, q, alpha, ...).
using ParamMap = std::map<std::string, double>;

int param_int(const ParamMap& p, const std::string& key, std::optional<int> fallback = {});
double param_real(const ParamMap& p, const std::string& key, std::optional<double> fallback = {});

struct TheoremSpec {
    TheoremId id;
    ParamMap params;
    std::string property;  // STAB_W01P / PROP_11P pick their property by name
};

struct AuditBudget {
    long samples = 10000;
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct AuditIncident {
    std::string graph6;
    std::string detail;
};

struct AuditReport {
    TheoremId id;
    AuditMode mode = AuditMode::EXHAUSTIVE;
    long graphs_checked = 0;
    long hypothesis_hits = 0;
    std::vector<AuditIncident> conclusion_failures;
    long failures_suppressed = 0;  // beyond the per-report storage cap
    std::vector<AuditIncident> borderline_spectral;  // |lhs - rhs| < 1e-7
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool passed() const { return conclusion_failures.empty(); }
};

/// Borderline band for non-strict spectral hypotheses: equality cases are
/// exactly the exception families, so near-ties get routed to review.
inline constexpr double kBorderlineBand = 1e-7;

// ---- enumeration / isomorphism ----------------------------------------------

/// All labeled graphs on n vertices (n <= 8), optionally filtered.
void enumerate_graphs(int n, const std::function<bool(const SimpleGraph&)>& pred,
                      const std::function<void(const SimpleGraph&)>& visit);

/// All biadjacency masks on (nl, nr) with nl*nr <= 25.
void enumerate_bipartite(int nl, int nr,
                         const std::function<bool(const BipartiteGraph&)>& pred,
                         const std::function<void(const BipartiteGraph&)>& visit);

/// Minimum adjacency bit string over all vertex permutations, hex-encoded.
/// Equal strings iff isomorphic. n <= 8.
std::string canonical_form(const SimpleGraph& g);

/// Seeded random balanced/unbalanced bipartite graph with the given edge
/// density; deterministic per (seed, index) pair.
BipartiteGraph sample_bipartite(int nl, int nr, double density, std::uint64_t seed);

// ---- audits ------------------------------------------------------------------

AuditReport audit(const TheoremSpec& spec, AuditMode mode, const AuditBudget& budget);

/// Numeric strict-inequality grids (PROP_31P, COR_31C, LEM_63L, LEM_64L and
/// the edge-count identity behind LEM_21L).
AuditReport inequality_audit(TheoremId id, const std::vector<ParamMap>& grid);

/// THM_21T pipeline: sampled balanced bipartite graphs with delta >= k and
/// |E| > the configured threshold must close to K_{n,n} or to F_{n,k,s};
/// planted instances of both outcomes are checked as well.
AuditReport sandwich_audit(const ParamMap& params, const AuditBudget& budget);

}  // namespace hamspec
