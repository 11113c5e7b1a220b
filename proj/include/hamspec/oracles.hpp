#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

enum class Property {
    HAM_CYCLE,
    HAM_PATH,
    HAM_CONNECTED,
    Q_HAM,
    Q_TRACEABLE,
    Q_EDGE_HAM,
    Q_PATH_COVER,
    QQ_HAM,
    QQ_TRACEABLE,
    PQ_TRACEABLE,
    VERTEX_CONN,
    EDGE_CONN,
};

std::string to_string(Property p);
std::optional<Property> parse_property(const std::string& s);

/// Raised when an exact decider is asked for more vertices than the subset
/// DP / enumeration budget allows.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kHamiltonianCap = 20;   // subset-DP vertex budget
inline constexpr int kPathCoverCap = 16;     // 3^n submask budget
inline constexpr long kForestBudget = 200000;  // linear forests per query

struct Certificate {
    enum class Kind { CYCLE, PATH, PATH_SYSTEM, CUT, NONE };
    Kind kind = Kind::NONE;
    std::vector<std::vector<int>> sequences;  // one list per path; one for cycles
};

/// Re-checks a certificate against the graph (edges exist, vertices distinct,
/// spanning where the kind requires it).
bool validate_certificate(const SimpleGraph& g, const Certificate& c);

std::optional<Certificate> hamiltonian_cycle(const SimpleGraph& g, int cap = kHamiltonianCap);
std::optional<Certificate> hamiltonian_path(const SimpleGraph& g, int cap = kHamiltonianCap);

bool hamilton_connected(const SimpleGraph& g, int cap = kHamiltonianCap);

/// Definition-faithful q-variants: every removal of 0..q vertices must leave
/// the property intact.
bool q_property(const SimpleGraph& g, Property property, int q, int cap = kHamiltonianCap);

/// Every linear forest with at most q edges lies on some Hamiltonian cycle.
bool q_edge_hamiltonian(const SimpleGraph& g, int q, int cap = kHamiltonianCap);

/// Minimum number of vertex-disjoint paths covering V(G); isolated vertices
/// count as length-0 paths.
int min_path_cover(const SimpleGraph& g, int cap = kPathCoverCap);

/// (p,q)-Hamiltonian / (p,q)-traceable for bipartite graphs; QQ_* take p = q.
/// Throws invalid_argument when the balance side condition cannot hold.
bool bipartite_qq(const BipartiteGraph& g, Property property, int p, int q,
                  int cap = kHamiltonianCap);

int vertex_connectivity(const SimpleGraph& g);
int edge_connectivity(const SimpleGraph& g);

/// Kelmans transformation from v to u: every edge vw with w outside
/// N(u) ∪ {u} is replaced by uw. Requires both difference neighborhoods to
/// be nonempty. Preserves the edge count.
SimpleGraph kelmans(const SimpleGraph& g, int u, int v);

}  // namespace hamspec
