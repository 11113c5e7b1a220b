#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

enum class FamilyTag { M, Z, Z0, F, F0, B_FAM, C_FAM, H_FAM, D_FAM, W_FAM, EX21 };

std::string to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(const std::string& s);

/// Parameter bundle for constructors and membership. Unused fields stay 0.
struct FamilyParams {
    int n = 0;
    int k = 0;
    int s = 0;
    int r = 0;
    int p = 0;
    int q = 0;
};

/// Proof of membership: the join factors as vertex sets plus a human-readable
/// role per part. Reassembling the parts (full cross joins) gives back the
/// input graph.
struct MembershipWitness {
    std::vector<VertexSet> parts;
    std::vector<std::string> roles;
};

// ---- constructors ----------------------------------------------------------

/// K_s ∨ (K_{n-k-1} ∪ K_{k+1-s}); minimum degree k.
/// Vertex order: the K_s block, then K_{n-k-1}, then K_{k+1-s}.
SimpleGraph build_M(int n, int k, int s);

/// K_{n,p+q} minus all edges between the last n-k left vertices (X1) and the
/// last q right vertices (Y1).
BipartiteGraph build_Z(int n, int k, int p, int q);

/// build_Z minus one more edge, between the first X1 vertex (left index k,
/// degree p) and the first right vertex (degree n). All eligible edge choices
/// are isomorphic; this one is the lexicographic pick.
BipartiteGraph build_Z0(int n, int k, int p, int q);

/// F_{n,k,s} = Z with p = n+s-k-1, q = k+1-s: balanced on 2n vertices, δ = k.
BipartiteGraph build_F(int n, int k, int s);
BipartiteGraph build_F0(int n, int k, int s);

/// Adds one right vertex joined to every left vertex. Requires nL = nR + 1;
/// the new vertex gets the last right index.
BipartiteGraph augment_v0(const BipartiteGraph& g);

/// G1 ∨ ((n-q+2)/2)·K1 with G1 a seeded random (q-2)-regular graph on
/// (n+q-2)/2 vertices. The result is (n+q-2)/2-regular yet not q-traceable.
SimpleGraph build_example21(int n, int q, std::uint64_t seed);

/// complement(K_{1,k-1}) ∨ complement(K_{1,k-1}): the one sporadic graph that
/// escapes the five families. 2k vertices.
SimpleGraph build_star_complement_pair(int k);

/// Seeded pairing-model d-regular graph on m vertices (rejection sampling).
SimpleGraph random_regular(int d, int m, std::uint64_t seed);

// ---- membership ------------------------------------------------------------

/// Decides g ∈ family(params). Parameter values outside the defining clause's
/// range throw invalid_argument; graphs simply not in the family yield
/// nullopt. Requires order <= 64.
std::optional<MembershipWitness> membership(const SimpleGraph& g, FamilyTag tag,
                                            const FamilyParams& params);

}  // namespace hamspec
