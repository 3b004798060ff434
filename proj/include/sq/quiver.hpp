#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sq {

// Finite acyclic quiver.  Vertices are 1..n; parallel arrows allowed, loops
// and oriented cycles are not.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target)

    bool operator==(const Quiver& o) const { return n == o.n && arrows == o.arrows; }
};

// Throws std::invalid_argument on loops, out-of-range vertices or cycles.
void validate_quiver(const Quiver& q);

// Symmetric edge count between i and j (both directions), m_ii = 0.
int edge_count(const Quiver& q, int i, int j);

bool is_source(const Quiver& q, int i);
bool is_sink(const Quiver& q, int i);

Quiver reversed(const Quiver& q);

// Same vertex set, arrows with both ends in `support` kept, all others
// dropped.  Vertices outside the support become isolated.
Quiver restricted(const Quiver& q, const std::set<int>& support);

// Reverse every arrow incident to vertex i.
Quiver mutated(const Quiver& q, int i);

// Topological order, sources first, ascending vertex number as tie-break.
std::vector<int> topological_order(const Quiver& q);

// Is the underlying graph on `support` a disjoint union of simply laced
// Dynkin diagrams (A, D, E)?
bool is_dynkin(const Quiver& q, const std::set<int>& support);
std::set<int> all_vertices(const Quiver& q);

// Text format: "vertices <n>" then "arrow <i> <j>" lines, '#' comments.
Quiver parse_quiver(const std::string& text);
std::string quiver_to_text(const Quiver& q);

}  // namespace sq
