#include "sq/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sq {

void validate_quiver(const Quiver& q) {
    if (q.n < 0) throw std::invalid_argument("quiver: negative vertex count");
    for (auto [s, t] : q.arrows) {
        if (s < 1 || s > q.n || t < 1 || t > q.n) throw std::invalid_argument("quiver: arrow endpoint out of range");
        if (s == t) throw std::invalid_argument("quiver: loops are not allowed");
    }
    // Kahn's algorithm; leftover vertices mean an oriented cycle.
    std::vector<int> indeg(q.n + 1, 0);
    for (auto [s, t] : q.arrows) indeg[t]++;
    std::queue<int> ready;
    for (int v = 1; v <= q.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    std::vector<std::vector<int>> out(q.n + 1);
    for (auto [s, t] : q.arrows) out[s].push_back(t);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int t : out[v])
            if (--indeg[t] == 0) ready.push(t);
    }
    if (seen != q.n) throw std::invalid_argument("quiver: oriented cycle detected");
}

int edge_count(const Quiver& q, int i, int j) {
    if (i == j) return 0;
    int c = 0;
    for (auto [s, t] : q.arrows)
        if ((s == i && t == j) || (s == j && t == i)) ++c;
    return c;
}

bool is_source(const Quiver& q, int i) {
    for (auto [s, t] : q.arrows)
        if (t == i) return false;
    return true;
}

bool is_sink(const Quiver& q, int i) {
    for (auto [s, t] : q.arrows)
        if (s == i) return false;
    return true;
}

Quiver reversed(const Quiver& q) {
    Quiver r;
    r.n = q.n;
    r.arrows.reserve(q.arrows.size());
    for (auto [s, t] : q.arrows) r.arrows.emplace_back(t, s);
    return r;
}

Quiver restricted(const Quiver& q, const std::set<int>& support) {
    Quiver r;
    r.n = q.n;
    for (auto [s, t] : q.arrows)
        if (support.count(s) && support.count(t)) r.arrows.emplace_back(s, t);
    return r;
}

Quiver mutated(const Quiver& q, int i) {
    Quiver r;
    r.n = q.n;
    r.arrows.reserve(q.arrows.size());
    for (auto [s, t] : q.arrows) {
        if (s == i || t == i)
            r.arrows.emplace_back(t, s);
        else
            r.arrows.emplace_back(s, t);
    }
    return r;
}

std::vector<int> topological_order(const Quiver& q) {
    std::vector<int> indeg(q.n + 1, 0);
    std::vector<std::vector<int>> out(q.n + 1);
    for (auto [s, t] : q.arrows) {
        indeg[t]++;
        out[s].push_back(t);
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= q.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int t : out[v])
            if (--indeg[t] == 0) ready.push(t);
    }
    if (static_cast<int>(order.size()) != q.n) throw std::invalid_argument("topological_order: cyclic quiver");
    return order;
}

std::set<int> all_vertices(const Quiver& q) {
    std::set<int> s;
    for (int v = 1; v <= q.n; ++v) s.insert(v);
    return s;
}

namespace {

// Branch lengths at the unique degree-3 vertex decide D vs E.
bool component_is_dynkin(const std::vector<int>& verts, const std::map<int, std::vector<int>>& adj) {
    int branch_vertex = -1;
    for (int v : verts) {
        size_t d = adj.at(v).size();
        if (d >= 4) return false;
        if (d == 3) {
            if (branch_vertex != -1) return false;
            branch_vertex = v;
        }
    }
    if (branch_vertex == -1) return true;  // a path: type A
    std::vector<int> lens;
    for (int start : adj.at(branch_vertex)) {
        int len = 1, prev = branch_vertex, cur = start;
        while (true) {
            const auto& nb = adj.at(cur);
            if (nb.size() == 1) break;
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] != 1) return false;
    if (lens[1] == 1) return true;                      // D_n
    if (lens[1] == 2) return lens[2] >= 2 && lens[2] <= 4;  // E_6, E_7, E_8
    return false;
}

}  // namespace

bool is_dynkin(const Quiver& q, const std::set<int>& support) {
    // Underlying graph must be simple (no parallel edges) and a forest.
    std::map<int, std::vector<int>> adj;
    for (int v : support) adj[v];
    int edges = 0;
    for (auto [s, t] : q.arrows) {
        if (!support.count(s) || !support.count(t)) continue;
        if (edge_count(q, s, t) > 1) return false;
        adj[s].push_back(t);
        adj[t].push_back(s);
        ++edges;
    }
    // Component-wise: tree check plus shape check.
    std::set<int> seen;
    for (int v : support) {
        if (seen.count(v)) continue;
        std::vector<int> comp;
        std::queue<int> bfs;
        bfs.push(v);
        seen.insert(v);
        int comp_edges = 0;
        while (!bfs.empty()) {
            int c = bfs.front();
            bfs.pop();
            comp.push_back(c);
            comp_edges += static_cast<int>(adj[c].size());
            for (int w : adj[c])
                if (!seen.count(w)) {
                    seen.insert(w);
                    bfs.push(w);
                }
        }
        comp_edges /= 2;
        if (comp_edges != static_cast<int>(comp.size()) - 1) return false;  // cycle
        if (!component_is_dynkin(comp, adj)) return false;
    }
    return true;
}

Quiver parse_quiver(const std::string& text) {
    Quiver q;
    bool have_n = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertices") {
            if (have_n || !(ls >> q.n)) throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": bad vertices line");
            have_n = true;
        } else if (kw == "arrow") {
            int s, t;
            if (!have_n || !(ls >> s >> t)) throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": bad arrow line");
            q.arrows.emplace_back(s, t);
        } else {
            throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("quiver line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (!have_n) throw std::invalid_argument("quiver: missing 'vertices' line");
    validate_quiver(q);
    return q;
}

std::string quiver_to_text(const Quiver& q) {
    std::ostringstream out;
    out << "vertices " << q.n << "\n";
    for (auto [s, t] : q.arrows) out << "arrow " << s << " " << t << "\n";
    return out.str();
}

}  // namespace sq
