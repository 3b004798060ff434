#include "sq/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sq {

RootVector unit_root(int n, int i) {
    RootVector v(n, 0);
    v[i - 1] = 1;
    return v;
}

bool root_nonnegative(const RootVector& v) {
    for (long long x : v)
        if (x < 0) return false;
    return true;
}

namespace {

void check_vertex(const Quiver& q, int i) {
    if (i < 1 || i > q.n) throw std::invalid_argument("vertex out of range: " + std::to_string(i));
}

void check_word(const Quiver& q, const Word& w) {
    for (int u : w) check_vertex(q, u);
}

}  // namespace

RootVector simple_reflection(const Quiver& q, int i, const RootVector& v) {
    check_vertex(q, i);
    RootVector r = v;
    long long acc = -v[i - 1];
    for (int j = 1; j <= q.n; ++j) {
        if (j == i) continue;
        int m = edge_count(q, i, j);
        if (m) acc += static_cast<long long>(m) * v[j - 1];
    }
    r[i - 1] = acc;
    return r;
}

RootVector contragradient_reflection(const Quiver& q, int i, const RootVector& v) {
    check_vertex(q, i);
    RootVector r = v;
    long long vi = v[i - 1];
    r[i - 1] = -vi;
    if (vi != 0) {
        for (int t = 1; t <= q.n; ++t) {
            if (t == i) continue;
            int m = edge_count(q, t, i);
            if (m) r[t - 1] += static_cast<long long>(m) * vi;
        }
    }
    return r;
}

bool is_reduced(const Quiver& q, const Word& w) {
    check_word(q, w);
    for (size_t j = 0; j < w.size(); ++j) {
        RootVector v = unit_root(q.n, w[j]);
        for (size_t t = j; t-- > 0;) v = simple_reflection(q, w[t], v);
        if (!root_nonnegative(v)) return false;
    }
    return true;
}

bool is_admissible_coxeter(const Quiver& q, const Word& c) {
    check_word(q, c);
    if (static_cast<int>(c.size()) != q.n) return false;
    std::vector<int> pos(q.n + 1, 0);
    std::vector<bool> seen(q.n + 1, false);
    for (size_t i = 0; i < c.size(); ++i) {
        if (seen[c[i]]) return false;
        seen[c[i]] = true;
        pos[c[i]] = static_cast<int>(i);
    }
    for (auto [s, t] : q.arrows)
        if (pos[s] >= pos[t]) return false;
    return true;
}

bool left_descent(const Quiver& q, const Word& reduced, int i) {
    check_vertex(q, i);
    // l(s_i w) < l(w) iff w^{-1}(e_i) is a negative root.
    RootVector v = unit_root(q.n, i);
    for (int u : reduced) v = simple_reflection(q, u, v);
    return !root_nonnegative(v);
}

Word left_multiply(const Quiver& q, const Word& reduced, int i) {
    check_vertex(q, i);
    RootVector v = unit_root(q.n, i);
    for (size_t t = 0; t < reduced.size(); ++t) {
        RootVector next = simple_reflection(q, reduced[t], v);
        if (!root_nonnegative(next)) {
            // Exchange condition: delete letter t.
            Word out;
            out.reserve(reduced.size() - 1);
            for (size_t s = 0; s < reduced.size(); ++s)
                if (s != t) out.push_back(reduced[s]);
            return out;
        }
        v = std::move(next);
    }
    Word out;
    out.reserve(reduced.size() + 1);
    out.push_back(i);
    out.insert(out.end(), reduced.begin(), reduced.end());
    return out;
}

std::vector<long long> element_matrix(const Quiver& q, const Word& w) {
    // Columns are the images of the simple roots.
    std::vector<long long> mat(static_cast<size_t>(q.n) * q.n, 0);
    for (int j = 1; j <= q.n; ++j) {
        RootVector v = unit_root(q.n, j);
        for (size_t t = w.size(); t-- > 0;) v = simple_reflection(q, w[t], v);
        for (int i = 0; i < q.n; ++i) mat[static_cast<size_t>(i) * q.n + (j - 1)] = v[i];
    }
    return mat;
}

std::optional<SortableDecomposition> sortable_decompose(const Quiver& q, const Word& c, const Word& w) {
    if (!is_admissible_coxeter(q, c)) throw std::invalid_argument("sortable_decompose: c is not an admissible Coxeter word");
    if (!is_reduced(q, w)) throw std::invalid_argument("sortable_decompose: word is not reduced");
    Word rest = w;
    std::vector<std::vector<int>> blocks;
    while (!rest.empty()) {
        std::vector<int> block;
        for (int i : c) {
            if (left_descent(q, rest, i)) {
                block.push_back(i);
                rest = left_multiply(q, rest, i);
            }
        }
        if (block.empty()) throw std::logic_error("sortable_decompose: no descent found");
        blocks.push_back(std::move(block));
    }
    for (size_t t = 0; t + 1 < blocks.size(); ++t) {
        std::set<int> cur(blocks[t].begin(), blocks[t].end());
        for (int i : blocks[t + 1])
            if (!cur.count(i)) return std::nullopt;
    }
    return SortableDecomposition{std::move(blocks)};
}

Word concat_blocks(const SortableDecomposition& d) {
    Word w;
    for (const auto& b : d.blocks) w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::vector<RootVector> layer_roots(const Quiver& q, const Word& w) {
    if (!is_reduced(q, w)) throw std::invalid_argument("layer_roots: word is not reduced");
    std::vector<RootVector> out;
    out.reserve(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        RootVector v = unit_root(q.n, w[j]);
        for (size_t t = j; t-- > 0;) v = simple_reflection(q, w[t], v);
        out.push_back(std::move(v));
    }
    return out;
}

Word parse_word(const std::string& text, int n) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("word: bad token '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("word: bad token '" + tok + "'");
        if (v < 1 || v > n) throw std::invalid_argument("word: vertex out of range: " + tok);
        w.push_back(v);
    }
    return w;
}

std::string word_str(const Word& w) {
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
    return out.str();
}

}  // namespace sq
