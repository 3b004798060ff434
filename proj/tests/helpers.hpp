#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sq/chains.hpp"
#include "sq/corpus.hpp"
#include "sq/functors.hpp"
#include "sq/io.hpp"
#include "sq/rep.hpp"

namespace sqtest {

using namespace sq;

// Deterministic generator so failures are reproducible.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); }
    bool chance(int percent) { return uniform(1, 100) <= percent; }
};

inline Quiver random_acyclic_quiver(Rng& rng, int max_vertices, int max_multiplicity, bool force_tree) {
    int n = rng.uniform(2, max_vertices);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);
    Quiver q;
    q.n = n;
    if (force_tree) {
        for (int i = 1; i < n; ++i) {
            int j = rng.uniform(0, i - 1);
            q.arrows.emplace_back(order[j], order[i]);
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!rng.chance(45)) continue;
                int mult = rng.uniform(1, max_multiplicity);
                for (int m = 0; m < mult; ++m) q.arrows.emplace_back(order[i], order[j]);
            }
        if (q.arrows.empty()) q.arrows.emplace_back(order[0], order[1]);
    }
    validate_quiver(q);
    return q;
}

// Nested-block word over the admissible order; literal-reduced by filtering.
inline Word random_sortable_word(Rng& rng, const Quiver&, const Word& c, int max_blocks) {
    Word w;
    std::vector<int> prev = c;
    for (int b = 0; b < max_blocks; ++b) {
        std::vector<int> block;
        for (int u : prev)
            if (rng.chance(b == 0 ? 85 : 70)) block.push_back(u);
        if (block.empty()) break;
        w.insert(w.end(), block.begin(), block.end());
        prev = block;
        if (rng.chance(25)) break;
    }
    return w;
}

inline Representation random_representation(Rng& rng, const Quiver& q, int max_total) {
    Representation x;
    x.quiver = q;
    x.dims.assign(q.n, 0);
    int budget = rng.uniform(1, max_total);
    for (int i = 0; i < budget; ++i) x.dims[rng.uniform(0, q.n - 1)]++;
    for (auto [s, t] : q.arrows) {
        RatMatrix m(x.dims[t - 1], x.dims[s - 1]);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rng.uniform(-2, 2);
        x.maps.push_back(std::move(m));
    }
    validate_representation(x);
    return x;
}

// Independent Ext^1 computation through an explicit projective presentation
// 0 -> P1 -> P0 -> Z -> 0: the dimension of the cokernel of the induced map
// Hom(P0, X) -> Hom(P1, X).
inline RatMatrix path_matrix(const Representation& m, int start_vertex, const std::vector<int>& arrows) {
    RatMatrix act = RatMatrix::identity(m.dims[start_vertex - 1]);
    for (int a : arrows) act = mat_mul(m.maps[a], act);
    return act;
}

inline RepMorphism generator_morphism(const Quiver& q, int gen_vertex, const Representation& target,
                                      const std::vector<Rat>& image) {
    auto bucket = projective_path_basis(q, gen_vertex);
    RepMorphism f;
    for (int v = 1; v <= q.n; ++v) {
        RatMatrix blk(target.dims[v - 1], static_cast<int>(bucket[v].size()));
        for (size_t k = 0; k < bucket[v].size(); ++k) {
            RatMatrix act = path_matrix(target, gen_vertex, bucket[v][k]);
            for (int r = 0; r < blk.rows(); ++r) {
                Rat acc = 0;
                for (int c = 0; c < act.cols(); ++c) acc += act.at(r, c) * image[c];
                blk.at(r, static_cast<int>(k)) = acc;
            }
        }
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

inline int ext1_dim_presentation(const Representation& z, const Representation& x) {
    const Quiver& q = z.quiver;
    if (is_zero_rep(z) || is_zero_rep(x)) return 0;
    std::vector<Representation> p0_parts;
    for (int v = 1; v <= q.n; ++v)
        for (int c = 0; c < z.dims[v - 1]; ++c) p0_parts.push_back(projective(q, v));
    Representation p0 = direct_sum(p0_parts);
    std::vector<std::vector<int>> p0_off;
    {
        std::vector<int> run(q.n, 0);
        size_t k = 0;
        for (int v = 1; v <= q.n; ++v)
            for (int c = 0; c < z.dims[v - 1]; ++c, ++k) {
                p0_off.push_back(run);
                for (int u = 0; u < q.n; ++u) run[u] += p0_parts[k].dims[u];
            }
    }
    std::vector<Representation> p1_parts;
    std::vector<RepMorphism> d_parts;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [u, w] = q.arrows[a];
        for (int c = 0; c < z.dims[u - 1]; ++c) {
            p1_parts.push_back(projective(q, w));
            std::vector<Rat> img(p0.dims[w - 1], 0);
            size_t k = 0;
            for (int v = 1; v <= q.n; ++v)
                for (int cc = 0; cc < z.dims[v - 1]; ++cc, ++k) {
                    auto bucket = projective_path_basis(q, v);
                    if (v == u && cc == c) {
                        std::vector<int> want{static_cast<int>(a)};
                        for (size_t t = 0; t < bucket[w].size(); ++t)
                            if (bucket[w][t] == want) img[p0_off[k][w - 1] + static_cast<int>(t)] += 1;
                    }
                    if (v == w && z.maps[a].at(cc, c) != 0) {
                        for (size_t t = 0; t < bucket[w].size(); ++t)
                            if (bucket[w][t].empty()) img[p0_off[k][w - 1] + static_cast<int>(t)] -= z.maps[a].at(cc, c);
                    }
                }
            d_parts.push_back(generator_morphism(q, w, p0, img));
        }
    }
    Representation p1 = p1_parts.empty() ? zero_rep(q) : direct_sum(p1_parts);
    RepMorphism d = zero_morphism(p1, p0);
    for (int v = 0; v < q.n; ++v) {
        RatMatrix blk(p0.dims[v], 0);
        for (const auto& pm : d_parts) blk = hstack(blk, pm.blocks[v]);
        d.blocks[v] = std::move(blk);
    }
    auto hp1 = hom_basis(p1, x);
    if (hp1.empty()) return 0;
    // rank of the precomposition image inside Hom(P1, X)
    auto flatten = [](const RepMorphism& f) {
        std::vector<Rat> v;
        for (const auto& b : f.blocks)
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c) v.push_back(b.at(r, c));
        return v;
    };
    auto hp0 = hom_basis(p0, x);
    RatMatrix img(static_cast<int>(hp0.size()), static_cast<int>(flatten(hp1[0]).size()));
    for (size_t i = 0; i < hp0.size(); ++i) {
        auto fv = flatten(compose(d, hp0[i]));
        for (size_t c = 0; c < fv.size(); ++c) img.at(static_cast<int>(i), static_cast<int>(c)) = fv[c];
    }
    return static_cast<int>(hp1.size()) - rank_of(img);
}

}  // namespace sqtest
