#include "sq/chains.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sq {

Representation dual_rep(const Representation& x) {
    Representation y;
    y.quiver = reversed(x.quiver);
    y.dims = x.dims;
    for (const auto& m : x.maps) y.maps.push_back(m.transpose());
    return y;
}

namespace {

struct BlockParse {
    std::vector<std::vector<int>> blocks;
    std::set<int> support;
};

// Greedy maximal split into subwords of c; succeeds iff the literal word has
// a nested-support block expression at all.
std::optional<BlockParse> parse_blocks(const Quiver& q, const Word& c, const Word& w) {
    std::vector<int> pos(q.n + 1, -1);
    for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
    BlockParse bp;
    std::vector<int> cur;
    int last = -1;
    for (int u : w) {
        if (pos[u] < 0) return std::nullopt;
        if (!cur.empty() && pos[u] <= last) {
            bp.blocks.push_back(cur);
            cur.clear();
        }
        cur.push_back(u);
        last = pos[u];
        bp.support.insert(u);
    }
    if (!cur.empty()) bp.blocks.push_back(cur);
    for (size_t t = 0; t + 1 < bp.blocks.size(); ++t) {
        std::set<int> prev(bp.blocks[t].begin(), bp.blocks[t].end());
        for (int u : bp.blocks[t + 1])
            if (!prev.count(u)) return std::nullopt;
    }
    return bp;
}

struct TripleData {
    BlockParse bp;
    ChainStatus status;
    Quiver engine_quiver;  // reversed support restriction: chain modules live here
};

TripleData validate_triple(const Quiver& q, const Word& c, const Word& w) {
    validate_quiver(q);
    if (!is_admissible_coxeter(q, c)) throw std::invalid_argument("chain: Coxeter word is not admissible for the quiver");
    for (int u : w)
        if (u < 1 || u > q.n) throw std::invalid_argument("chain: word letter out of range");
    auto bp = parse_blocks(q, c, w);
    if (!bp) throw std::invalid_argument("chain: word is not of nested-support block form");
    TripleData td;
    td.bp = *bp;
    if (is_reduced(q, w)) {
        td.status = ChainStatus::ReducedSortable;
    } else {
        Word head(w.begin(), w.end() - (w.empty() ? 0 : 1));
        if (!w.empty() && is_reduced(q, head))
            td.status = ChainStatus::SortableShapeNonreduced;
        else
            throw std::invalid_argument("chain: word is non-reduced before its last letter");
    }
    td.engine_quiver = reversed(restricted(q, td.bp.support));
    return td;
}

void finish_result(ChainResult& res, const Quiver& base_q, std::vector<Representation> modules) {
    res.module_quiver = reversed(base_q);
    for (auto& m : modules) {
        Representation padded = pad_representation(m, res.module_quiver);
        res.dim_vectors.push_back(dim_vector(padded));
        res.modules.push_back(std::move(padded));
    }
}

}  // namespace

ChainResult u_chain(const Quiver& q, const Word& c, const Word& w) {
    TripleData td = validate_triple(q, c, w);
    ChainResult res;
    res.status = td.status;
    res.blocks = td.bp.blocks;
    const size_t l = w.size();
    std::vector<Quiver> g;
    g.push_back(td.engine_quiver);
    for (size_t t = 1; t < l; ++t) g.push_back(mutated(g[t - 1], w[t - 1]));
    std::vector<Representation> modules;
    for (size_t j = 1; j <= l; ++j) {
        Representation m = simple_rep(g[j - 1], w[j - 1]);
        for (size_t t = j - 1; t >= 1; --t) m = reflect_source(g[t], w[t - 1], m).rep_after;
        modules.push_back(std::move(m));
    }
    finish_result(res, q, std::move(modules));
    return res;
}

ChainResult t_chain(const Quiver& q, const Word& c, const Word& w) {
    TripleData td = validate_triple(q, c, w);
    ChainResult res;
    res.status = td.status;
    res.blocks = td.bp.blocks;
    const size_t l = w.size();
    const size_t l0 = td.bp.blocks.empty() ? 0 : td.bp.blocks[0].size();
    std::vector<Representation> modules;
    for (size_t j = 1; j <= l; ++j) {
        if (j <= l0) {
            modules.push_back(projective(td.engine_quiver, w[j - 1]));
            res.step_flags.push_back(true);
            continue;
        }
        size_t k = 0;
        for (size_t t = j - 1; t >= 1; --t)
            if (w[t - 1] == w[j - 1]) {
                k = t;
                break;
            }
        if (k == 0) throw std::logic_error("t_chain: letter without previous occurrence after the first block");
        std::vector<Representation> window;
        for (size_t t = k + 1; t <= j - 1; ++t)
            if (!is_zero_rep(modules[t - 1])) window.push_back(modules[t - 1]);
        LeftApproximation la = minimal_left_approximation(modules[k - 1], window);
        res.step_flags.push_back(la.mono);
        modules.push_back(la.coker);
    }
    finish_result(res, q, std::move(modules));
    return res;
}

ChainResult co_t_chain(const Quiver& q, const Word& c, const Word& w) {
    Word rc(c.rbegin(), c.rend());
    ChainResult eng = t_chain(reversed(q), rc, w);
    ChainResult res;
    res.status = eng.status;
    res.blocks = eng.blocks;
    res.step_flags = eng.step_flags;  // epimorphism flags of the dual maps
    std::vector<Representation> duals;
    for (const auto& m : eng.modules) duals.push_back(dual_rep(m));
    finish_result(res, q, std::move(duals));
    return res;
}

ChainResult co_u_chain(const Quiver& q, const Word& c, const Word& w) {
    Word rc(c.rbegin(), c.rend());
    ChainResult eng = u_chain(reversed(q), rc, w);
    ChainResult res;
    res.status = eng.status;
    res.blocks = eng.blocks;
    std::vector<Representation> duals;
    for (const auto& m : eng.modules) duals.push_back(dual_rep(m));
    finish_result(res, q, std::move(duals));
    return res;
}

bool chains_isomorphic(const ChainResult& a, const ChainResult& b) {
    if (a.modules.size() != b.modules.size()) return false;
    for (size_t i = 0; i < a.modules.size(); ++i)
        if (!is_isomorphic(a.modules[i], b.modules[i])) return false;
    return true;
}

std::vector<Representation> t_w(const Quiver& q, const Word& c, const Word& w) {
    ChainResult chain = t_chain(q, c, w);
    if (chain.status != ChainStatus::ReducedSortable)
        throw std::invalid_argument("t_w: word must be reduced");
    std::set<int> support(w.begin(), w.end());
    std::vector<size_t> last_idx;
    for (int v : support) {
        size_t last = 0;
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] == v) last = j + 1;
        last_idx.push_back(last);
    }
    std::sort(last_idx.begin(), last_idx.end());
    std::vector<Representation> out;
    for (size_t idx : last_idx) out.push_back(chain.modules[idx - 1]);
    return out;
}

namespace {

std::string quiver_key(const Quiver& q) {
    std::ostringstream os;
    for (auto [s, t] : q.arrows) os << s << '>' << t << ';';
    return os.str();
}

std::string dims_key(const Representation& x) {
    std::ostringstream os;
    for (int d : x.dims) os << d << ',';
    return os.str();
}

// All indecomposables over the support restriction reachable by reflection
// functors from the simples, within the dimension bound.  For Dynkin support
// the inverse-translate orbit of the projectives is used instead and the
// result is complete.
std::pair<std::vector<Representation>, bool> enumerate_candidates(const Quiver& g, const std::set<int>& support,
                                                                  long long bound) {
    Quiver gs = restricted(g, support);
    std::vector<Representation> cands;
    if (is_dynkin(g, support)) {
        std::map<std::string, bool> seen;
        for (int i : support) {
            Representation m = projective(gs, i);
            while (!is_zero_rep(m)) {
                if (seen.emplace(dims_key(m), true).second)
                    if (total_dim(m) <= bound) cands.push_back(m);
                m = coxeter_minus(gs, m);
            }
        }
        return {std::move(cands), true};
    }
    std::map<std::pair<std::string, std::string>, Representation> states;
    std::vector<std::pair<Quiver, Representation>> frontier;
    std::set<std::string> seen_orientations;
    // The series start from simples over arbitrarily mutated orientations,
    // so every reached orientation is seeded with all simples.
    auto seed = [&](const Quiver& oq) {
        if (!seen_orientations.insert(quiver_key(oq)).second) return;
        for (int i : support) {
            Representation s = simple_rep(oq, i);
            if (states.emplace(std::make_pair(quiver_key(oq), dims_key(s)), s).second) frontier.emplace_back(oq, s);
        }
    };
    seed(gs);
    while (!frontier.empty()) {
        auto [cq, cm] = frontier.back();
        frontier.pop_back();
        for (int v : support) {
            ReflectionResult r;
            if (is_sink(cq, v))
                r = reflect_sink(cq, v, cm);
            else if (is_source(cq, v))
                r = reflect_source(cq, v, cm);
            else
                continue;
            if (r.killed || is_zero_rep(r.rep_after)) continue;
            if (total_dim(r.rep_after) > bound) continue;
            seed(r.quiver_after);
            auto key = std::make_pair(quiver_key(r.quiver_after), dims_key(r.rep_after));
            if (states.emplace(key, r.rep_after).second) frontier.emplace_back(r.quiver_after, r.rep_after);
        }
    }
    std::string home = quiver_key(gs);
    for (auto& [key, rep] : states)
        if (key.first == home) cands.push_back(rep);
    return {std::move(cands), false};
}

EnumerationResult enumerate_closure(const std::vector<Representation>& t, long long bound, bool sub_side) {
    if (t.empty()) throw std::invalid_argument("enumerate: empty module list");
    const Quiver& g = t[0].quiver;
    for (const auto& m : t)
        if (!(m.quiver == g)) throw std::invalid_argument("enumerate: mixed quivers");
    std::set<int> support;
    for (const auto& m : t)
        for (int v : support_of(m)) support.insert(v);
    EnumerationResult res;
    if (support.empty()) return res;
    auto [cands, complete] = enumerate_candidates(g, support, bound);
    res.complete = complete;
    Representation tsum = direct_sum(t);
    for (const auto& m : cands) {
        Representation padded = pad_representation(m, g);
        bool in = sub_side ? in_sub_closure(padded, tsum) : in_fac_closure(padded, tsum);
        if (in) res.modules.push_back(std::move(padded));
    }
    std::sort(res.modules.begin(), res.modules.end(), [](const Representation& a, const Representation& b) {
        long long ta = total_dim(a), tb = total_dim(b);
        if (ta != tb) return ta < tb;
        return a.dims < b.dims;
    });
    return res;
}

}  // namespace

EnumerationResult sub_enumerate(const std::vector<Representation>& t, long long dim_bound) {
    return enumerate_closure(t, dim_bound, true);
}

EnumerationResult fac_enumerate(const std::vector<Representation>& t, long long dim_bound) {
    return enumerate_closure(t, dim_bound, false);
}

namespace {

// Multisets of dimension vectors, as a sorted list.
std::vector<RootVector> dim_multiset(const std::vector<Representation>& mods) {
    std::vector<RootVector> v;
    for (const auto& m : mods) v.push_back(dim_vector(m));
    std::sort(v.begin(), v.end());
    return v;
}

bool multiset_isomorphic(const std::vector<Representation>& a, std::vector<Representation> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (is_isomorphic(x, b[j])) {
                b.erase(b.begin() + static_cast<long>(j));
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

struct RecoverSearch {
    const Quiver& q;
    const Word& c;
    const std::vector<Representation>& target;
    std::vector<RootVector> target_dims;
    size_t length;
    std::optional<Word> found;

    void run(const std::set<int>& support) {
        // The first block is the unique subword of c with the full support.
        std::vector<int> first;
        for (int u : c)
            if (support.count(u)) first.push_back(u);
        Word w(first.begin(), first.end());
        if (w.size() > length) return;
        if (!is_reduced(q, w)) return;
        extend(w, first);
    }

    void extend(const Word& w, const std::vector<int>& prev_block) {
        if (found) return;
        if (w.size() == length) {
            check(w);
            return;
        }
        // Next block: any nonempty subword of the previous block.
        const size_t k = prev_block.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> block;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) block.push_back(prev_block[i]);
            if (w.size() + block.size() > length) continue;
            Word nw = w;
            nw.insert(nw.end(), block.begin(), block.end());
            if (!is_reduced(q, nw)) continue;
            extend(nw, block);
            if (found) return;
        }
    }

    void check(const Word& w) {
        auto roots = layer_roots(q, w);
        std::set<int> support(w.begin(), w.end());
        std::vector<RootVector> last_roots;
        for (int v : support) {
            size_t last = 0;
            for (size_t j = 0; j < w.size(); ++j)
                if (w[j] == v) last = j;
            last_roots.push_back(roots[last]);
        }
        std::sort(last_roots.begin(), last_roots.end());
        if (last_roots != target_dims) return;
        if (multiset_isomorphic(t_w(q, c, w), target)) found = w;
    }
};

}  // namespace

std::optional<Word> recover_word(const Quiver& q, const Word& c, const std::vector<Representation>& t,
                                 long long dim_bound) {
    if (!is_admissible_coxeter(q, c)) throw std::invalid_argument("recover_word: Coxeter word is not admissible");
    if (!is_tilting(t)) throw std::invalid_argument("recover_word: input is not a basic tilting module");
    EnumerationResult en = sub_enumerate(t, dim_bound);
    RecoverSearch search{q, c, t, dim_multiset(t), en.modules.size(), std::nullopt};
    std::set<int> support;
    for (const auto& m : t)
        for (int v : support_of(m)) support.insert(v);
    search.run(support);
    return search.found;
}

CountReport count_bijection(const Quiver& q, const Word& c) {
    if (!is_admissible_coxeter(q, c)) throw std::invalid_argument("count_bijection: Coxeter word is not admissible");
    if (!is_dynkin(q, all_vertices(q))) throw std::invalid_argument("count_bijection: quiver is not Dynkin");
    CountReport report;

    // All group elements by breadth-first right multiplication.
    std::map<std::vector<long long>, Word> elements;
    std::vector<Word> queue{Word{}};
    elements.emplace(element_matrix(q, {}), Word{});
    while (!queue.empty()) {
        Word w = queue.back();
        queue.pop_back();
        for (int i = 1; i <= q.n; ++i) {
            Word ext = w;
            ext.push_back(i);
            if (!is_reduced(q, ext)) continue;
            auto key = element_matrix(q, ext);
            if (elements.emplace(key, ext).second) queue.push_back(ext);
        }
    }
    for (const auto& [key, w] : elements)
        if (sortable_decompose(q, c, w)) report.sortable_count++;

    // Other side: subsets of indecomposables closed under submodules and
    // extensions.
    std::vector<Representation> indecs;
    {
        std::map<std::string, bool> seen;
        for (int i = 1; i <= q.n; ++i) {
            Representation m = projective(q, i);
            while (!is_zero_rep(m)) {
                if (seen.emplace(dims_key(m), true).second) indecs.push_back(m);
                m = coxeter_minus(q, m);
            }
        }
    }
    const size_t n = indecs.size();
    if (n > 22) throw std::invalid_argument("count_bijection: too many indecomposables for subset enumeration");
    std::vector<std::vector<bool>> emb(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) emb[i][j] = exists_mono(indecs[i], indecs[j]);
    auto index_of_dims = [&](const Representation& m) {
        for (size_t i = 0; i < n; ++i)
            if (indecs[i].dims == m.dims) return i;
        throw std::logic_error("count_bijection: unknown indecomposable");
    };
    std::vector<std::vector<unsigned>> mid_mask(n, std::vector<unsigned>(n, 0));
    for (size_t z = 0; z < n; ++z)
        for (size_t x = 0; x < n; ++x) {
            if (ext1_dim(indecs[z], indecs[x]) == 0) {
                mid_mask[z][x] = (1u << z) | (1u << x);
                continue;
            }
            unsigned mask = 0;
            for (const auto& e : extension_middle_terms(indecs[z], indecs[x])) {
                auto d = decompose(e);
                for (const auto& s : d.summands) mask |= (1u << index_of_dims(s));
            }
            mid_mask[z][x] = mask;
        }
    for (unsigned long long m = 0; m < (1ull << n); ++m) {
        bool ok = true;
        for (size_t j = 0; j < n && ok; ++j) {
            if (!(m & (1ull << j))) continue;
            for (size_t i = 0; i < n && ok; ++i)
                if (emb[i][j] && !(m & (1ull << i))) ok = false;
        }
        for (size_t z = 0; z < n && ok; ++z) {
            if (!(m & (1ull << z))) continue;
            for (size_t x = 0; x < n && ok; ++x) {
                if (!(m & (1ull << x))) continue;
                if ((mid_mask[z][x] & ~static_cast<unsigned>(m)) != 0) ok = false;
            }
        }
        if (ok) report.torsionfree_count++;
    }
    report.matches = report.sortable_count == report.torsionfree_count;
    return report;
}

ExplorerReport explore_word(const Quiver& q, const Word& w) {
    validate_quiver(q);
    ExplorerReport rep;
    rep.word = w;
    rep.module_quiver = reversed(q);
    if (static_cast<int>(w.size()) < q.n)
        throw std::invalid_argument("explore_word: word shorter than a Coxeter element");
    Word prefix(w.begin(), w.begin() + q.n);
    if (!is_admissible_coxeter(q, prefix))
        throw std::invalid_argument("explore_word: word does not start with an admissible Coxeter element");
    std::vector<Representation> slots;
    for (int v = 1; v <= q.n; ++v) slots.push_back(projective(rep.module_quiver, v));
    bool all_left = true, completed = true;
    for (size_t idx = q.n; idx < w.size(); ++idx) {
        int i = w[idx];
        if (i < 1 || i > q.n) throw std::invalid_argument("explore_word: letter out of range");
        std::vector<Representation> others;
        for (int v = 1; v <= q.n; ++v)
            if (v != i) others.push_back(slots[v - 1]);
        LeftApproximation la = minimal_left_approximation(slots[i - 1], others);
        if (la.mono) {
            slots[i - 1] = la.coker;
            rep.steps.push_back({i, true, true, la.coker});
            continue;
        }
        RightApproximation ra = minimal_right_approximation(slots[i - 1], others);
        if (ra.epi) {
            slots[i - 1] = ra.ker;
            rep.steps.push_back({i, false, true, ra.ker});
            all_left = false;
            continue;
        }
        rep.steps.push_back({i, true, false, zero_rep(rep.module_quiver)});
        completed = false;
        break;
    }
    if (!completed) {
        rep.classification = WordClass::NotTilting;
    } else {
        rep.classification = all_left ? WordClass::Monotilting : WordClass::TiltingNotMonotilting;
        rep.final_tilting = slots;
    }
    return rep;
}

}  // namespace sq
