#include "sq/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sq {

void validate_representation(const Representation& x) {
    validate_quiver(x.quiver);
    if (static_cast<int>(x.dims.size()) != x.quiver.n) throw std::invalid_argument("representation: dims length mismatch");
    for (int d : x.dims)
        if (d < 0) throw std::invalid_argument("representation: negative dimension");
    if (x.maps.size() != x.quiver.arrows.size()) throw std::invalid_argument("representation: map count mismatch");
    for (size_t a = 0; a < x.maps.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        if (x.maps[a].rows() != x.dims[t - 1] || x.maps[a].cols() != x.dims[s - 1])
            throw std::invalid_argument("representation: map shape mismatch at arrow " + std::to_string(a));
    }
}

Representation zero_rep(const Quiver& q) {
    Representation x;
    x.quiver = q;
    x.dims.assign(q.n, 0);
    for (size_t a = 0; a < q.arrows.size(); ++a) x.maps.emplace_back(0, 0);
    return x;
}

Representation simple_rep(const Quiver& q, int i) {
    if (i < 1 || i > q.n) throw std::invalid_argument("simple_rep: vertex out of range");
    Representation x = zero_rep(q);
    x.dims[i - 1] = 1;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        x.maps[a] = RatMatrix(x.dims[t - 1], x.dims[s - 1]);
    }
    return x;
}

namespace {

// Paths from i, as arrow-index sequences, bucketed by endpoint and sorted by
// (vertex sequence, arrow indices) so bases are reproducible.
using Path = std::vector<int>;

std::vector<int> path_vertices(const Quiver& q, int start, const Path& p) {
    std::vector<int> vs{start};
    for (int a : p) vs.push_back(q.arrows[a].second);
    return vs;
}

std::vector<std::vector<Path>> paths_from(const Quiver& q, int i) {
    std::vector<std::vector<Path>> bucket(q.n + 1);
    std::vector<std::pair<int, Path>> stack{{i, {}}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        bucket[v].push_back(p);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].first != v) continue;
            Path np = p;
            np.push_back(static_cast<int>(a));
            stack.emplace_back(q.arrows[a].second, np);
        }
    }
    for (int v = 1; v <= q.n; ++v) {
        std::sort(bucket[v].begin(), bucket[v].end(), [&](const Path& a, const Path& b) {
            auto va = path_vertices(q, i, a), vb = path_vertices(q, i, b);
            if (va != vb) return va < vb;
            return a < b;
        });
    }
    return bucket;
}

int path_index(const std::vector<Path>& basis, const Path& p) {
    for (size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == p) return static_cast<int>(k);
    return -1;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> projective_path_basis(const Quiver& q, int i) {
    if (i < 1 || i > q.n) throw std::invalid_argument("projective_path_basis: vertex out of range");
    return paths_from(q, i);
}

Representation projective(const Quiver& q, int i) {
    if (i < 1 || i > q.n) throw std::invalid_argument("projective: vertex out of range");
    auto bucket = paths_from(q, i);
    Representation x;
    x.quiver = q;
    x.dims.assign(q.n, 0);
    for (int v = 1; v <= q.n; ++v) x.dims[v - 1] = static_cast<int>(bucket[v].size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        RatMatrix m(x.dims[t - 1], x.dims[s - 1]);
        for (size_t k = 0; k < bucket[s].size(); ++k) {
            Path ext = bucket[s][k];
            ext.push_back(static_cast<int>(a));
            int r = path_index(bucket[t], ext);
            m.at(r, static_cast<int>(k)) = 1;
        }
        x.maps.push_back(std::move(m));
    }
    return x;
}

Representation injective(const Quiver& q, int i) {
    if (i < 1 || i > q.n) throw std::invalid_argument("injective: vertex out of range");
    // Paths v ~> i are paths from i in the reversed quiver (same arrow ids).
    Quiver r = reversed(q);
    auto bucket = paths_from(r, i);
    Representation x;
    x.quiver = q;
    x.dims.assign(q.n, 0);
    for (int v = 1; v <= q.n; ++v) x.dims[v - 1] = static_cast<int>(bucket[v].size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        // Dual pairing: the dual of path p at s maps to the dual of path g at
        // t whenever p = a followed by g (in q), i.e. p = g + [a] reversed.
        RatMatrix m(x.dims[t - 1], x.dims[s - 1]);
        for (size_t k = 0; k < bucket[s].size(); ++k) {
            const Path& p = bucket[s][k];
            if (p.empty() || p.back() != static_cast<int>(a)) continue;
            Path g(p.begin(), p.end() - 1);
            int rr = path_index(bucket[t], g);
            m.at(rr, static_cast<int>(k)) = 1;
        }
        x.maps.push_back(std::move(m));
    }
    return x;
}

RootVector dim_vector(const Representation& x) {
    RootVector v(x.dims.size());
    for (size_t i = 0; i < x.dims.size(); ++i) v[i] = x.dims[i];
    return v;
}

long long total_dim(const Representation& x) {
    long long s = 0;
    for (int d : x.dims) s += d;
    return s;
}

bool is_zero_rep(const Representation& x) { return total_dim(x) == 0; }

std::set<int> support_of(const Representation& x) {
    std::set<int> s;
    for (int v = 1; v <= x.quiver.n; ++v)
        if (x.dims[v - 1] > 0) s.insert(v);
    return s;
}

bool rep_equal(const Representation& a, const Representation& b) {
    return a.quiver == b.quiver && a.dims == b.dims && a.maps == b.maps;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
    Representation x = zero_rep(parts[0].quiver);
    for (const auto& p : parts) {
        if (!(p.quiver == x.quiver)) throw std::invalid_argument("direct_sum: quiver mismatch");
        for (int v = 0; v < x.quiver.n; ++v) x.dims[v] += p.dims[v];
    }
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        RatMatrix m(x.dims[t - 1], x.dims[s - 1]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            const RatMatrix& pm = p.maps[a];
            for (int r = 0; r < pm.rows(); ++r)
                for (int c = 0; c < pm.cols(); ++c) m.at(ro + r, co + c) = pm.at(r, c);
            ro += pm.rows();
            co += pm.cols();
        }
        x.maps[a] = std::move(m);
    }
    return x;
}

Representation pad_representation(const Representation& x, const Quiver& full) {
    if (full.n != x.quiver.n) throw std::invalid_argument("pad_representation: vertex count mismatch");
    Representation y;
    y.quiver = full;
    y.dims = x.dims;
    size_t src = 0;
    for (auto [s, t] : full.arrows) {
        if (src < x.quiver.arrows.size() && x.quiver.arrows[src] == std::make_pair(s, t)) {
            y.maps.push_back(x.maps[src]);
            ++src;
        } else {
            if (x.dims[s - 1] != 0 && x.dims[t - 1] != 0)
                throw std::logic_error("pad_representation: dropped arrow touches nonzero spaces");
            y.maps.emplace_back(x.dims[t - 1], x.dims[s - 1]);
        }
    }
    if (src != x.quiver.arrows.size()) throw std::invalid_argument("pad_representation: arrows are not a subsequence");
    return y;
}

bool morphism_valid(const Representation& x, const Representation& y, const RepMorphism& f) {
    if (!(x.quiver == y.quiver)) return false;
    if (static_cast<int>(f.blocks.size()) != x.quiver.n) return false;
    for (int v = 0; v < x.quiver.n; ++v)
        if (f.blocks[v].rows() != y.dims[v] || f.blocks[v].cols() != x.dims[v]) return false;
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        if (mat_mul(f.blocks[t - 1], x.maps[a]) != mat_mul(y.maps[a], f.blocks[s - 1])) return false;
    }
    return true;
}

RepMorphism zero_morphism(const Representation& x, const Representation& y) {
    RepMorphism f;
    for (int v = 0; v < x.quiver.n; ++v) f.blocks.emplace_back(y.dims[v], x.dims[v]);
    return f;
}

RepMorphism identity_morphism(const Representation& x) {
    RepMorphism f;
    for (int v = 0; v < x.quiver.n; ++v) f.blocks.push_back(RatMatrix::identity(x.dims[v]));
    return f;
}

RepMorphism compose(const RepMorphism& f, const RepMorphism& g) {
    RepMorphism h;
    for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(mat_mul(g.blocks[v], f.blocks[v]));
    return h;
}

RepMorphism morphism_add(const RepMorphism& f, const RepMorphism& g) {
    RepMorphism h;
    for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(mat_add(f.blocks[v], g.blocks[v]));
    return h;
}

RepMorphism morphism_scale(const Rat& c, const RepMorphism& f) {
    RepMorphism h;
    for (const auto& b : f.blocks) h.blocks.push_back(mat_scale(c, b));
    return h;
}

bool is_mono(const RepMorphism& f) {
    for (const auto& b : f.blocks)
        if (rank_of(b) != b.cols()) return false;
    return true;
}

bool is_epi(const Representation& y, const RepMorphism& f) {
    for (size_t v = 0; v < f.blocks.size(); ++v)
        if (rank_of(f.blocks[v]) != y.dims[v]) return false;
    return true;
}

bool morphism_is_zero(const RepMorphism& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

namespace {

// Commuting-square system for Hom(X,Y): unknowns are the block entries.
RatMatrix hom_system(const Representation& x, const Representation& y, std::vector<int>& offsets) {
    const int n = x.quiver.n;
    offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + y.dims[v] * x.dims[v];
    int unknowns = offsets[n];
    int rows = 0;
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        rows += y.dims[t - 1] * x.dims[s - 1];
    }
    RatMatrix sys(rows, unknowns);
    int row = 0;
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        const RatMatrix& xa = x.maps[a];
        const RatMatrix& ya = y.maps[a];
        const int ys = y.dims[s - 1], yt = y.dims[t - 1], xs = x.dims[s - 1], xt = x.dims[t - 1];
        for (int r = 0; r < yt; ++r)
            for (int c = 0; c < xs; ++c) {
                // (Y_a phi_s - phi_t X_a)[r,c] = 0
                for (int m = 0; m < ys; ++m)
                    if (ya.at(r, m) != 0) sys.at(row, offsets[s - 1] + m * xs + c) += ya.at(r, m);
                for (int m = 0; m < xt; ++m)
                    if (xa.at(m, c) != 0) sys.at(row, offsets[t - 1] + r * xt + m) -= xa.at(m, c);
                ++row;
            }
    }
    return sys;
}

}  // namespace

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver)) throw std::invalid_argument("hom_basis: quiver mismatch");
    std::vector<int> off;
    RatMatrix sys = hom_system(x, y, off);
    auto null_vectors = kernel_basis(sys);
    std::vector<RepMorphism> out;
    for (const auto& vec : null_vectors) {
        RepMorphism f;
        for (int v = 0; v < x.quiver.n; ++v) {
            RatMatrix b(y.dims[v], x.dims[v]);
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c) b.at(r, c) = vec[off[v] + r * x.dims[v] + c];
            f.blocks.push_back(std::move(b));
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver)) throw std::invalid_argument("hom_dim: quiver mismatch");
    std::vector<int> off;
    RatMatrix sys = hom_system(x, y, off);
    return off[x.quiver.n] - rank_of(sys);
}

long long euler_form(const Quiver& q, const RootVector& a, const RootVector& b) {
    if (static_cast<int>(a.size()) != q.n || static_cast<int>(b.size()) != q.n)
        throw std::invalid_argument("euler_form: dimension mismatch");
    long long s = 0;
    for (int v = 0; v < q.n; ++v) s += a[v] * b[v];
    for (auto [i, j] : q.arrows) s -= a[i - 1] * b[j - 1];
    return s;
}

int ext1_dim(const Representation& x, const Representation& y) {
    long long h = hom_dim(x, y);
    long long e = h - euler_form(x.quiver, dim_vector(x), dim_vector(y));
    if (e < 0) throw std::logic_error("ext1_dim: negative value, inconsistent representation data");
    return static_cast<int>(e);
}

namespace {

// Solve A * Z = B columnwise; throws if inconsistent.
RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix z(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<Rat> col(b.rows());
        for (int r = 0; r < b.rows(); ++r) col[r] = b.at(r, j);
        auto sol = solve(a, col);
        if (!sol) throw std::logic_error("solve_matrix: inconsistent system");
        for (int r = 0; r < a.cols(); ++r) z.at(r, j) = (*sol)[r];
    }
    return z;
}

RatMatrix columns_from_basis(const std::vector<std::vector<Rat>>& basis, int rows) {
    RatMatrix b(rows, static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (int r = 0; r < rows; ++r) b.at(r, static_cast<int>(j)) = basis[j][r];
    return b;
}

}  // namespace

SubquotientResult kernel_subrep(const Representation& x, const Representation& y, const RepMorphism& f) {
    (void)y;
    SubquotientResult res;
    res.rep.quiver = x.quiver;
    res.rep.dims.assign(x.quiver.n, 0);
    std::vector<RatMatrix> incl(x.quiver.n);
    for (int v = 0; v < x.quiver.n; ++v) {
        auto kb = kernel_basis(f.blocks[v]);
        incl[v] = columns_from_basis(kb, x.dims[v]);
        res.rep.dims[v] = incl[v].cols();
    }
    for (size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        auto [s, t] = x.quiver.arrows[a];
        res.rep.maps.push_back(solve_matrix(incl[t - 1], mat_mul(x.maps[a], incl[s - 1])));
    }
    res.map.blocks = std::move(incl);
    return res;
}

SubquotientResult image_subrep(const Representation& x, const Representation& y, const RepMorphism& f) {
    (void)x;
    SubquotientResult res;
    res.rep.quiver = y.quiver;
    res.rep.dims.assign(y.quiver.n, 0);
    std::vector<RatMatrix> incl(y.quiver.n);
    for (int v = 0; v < y.quiver.n; ++v) {
        auto rr = rref(f.blocks[v]);
        RatMatrix b(y.dims[v], static_cast<int>(rr.pivots.size()));
        for (size_t j = 0; j < rr.pivots.size(); ++j)
            for (int r = 0; r < y.dims[v]; ++r) b.at(r, static_cast<int>(j)) = f.blocks[v].at(r, rr.pivots[j]);
        incl[v] = std::move(b);
        res.rep.dims[v] = incl[v].cols();
    }
    for (size_t a = 0; a < y.quiver.arrows.size(); ++a) {
        auto [s, t] = y.quiver.arrows[a];
        res.rep.maps.push_back(solve_matrix(incl[t - 1], mat_mul(y.maps[a], incl[s - 1])));
    }
    res.map.blocks = std::move(incl);
    return res;
}

SubquotientResult cokernel_rep(const Representation& x, const Representation& y, const RepMorphism& f) {
    (void)x;
    SubquotientResult res;
    res.rep.quiver = y.quiver;
    res.rep.dims.assign(y.quiver.n, 0);
    std::vector<RatMatrix> proj(y.quiver.n);
    std::vector<std::vector<int>> free_coords(y.quiver.n);
    for (int v = 0; v < y.quiver.n; ++v) {
        // Row-reduced basis of the image; quotient coordinates are the
        // non-pivot positions.
        auto rr = rref(f.blocks[v].transpose());
        std::vector<bool> is_piv(y.dims[v], false);
        for (int p : rr.pivots) is_piv[p] = true;
        std::vector<int>& free_v = free_coords[v];
        for (int j = 0; j < y.dims[v]; ++j)
            if (!is_piv[j]) free_v.push_back(j);
        RatMatrix pm(static_cast<int>(free_v.size()), y.dims[v]);
        for (size_t r = 0; r < free_v.size(); ++r) pm.at(static_cast<int>(r), free_v[r]) = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            for (size_t r = 0; r < free_v.size(); ++r)
                pm.at(static_cast<int>(r), rr.pivots[i]) = -rr.mat.at(static_cast<int>(i), free_v[r]);
        proj[v] = std::move(pm);
        res.rep.dims[v] = static_cast<int>(free_v.size());
    }
    for (size_t a = 0; a < y.quiver.arrows.size(); ++a) {
        auto [s, t] = y.quiver.arrows[a];
        // Section picks the free coordinates at the source.
        RatMatrix sec(y.dims[s - 1], res.rep.dims[s - 1]);
        for (size_t j = 0; j < free_coords[s - 1].size(); ++j) sec.at(free_coords[s - 1][j], static_cast<int>(j)) = 1;
        res.rep.maps.push_back(mat_mul(proj[t - 1], mat_mul(y.maps[a], sec)));
    }
    res.map.blocks = std::move(proj);
    return res;
}

std::vector<RepMorphism> radical_endo(const Representation& x, const std::vector<RepMorphism>& endos) {
    const int d = static_cast<int>(endos.size());
    RatMatrix gram(d, d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            Rat tr = 0;
            for (int v = 0; v < x.quiver.n; ++v) {
                const RatMatrix& a = endos[s].blocks[v];
                const RatMatrix& b = endos[t].blocks[v];
                for (int r = 0; r < a.rows(); ++r)
                    for (int c = 0; c < a.cols(); ++c)
                        if (a.at(r, c) != 0 && b.at(c, r) != 0) tr += a.at(r, c) * b.at(c, r);
            }
            gram.at(s, t) = tr;
        }
    auto combos = kernel_basis(gram);
    std::vector<RepMorphism> rad;
    for (const auto& combo : combos) {
        RepMorphism f = zero_morphism(x, x);
        for (int t = 0; t < d; ++t)
            if (combo[t] != 0) f = morphism_add(f, morphism_scale(combo[t], endos[t]));
        rad.push_back(std::move(f));
    }
    return rad;
}

bool in_sub_closure(const Representation& x, const Representation& t) {
    if (!(x.quiver == t.quiver)) throw std::invalid_argument("in_sub_closure: quiver mismatch");
    if (is_zero_rep(x)) return true;
    auto homs = hom_basis(x, t);
    for (int v = 0; v < x.quiver.n; ++v) {
        if (x.dims[v] == 0) continue;
        RatMatrix stacked(0, x.dims[v]);
        for (const auto& f : homs) stacked = vstack(stacked, f.blocks[v]);
        if (rank_of(stacked) != x.dims[v]) return false;
    }
    return true;
}

bool in_fac_closure(const Representation& x, const Representation& t) {
    if (!(x.quiver == t.quiver)) throw std::invalid_argument("in_fac_closure: quiver mismatch");
    if (is_zero_rep(x)) return true;
    auto homs = hom_basis(t, x);
    for (int v = 0; v < x.quiver.n; ++v) {
        if (x.dims[v] == 0) continue;
        RatMatrix stacked(x.dims[v], 0);
        for (const auto& f : homs) stacked = hstack(stacked, f.blocks[v]);
        if (rank_of(stacked) != x.dims[v]) return false;
    }
    return true;
}

bool is_tilting(const std::vector<Representation>& t) {
    if (t.empty()) return false;
    std::set<int> support;
    for (const auto& m : t) {
        if (is_zero_rep(m)) return false;
        if (!is_indecomposable(m)) return false;
        for (int v : support_of(m)) support.insert(v);
    }
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (is_isomorphic(t[i], t[j])) return false;
    for (const auto& a : t)
        for (const auto& b : t)
            if (ext1_dim(a, b) != 0) return false;
    return t.size() == support.size();
}

}  // namespace sq
