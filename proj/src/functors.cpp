#include "sq/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sq {

namespace {

struct CokernelData {
    RatMatrix proj;                 // quotient projection
    std::vector<int> free_coords;   // section picks these coordinates
};

CokernelData cokernel_of_columns(const RatMatrix& m) {
    CokernelData d;
    auto rr = rref(m.transpose());
    std::vector<bool> is_piv(m.rows(), false);
    for (int p : rr.pivots) is_piv[p] = true;
    for (int j = 0; j < m.rows(); ++j)
        if (!is_piv[j]) d.free_coords.push_back(j);
    RatMatrix pm(static_cast<int>(d.free_coords.size()), m.rows());
    for (size_t r = 0; r < d.free_coords.size(); ++r) pm.at(static_cast<int>(r), d.free_coords[r]) = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (size_t r = 0; r < d.free_coords.size(); ++r)
            pm.at(static_cast<int>(r), rr.pivots[i]) = -rr.mat.at(static_cast<int>(i), d.free_coords[r]);
    d.proj = std::move(pm);
    return d;
}

RatMatrix section_of(const CokernelData& d, int ambient) {
    RatMatrix sec(ambient, static_cast<int>(d.free_coords.size()));
    for (size_t j = 0; j < d.free_coords.size(); ++j) sec.at(d.free_coords[j], static_cast<int>(j)) = 1;
    return sec;
}

// Stacked map X_i -> (+) X_{t(a)} over arrows leaving i, plus block offsets.
RatMatrix assemble_out(const Quiver& q, int i, const Representation& x, std::vector<std::pair<size_t, int>>& blocks) {
    int rows = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].first == i) {
            blocks.emplace_back(a, rows);
            rows += x.dims[q.arrows[a].second - 1];
        }
    RatMatrix m(rows, x.dims[i - 1]);
    for (auto [a, off] : blocks) {
        const RatMatrix& ma = x.maps[a];
        for (int r = 0; r < ma.rows(); ++r)
            for (int c = 0; c < ma.cols(); ++c) m.at(off + r, c) = ma.at(r, c);
    }
    return m;
}

// Stacked map (+) X_{s(a)} -> X_i over arrows entering i.
RatMatrix assemble_in(const Quiver& q, int i, const Representation& x, std::vector<std::pair<size_t, int>>& blocks) {
    int cols = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].second == i) {
            blocks.emplace_back(a, cols);
            cols += x.dims[q.arrows[a].first - 1];
        }
    RatMatrix m(x.dims[i - 1], cols);
    for (auto [a, off] : blocks) {
        const RatMatrix& ma = x.maps[a];
        for (int r = 0; r < ma.rows(); ++r)
            for (int c = 0; c < ma.cols(); ++c) m.at(r, off + c) = ma.at(r, c);
    }
    return m;
}

}  // namespace

ReflectionResult reflect_source(const Quiver& q, int i, const Representation& x) {
    if (i < 1 || i > q.n) throw std::invalid_argument("reflect_source: vertex out of range");
    if (!(x.quiver == q)) throw std::invalid_argument("reflect_source: representation is over a different quiver");
    for (auto [s, t] : q.arrows)
        if (t == i && x.dims[s - 1] != 0) throw std::invalid_argument("reflect_source: vertex is not a source");

    std::vector<std::pair<size_t, int>> blocks;
    RatMatrix m = assemble_out(q, i, x, blocks);
    CokernelData ck = cokernel_of_columns(m);

    ReflectionResult res;
    res.quiver_after = mutated(q, i);
    Representation y;
    y.quiver = res.quiver_after;
    y.dims = x.dims;
    y.dims[i - 1] = ck.proj.rows();
    y.maps.resize(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        if (s == i) {
            // reversed: t -> i, the composite X_t -> (+) -> coker
            int off = 0;
            for (auto [b, o] : blocks)
                if (b == a) off = o;
            RatMatrix inc(m.rows(), x.dims[t - 1]);
            for (int r = 0; r < x.dims[t - 1]; ++r) inc.at(off + r, r) = 1;
            y.maps[a] = mat_mul(ck.proj, inc);
        } else if (t == i) {
            // reversed dead arrow i -> s; the source space is zero.
            y.maps[a] = RatMatrix(0, y.dims[i - 1]);
        } else {
            y.maps[a] = x.maps[a];
        }
    }
    res.killed = !is_zero_rep(x) && total_dim(y) == 0;
    res.rep_after = std::move(y);
    validate_representation(res.rep_after);
    return res;
}

ReflectionResult reflect_sink(const Quiver& q, int i, const Representation& x) {
    if (i < 1 || i > q.n) throw std::invalid_argument("reflect_sink: vertex out of range");
    if (!(x.quiver == q)) throw std::invalid_argument("reflect_sink: representation is over a different quiver");
    for (auto [s, t] : q.arrows)
        if (s == i && x.dims[t - 1] != 0) throw std::invalid_argument("reflect_sink: vertex is not a sink");

    std::vector<std::pair<size_t, int>> blocks;
    RatMatrix m = assemble_in(q, i, x, blocks);
    auto kb = kernel_basis(m);
    RatMatrix basis(m.cols(), static_cast<int>(kb.size()));
    for (size_t j = 0; j < kb.size(); ++j)
        for (int r = 0; r < m.cols(); ++r) basis.at(r, static_cast<int>(j)) = kb[j][r];

    ReflectionResult res;
    res.quiver_after = mutated(q, i);
    Representation y;
    y.quiver = res.quiver_after;
    y.dims = x.dims;
    y.dims[i - 1] = basis.cols();
    y.maps.resize(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        if (t == i) {
            // reversed: i -> s, the block rows of the kernel basis
            int off = 0;
            for (auto [b, o] : blocks)
                if (b == a) off = o;
            RatMatrix blk(x.dims[s - 1], basis.cols());
            for (int r = 0; r < x.dims[s - 1]; ++r)
                for (int c = 0; c < basis.cols(); ++c) blk.at(r, c) = basis.at(off + r, c);
            y.maps[a] = std::move(blk);
        } else if (s == i) {
            // dead arrow (i,t) flips to (t,i); the t space is zero
            y.maps[a] = RatMatrix(y.dims[i - 1], y.dims[t - 1]);
        } else {
            y.maps[a] = x.maps[a];
        }
    }
    res.killed = !is_zero_rep(x) && total_dim(y) == 0;
    res.rep_after = std::move(y);
    validate_representation(res.rep_after);
    return res;
}

RepMorphism reflect_source_map(const Quiver& q, int i, const Representation& x, const Representation& y,
                               const RepMorphism& f) {
    std::vector<std::pair<size_t, int>> bx, by;
    RatMatrix mx = assemble_out(q, i, x, bx);
    RatMatrix my = assemble_out(q, i, y, by);
    CokernelData cx = cokernel_of_columns(mx);
    CokernelData cy = cokernel_of_columns(my);
    // Block diagonal of f over the target spaces of the arrows leaving i.
    RatMatrix big(my.rows(), mx.rows());
    for (size_t k = 0; k < bx.size(); ++k) {
        auto [a, offx] = bx[k];
        int offy = by[k].second;
        int t = q.arrows[a].second;
        const RatMatrix& fb = f.blocks[t - 1];
        for (int r = 0; r < fb.rows(); ++r)
            for (int c = 0; c < fb.cols(); ++c) big.at(offy + r, offx + c) = fb.at(r, c);
    }
    RepMorphism out = f;
    out.blocks[i - 1] = mat_mul(cy.proj, mat_mul(big, section_of(cx, mx.rows())));
    return out;
}

RepMorphism reflect_sink_map(const Quiver& q, int i, const Representation& x, const Representation& y,
                             const RepMorphism& f) {
    std::vector<std::pair<size_t, int>> bx, by;
    RatMatrix mx = assemble_in(q, i, x, bx);
    RatMatrix my = assemble_in(q, i, y, by);
    auto kx = kernel_basis(mx);
    auto ky = kernel_basis(my);
    RatMatrix basx(mx.cols(), static_cast<int>(kx.size()));
    for (size_t j = 0; j < kx.size(); ++j)
        for (int r = 0; r < mx.cols(); ++r) basx.at(r, static_cast<int>(j)) = kx[j][r];
    RatMatrix basy(my.cols(), static_cast<int>(ky.size()));
    for (size_t j = 0; j < ky.size(); ++j)
        for (int r = 0; r < my.cols(); ++r) basy.at(r, static_cast<int>(j)) = ky[j][r];
    RatMatrix big(my.cols(), mx.cols());
    for (size_t k = 0; k < bx.size(); ++k) {
        auto [a, offx] = bx[k];
        int offy = by[k].second;
        int s = q.arrows[a].first;
        const RatMatrix& fb = f.blocks[s - 1];
        for (int r = 0; r < fb.rows(); ++r)
            for (int c = 0; c < fb.cols(); ++c) big.at(offy + r, offx + c) = fb.at(r, c);
    }
    // Solve basy * g = big * basx.
    RatMatrix rhs = mat_mul(big, basx);
    RatMatrix g(basy.cols(), basx.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        std::vector<Rat> col(rhs.rows());
        for (int r = 0; r < rhs.rows(); ++r) col[r] = rhs.at(r, j);
        auto sol = solve(basy, col);
        if (!sol) throw std::logic_error("reflect_sink_map: kernel transport failed");
        for (int r = 0; r < g.rows(); ++r) g.at(r, j) = (*sol)[r];
    }
    RepMorphism out = f;
    out.blocks[i - 1] = std::move(g);
    return out;
}

Representation coxeter_minus(const Quiver& q, const Representation& x) {
    if (!(x.quiver == q)) throw std::invalid_argument("coxeter_minus: representation is over a different quiver");
    std::vector<int> order = topological_order(q);
    Quiver cur_q = q;
    Representation cur = x;
    for (int v : order) {
        ReflectionResult r = reflect_source(cur_q, v, cur);
        cur_q = std::move(r.quiver_after);
        cur = std::move(r.rep_after);
    }
    if (!(cur_q == q)) throw std::logic_error("coxeter_minus: quiver did not return to itself");
    return cur;
}

Representation coxeter_plus(const Quiver& q, const Representation& x) {
    if (!(x.quiver == q)) throw std::invalid_argument("coxeter_plus: representation is over a different quiver");
    std::vector<int> order = topological_order(q);
    std::reverse(order.begin(), order.end());
    Quiver cur_q = q;
    Representation cur = x;
    for (int v : order) {
        ReflectionResult r = reflect_sink(cur_q, v, cur);
        cur_q = std::move(r.quiver_after);
        cur = std::move(r.rep_after);
    }
    if (!(cur_q == q)) throw std::logic_error("coxeter_plus: quiver did not return to itself");
    return cur;
}

}  // namespace sq
