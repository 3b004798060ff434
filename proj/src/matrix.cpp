#include "sq/matrix.hpp"

#include <stdexcept>

namespace sq {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

RrefResult rref(const RatMatrix& m) {
    RrefResult res;
    res.mat = m;
    RatMatrix& a = res.mat;
    const int nr = a.rows(), nc = a.cols();
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r) {
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = col; c < nc; ++c) swap(a.at(piv, c), a.at(row, c));
        Rat inv = 1 / a.at(row, col);
        for (int c = col; c < nc; ++c) a.at(row, c) *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == row) continue;
            const Rat f = a.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < nc; ++c) {
                if (a.at(row, c) != 0) a.at(r, c) -= f * a.at(row, c);
            }
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    const int nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(nc);
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (int p : rr.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Rat> x(m.cols());
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(static_cast<int>(i), m.cols());
    return x;
}

int rank_of(const RatMatrix& m) { return rref(m).rank; }

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) c.at(i, j) += f * b.at(k, j);
        }
    return c;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_sub: shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix mat_scale(const Rat& c, const RatMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
    return r;
}

RatMatrix mat_pow(const RatMatrix& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: not square");
    RatMatrix r = RatMatrix::identity(a.rows());
    RatMatrix base = a;
    while (k > 0) {
        if (k & 1) r = mat_mul(r, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return r;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix c(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    RatMatrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

std::vector<Rat> mat_apply(const RatMatrix& a, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("mat_apply: dimension mismatch");
    std::vector<Rat> r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

bool is_invertible(const RatMatrix& a) { return a.rows() == a.cols() && rank_of(a) == a.rows(); }

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace sq
