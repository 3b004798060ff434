#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sq/rep.hpp"

// Decomposition, isomorphism testing and minimal approximations.  Everything
// here reduces to exact linear algebra: radicals come from the trace form
// (characteristic zero), splittings from Fitting's lemma, and approximation
// multiplicities from radical quotients of Hom spaces.

namespace sq {

namespace {

std::vector<Rat> flatten_morphism(const RepMorphism& f) {
    std::vector<Rat> out;
    for (const auto& b : f.blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) out.push_back(b.at(r, c));
    return out;
}

// Incremental span: rows are flattened vectors kept in reduced form.
class SpanTester {
public:
    // Returns true if v was independent (and absorbs it).
    bool add(std::vector<Rat> v) {
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        Rat inv = 1 / v[lead];
        for (auto& x : v) x *= inv;
        for (auto& [l, row] : rows_) {
            if (row[lead] != 0) {
                Rat f = row[lead];
                for (size_t i = 0; i < row.size(); ++i) row[i] -= f * v[i];
            }
        }
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

    bool contains(std::vector<Rat> v) const {
        reduce(v);
        return leading(v) < 0;
    }

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    static int leading(const std::vector<Rat>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }
    void reduce(std::vector<Rat>& v) const {
        for (const auto& [lead, row] : rows_) {
            if (v[lead] == 0) continue;
            Rat f = v[lead];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
        }
    }
    std::vector<std::pair<int, std::vector<Rat>>> rows_;
};

RepMorphism morphism_power(const Representation& x, const RepMorphism& f, int k) {
    RepMorphism p;
    for (int v = 0; v < x.quiver.n; ++v) p.blocks.push_back(mat_pow(f.blocks[v], k));
    return p;
}

RatMatrix total_matrix(const Representation& x, const RepMorphism& f) {
    int n = static_cast<int>(total_dim(x));
    RatMatrix m(n, n);
    int off = 0;
    for (int v = 0; v < x.quiver.n; ++v) {
        const RatMatrix& b = f.blocks[v];
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) m.at(off + r, off + c) = b.at(r, c);
        off += b.rows();
    }
    return m;
}

// Monic minimal polynomial, low degree first: coeffs[0] + coeffs[1] t + ...
std::vector<Rat> minimal_polynomial(const RatMatrix& m) {
    const int n = m.rows();
    std::vector<RatMatrix> powers{RatMatrix::identity(n)};
    SpanTester span;
    std::vector<std::vector<Rat>> flat;
    while (true) {
        const RatMatrix& last = powers.back();
        std::vector<Rat> v;
        v.reserve(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) v.push_back(last.at(r, c));
        if (!span.add(v)) {
            // powers.back() depends on the earlier ones
            RatMatrix sys(n * n, static_cast<int>(flat.size()));
            for (size_t j = 0; j < flat.size(); ++j)
                for (int i = 0; i < n * n; ++i) sys.at(i, static_cast<int>(j)) = flat[j][i];
            auto sol = solve(sys, v);
            std::vector<Rat> coeffs(flat.size() + 1);
            for (size_t j = 0; j < flat.size(); ++j) coeffs[j] = -(*sol)[j];
            coeffs.back() = 1;
            return coeffs;
        }
        flat.push_back(std::move(v));
        powers.push_back(mat_mul(powers.back(), m));
    }
}

std::vector<long long> divisors_of(long long x, long long cap = 2'000'000) {
    x = std::llabs(x);
    std::vector<long long> out;
    if (x == 0 || x > cap * cap) return out;
    for (long long d = 1; d * d <= x; ++d) {
        if (x % d) continue;
        out.push_back(d);
        if (d != x / d) out.push_back(x / d);
        if (out.size() > 4000) return {};
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat eval_poly(const std::vector<Rat>& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
    // Scale to integer coefficients, then try p/q over divisor pairs.
    mpz_class lcm = 1;
    for (const auto& c : poly) {
        mpz_class den = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> ip;
    for (const auto& c : poly) ip.push_back(mpz_class(c * lcm));
    size_t lo = 0;
    std::vector<Rat> roots;
    while (lo < ip.size() && ip[lo] == 0) {
        if (std::find(roots.begin(), roots.end(), Rat(0)) == roots.end()) roots.push_back(0);
        ++lo;
    }
    if (lo >= ip.size()) return roots;
    if (!ip[lo].fits_slong_p() || !ip.back().fits_slong_p()) return roots;
    auto ps = divisors_of(ip[lo].get_si());
    auto qs = divisors_of(ip.back().get_si());
    for (long long p : ps)
        for (long long q : qs)
            for (int sign : {1, -1}) {
                Rat cand(static_cast<long>(sign * p), static_cast<long>(q));
                cand.canonicalize();
                if (eval_poly(poly, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

// Irreducibility over Q for a monic rational polynomial, small degrees only.
bool monic_poly_irreducible(const std::vector<Rat>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    if (deg <= 1) return true;
    if (!rational_roots(poly).empty()) return false;
    if (deg <= 3) return true;
    if (deg == 4) {
        // Clear denominators via x -> y/M so the polynomial becomes integer monic.
        mpz_class m = 1;
        for (const auto& c : poly) {
            mpz_class den = c.get_den(), g;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
            m = m / g * den;
        }
        std::vector<mpz_class> e(5);
        mpz_class mp = 1;
        for (int i = 4; i >= 0; --i) {
            e[i] = mpz_class(poly[i] * mp);
            mp *= m;
        }
        if (!e[0].fits_slong_p()) throw std::logic_error("poly_irreducible: coefficients too large");
        auto bs = divisors_of(e[0].get_si());
        for (long long babs : bs)
            for (int bsign : {1, -1}) {
                mpz_class b = static_cast<long>(bsign * babs);
                if (b == 0 || e[0] % b != 0) continue;
                mpz_class d = e[0] / b;
                // (y^2 + a y + b)(y^2 + c y + d): a+c = e3, ac = e2-b-d, ad+bc = e1
                mpz_class s = e[3], prod = e[2] - b - d;
                mpz_class disc = s * s - 4 * prod;
                if (disc < 0) continue;
                mpz_class rt;
                mpz_sqrt(rt.get_mpz_t(), disc.get_mpz_t());
                if (rt * rt != disc) continue;
                for (int pick : {0, 1}) {
                    mpz_class twice_a = pick ? mpz_class(s - rt) : mpz_class(s + rt);
                    if (twice_a % 2 != 0) continue;
                    mpz_class a = twice_a / 2, c = s - a;
                    if (a * d + b * c == e[1]) return false;
                }
            }
        return true;
    }
    throw std::logic_error("poly_irreducible: degree too large to certify");
}

struct Atom {
    Representation rep;
    std::vector<RatMatrix> inclusion;  // blocks into the root representation
    int end_dim = 0;
};

bool try_fitting_split(const Representation& x, const RepMorphism& cand, SubquotientResult& ker_out,
                       SubquotientResult& im_out) {
    int nmax = 0;
    for (int d : x.dims) nmax = std::max(nmax, d);
    RepMorphism p = morphism_power(x, cand, std::max(1, nmax));
    SubquotientResult k = kernel_subrep(x, x, p);
    long long kd = total_dim(k.rep);
    if (kd == 0 || kd == total_dim(x)) return false;
    SubquotientResult i = image_subrep(x, x, p);
    ker_out = std::move(k);
    im_out = std::move(i);
    return true;
}

// Certify End(X)/rad is a (commutative) field; throws when it cannot decide.
bool certify_local_by_field(const Representation& x, const std::vector<RepMorphism>& endos,
                            const std::vector<RepMorphism>& rad) {
    // Coordinates on End via flattening; pick a complement basis of rad.
    SpanTester span;
    for (const auto& r : rad) span.add(flatten_morphism(r));
    std::vector<RepMorphism> bar;
    for (const auto& e : endos)
        if (span.add(flatten_morphism(e))) bar.push_back(e);
    const int m = static_cast<int>(bar.size());
    // Coordinates of an element modulo rad, in the bar basis.
    auto coords_mod_rad = [&](const RepMorphism& f) {
        RatMatrix sys(static_cast<int>(flatten_morphism(f).size()), m + static_cast<int>(rad.size()));
        std::vector<Rat> fv = flatten_morphism(f);
        for (int j = 0; j < m; ++j) {
            auto bv = flatten_morphism(bar[j]);
            for (size_t i = 0; i < bv.size(); ++i) sys.at(static_cast<int>(i), j) = bv[i];
        }
        for (size_t j = 0; j < rad.size(); ++j) {
            auto rv = flatten_morphism(rad[j]);
            for (size_t i = 0; i < rv.size(); ++i) sys.at(static_cast<int>(i), m + static_cast<int>(j)) = rv[i];
        }
        auto sol = solve(sys, fv);
        if (!sol) throw std::logic_error("certify_local: product left the algebra");
        std::vector<Rat> c(m);
        for (int j = 0; j < m; ++j) c[j] = (*sol)[j];
        return c;
    };
    // Commutativity mod rad.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto ab = coords_mod_rad(compose(bar[i], bar[j]));
            auto ba = coords_mod_rad(compose(bar[j], bar[i]));
            if (ab != ba) throw std::logic_error("decompose: noncommutative semisimple quotient, cannot certify");
        }
    // Structure matrices of left multiplication in the bar basis.
    auto left_mult = [&](const std::vector<Rat>& a) {
        RatMatrix lm(m, m);
        for (int j = 0; j < m; ++j) {
            RepMorphism aj = zero_morphism(x, x);
            for (int i = 0; i < m; ++i)
                if (a[i] != 0) aj = morphism_add(aj, morphism_scale(a[i], compose(bar[j], bar[i])));
            auto c = coords_mod_rad(aj);
            for (int i = 0; i < m; ++i) lm.at(i, j) = c[i];
        }
        return lm;
    };
    // Look for a primitive element with irreducible minimal polynomial.
    std::vector<std::vector<Rat>> trial;
    for (int i = 0; i < m; ++i) {
        std::vector<Rat> a(m);
        a[i] = 1;
        trial.push_back(a);
    }
    for (int k = 1; k <= 4; ++k) {
        std::vector<Rat> a(m);
        for (int i = 0; i < m; ++i) a[i] = 1 + i * k;
        trial.push_back(a);
    }
    for (const auto& a : trial) {
        auto mp = minimal_polynomial(left_mult(a));
        if (static_cast<int>(mp.size()) - 1 == m && monic_poly_irreducible(mp)) return true;
    }
    throw std::logic_error("decompose: unable to certify indecomposability");
}

void split_atoms(const Representation& x, const std::vector<RatMatrix>& incl, std::vector<Atom>& atoms) {
    if (is_zero_rep(x)) return;
    auto endos = hom_basis(x, x);
    if (endos.size() == 1) {
        atoms.push_back({x, incl, 1});
        return;
    }
    auto rad = radical_endo(x, endos);
    if (endos.size() - rad.size() == 1) {
        atoms.push_back({x, incl, static_cast<int>(endos.size())});
        return;
    }
    // Candidate endomorphisms for a Fitting split.
    std::vector<RepMorphism> cands;
    for (const auto& e : endos) cands.push_back(e);
    for (size_t i = 0; i < endos.size(); ++i)
        for (size_t j = i + 1; j < endos.size(); ++j) {
            cands.push_back(morphism_add(endos[i], endos[j]));
            cands.push_back(morphism_add(endos[i], morphism_scale(-1, endos[j])));
        }
    auto recurse = [&](const SubquotientResult& part) {
        std::vector<RatMatrix> sub;
        for (int v = 0; v < x.quiver.n; ++v) sub.push_back(mat_mul(incl[v], part.map.blocks[v]));
        split_atoms(part.rep, sub, atoms);
    };
    for (const auto& c : cands) {
        SubquotientResult k, i;
        if (try_fitting_split(x, c, k, i)) {
            recurse(k);
            recurse(i);
            return;
        }
    }
    // Rational eigenvalue shifts.
    RepMorphism id = identity_morphism(x);
    for (const auto& e : endos) {
        auto mp = minimal_polynomial(total_matrix(x, e));
        for (const auto& lam : rational_roots(mp)) {
            RepMorphism shifted = morphism_add(e, morphism_scale(-lam, id));
            SubquotientResult k, i;
            if (try_fitting_split(x, shifted, k, i)) {
                recurse(k);
                recurse(i);
                return;
            }
        }
    }
    if (certify_local_by_field(x, endos, rad)) {
        atoms.push_back({x, incl, static_cast<int>(endos.size())});
        return;
    }
    throw std::logic_error("decompose: no split found and no certificate");
}

bool indec_pair_isomorphic(const Representation& x, const Representation& y) {
    if (dim_vector(x) != dim_vector(y)) return false;
    if (rep_equal(x, y)) return true;
    auto fwd = hom_basis(x, y);
    if (fwd.empty()) return false;
    // Fast path: some basis element already invertible.
    for (const auto& f : fwd) {
        bool inv = true;
        for (const auto& b : f.blocks)
            if (!is_invertible(b)) {
                inv = false;
                break;
            }
        if (inv) return true;
    }
    auto bwd = hom_basis(y, x);
    if (bwd.empty()) return false;
    // X ~ Y iff some composite Y->X->Y ... X->Y->X avoids the radical of the
    // local ring End(X).
    auto endX = hom_basis(x, x);
    auto rad = radical_endo(x, endX);
    SpanTester radspan;
    for (const auto& r : rad) radspan.add(flatten_morphism(r));
    for (const auto& f : fwd)
        for (const auto& g : bwd) {
            RepMorphism comp = compose(f, g);  // X -> Y -> X
            if (!radspan.contains(flatten_morphism(comp))) return true;
        }
    return false;
}

}  // namespace

DecompositionReport decompose(const Representation& x) {
    validate_representation(x);
    DecompositionReport rep;
    std::vector<Atom> atoms;
    std::vector<RatMatrix> id;
    for (int v = 0; v < x.quiver.n; ++v) id.push_back(RatMatrix::identity(x.dims[v]));
    split_atoms(x, id, atoms);
    // Witness change of basis: stacked inclusions must be invertible.
    rep.basis.clear();
    for (int v = 0; v < x.quiver.n; ++v) {
        RatMatrix b(x.dims[v], 0);
        for (const auto& a : atoms) b = hstack(b, a.inclusion[v]);
        if (!is_invertible(b) && x.dims[v] > 0) throw std::logic_error("decompose: witness basis not invertible");
        rep.basis.push_back(std::move(b));
    }
    std::vector<bool> used(atoms.size(), false);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        int mult = 1;
        for (size_t j = i + 1; j < atoms.size(); ++j) {
            if (used[j]) continue;
            if (indec_pair_isomorphic(atoms[i].rep, atoms[j].rep)) {
                used[j] = true;
                ++mult;
            }
        }
        rep.summands.push_back(atoms[i].rep);
        rep.multiplicities.push_back(mult);
        rep.end_dims.push_back(atoms[i].end_dim);
    }
    return rep;
}

bool is_indecomposable(const Representation& x) {
    if (is_zero_rep(x)) return false;
    if (hom_dim(x, x) == 1) return true;
    auto report = decompose(x);
    return report.summands.size() == 1 && report.multiplicities[0] == 1;
}

bool is_isomorphic(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver)) throw std::invalid_argument("is_isomorphic: quiver mismatch");
    if (dim_vector(x) != dim_vector(y)) return false;
    if (is_zero_rep(x)) return true;
    if (rep_equal(x, y)) return true;
    auto dx = decompose(x);
    auto dy = decompose(y);
    if (dx.summands.size() != dy.summands.size()) return false;
    std::vector<bool> used(dy.summands.size(), false);
    for (size_t i = 0; i < dx.summands.size(); ++i) {
        bool matched = false;
        for (size_t j = 0; j < dy.summands.size(); ++j) {
            if (used[j] || dx.multiplicities[i] != dy.multiplicities[j]) continue;
            if (indec_pair_isomorphic(dx.summands[i], dy.summands[j])) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

namespace {

// Representatives of Hom(X, U_j) modulo maps factoring through the radical
// of add(U_1 + ... + U_m); these stack to the minimal left approximation.
struct ApproxPieces {
    std::vector<Representation> targets;       // U_j, pairwise non-isomorphic
    std::vector<std::vector<RepMorphism>> reps;  // chosen representatives per j
};

std::vector<Representation> indec_targets(const std::vector<Representation>& t) {
    std::vector<Representation> out;
    for (const auto& m : t) {
        if (is_zero_rep(m)) continue;
        if (hom_dim(m, m) == 1) {
            out.push_back(m);
            continue;
        }
        auto d = decompose(m);
        for (const auto& s : d.summands) out.push_back(s);
    }
    std::vector<Representation> dedup;
    for (const auto& m : out) {
        bool dup = false;
        for (const auto& u : dedup)
            if (indec_pair_isomorphic(m, u)) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(m);
    }
    return dedup;
}

}  // namespace

LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& t) {
    std::vector<Representation> u = indec_targets(t);
    const size_t m = u.size();
    std::vector<std::vector<RepMorphism>> homs(m);
    for (size_t j = 0; j < m; ++j) homs[j] = hom_basis(x, u[j]);
    std::vector<std::vector<RepMorphism>> chosen(m);
    for (size_t j = 0; j < m; ++j) {
        if (homs[j].empty()) continue;
        SpanTester span;
        for (size_t k = 0; k < m; ++k) {
            if (homs[k].empty()) continue;
            std::vector<RepMorphism> rads;
            if (k == j)
                rads = radical_endo(u[j], hom_basis(u[j], u[j]));
            else
                rads = hom_basis(u[k], u[j]);
            for (const auto& chi : homs[k])
                for (const auto& psi : rads) span.add(flatten_morphism(compose(chi, psi)));
        }
        for (const auto& h : homs[j])
            if (span.add(flatten_morphism(h))) chosen[j].push_back(h);
    }
    LeftApproximation res;
    std::vector<Representation> parts;
    std::vector<const RepMorphism*> comps;
    for (size_t j = 0; j < m; ++j)
        for (const auto& h : chosen[j]) {
            parts.push_back(u[j]);
            comps.push_back(&h);
        }
    if (parts.empty()) {
        res.b = zero_rep(x.quiver);
        res.f = zero_morphism(x, res.b);
    } else {
        res.b = direct_sum(parts);
        RepMorphism f;
        for (int v = 0; v < x.quiver.n; ++v) {
            RatMatrix blk(0, x.dims[v]);
            for (const auto* c : comps) blk = vstack(blk, c->blocks[v]);
            f.blocks.push_back(std::move(blk));
        }
        res.f = std::move(f);
    }
    res.mono = is_mono(res.f);
    res.coker = cokernel_rep(x, res.b, res.f).rep;
    return res;
}

RightApproximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& t) {
    std::vector<Representation> u = indec_targets(t);
    const size_t m = u.size();
    std::vector<std::vector<RepMorphism>> homs(m);
    for (size_t j = 0; j < m; ++j) homs[j] = hom_basis(u[j], x);
    std::vector<std::vector<RepMorphism>> chosen(m);
    for (size_t j = 0; j < m; ++j) {
        if (homs[j].empty()) continue;
        SpanTester span;
        for (size_t k = 0; k < m; ++k) {
            if (homs[k].empty()) continue;
            std::vector<RepMorphism> rads;
            if (k == j)
                rads = radical_endo(u[j], hom_basis(u[j], u[j]));
            else
                rads = hom_basis(u[j], u[k]);
            for (const auto& chi : homs[k])
                for (const auto& psi : rads) span.add(flatten_morphism(compose(psi, chi)));
        }
        for (const auto& h : homs[j])
            if (span.add(flatten_morphism(h))) chosen[j].push_back(h);
    }
    RightApproximation res;
    std::vector<Representation> parts;
    std::vector<const RepMorphism*> comps;
    for (size_t j = 0; j < m; ++j)
        for (const auto& h : chosen[j]) {
            parts.push_back(u[j]);
            comps.push_back(&h);
        }
    if (parts.empty()) {
        res.b = zero_rep(x.quiver);
        res.g = zero_morphism(res.b, x);
    } else {
        res.b = direct_sum(parts);
        RepMorphism g;
        for (int v = 0; v < x.quiver.n; ++v) {
            RatMatrix blk(x.dims[v], 0);
            for (const auto* c : comps) blk = hstack(blk, c->blocks[v]);
            g.blocks.push_back(std::move(blk));
        }
        res.g = std::move(g);
    }
    res.epi = is_epi(x, res.g);
    res.ker = kernel_subrep(res.b, x, res.g).rep;
    return res;
}

bool exists_mono(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver)) throw std::invalid_argument("exists_mono: quiver mismatch");
    if (is_zero_rep(x)) return true;
    for (int v = 0; v < x.quiver.n; ++v)
        if (x.dims[v] > y.dims[v]) return false;
    auto homs = hom_basis(x, y);
    const int d = static_cast<int>(homs.size());
    if (d == 0) return false;
    // Grid large enough that a polynomial vanishing on all of it is zero:
    // the full-rank locus is cut out by a polynomial of per-variable degree
    // at most 2 * total_dim(x).
    const long long deg = 2 * total_dim(x);
    double size = 1;
    for (int i = 0; i < d; ++i) size *= static_cast<double>(deg + 1);
    if (size > 4e6) throw std::logic_error("exists_mono: search grid too large");
    std::vector<long long> idx(d, 0);
    while (true) {
        bool all_zero = true;
        for (long long v : idx)
            if (v) all_zero = false;
        if (!all_zero) {
            RepMorphism f = zero_morphism(x, y);
            for (int i = 0; i < d; ++i)
                if (idx[i]) f = morphism_add(f, morphism_scale(Rat(static_cast<long>(idx[i])), homs[i]));
            if (is_mono(f)) return true;
        }
        int pos = 0;
        while (pos < d) {
            if (++idx[pos] <= deg) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == d) return false;
    }
}

namespace {

RatMatrix path_action(const Representation& m, const std::vector<int>& arrow_ids, int start_vertex) {
    RatMatrix act = RatMatrix::identity(m.dims[start_vertex - 1]);
    for (int a : arrow_ids) act = mat_mul(m.maps[a], act);
    return act;
}

}  // namespace

std::vector<Representation> extension_middle_terms(const Representation& z, const Representation& x) {
    if (!(z.quiver == x.quiver)) throw std::invalid_argument("extension_middle_terms: quiver mismatch");
    const Quiver& q = z.quiver;
    std::vector<Representation> out;
    out.push_back(direct_sum({x, z}));
    int e = ext1_dim(z, x);
    if (e == 0 || is_zero_rep(z) || is_zero_rep(x)) return out;

    // Canonical projective presentation of z:
    //   0 -> (+)_{a:u->w} P_w ^ z_u -> (+)_v P_v ^ z_v -> z -> 0
    std::vector<Representation> p0_parts;
    std::vector<int> p0_part_vertex;
    for (int v = 1; v <= q.n; ++v)
        for (int c = 0; c < z.dims[v - 1]; ++c) {
            p0_parts.push_back(projective(q, v));
            p0_part_vertex.push_back(v);
        }
    Representation p0 = direct_sum(p0_parts);
    // Offsets of each part inside P0, per vertex.
    std::vector<std::vector<int>> p0_off(p0_parts.size(), std::vector<int>(q.n, 0));
    {
        std::vector<int> run(q.n, 0);
        for (size_t k = 0; k < p0_parts.size(); ++k) {
            for (int v = 0; v < q.n; ++v) {
                p0_off[k][v] = run[v];
                run[v] += p0_parts[k].dims[v];
            }
        }
    }
    auto morphism_from_generator = [&](int gen_vertex, const Representation& target, const std::vector<Rat>& image) {
        // Determined on the path basis of P_{gen_vertex} by the path action on `image`.
        Representation p = projective(q, gen_vertex);
        auto bucket = projective_path_basis(q, gen_vertex);
        RepMorphism f;
        for (int v = 1; v <= q.n; ++v) {
            RatMatrix blk(target.dims[v - 1], p.dims[v - 1]);
            for (size_t k = 0; k < bucket[v].size(); ++k) {
                RatMatrix act = path_action(target, bucket[v][k], gen_vertex);
                for (int r = 0; r < blk.rows(); ++r) {
                    Rat acc = 0;
                    for (int c = 0; c < act.cols(); ++c)
                        if (act.at(r, c) != 0 && image[c] != 0) acc += act.at(r, c) * image[c];
                    blk.at(r, static_cast<int>(k)) = acc;
                }
            }
            f.blocks.push_back(std::move(blk));
        }
        return f;
    };

    // eps: P0 -> z.
    RepMorphism eps = zero_morphism(p0, z);
    {
        std::vector<RepMorphism> part_maps;
        size_t k = 0;
        for (int v = 1; v <= q.n; ++v)
            for (int c = 0; c < z.dims[v - 1]; ++c, ++k) {
                std::vector<Rat> img(z.dims[v - 1]);
                img[c] = 1;
                part_maps.push_back(morphism_from_generator(v, z, img));
            }
        for (int v = 0; v < q.n; ++v) {
            RatMatrix blk(z.dims[v], 0);
            for (const auto& pm : part_maps) blk = hstack(blk, pm.blocks[v]);
            eps.blocks[v] = std::move(blk);
        }
    }

    // d: P1 -> P0.
    std::vector<Representation> p1_parts;
    std::vector<RepMorphism> d_parts;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [uu, ww] = q.arrows[a];
        for (int c = 0; c < z.dims[uu - 1]; ++c) {
            p1_parts.push_back(projective(q, ww));
            // Generator image in (P0)_w: the length-one path `a` inside the
            // copy (u, c), minus the trivial paths of copies (w, *) weighted
            // by column c of the arrow map.
            std::vector<Rat> img(p0.dims[ww - 1], 0);
            {
                size_t k = 0;
                for (int v = 1; v <= q.n; ++v)
                    for (int cc = 0; cc < z.dims[v - 1]; ++cc, ++k) {
                        if (v == uu && cc == c) {
                            auto bucket = projective_path_basis(q, v);
                            std::vector<int> want{static_cast<int>(a)};
                            for (size_t t = 0; t < bucket[ww].size(); ++t)
                                if (bucket[ww][t] == want) img[p0_off[k][ww - 1] + static_cast<int>(t)] += 1;
                        }
                        if (v == ww && z.maps[a].at(cc, c) != 0) {
                            auto bucket = projective_path_basis(q, v);
                            for (size_t t = 0; t < bucket[ww].size(); ++t)
                                if (bucket[ww][t].empty()) img[p0_off[k][ww - 1] + static_cast<int>(t)] -= z.maps[a].at(cc, c);
                        }
                    }
            }
            d_parts.push_back(morphism_from_generator(ww, p0, img));
        }
    }
    Representation p1 = p1_parts.empty() ? zero_rep(q) : direct_sum(p1_parts);
    RepMorphism dmor = zero_morphism(p1, p0);
    for (int v = 0; v < q.n; ++v) {
        RatMatrix blk(p0.dims[v], 0);
        for (const auto& pm : d_parts) blk = hstack(blk, pm.blocks[v]);
        dmor.blocks[v] = std::move(blk);
    }

    // Ext classes = Hom(P1, X) modulo precomposition with d.
    auto hom_p1x = hom_basis(p1, x);
    SpanTester image_span;
    for (const auto& phi : hom_basis(p0, x)) image_span.add(flatten_morphism(compose(dmor, phi)));
    std::vector<RepMorphism> xi;
    for (const auto& h : hom_p1x)
        if (image_span.add(flatten_morphism(h))) xi.push_back(h);
    if (static_cast<int>(xi.size()) != e) throw std::logic_error("extension_middle_terms: class count mismatch");

    // Realize a grid of classes as pushouts along d.
    std::vector<std::vector<long long>> combos;
    if (e == 1) {
        combos.push_back({1});
    } else {
        long long reach = (e <= 3) ? 2 : 1;
        std::vector<long long> idx(e, 0);
        while (true) {
            bool nz = std::any_of(idx.begin(), idx.end(), [](long long t) { return t != 0; });
            if (nz) combos.push_back(idx);
            int pos = 0;
            while (pos < e) {
                if (++idx[pos] <= reach) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == e) break;
        }
    }
    Representation p0x = direct_sum({p0, x});
    for (const auto& combo : combos) {
        RepMorphism g = zero_morphism(p1, x);
        for (int i = 0; i < e; ++i)
            if (combo[i]) g = morphism_add(g, morphism_scale(Rat(static_cast<long>(combo[i])), xi[i]));
        RepMorphism stacked;
        for (int v = 0; v < q.n; ++v) stacked.blocks.push_back(vstack(dmor.blocks[v], mat_scale(-1, g.blocks[v])));
        Representation mid = cokernel_rep(p1, p0x, stacked).rep;
        if (total_dim(mid) != total_dim(z) + total_dim(x)) throw std::logic_error("extension_middle_terms: size mismatch");
        out.push_back(std::move(mid));
    }
    return out;
}

}  // namespace sq
