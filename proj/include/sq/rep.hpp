#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sq/coxeter.hpp"
#include "sq/matrix.hpp"
#include "sq/quiver.hpp"

namespace sq {

// Quiver representation: one space per vertex, one exact rational matrix per
// arrow carrying column vectors at the source to the target.
struct Representation {
    Quiver quiver;
    std::vector<int> dims;        // indexed by vertex-1
    std::vector<RatMatrix> maps;  // maps[a]: dims[t(a)] x dims[s(a)]
};

void validate_representation(const Representation& x);

Representation zero_rep(const Quiver& q);
Representation simple_rep(const Quiver& q, int i);

// Indecomposable projective at i: basis at v = paths i~>v, ordered
// lexicographically by vertex sequence; arrow maps are path concatenation.
Representation projective(const Quiver& q, int i);
// The path bases used by projective(): per vertex (1-based), the sorted list
// of paths from i as arrow-id sequences.
std::vector<std::vector<std::vector<int>>> projective_path_basis(const Quiver& q, int i);
// Dual: basis at v indexed by paths v~>i.
Representation injective(const Quiver& q, int i);

RootVector dim_vector(const Representation& x);
long long total_dim(const Representation& x);
bool is_zero_rep(const Representation& x);
std::set<int> support_of(const Representation& x);
bool rep_equal(const Representation& a, const Representation& b);

// Direct sum in the given order, with block-diagonal maps.
Representation direct_sum(const std::vector<Representation>& parts);

// Re-tag a representation over an arrow-subset quiver (same vertex set) to
// the full quiver; dropped arrows must touch a zero space.
Representation pad_representation(const Representation& x, const Quiver& full);

// Per-vertex blocks of a morphism; source/target passed alongside.
struct RepMorphism {
    std::vector<RatMatrix> blocks;  // blocks[v-1]: Y_v x X_v
};

bool morphism_valid(const Representation& x, const Representation& y, const RepMorphism& f);
RepMorphism zero_morphism(const Representation& x, const Representation& y);
RepMorphism identity_morphism(const Representation& x);
RepMorphism compose(const RepMorphism& f, const RepMorphism& g);  // g after f
RepMorphism morphism_add(const RepMorphism& f, const RepMorphism& g);
RepMorphism morphism_scale(const Rat& c, const RepMorphism& f);
bool is_mono(const RepMorphism& f);
bool is_epi(const Representation& y, const RepMorphism& f);
bool morphism_is_zero(const RepMorphism& f);

// Basis of Hom(X, Y) in a deterministic order.  Throws on quiver mismatch.
std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y);
int hom_dim(const Representation& x, const Representation& y);

// sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
long long euler_form(const Quiver& q, const RootVector& a, const RootVector& b);

// dim Hom(X,Y) - <dim X, dim Y>; exact for representations of acyclic quivers.
int ext1_dim(const Representation& x, const Representation& y);

struct SubquotientResult {
    Representation rep;
    RepMorphism map;  // inclusion (kernel/image) or projection (cokernel)
};

SubquotientResult kernel_subrep(const Representation& x, const Representation& y, const RepMorphism& f);
SubquotientResult image_subrep(const Representation& x, const Representation& y, const RepMorphism& f);
SubquotientResult cokernel_rep(const Representation& x, const Representation& y, const RepMorphism& f);

// Radical of End(X) via the characteristic-zero trace form; returns a basis
// expressed as morphisms.
std::vector<RepMorphism> radical_endo(const Representation& x, const std::vector<RepMorphism>& endos);

struct DecompositionReport {
    std::vector<Representation> summands;  // pairwise non-isomorphic
    std::vector<int> multiplicities;
    std::vector<int> end_dims;          // dim End of one copy of each summand
    std::vector<RatMatrix> basis;       // per-vertex change of basis, columns grouped by atom
};

// Krull-Schmidt decomposition with certified indecomposable summands.
DecompositionReport decompose(const Representation& x);
bool is_indecomposable(const Representation& x);

bool is_isomorphic(const Representation& x, const Representation& y);

struct LeftApproximation {
    Representation b;
    RepMorphism f;  // X -> B
    bool mono = false;
    Representation coker;
};

struct RightApproximation {
    Representation b;
    RepMorphism g;  // B -> X
    bool epi = false;
    Representation ker;
};

// Minimal left add(T)-approximation of X, with cokernel.
LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& t);
// Minimal right add(T)-approximation of X, with kernel.
RightApproximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& t);

// X embeds in a finite direct sum of copies of T iff the universal map
// X -> T^{dim Hom(X,T)} is injective at every vertex.
bool in_sub_closure(const Representation& x, const Representation& t);
// Dual: trace map T^{dim Hom(T,X)} -> X surjective at every vertex.
bool in_fac_closure(const Representation& x, const Representation& t);

// Basic module with vanishing self-extensions and as many indecomposable
// summands as its support has vertices.
bool is_tilting(const std::vector<Representation>& t);

// Decides existence of a vertexwise-injective morphism X -> Y by exhausting
// a grid large enough to certify a negative answer.  Intended for small
// modules (finite-type enumeration).
bool exists_mono(const Representation& x, const Representation& y);

// Middle terms of extensions of z by x (z on top), realized through a
// projective presentation of z; includes the split extension.
std::vector<Representation> extension_middle_terms(const Representation& z, const Representation& x);

}  // namespace sq
