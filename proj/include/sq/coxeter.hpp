#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sq/quiver.hpp"

namespace sq {

// Integer vector in the simple-root basis of the Grothendieck group.
using RootVector = std::vector<long long>;
// Word in the generators s_1..s_n, as a sequence of vertex indices.
using Word = std::vector<int>;

RootVector unit_root(int n, int i);
bool root_nonnegative(const RootVector& v);

// v_i := -v_i + sum_{j != i} m_ij v_j, other coordinates unchanged.
RootVector simple_reflection(const Quiver& q, int i, const RootVector& v);

// Action on dual-basis coordinates: coordinate i is negated, coordinate
// t (t != i) gains m_ti * v_i.
RootVector contragradient_reflection(const Quiver& q, int i, const RootVector& v);

// Root-positivity criterion: every partial root R_{u_1}..R_{u_{j-1}}(e_{u_j})
// must stay componentwise nonnegative.
bool is_reduced(const Quiver& q, const Word& w);

// Every vertex exactly once, and sources precede targets along every arrow.
bool is_admissible_coxeter(const Quiver& q, const Word& c);

// Group-element arithmetic on reduced words (exchange-condition deletion).
bool left_descent(const Quiver& q, const Word& reduced, int i);
Word left_multiply(const Quiver& q, const Word& reduced, int i);

// Matrix of the element in the geometric representation; row-major n*n.
std::vector<long long> element_matrix(const Quiver& q, const Word& w);

struct SortableDecomposition {
    std::vector<std::vector<int>> blocks;  // each an ordered subword of c
};

// Greedy peel of left descents scanned in c-order; succeeds iff the group
// element of w admits a nested-support block expression.  Throws if w is not
// reduced or c is not an admissible Coxeter word.
std::optional<SortableDecomposition> sortable_decompose(const Quiver& q, const Word& c, const Word& w);

Word concat_blocks(const SortableDecomposition& d);

// The l vectors R_{u_1}..R_{u_{j-1}}(e_{u_j}); throws if w is not reduced.
std::vector<RootVector> layer_roots(const Quiver& q, const Word& w);

Word parse_word(const std::string& text, int n);
std::string word_str(const Word& w);

}  // namespace sq
