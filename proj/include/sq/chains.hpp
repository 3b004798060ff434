#pragma once

#include <optional>

#include "sq/functors.hpp"
#include "sq/rep.hpp"

namespace sq {

enum class ChainStatus { ReducedSortable, SortableShapeNonreduced, Failed };

// Module series attached to a nested-support block word.  All module
// computations run over the reversed quiver: that is the orientation on
// which the series starts from projectives and the later-to-earlier Hom
// spaces vanish.
struct ChainResult {
    ChainStatus status = ChainStatus::Failed;
    Quiver module_quiver;                  // reversed base quiver
    std::vector<Representation> modules;   // padded to module_quiver
    std::vector<RootVector> dim_vectors;
    // t-chain: monomorphism flags of the approximation maps (true for the
    // initial projective steps); co-chain: epimorphism flags.
    std::vector<bool> step_flags;
    std::vector<std::vector<int>> blocks;  // literal block split of the word
};

// Reflection-functor series: simple at the first letter, then one source
// reflection per preceding letter.
ChainResult u_chain(const Quiver& q, const Word& c, const Word& w);

// Approximation series: projectives for the first block, then cokernels of
// minimal left approximations into the members strictly between consecutive
// occurrences of a letter.
ChainResult t_chain(const Quiver& q, const Word& c, const Word& w);

// Dual series from injectives and minimal right approximations (kernels).
// The input word is read right-to-left: its reverse must be in nested-block
// form with respect to the reversed Coxeter word.
ChainResult co_t_chain(const Quiver& q, const Word& c, const Word& w);
ChainResult co_u_chain(const Quiver& q, const Word& c, const Word& w);

bool chains_isomorphic(const ChainResult& a, const ChainResult& b);

// Chain members at the last occurrence of each support vertex (ascending
// vertex order); a tilting module over the support.
std::vector<Representation> t_w(const Quiver& q, const Word& c, const Word& w);

struct EnumerationResult {
    std::vector<Representation> modules;  // ordered by (total dim, lex dim vector)
    bool complete = false;                // certified complete (Dynkin support)
};

// Indecomposables of total dimension <= bound lying in Sub(+T) / Fac(+T).
// Candidates are reflection-functor images of simples; complete for Dynkin
// support, flagged otherwise.
EnumerationResult sub_enumerate(const std::vector<Representation>& t, long long dim_bound);
EnumerationResult fac_enumerate(const std::vector<Representation>& t, long long dim_bound);

// The unique nested-block word whose chain realizes the given basic tilting
// module, found by bounded search; nullopt when the search space at the
// enumerated size contains no match.
std::optional<Word> recover_word(const Quiver& q, const Word& c, const std::vector<Representation>& t,
                                 long long dim_bound);

struct CountReport {
    long long sortable_count = 0;
    long long torsionfree_count = 0;
    bool matches = false;
};

// Counts sortable elements against subcategories closed under submodules,
// extensions and summands.  Requires a Dynkin quiver.
CountReport count_bijection(const Quiver& q, const Word& c);

enum class WordClass { Monotilting, TiltingNotMonotilting, NotTilting };

struct ExplorerStep {
    int vertex = 0;
    bool left = true;        // which approximation produced the exchange
    bool map_ok = false;     // mono (left) / epi (right)
    Representation new_summand;
};

struct ExplorerReport {
    Word word;
    Quiver module_quiver;
    std::vector<ExplorerStep> steps;
    WordClass classification = WordClass::NotTilting;
    std::optional<std::vector<Representation>> final_tilting;  // by vertex
};

// Summand exchange walk: start from the projectives, then for each letter
// past the leading Coxeter element replace the summand in that slot by the
// cokernel of a minimal left approximation when it is mono, else by the
// kernel of a minimal right approximation when it is epi.
ExplorerReport explore_word(const Quiver& q, const Word& w);

Representation dual_rep(const Representation& x);

}  // namespace sq
