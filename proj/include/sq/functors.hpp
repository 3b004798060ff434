#pragma once

#include "sq/rep.hpp"

namespace sq {

struct ReflectionResult {
    Quiver quiver_after;          // input quiver with arrows at i reversed
    Representation rep_after;     // over quiver_after
    bool killed = false;          // nonzero input collapsed to zero
};

// Reflection at a source i of q: the new space at i is the cokernel of the
// assembled map X_i -> (+) X_{t(a)} over the arrows leaving i.  Kills the
// simple at i.  Arrows entering i are tolerated only where X vanishes.
ReflectionResult reflect_source(const Quiver& q, int i, const Representation& x);

// Reflection at a sink i of q: the new space at i is the kernel of the
// assembled map (+) X_{s(a)} -> X_i over the arrows entering i.  Kills the
// simple at i; inverse to reflect_source on modules without that summand.
ReflectionResult reflect_sink(const Quiver& q, int i, const Representation& x);

// Functorial transport along the reflections (used to check exactness).
RepMorphism reflect_source_map(const Quiver& q, int i, const Representation& x, const Representation& y,
                               const RepMorphism& f);
RepMorphism reflect_sink_map(const Quiver& q, int i, const Representation& x, const Representation& y,
                             const RepMorphism& f);

// Composite of source reflections along the admissible order of q
// (topological, ascending tie-break); kills injective summands and computes
// the inverse translate on the rest.
Representation coxeter_minus(const Quiver& q, const Representation& x);
// Dual composite of sink reflections; kills projective summands.
Representation coxeter_plus(const Quiver& q, const Representation& x);

}  // namespace sq
