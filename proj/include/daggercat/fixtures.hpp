#pragma once

#include "daggercat/fincat.hpp"

namespace daggercat::fixtures {

// Shared corpus used throughout the tests and the acceptance suite.

// Terminal category: one object "*", one morphism "1".
FinDaggerCategory one();

// One object, morphisms {1, s} with s.s = 1 and s dagger = s.
FinDaggerCategory z2();

// One object, morphisms {1, p} with p.p = p and p dagger = p.
FinDaggerCategory p2();

// Objects a, b with a unitary iso u: a -> b (ud = u dagger).
FinDaggerCategory unit_iso();

// One object, the 16 relations on a two-element set; composition is
// relational composition, dagger is the converse relation. Morphism ids
// are "r" followed by the row-major 0/1 matrix entries.
FinDaggerCategory rel2();

// Discrete category on n objects o0..o{n-1} (identities only).
FinDaggerCategory discrete(int n);

}  // namespace daggercat::fixtures
