#pragma once

// Correspondences of trees R <<- S `-> T in canonical form: the middle S is a
// connected subtree of T, and the quotient S ->> R is the contraction of a
// subset of S's edges.  Two correspondences on the same T are equal iff their
// (subtree, contracted edge set) pairs coincide, which resolves isomorphism
// classes by construction.

#include "arbor/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arbor {

struct Correspondence {
    std::vector<int> subtree;                    // sorted vertex indices of T
    std::vector<std::pair<int, int>> contracted; // sorted subset of induced edges

    friend bool operator==(const Correspondence& a, const Correspondence& b) {
        return a.subtree == b.subtree && a.contracted == b.contracted;
    }
    friend bool operator<(const Correspondence& a, const Correspondence& b) {
        if (a.subtree != b.subtree) return a.subtree < b.subtree;
        return a.contracted < b.contracted;
    }

    bool contains(int v) const;
    // component index of v under the contraction, -1 if v is not in S
    int quotient_class(int v, const Tree& t) const;
    int middle_size() const { return int(subtree.size()); }
};

// Validates against T: subtree connected and nonempty, contracted edges lie in
// the induced subtree.  Throws std::invalid_argument otherwise.
void validate_correspondence(const Tree& t, const Correspondence& c);

// The trivial correspondence p_T = (T <<- T = T).
Correspondence trivial_correspondence(const Tree& t);

// The quotient tree R materialized with canonical vertex names: a contracted
// class is named by the sorted list of its constituent atoms, "(xy)" for a
// class with atoms {x, y}; a one-atom class keeps its name.  Atoms of a plain
// tree are its vertex names; passing the atom table of a tree that is itself a
// quotient keeps names flat under iterated contraction, so ((ab)c) and (abc)
// cannot diverge.
struct QuotientTree {
    Tree tree;                       // R
    std::vector<int> class_of;       // indexed like c.subtree; image vertex in R
    std::vector<std::vector<int>> members;  // R vertex -> sorted T-vertex indices
    std::vector<std::vector<std::string>> atoms;  // R vertex -> sorted atom names
};
QuotientTree quotient_tree(const Tree& t, const Correspondence& c,
                           const std::vector<std::vector<std::string>>& t_atoms = {});

// All correspondences on T in canonical form, sorted; one per class.
std::vector<Correspondence> enumerate_correspondences(const Tree& t);

// Composition (P <<- Q `-> R) o (R <<- S `-> T): `outer` lives on the
// materialized quotient tree of `inner` (vertex names must match
// quotient_tree(t, inner, t_atoms)).  Throws std::invalid_argument if the
// trees mismatch.  Result is a canonical correspondence on T.
Correspondence compose(const Tree& t, const Correspondence& inner,
                       const Tree& inner_quotient, const Correspondence& outer,
                       const std::vector<std::vector<std::string>>& t_atoms = {});

// p1 <= p2 iff there is a (necessarily unique) q with p2 = q o p1.  When it
// exists, the witness q (a correspondence on quotient_tree(t, p1)) is
// reconstructed by factoring, then verified by composition.
std::optional<Correspondence> leq_witness(const Tree& t, const Correspondence& p1,
                                          const Correspondence& p2);
bool leq(const Tree& t, const Correspondence& p1, const Correspondence& p2);

// Roots induced by a root of T: the root of S is the vertex of S closest to
// the root of T; the root of R is its image.
struct InducedRoots {
    int middle_root;   // vertex index in T
    int quotient_root; // vertex index in the materialized R
};
InducedRoots induced_roots(const RootedTree& rt, const Correspondence& c);

// Rooted quotient tree (R with its induced root).
RootedTree rooted_quotient(const RootedTree& rt, const Correspondence& c);

}  // namespace arbor
