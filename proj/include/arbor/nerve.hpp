#pragma once

// The arboreal singularity of a tree T as the order complex of the poset of
// correspondences on T.  Simplices are strictly increasing chains; the label
// of a simplex is its top chain element, and the union of open simplices with
// label p is the stratum of p, an open cell of dimension |T| - |R|.

#include "arbor/correspondence.hpp"
#include "arbor/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace arbor {

struct Nerve {
    Tree tree;
    std::vector<Correspondence> points;       // sorted; the poset Arb_T
    std::vector<QuotientTree> quotients;      // per point
    std::vector<std::vector<bool>> leq_mat;   // leq_mat[i][j] = (points[i] <= points[j])
    int trivial;                               // index of p_T

    // simplices grouped in one flat list; chains are ascending point indices
    std::vector<std::vector<int>> simplices;
    std::vector<int> label;                    // top element of the chain
    // codim-1 faces: (face simplex, incidence sign), position i = deleted entry
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::vector<std::vector<int>> cofaces;     // simplices having this one as a codim-1 face

    int order() const { return int(points.size()); }
    int simplex_count() const { return int(simplices.size()); }
    int dim(int simplex) const { return int(simplices[simplex].size()) - 1; }
    int top_dim() const;

    int point_index(const Correspondence& c) const;
    int simplex_index(const std::vector<int>& chain) const;

    // dimension of the stratum of p: |T| - |R|
    int stratum_dim(int point) const { return tree.size() - quotients[point].tree.size(); }

    std::map<int, long long> simplex_counts_by_dim() const;

    // quotient class of T-vertex v at point p (-1 if v is not in the middle tree)
    int class_at(int point, int v) const;
};

Nerve build_nerve(const Tree& t);

// A union of strata, stored as a sorted list of point indices.
struct StratumSubset {
    std::vector<int> strata;

    bool contains(int p) const;
};

// closed <=> downward closed under the poset order
bool is_closed(const Nerve& n, const StratumSubset& s);
// open <=> upward closed
bool is_open(const Nerve& n, const StratumSubset& s);

// Simplices whose label lies in the subset (the fine realization).
std::vector<int> simplices_of(const Nerve& n, const StratumSubset& s);

// The open part: simplices whose chain starts at the trivial correspondence.
// Its complement, the boundary, is the full subcomplex on the nontrivial
// correspondences.
struct OpenPart {
    std::vector<int> open_simplices;      // sorted
    std::vector<int> boundary_simplices;  // sorted
    std::vector<bool> in_open;            // per simplex
};
OpenPart open_part(const Nerve& n);

// The disc of a vertex: strata whose middle tree contains it.
StratumSubset disc(const Nerve& n, int vertex);
StratumSubset disc(const Nerve& n, const std::string& vertex);

// Support of the Hom sheaf between two projectives: strata where both vertices
// lie in the middle tree and q(a) is below q(b) in the induced rooted quotient.
StratumSubset hom_support(const Nerve& n, const RootedTree& rt, int a, int b);

// DOT export of the 1-skeleton with stratum labels.
std::string nerve_dot(const Nerve& n);

// Printable name of a point: the quotient's vertex names joined, e.g. the
// trivial correspondence on a-b prints "ab" and the edge contraction "(ab)".
std::string point_name(const Nerve& n, int point);

}  // namespace arbor
