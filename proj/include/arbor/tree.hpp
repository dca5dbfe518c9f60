#pragma once

// Finite trees with string vertex labels.  Vertices are stored sorted
// lexicographically; all internal structure is index-based and deterministic.

#include <string>
#include <utility>
#include <vector>

namespace arbor {

struct Tree {
    std::vector<std::string> vertices;          // sorted, unique
    std::vector<std::pair<int, int>> edges;     // index pairs, first < second, sorted

    int size() const { return int(vertices.size()); }
    int vertex_index(const std::string& name) const;  // -1 if absent
    std::vector<std::vector<int>> adjacency() const;

    // Throws std::invalid_argument unless nonempty, connected and acyclic.
    void validate() const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
};

// Builds a tree from labelled edges (plus isolated vertices for the
// single-vertex case); normalizes vertex order and edge encoding.
Tree make_tree(std::vector<std::string> vertices,
               std::vector<std::pair<std::string, std::string>> edges);

struct RootedTree {
    Tree tree;
    int root = 0;

    int size() const { return tree.size(); }
    const std::string& root_name() const { return tree.vertices[root]; }

    // parent[v] = next vertex on the path from v toward the root (-1 at root)
    std::vector<int> parents() const;
    std::vector<int> depths() const;

    // true iff there is a directed path a -> b (edges point toward the root),
    // i.e. "a is above b"; reflexive.
    bool above(int a, int b) const;

    void validate() const;
};

RootedTree make_rooted(Tree t, const std::string& root_name);

// Path quiver A_n with vertices "a", "b", ... ("a2" -> a-b).
Tree path_tree(int n);

// Parses the inline notation "root(child1,child2(grand),...)"; names are
// nonempty runs of characters other than '(', ')', ',' and whitespace.
// The outermost node is the root.
RootedTree parse_tree_inline(const std::string& text);
std::string tree_inline(const RootedTree& rt);

// All connected subtrees, each a sorted list of vertex indices.  Deterministic
// order: by size, then lexicographically.
std::vector<std::vector<int>> connected_subtrees(const Tree& t);

// Edges of t with both endpoints in the (sorted) vertex subset.
std::vector<std::pair<int, int>> induced_edges(const Tree& t, const std::vector<int>& verts);

// All rooted trees with exactly n vertices, one per isomorphism class,
// with canonical vertex names "a", "b", ... assigned by a preorder walk.
std::vector<RootedTree> all_rooted_trees(int n);

}  // namespace arbor
