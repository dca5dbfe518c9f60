#include "arbor/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace arbor {

int Tree::vertex_index(const std::string& name) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
    if (it == vertices.end() || *it != name) return -1;
    return int(it - vertices.begin());
}

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

void Tree::validate() const {
    if (vertices.empty()) throw std::invalid_argument("tree: empty vertex set");
    if (!std::is_sorted(vertices.begin(), vertices.end()))
        throw std::invalid_argument("tree: vertices not sorted");
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("tree: duplicate vertex " + vertices[i]);
    if (edges.size() + 1 != vertices.size())
        throw std::invalid_argument("tree: edge count must be vertex count - 1");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= size() || v >= size() || u >= v)
            throw std::invalid_argument("tree: bad edge encoding");
    }
    // connectivity (acyclicity then follows from the edge count)
    std::vector<std::vector<int>> adj = adjacency();
    std::vector<bool> seen(vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = true; ++reached; stack.push_back(w); }
    }
    if (reached != vertices.size()) throw std::invalid_argument("tree: not connected");
}

Tree make_tree(std::vector<std::string> vertices,
               std::vector<std::pair<std::string, std::string>> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Tree t;
    t.vertices = std::move(vertices);
    for (auto& [a, b] : edges) {
        int u = t.vertex_index(a), v = t.vertex_index(b);
        if (u < 0 || v < 0) throw std::invalid_argument("tree: edge endpoint not a vertex");
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("tree: loop edge");
        t.edges.emplace_back(u, v);
    }
    std::sort(t.edges.begin(), t.edges.end());
    t.validate();
    return t;
}

std::vector<int> RootedTree::parents() const {
    std::vector<std::vector<int>> adj = tree.adjacency();
    std::vector<int> parent(tree.size(), -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (parent[w] == -2) { parent[w] = v; stack.push_back(w); }
    }
    return parent;
}

std::vector<int> RootedTree::depths() const {
    std::vector<int> parent = parents();
    std::vector<int> depth(tree.size(), -1);
    std::function<int(int)> rec = [&](int v) {
        if (depth[v] >= 0) return depth[v];
        if (parent[v] < 0) return depth[v] = 0;
        return depth[v] = rec(parent[v]) + 1;
    };
    for (int v = 0; v < tree.size(); ++v) rec(v);
    return depth;
}

bool RootedTree::above(int a, int b) const {
    std::vector<int> parent = parents();
    for (int v = a; v != -1; v = parent[v])
        if (v == b) return true;
    return false;
}

void RootedTree::validate() const {
    tree.validate();
    if (root < 0 || root >= tree.size())
        throw std::invalid_argument("rooted tree: root not a vertex");
}

RootedTree make_rooted(Tree t, const std::string& root_name) {
    RootedTree rt;
    rt.root = t.vertex_index(root_name);
    rt.tree = std::move(t);
    if (rt.root < 0) throw std::invalid_argument("rooted tree: unknown root " + root_name);
    return rt;
}

Tree path_tree(int n) {
    if (n < 1 || n > 26) throw std::invalid_argument("path_tree: size out of range");
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) verts.push_back(std::string(1, char('a' + i)));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(verts[i], verts[i + 1]);
    return make_tree(verts, edges);
}

namespace {

struct InlineNode {
    std::string name;
    std::vector<InlineNode> children;
};

InlineNode parse_node(const std::string& s, size_t& pos) {
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(unsigned(s[pos]))) ++pos; };
    skip_ws();
    InlineNode node;
    while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ',' &&
           !std::isspace(unsigned(s[pos])))
        node.name += s[pos++];
    if (node.name.empty())
        throw std::invalid_argument("tree notation: expected a vertex name at position " +
                                    std::to_string(pos));
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            node.children.push_back(parse_node(s, pos));
            skip_ws();
            if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
            if (pos < s.size() && s[pos] == ')') { ++pos; break; }
            throw std::invalid_argument("tree notation: expected ',' or ')' at position " +
                                        std::to_string(pos));
        }
    }
    return node;
}

}  // namespace

RootedTree parse_tree_inline(const std::string& text) {
    size_t pos = 0;
    InlineNode top = parse_node(text, pos);
    while (pos < text.size() && std::isspace(unsigned(text[pos]))) ++pos;
    if (pos != text.size())
        throw std::invalid_argument("tree notation: trailing input at position " +
                                    std::to_string(pos));
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    std::function<void(const InlineNode&)> walk = [&](const InlineNode& n) {
        verts.push_back(n.name);
        for (const auto& c : n.children) {
            edges.emplace_back(n.name, c.name);
            walk(c);
        }
    };
    walk(top);
    return make_rooted(make_tree(std::move(verts), std::move(edges)), top.name);
}

std::string tree_inline(const RootedTree& rt) {
    std::vector<int> parent = rt.parents();
    std::vector<std::vector<int>> children(rt.size());
    for (int v = 0; v < rt.size(); ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v);
    std::function<std::string(int)> rec = [&](int v) {
        std::string out = rt.tree.vertices[v];
        if (!children[v].empty()) {
            out += '(';
            for (size_t i = 0; i < children[v].size(); ++i) {
                if (i) out += ',';
                out += rec(children[v][i]);
            }
            out += ')';
        }
        return out;
    };
    return rec(rt.root);
}

std::vector<std::vector<int>> connected_subtrees(const Tree& t) {
    int n = t.size();
    if (n > 20) throw std::invalid_argument("connected_subtrees: tree too large");
    std::vector<std::vector<int>> adj = t.adjacency();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) { start = v; break; }
        unsigned seen = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if ((mask & (1u << w)) && !(seen & (1u << w))) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
        }
        if (seen != mask) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::pair<int, int>> induced_edges(const Tree& t, const std::vector<int>& verts) {
    std::vector<std::pair<int, int>> out;
    for (auto e : t.edges)
        if (std::binary_search(verts.begin(), verts.end(), e.first) &&
            std::binary_search(verts.begin(), verts.end(), e.second))
            out.push_back(e);
    return out;
}

namespace {

// Canonical code of a rooted tree: sorted list of child codes.
struct Shape {
    std::vector<Shape> children;
    std::string code() const {
        std::vector<std::string> cc;
        for (const auto& c : children) cc.push_back(c.code());
        std::sort(cc.begin(), cc.end());
        std::string out = "(";
        for (auto& s : cc) out += s;
        out += ")";
        return out;
    }
    int size() const {
        int n = 1;
        for (const auto& c : children) n += c.size();
        return n;
    }
};

void shapes_with(int n, std::vector<Shape>& out);

// all multisets of shapes with total size n, as sorted-by-code lists
void forests_with(int n, const std::string& min_code, std::vector<std::vector<Shape>>& out) {
    if (n == 0) {
        out.push_back({});
        return;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<Shape> roots;
        shapes_with(k, roots);
        for (auto& first : roots) {
            std::string c = first.code();
            if (c < min_code) continue;
            std::vector<std::vector<Shape>> rest;
            forests_with(n - k, c, rest);
            for (auto& tail : rest) {
                std::vector<Shape> forest;
                forest.push_back(first);
                for (auto& s : tail) forest.push_back(s);
                out.push_back(std::move(forest));
            }
        }
    }
}

void shapes_with(int n, std::vector<Shape>& out) {
    std::vector<std::vector<Shape>> forests;
    forests_with(n - 1, "", forests);
    for (auto& f : forests) out.push_back(Shape{std::move(f)});
}

}  // namespace

std::vector<RootedTree> all_rooted_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_rooted_trees: n must be positive");
    if (n > 26) throw std::invalid_argument("all_rooted_trees: n too large for letter names");
    std::vector<Shape> shapes;
    shapes_with(n, shapes);
    std::map<std::string, Shape> unique;
    for (auto& s : shapes) unique.emplace(s.code(), s);
    std::vector<RootedTree> out;
    for (auto& [code, shape] : unique) {
        std::vector<std::string> verts;
        std::vector<std::pair<std::string, std::string>> edges;
        int counter = 0;
        std::function<std::string(const Shape&)> walk = [&](const Shape& s) {
            std::string name(1, char('a' + counter++));
            verts.push_back(name);
            for (const auto& c : s.children) edges.emplace_back(name, walk(c));
            return name;
        };
        std::string root_name = walk(shape);
        out.push_back(make_rooted(make_tree(verts, edges), root_name));
    }
    return out;
}

}  // namespace arbor
