#include "arbor/correspondence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arbor {

bool Correspondence::contains(int v) const {
    return std::binary_search(subtree.begin(), subtree.end(), v);
}

int Correspondence::quotient_class(int v, const Tree& t) const {
    if (!contains(v)) return -1;
    QuotientTree q = quotient_tree(t, *this);
    auto it = std::lower_bound(subtree.begin(), subtree.end(), v);
    return q.class_of[it - subtree.begin()];
}

void validate_correspondence(const Tree& t, const Correspondence& c) {
    if (c.subtree.empty()) throw std::invalid_argument("correspondence: empty middle tree");
    if (!std::is_sorted(c.subtree.begin(), c.subtree.end()))
        throw std::invalid_argument("correspondence: subtree not sorted");
    for (int v : c.subtree)
        if (v < 0 || v >= t.size())
            throw std::invalid_argument("correspondence: subtree vertex out of range");
    std::vector<std::pair<int, int>> avail = induced_edges(t, c.subtree);
    if (int(avail.size()) + 1 != int(c.subtree.size()))
        throw std::invalid_argument("correspondence: middle is not a connected subtree");
    if (!std::is_sorted(c.contracted.begin(), c.contracted.end()))
        throw std::invalid_argument("correspondence: contracted edges not sorted");
    for (auto e : c.contracted)
        if (!std::binary_search(avail.begin(), avail.end(), e))
            throw std::invalid_argument("correspondence: contracted edge not in subtree");
}

Correspondence trivial_correspondence(const Tree& t) {
    Correspondence c;
    for (int v = 0; v < t.size(); ++v) c.subtree.push_back(v);
    return c;
}

QuotientTree quotient_tree(const Tree& t, const Correspondence& c,
                           const std::vector<std::vector<std::string>>& t_atoms) {
    if (!t_atoms.empty() && int(t_atoms.size()) != t.size())
        throw std::invalid_argument("quotient_tree: atom table size mismatch");
    auto atoms_of = [&](int v) -> std::vector<std::string> {
        if (t_atoms.empty()) return {t.vertices[v]};
        return t_atoms[v];
    };
    int m = int(c.subtree.size());
    // union-find over positions in c.subtree
    std::vector<int> uf(m);
    for (int i = 0; i < m; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto pos_of = [&](int v) {
        return int(std::lower_bound(c.subtree.begin(), c.subtree.end(), v) - c.subtree.begin());
    };
    for (auto [u, v] : c.contracted) {
        int a = find(pos_of(u)), b = find(pos_of(v));
        if (a != b) uf[a] = b;
    }
    // collect classes
    std::map<int, std::vector<int>> classes;  // representative -> member T-vertices
    for (int i = 0; i < m; ++i) classes[find(i)].push_back(c.subtree[i]);
    // canonical names; Tree will re-sort vertices, so build names first
    std::vector<std::string> names;
    std::map<int, std::string> name_of_rep;
    std::map<std::string, std::vector<std::string>> atoms_of_name;
    for (auto& [rep, mem] : classes) {
        std::sort(mem.begin(), mem.end());
        std::vector<std::string> atoms;
        for (int v : mem) {
            auto av = atoms_of(v);
            atoms.insert(atoms.end(), av.begin(), av.end());
        }
        std::sort(atoms.begin(), atoms.end());
        std::string nm;
        if (atoms.size() == 1) {
            nm = atoms[0];
        } else {
            nm = "(";
            for (const auto& a : atoms) nm += a;
            nm += ")";
        }
        name_of_rep[rep] = nm;
        atoms_of_name[nm] = atoms;
        names.push_back(nm);
    }
    // edges of R: non-contracted induced edges between distinct classes
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto e : induced_edges(t, c.subtree)) {
        if (std::binary_search(c.contracted.begin(), c.contracted.end(), e)) continue;
        int a = find(pos_of(e.first)), b = find(pos_of(e.second));
        edges.emplace_back(name_of_rep[a], name_of_rep[b]);
    }
    QuotientTree out;
    out.tree = make_tree(names, edges);
    out.class_of.resize(m);
    out.members.assign(out.tree.size(), {});
    out.atoms.assign(out.tree.size(), {});
    for (int i = 0; i < m; ++i) {
        int r = out.tree.vertex_index(name_of_rep[find(i)]);
        out.class_of[i] = r;
        out.members[r].push_back(c.subtree[i]);
    }
    for (int r = 0; r < out.tree.size(); ++r) out.atoms[r] = atoms_of_name.at(out.tree.vertices[r]);
    return out;
}

std::vector<Correspondence> enumerate_correspondences(const Tree& t) {
    std::vector<Correspondence> out;
    for (const auto& sub : connected_subtrees(t)) {
        std::vector<std::pair<int, int>> avail = induced_edges(t, sub);
        int k = int(avail.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Correspondence c;
            c.subtree = sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) c.contracted.push_back(avail[i]);
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Correspondence compose(const Tree& t, const Correspondence& inner,
                       const Tree& inner_quotient, const Correspondence& outer,
                       const std::vector<std::vector<std::string>>& t_atoms) {
    QuotientTree r = quotient_tree(t, inner, t_atoms);
    if (!(r.tree == inner_quotient))
        throw std::invalid_argument(
            "compose: outer correspondence does not live on the quotient of the inner one");
    validate_correspondence(inner_quotient, outer);
    // Fiber product: vertices of S whose class lies in the image of Q.
    Correspondence result;
    for (size_t i = 0; i < inner.subtree.size(); ++i) {
        if (outer.contains(r.class_of[i])) result.subtree.push_back(inner.subtree[i]);
    }
    // An edge of the fiber product is contracted iff its endpoints land in the
    // same class of the composite quotient S' ->> R ->> P.
    QuotientTree rq = quotient_tree(inner_quotient, outer);
    auto composite_class = [&](int v) {
        auto it = std::lower_bound(inner.subtree.begin(), inner.subtree.end(), v);
        int rv = r.class_of[it - inner.subtree.begin()];
        auto jt = std::lower_bound(outer.subtree.begin(), outer.subtree.end(), rv);
        return rq.class_of[jt - outer.subtree.begin()];
    };
    for (auto e : induced_edges(t, result.subtree)) {
        if (composite_class(e.first) == composite_class(e.second))
            result.contracted.push_back(e);
    }
    validate_correspondence(t, result);
    return result;
}

std::optional<Correspondence> leq_witness(const Tree& t, const Correspondence& p1,
                                          const Correspondence& p2) {
    validate_correspondence(t, p1);
    validate_correspondence(t, p2);
    // Reconstruction per the poset lemma: factor N = S2 through S1, take the
    // image under S1 ->> R1 as the middle of q, and read off q's contraction
    // from p2's.  Then confirm by composing.
    for (int v : p2.subtree)
        if (!p1.contains(v)) return std::nullopt;
    QuotientTree r1 = quotient_tree(t, p1);
    Correspondence q;
    {
        std::vector<bool> in_q(r1.tree.size(), false);
        for (int v : p2.subtree) {
            auto it = std::lower_bound(p1.subtree.begin(), p1.subtree.end(), v);
            in_q[r1.class_of[it - p1.subtree.begin()]] = true;
        }
        for (int i = 0; i < r1.tree.size(); ++i)
            if (in_q[i]) q.subtree.push_back(i);
    }
    // middle of q must be connected in R1 for q to be a correspondence
    if (int(induced_edges(r1.tree, q.subtree).size()) + 1 != int(q.subtree.size()))
        return std::nullopt;
    // q contracts an R1-edge iff some (equivalently, any) S2-edge inducing it is
    // contracted by p2
    QuotientTree r2 = quotient_tree(t, p2);
    auto class2 = [&](int v) {
        auto it = std::lower_bound(p2.subtree.begin(), p2.subtree.end(), v);
        return r2.class_of[it - p2.subtree.begin()];
    };
    auto class1 = [&](int v) {
        auto it = std::lower_bound(p1.subtree.begin(), p1.subtree.end(), v);
        return r1.class_of[it - p1.subtree.begin()];
    };
    for (auto e : induced_edges(r1.tree, q.subtree)) {
        // find an S2 edge joining the two classes; if none, q cannot exist
        bool found = false, contract = false;
        for (auto se : induced_edges(t, p2.subtree)) {
            int a = class1(se.first), b = class1(se.second);
            if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) {
                found = true;
                contract = class2(se.first) == class2(se.second);
                break;
            }
        }
        if (!found) return std::nullopt;
        if (contract) q.contracted.push_back(e);
    }
    std::sort(q.contracted.begin(), q.contracted.end());
    try {
        validate_correspondence(r1.tree, q);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (compose(t, p1, r1.tree, q) == p2) return q;
    return std::nullopt;
}

bool leq(const Tree& t, const Correspondence& p1, const Correspondence& p2) {
    return leq_witness(t, p1, p2).has_value();
}

InducedRoots induced_roots(const RootedTree& rt, const Correspondence& c) {
    std::vector<int> parent = rt.parents();
    // closest vertex of S to the root: walk up from any S vertex; the last S
    // vertex on the path to the root is the same for all of S (S is connected)
    int v = c.subtree.front();
    int best = v;
    for (int u = v; u != -1; u = parent[u])
        if (c.contains(u)) best = u;
    InducedRoots out;
    out.middle_root = best;
    QuotientTree q = quotient_tree(rt.tree, c);
    auto it = std::lower_bound(c.subtree.begin(), c.subtree.end(), best);
    out.quotient_root = q.class_of[it - c.subtree.begin()];
    return out;
}

RootedTree rooted_quotient(const RootedTree& rt, const Correspondence& c) {
    QuotientTree q = quotient_tree(rt.tree, c);
    InducedRoots roots = induced_roots(rt, c);
    RootedTree out;
    out.tree = q.tree;
    out.root = roots.quotient_root;
    return out;
}

}  // namespace arbor
