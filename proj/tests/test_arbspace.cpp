#include "arbor/field.hpp"
#include "arbor/matrix.hpp"
#include "arbor/nerve.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace arbor;

namespace {

std::vector<Tree> small_trees(int max_size) {
    std::vector<Tree> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_size; ++n)
        for (const auto& rt : all_rooted_trees(n)) {
            std::string key = std::to_string(rt.size());
            for (auto e : rt.tree.edges)
                key += ";" + std::to_string(e.first) + "," + std::to_string(e.second);
            if (seen.insert(key).second) out.push_back(rt.tree);
        }
    return out;
}

// all simplices having s as an (iterated) face, including s itself
std::vector<int> open_star(const Nerve& n, int s) {
    std::vector<int> out;
    std::vector<int> stack{s};
    std::set<int> seen{s};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        for (int cof : n.cofaces[cur])
            if (seen.insert(cof).second) stack.push_back(cof);
    }
    return out;
}

// Chain homology Betti numbers of the order complex of a set of simplices
// (flags ordered by the face relation).  The realization of the union of open
// simplices deformation retracts onto this complex when the set is locally
// closed, i.e. upward closed inside its downward closure.
std::vector<int> flag_betti(const Nerve& n, const std::vector<int>& simplex_set) {
    std::set<int> in_set(simplex_set.begin(), simplex_set.end());
    // face relation restricted to the set: a < b iff a's chain is a subchain
    // (chains are stored in poset order, so compare as sets)
    auto is_subchain = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        return true;
    };
    std::vector<int> elems(simplex_set);
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        return n.simplices[a].size() < n.simplices[b].size();
    });
    std::map<int, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
    // enumerate flags
    std::vector<std::vector<int>> flags;
    std::vector<int> flag;
    std::function<void(int)> extend = [&](int last) {
        flags.push_back(flag);
        for (int next : elems) {
            if (n.simplices[next].size() <= n.simplices[last].size()) continue;
            if (!is_subchain(n.simplices[last], n.simplices[next])) continue;
            flag.push_back(next);
            extend(next);
            flag.pop_back();
        }
    };
    for (int e : elems) {
        flag = {e};
        extend(e);
    }
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (auto& f : flags) {
        size_t d = f.size() - 1;
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        index[f] = int(by_dim[d].size());
        by_dim[d].push_back(f);
    }
    std::vector<int> betti;
    std::vector<int> ranks(by_dim.size() + 1, 0);
    for (size_t d = 1; d < by_dim.size(); ++d) {
        SparseEliminator<Rational> elim;
        for (size_t j = 0; j < by_dim[d].size(); ++j) {
            const auto& f = by_dim[d][j];
            SparseVec<Rational> col;
            for (size_t i = 0; i <= d; ++i) {
                std::vector<int> face = f;
                face.erase(face.begin() + i);
                col.emplace_back(index.at(face), Rational((i % 2) ? -1 : 1));
            }
            elim.add_row(std::move(col));
        }
        ranks[d] = elim.rank();
    }
    for (size_t d = 0; d < by_dim.size(); ++d)
        betti.push_back(int(by_dim[d].size()) - ranks[d] - ranks[d + 1]);
    return betti;
}

bool is_point_homology(const std::vector<int>& betti) {
    if (betti.empty() || betti[0] != 1) return false;
    for (size_t i = 1; i < betti.size(); ++i)
        if (betti[i] != 0) return false;
    return true;
}

// set of fine simplices is locally closed: upward closed within its closure
bool locally_closed(const Nerve& n, const std::vector<int>& simplex_set) {
    std::set<int> in_set(simplex_set.begin(), simplex_set.end());
    std::set<int> closure = in_set;
    std::vector<int> stack(simplex_set.begin(), simplex_set.end());
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (auto [f, sign] : n.faces[s])
            if (closure.insert(f).second) stack.push_back(f);
    }
    // the complement within the closure must be downward closed
    for (int s : closure) {
        if (in_set.count(s)) continue;
        for (auto [f, sign] : n.faces[s])
            if (in_set.count(f)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("nerve counts: A2, A3, single vertex") {
    Nerve n2 = build_nerve(path_tree(2));
    auto c2 = n2.simplex_counts_by_dim();
    CHECK(n2.simplex_count() == 7);
    CHECK(c2[0] == 4);
    CHECK(c2[1] == 3);

    Nerve n3 = build_nerve(path_tree(3));
    auto c3 = n3.simplex_counts_by_dim();
    CHECK(n3.simplex_count() == 45);
    CHECK(c3[0] == 11);
    CHECK(c3[1] == 22);
    CHECK(c3[2] == 12);

    Nerve n1 = build_nerve(make_tree({"a"}, {}));
    CHECK(n1.simplex_count() == 1);
}

TEST_CASE("boundary squares to zero and labels behave (trees up to 4 vertices)") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        // d o d = 0 with the alternating deletion signs
        for (int s = 0; s < n.simplex_count(); ++s) {
            if (n.dim(s) < 2) continue;
            std::map<int, int> acc;
            for (auto [f, sf] : n.faces[s])
                for (auto [g, sg] : n.faces[f]) acc[g] += sf * sg;
            for (auto [g, v] : acc) CHECK(v == 0);
        }
        // every simplex lies in the closure of its stratum: label >= all entries
        for (int s = 0; s < n.simplex_count(); ++s)
            for (int p : n.simplices[s]) CHECK(n.leq_mat[p][n.label[s]]);
        // strata partition the simplices
        long long total = 0;
        for (int p = 0; p < n.order(); ++p) {
            StratumSubset one;
            one.strata = {p};
            total += (long long)simplices_of(n, one).size();
        }
        CHECK(total == n.simplex_count());
        // nerve dimension is |T| - 1
        CHECK(n.top_dim() == t.size() - 1);
    }
}

TEST_CASE("stratum dimension and half-open star Euler characteristic") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        OpenPart op = open_part(n);
        for (int p = 0; p < n.order(); ++p) {
            int d = n.stratum_dim(p);
            int alt = 0, maxdim = -1;
            for (int s = 0; s < n.simplex_count(); ++s) {
                if (n.label[s] != p || !op.in_open[s]) continue;
                alt += (n.dim(s) % 2) ? -1 : 1;
                maxdim = std::max(maxdim, n.dim(s));
            }
            CHECK(alt == ((d % 2) ? -1 : 1));
            CHECK(maxdim == d);
        }
    }
}

TEST_CASE("exit directions: labels in the open star form the upward set") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        for (int s = 0; s < n.simplex_count(); ++s) {
            int p = n.label[s];
            std::set<int> seen;
            for (int u : open_star(n, s)) seen.insert(n.label[u]);
            std::set<int> expected;
            for (int q = 0; q < n.order(); ++q)
                if (n.leq_mat[p][q]) expected.insert(q);
            CHECK(seen == expected);
        }
    }
}

TEST_CASE("closure of a stratum is the downward union") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        for (int p = 0; p < n.order(); ++p) {
            // closure of the simplex set of {p} = simplices of the down-set
            StratumSubset s{{p}};
            std::set<int> closure;
            std::vector<int> stack = simplices_of(n, s);
            for (int x : stack) closure.insert(x);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [f, sign] : n.faces[x])
                    if (closure.insert(f).second) stack.push_back(f);
            }
            StratumSubset down;
            for (int q = 0; q < n.order(); ++q)
                if (n.leq_mat[q][p]) down.strata.push_back(q);
            auto expected = simplices_of(n, down);
            CHECK(closure == std::set<int>(expected.begin(), expected.end()));
        }
    }
}

TEST_CASE("open part: A2 and A3 and the single vertex") {
    Nerve n2 = build_nerve(path_tree(2));
    OpenPart o2 = open_part(n2);
    CHECK(o2.open_simplices.size() == 4);
    CHECK(o2.boundary_simplices.size() == 3);
    for (int s : o2.boundary_simplices) CHECK(n2.dim(s) == 0);

    Nerve n3 = build_nerve(path_tree(3));
    OpenPart o3 = open_part(n3);
    CHECK(o3.open_simplices.size() == 23);
    CHECK(o3.boundary_simplices.size() == 22);
    // boundary = full subcomplex on the 10 nontrivial correspondences
    std::set<int> boundary_points;
    for (int s : o3.boundary_simplices)
        for (int p : n3.simplices[s]) boundary_points.insert(p);
    CHECK(boundary_points.size() == 10);
    CHECK(boundary_points.count(n3.trivial) == 0);

    Nerve n1 = build_nerve(make_tree({"a"}, {}));
    CHECK(open_part(n1).boundary_simplices.empty());
}

TEST_CASE("open part is open: the complement is a subcomplex") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        OpenPart op = open_part(n);
        for (int s : op.boundary_simplices)
            for (auto [f, sign] : n.faces[s]) CHECK_FALSE(op.in_open[f]);
        // and the open part is upward closed
        for (int s : op.open_simplices)
            for (int cof : n.cofaces[s]) CHECK(op.in_open[cof]);
    }
}

TEST_CASE("discs: A2 example and the covering property") {
    Nerve n = build_nerve(path_tree(2));
    StratumSubset da = disc(n, "a");
    CHECK(da.strata.size() == 3);  // p0, a-only, (ab)-collapse
    CHECK(is_closed(n, da));
    CHECK_THROWS_AS(disc(n, "nope"), std::invalid_argument);

    for (const auto& t : small_trees(4)) {
        Nerve m = build_nerve(t);
        std::set<int> covered;
        for (int v = 0; v < t.size(); ++v) {
            StratumSubset d = disc(m, v);
            CHECK(is_closed(m, d));
            for (int p : d.strata) covered.insert(p);
        }
        CHECK(int(covered.size()) == m.order());  // every middle tree is nonempty
    }
}

TEST_CASE("A3 glues from three contractible discs with contractible overlaps") {
    Nerve n = build_nerve(path_tree(3));
    std::vector<StratumSubset> discs;
    for (int v = 0; v < 3; ++v) discs.push_back(disc(n, v));
    for (auto& d : discs) {
        auto simp = simplices_of(n, d);
        CHECK(locally_closed(n, simp));
        CHECK(is_point_homology(flag_betti(n, simp)));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            StratumSubset inter;
            for (int p : discs[i].strata)
                if (discs[j].contains(p)) inter.strata.push_back(p);
            auto simp = simplices_of(n, inter);
            CHECK(is_point_homology(flag_betti(n, simp)));
        }
}

TEST_CASE("hom support: reflexive case equals the disc") {
    for (const auto& t : small_trees(4)) {
        for (int root = 0; root < t.size(); ++root) {
            RootedTree rt{t, root};
            Nerve n = build_nerve(t);
            for (int v = 0; v < t.size(); ++v) {
                StratumSubset s = hom_support(n, rt, v, v);
                StratumSubset d = disc(n, v);
                CHECK(s.strata == d.strata);
            }
        }
    }
}

TEST_CASE("hom support on A3 with the center root: the two halves swap") {
    Tree t = path_tree(3);
    RootedTree rt = make_rooted(t, "b");  // quiver a -> b <- c
    Nerve n = build_nerve(t);
    int a = t.vertex_index("a"), c = t.vertex_index("c");
    StratumSubset ac = hom_support(n, rt, a, c);
    StratumSubset ca = hom_support(n, rt, c, a);
    CHECK(ac.strata != ca.strata);
    // swapping the vertices swaps the subsets (relabel a <-> c)
    auto swap_name = [&](int p) {
        const Correspondence& corr = n.points[p];
        Correspondence sw;
        auto flip = [&](int v) { return v == a ? c : (v == c ? a : v); };
        for (int v : corr.subtree) sw.subtree.push_back(flip(v));
        std::sort(sw.subtree.begin(), sw.subtree.end());
        for (auto e : corr.contracted) {
            int u = flip(e.first), w = flip(e.second);
            sw.contracted.emplace_back(std::min(u, w), std::max(u, w));
        }
        std::sort(sw.contracted.begin(), sw.contracted.end());
        return n.point_index(sw);
    };
    std::vector<int> swapped;
    for (int p : ac.strata) swapped.push_back(swap_name(p));
    std::sort(swapped.begin(), swapped.end());
    CHECK(swapped == ca.strata);
    // both halves contain the strata where the two ends are identified
    for (int p = 0; p < n.order(); ++p) {
        bool both = n.points[p].contains(a) && n.points[p].contains(c);
        if (!both) continue;
        bool same_class = n.class_at(p, a) == n.class_at(p, c);
        if (same_class) {
            CHECK(ac.contains(p));
            CHECK(ca.contains(p));
        }
    }
}

TEST_CASE("hom support vs disc intersections: equality below, boundary in general") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        for (int root = 0; root < t.size(); ++root) {
            RootedTree rt{t, root};
            for (int a = 0; a < t.size(); ++a)
                for (int b = 0; b < t.size(); ++b) {
                    StratumSubset ab = hom_support(n, rt, a, b);
                    StratumSubset inter;
                    for (int p = 0; p < n.order(); ++p)
                        if (n.points[p].contains(a) && n.points[p].contains(b))
                            inter.strata.push_back(p);
                    // support sits inside the intersection of the discs
                    for (int p : ab.strata) CHECK(inter.contains(p));
                    if (rt.above(b, a)) {
                        // a <= b: the support is the whole intersection
                        CHECK(ab.strata == inter.strata);
                    }
                    // the deleted strata are boundary strata: something above
                    // them leaves the intersection
                    for (int p : inter.strata) {
                        if (ab.contains(p)) continue;
                        bool witness = false;
                        for (int q = 0; q < n.order() && !witness; ++q)
                            witness = q != p && n.leq_mat[p][q] && !inter.contains(q);
                        CHECK(witness);
                    }
                }
        }
    }
}

TEST_CASE("hom support is contractible (trees up to 4 vertices)") {
    for (const auto& t : small_trees(4)) {
        Nerve n = build_nerve(t);
        for (int root = 0; root < t.size(); ++root) {
            RootedTree rt{t, root};
            for (int a = 0; a < t.size(); ++a)
                for (int b = 0; b < t.size(); ++b) {
                    auto simp = simplices_of(n, hom_support(n, rt, a, b));
                    CHECK(locally_closed(n, simp));
                    CHECK(is_point_homology(flag_betti(n, simp)));
                }
        }
    }
}

TEST_CASE("DOT export mentions every correspondence once as a node") {
    Nerve n = build_nerve(path_tree(2));
    std::string dot = nerve_dot(n);
    CHECK(dot.find("label=\"ab\"") != std::string::npos);
    CHECK(dot.find("label=\"(ab)\"") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 4 + 3 + 1);
}
