#include "arbor/correspondence.hpp"
#include "arbor/tree.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <set>

using namespace arbor;

namespace {

Tree a2() { return path_tree(2); }
Tree a3() { return path_tree(3); }

std::vector<Tree> small_trees(int max_size) {
    std::vector<Tree> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_size; ++n)
        for (const auto& rt : all_rooted_trees(n)) {
            // distinct rootings can repeat the underlying tree; dedupe
            std::string key;
            for (auto e : rt.tree.edges)
                key += std::to_string(e.first) + "," + std::to_string(e.second) + ";";
            key += std::to_string(rt.size());
            if (seen.insert(key).second) out.push_back(rt.tree);
        }
    return out;
}

}  // namespace

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(make_tree({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree({"a", "b"}, {}), std::invalid_argument);           // disconnected
    CHECK_THROWS_AS(make_tree({"a", "b"}, {{"a", "c"}}), std::invalid_argument); // bad endpoint
    CHECK_NOTHROW(make_tree({"a"}, {}).validate());
    Tree t = a3();
    CHECK(t.size() == 3);
    CHECK(t.vertex_index("b") == 1);
    CHECK(t.vertex_index("z") == -1);
}

TEST_CASE("inline tree notation round trip") {
    RootedTree rt = parse_tree_inline("b(a,c(d))");
    CHECK(rt.size() == 4);
    CHECK(rt.root_name() == "b");
    CHECK(rt.above(rt.tree.vertex_index("d"), rt.tree.vertex_index("c")));
    CHECK(rt.above(rt.tree.vertex_index("d"), rt.tree.vertex_index("b")));
    CHECK_FALSE(rt.above(rt.tree.vertex_index("d"), rt.tree.vertex_index("a")));
    RootedTree again = parse_tree_inline(tree_inline(rt));
    CHECK(again.tree == rt.tree);
    CHECK(again.root == rt.root);
    CHECK_THROWS_AS(parse_tree_inline("a(b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree_inline("a)b"), std::invalid_argument);
}

TEST_CASE("rooted tree generation counts") {
    CHECK(all_rooted_trees(1).size() == 1);
    CHECK(all_rooted_trees(2).size() == 1);
    CHECK(all_rooted_trees(3).size() == 2);
    CHECK(all_rooted_trees(4).size() == 4);
    CHECK(all_rooted_trees(5).size() == 9);
    CHECK(all_rooted_trees(6).size() == 20);
    for (const auto& rt : all_rooted_trees(5)) CHECK_NOTHROW(rt.validate());
}

TEST_CASE("correspondence counts: A2 has 4, A3 has 11, point has 1") {
    CHECK(enumerate_correspondences(a2()).size() == 4);
    CHECK(enumerate_correspondences(a3()).size() == 11);
    CHECK(enumerate_correspondences(make_tree({"a"}, {})).size() == 1);
}

TEST_CASE("enumeration matches the subtree formula and the partition oracle") {
    for (const auto& t : small_trees(5)) {
        auto cs = enumerate_correspondences(t);
        long long formula = 0;
        for (const auto& s : connected_subtrees(t))
            formula += 1ll << induced_edges(t, s).size();
        CHECK(formula == (long long)cs.size());
        CHECK(oracle::count_correspondences_by_partitions(t) == (long long)cs.size());
        for (const auto& c : cs) CHECK_NOTHROW(validate_correspondence(t, c));
        // canonical form is strictly sorted, hence one representative per class
        for (size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1] < cs[i]);
    }
}

TEST_CASE("composition with the trivial correspondence is the identity") {
    for (const auto& t : small_trees(4)) {
        auto cs = enumerate_correspondences(t);
        const Correspondence pt = trivial_correspondence(t);
        for (const auto& p : cs) {
            QuotientTree r = quotient_tree(t, p);
            // p o p_T = p: inner is trivial, outer is p read on T itself
            CHECK(compose(t, pt, t, p) == p);
            // p_R o p = p
            CHECK(compose(t, p, r.tree, trivial_correspondence(r.tree)) == p);
        }
    }
}

TEST_CASE("composition agrees with the brute-force fiber product") {
    for (const auto& t : small_trees(4)) {
        for (const auto& p : enumerate_correspondences(t)) {
            QuotientTree r = quotient_tree(t, p);
            for (const auto& q : enumerate_correspondences(r.tree)) {
                Correspondence lib = compose(t, p, r.tree, q);
                Correspondence brute = oracle::compose_by_maps(t, p, q);
                CHECK(lib == brute);
            }
        }
    }
}

TEST_CASE("composition on A2: collapse then section recovers a vertex inclusion") {
    Tree t = a2();
    // inner: collapse the edge ab
    Correspondence collapse;
    collapse.subtree = {0, 1};
    collapse.contracted = {{0, 1}};
    QuotientTree r = quotient_tree(t, collapse);
    CHECK(r.tree.size() == 1);
    CHECK(r.tree.vertices[0] == "(ab)");
    // outer: the trivial correspondence on the single-vertex quotient
    Correspondence q = trivial_correspondence(r.tree);
    Correspondence composite = compose(t, collapse, r.tree, q);
    CHECK(composite == collapse);
}

TEST_CASE("composition domain errors") {
    Tree t = a3();
    Correspondence p;
    p.subtree = {0, 1};  // subtree a-b, no contraction; quotient has 2 vertices
    QuotientTree r = quotient_tree(t, p);
    CHECK_THROWS_AS(compose(t, p, t, trivial_correspondence(t)), std::invalid_argument);
    CHECK_NOTHROW(compose(t, p, r.tree, trivial_correspondence(r.tree)));
}

TEST_CASE("associativity over A3, exhaustively") {
    Tree t = a3();
    for (const auto& p : enumerate_correspondences(t)) {
        QuotientTree r1 = quotient_tree(t, p);
        for (const auto& q : enumerate_correspondences(r1.tree)) {
            QuotientTree r2 = quotient_tree(r1.tree, q, r1.atoms);
            for (const auto& s : enumerate_correspondences(r2.tree)) {
                Correspondence qp = compose(t, p, r1.tree, q);
                QuotientTree rqp = quotient_tree(t, qp);
                CHECK(rqp.tree == r2.tree);  // atom-flat class names survive composition
                Correspondence left = compose(t, qp, rqp.tree, s);
                Correspondence sq = compose(r1.tree, q, r2.tree, s, r1.atoms);
                Correspondence right = compose(t, p, r1.tree, sq);
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("leq: p_T is the minimum; A2 nontrivial correspondences incomparable") {
    Tree t = a2();
    auto cs = enumerate_correspondences(t);
    Correspondence pt = trivial_correspondence(t);
    for (const auto& p : cs) CHECK(leq(t, pt, p));
    std::vector<Correspondence> nontrivial;
    for (const auto& p : cs)
        if (!(p == pt)) nontrivial.push_back(p);
    CHECK(nontrivial.size() == 3);
    for (const auto& p : nontrivial)
        for (const auto& q : nontrivial)
            if (!(p == q)) {
                CHECK_FALSE(leq(t, p, q));
            }
}

TEST_CASE("leq is a partial order and witnesses are unique (brute force)") {
    for (const auto& t : small_trees(4)) {
        auto cs = enumerate_correspondences(t);
        for (const auto& p : cs) CHECK(leq(t, p, p));
        for (const auto& p : cs)
            for (const auto& q : cs) {
                auto w = leq_witness(t, p, q);
                auto brute = oracle::all_witnesses(t, p, q);
                CHECK(w.has_value() == !brute.empty());
                CHECK(brute.size() <= 1);
                if (w) CHECK(*w == brute.front());
                if (w && leq(t, q, p)) CHECK(p == q);  // antisymmetry
            }
        // transitivity
        for (const auto& p : cs)
            for (const auto& q : cs)
                for (const auto& r : cs)
                    if (leq(t, p, q) && leq(t, q, r)) CHECK(leq(t, p, r));
    }
}

TEST_CASE("induced roots") {
    // S = T: root of S is the root of T
    RootedTree rt = parse_tree_inline("b(a,c)");
    Correspondence full = trivial_correspondence(rt.tree);
    auto r = induced_roots(rt, full);
    CHECK(r.middle_root == rt.root);

    // A3 rooted at b, S = {a}: root of S is a
    Correspondence only_a;
    only_a.subtree = {rt.tree.vertex_index("a")};
    auto ra = induced_roots(rt, only_a);
    CHECK(ra.middle_root == rt.tree.vertex_index("a"));

    // contraction of an edge containing the root: root of R is the contracted class
    Correspondence collapse;
    collapse.subtree = {0, 1, 2};
    int a = rt.tree.vertex_index("a"), b = rt.tree.vertex_index("b");
    collapse.contracted = {{std::min(a, b), std::max(a, b)}};
    RootedTree rq = rooted_quotient(rt, collapse);
    CHECK(rq.root_name() == "(ab)");
    // and the image of the middle root under the quotient map is that class
    QuotientTree qt = quotient_tree(rt.tree, collapse);
    auto rr = induced_roots(rt, collapse);
    CHECK(qt.tree.vertices[rr.quotient_root] == "(ab)");
}
