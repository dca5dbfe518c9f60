#include "arbor/pathalgebra.hpp"

namespace arbor {

PathAlgebra make_path_algebra(const RootedTree& rt) {
    rt.validate();
    PathAlgebra alg;
    alg.quiver = rt;
    alg.parent = rt.parents();
    int n = rt.size();
    alg.path_index.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a; b != -1; b = alg.parent[b]) {
            alg.path_index[a][b] = int(alg.paths.size());
            alg.paths.emplace_back(a, b);
        }
    return alg;
}

std::vector<int> correspondence_vertex_map(const Tree& t, const Correspondence& c) {
    QuotientTree q = quotient_tree(t, c);
    std::vector<int> out(t.size(), -1);
    for (size_t i = 0; i < c.subtree.size(); ++i) out[c.subtree[i]] = q.class_of[i];
    return out;
}

}  // namespace arbor
