#include "arbor/nerve.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace arbor {

int Nerve::top_dim() const {
    int d = 0;
    for (int s = 0; s < simplex_count(); ++s) d = std::max(d, dim(s));
    return d;
}

int Nerve::point_index(const Correspondence& c) const {
    auto it = std::lower_bound(points.begin(), points.end(), c);
    if (it == points.end() || !(*it == c)) return -1;
    return int(it - points.begin());
}

int Nerve::simplex_index(const std::vector<int>& chain) const {
    for (int s = 0; s < simplex_count(); ++s)
        if (simplices[s] == chain) return s;
    return -1;
}

std::map<int, long long> Nerve::simplex_counts_by_dim() const {
    std::map<int, long long> out;
    for (int s = 0; s < simplex_count(); ++s) ++out[dim(s)];
    return out;
}

int Nerve::class_at(int point, int v) const {
    const Correspondence& c = points[point];
    if (!c.contains(v)) return -1;
    auto it = std::lower_bound(c.subtree.begin(), c.subtree.end(), v);
    return quotients[point].class_of[it - c.subtree.begin()];
}

Nerve build_nerve(const Tree& t) {
    t.validate();
    Nerve n;
    n.tree = t;
    n.points = enumerate_correspondences(t);
    n.trivial = n.point_index(trivial_correspondence(t));
    int m = n.order();
    n.quotients.reserve(m);
    for (int i = 0; i < m; ++i) n.quotients.push_back(quotient_tree(t, n.points[i]));
    n.leq_mat.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            n.leq_mat[i][j] = leq(t, n.points[i], n.points[j]);

    // chains, depth-first, each extended by strictly larger elements
    std::vector<std::vector<int>> uppers(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && n.leq_mat[i][j]) uppers[i].push_back(j);
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int last) {
        n.simplices.push_back(chain);
        for (int j : uppers[last]) {
            chain.push_back(j);
            extend(j);
            chain.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        chain = {i};
        extend(i);
    }
    std::sort(n.simplices.begin(), n.simplices.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    n.label.resize(n.simplex_count());
    for (int s = 0; s < n.simplex_count(); ++s) n.label[s] = n.simplices[s].back();

    std::map<std::vector<int>, int> index_of;
    for (int s = 0; s < n.simplex_count(); ++s) index_of[n.simplices[s]] = s;
    n.faces.resize(n.simplex_count());
    n.cofaces.resize(n.simplex_count());
    for (int s = 0; s < n.simplex_count(); ++s) {
        const auto& ch = n.simplices[s];
        if (ch.size() == 1) continue;
        for (size_t i = 0; i < ch.size(); ++i) {
            std::vector<int> face = ch;
            face.erase(face.begin() + i);
            int f = index_of.at(face);
            n.faces[s].emplace_back(f, (i % 2 == 0) ? 1 : -1);
            n.cofaces[f].push_back(s);
        }
    }
    return n;
}

bool StratumSubset::contains(int p) const {
    return std::binary_search(strata.begin(), strata.end(), p);
}

bool is_closed(const Nerve& n, const StratumSubset& s) {
    for (int p : s.strata)
        for (int q = 0; q < n.order(); ++q)
            if (n.leq_mat[q][p] && !s.contains(q)) return false;
    return true;
}

bool is_open(const Nerve& n, const StratumSubset& s) {
    for (int p : s.strata)
        for (int q = 0; q < n.order(); ++q)
            if (n.leq_mat[p][q] && !s.contains(q)) return false;
    return true;
}

std::vector<int> simplices_of(const Nerve& n, const StratumSubset& s) {
    std::vector<int> out;
    for (int i = 0; i < n.simplex_count(); ++i)
        if (s.contains(n.label[i])) out.push_back(i);
    return out;
}

OpenPart open_part(const Nerve& n) {
    OpenPart out;
    out.in_open.assign(n.simplex_count(), false);
    for (int s = 0; s < n.simplex_count(); ++s) {
        if (n.simplices[s].front() == n.trivial) {
            out.in_open[s] = true;
            out.open_simplices.push_back(s);
        } else {
            out.boundary_simplices.push_back(s);
        }
    }
    return out;
}

StratumSubset disc(const Nerve& n, int vertex) {
    if (vertex < 0 || vertex >= n.tree.size())
        throw std::invalid_argument("disc: unknown vertex");
    StratumSubset out;
    for (int p = 0; p < n.order(); ++p)
        if (n.points[p].contains(vertex)) out.strata.push_back(p);
    return out;
}

StratumSubset disc(const Nerve& n, const std::string& vertex) {
    int v = n.tree.vertex_index(vertex);
    if (v < 0) throw std::invalid_argument("disc: unknown vertex " + vertex);
    return disc(n, v);
}

StratumSubset hom_support(const Nerve& n, const RootedTree& rt, int a, int b) {
    if (!(rt.tree == n.tree)) throw std::invalid_argument("hom_support: tree mismatch");
    if (a < 0 || a >= n.tree.size() || b < 0 || b >= n.tree.size())
        throw std::invalid_argument("hom_support: unknown vertices");
    StratumSubset out;
    for (int p = 0; p < n.order(); ++p) {
        if (!n.points[p].contains(a) || !n.points[p].contains(b)) continue;
        RootedTree rq = rooted_quotient(rt, n.points[p]);
        int qa = n.class_at(p, a), qb = n.class_at(p, b);
        // q(a) <= q(b): b's class is above a's class (arrows point to the root)
        if (rq.above(qb, qa)) out.strata.push_back(p);
    }
    return out;
}

std::string point_name(const Nerve& n, int point) {
    std::string out;
    for (const auto& v : n.quotients[point].tree.vertices) out += v;
    return out;
}

std::string nerve_dot(const Nerve& n) {
    std::ostringstream os;
    os << "graph nerve {\n";
    for (int p = 0; p < n.order(); ++p)
        os << "  v" << p << " [label=\"" << point_name(n, p) << "\"];\n";
    for (int s = 0; s < n.simplex_count(); ++s) {
        if (n.dim(s) != 1) continue;
        os << "  v" << n.simplices[s][0] << " -- v" << n.simplices[s][1] << " [label=\""
           << point_name(n, n.label[s]) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace arbor
