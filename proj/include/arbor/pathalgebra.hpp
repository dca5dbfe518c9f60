#pragma once

// Path algebras of rooted tree quivers (arrows toward the root, paths read
// left to right, representations = right modules), complexes of the
// indecomposable projectives P_a, their Hom complexes, and the functors
// induced by tree correspondences.

#include "arbor/complex.hpp"
#include "arbor/correspondence.hpp"
#include "arbor/tree.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arbor {

struct PathAlgebra {
    RootedTree quiver;
    std::vector<int> parent;                    // toward the root
    std::vector<std::pair<int, int>> paths;     // (from, to); from is above to
    std::vector<std::vector<int>> path_index;   // [from][to] -> index or -1

    int dim() const { return int(paths.size()); }
    int vertices() const { return quiver.size(); }
    int idempotent(int v) const { return path_index[v][v]; }
    bool above(int a, int b) const { return path_index[a][b] >= 0; }
    int path_between(int a, int b) const { return path_index[a][b]; }
    bool is_idempotent(int p) const { return paths[p].first == paths[p].second; }

    // |a><b| * |b><c| = |a><c|; anything else vanishes (-1).
    int mul(int p, int q) const {
        if (paths[p].second != paths[q].first) return -1;
        return path_index[paths[p].first][paths[q].second];
    }
};

PathAlgebra make_path_algebra(const RootedTree& rt);

// A bounded complex whose terms are direct sums of projectives.  The matrix
// entry from a P_c summand in degree k to a P_r summand in degree k+1 is a
// scalar multiple of the unique basis morphism |r><c|, so entries are stored
// as scalars and may be nonzero only when r is above c.
template <class K>
struct ProjComplex {
    std::map<int, std::vector<int>> terms;  // degree -> vertices of the summands
    std::map<int, Mat<K>> diffs;            // degree k -> matrix [terms[k+1] x terms[k]]

    bool is_zero() const {
        for (const auto& [d, t] : terms)
            if (!t.empty()) return false;
        return true;
    }
    int deg_lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    int deg_hi() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    const std::vector<int>& at(int deg) const {
        static const std::vector<int> empty;
        auto it = terms.find(deg);
        return it == terms.end() ? empty : it->second;
    }
    Mat<K> diff(int deg) const {
        auto it = diffs.find(deg);
        if (it != diffs.end()) return it->second;
        return Mat<K>(int(at(deg + 1).size()), int(at(deg).size()));
    }
};

template <class K>
ProjComplex<K> projective(int vertex) {
    ProjComplex<K> p;
    p.terms[0] = {vertex};
    return p;
}

// entries must live in legitimate Hom spaces and d*d must vanish
template <class K>
void validate_proj_complex(const PathAlgebra& alg, const ProjComplex<K>& x) {
    for (const auto& [deg, t] : x.terms)
        for (int v : t)
            if (v < 0 || v >= alg.vertices())
                throw std::invalid_argument("proj complex: unknown vertex");
    for (const auto& [deg, m] : x.diffs) {
        const auto& src = x.at(deg);
        const auto& dst = x.at(deg + 1);
        if (m.rows() != int(dst.size()) || m.cols() != int(src.size()))
            throw std::invalid_argument("proj complex: differential shape mismatch");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero() && !alg.above(dst[i], src[j]))
                    throw std::invalid_argument("proj complex: entry outside Hom space");
    }
    for (const auto& [deg, m] : x.diffs) {
        auto next = x.diffs.find(deg + 1);
        if (next == x.diffs.end()) continue;
        if (!(next->second * m).is_zero())
            throw std::invalid_argument("proj complex: d*d != 0");
    }
}

template <class K>
ProjComplex<K> shift_proj(const ProjComplex<K>& x, int s) {
    // (X[s])^i = X^{i+s}; differentials pick up (-1)^s
    ProjComplex<K> out;
    for (const auto& [deg, t] : x.terms) out.terms[deg - s] = t;
    for (const auto& [deg, m] : x.diffs) out.diffs[deg - s] = (s % 2 == 0) ? m : -m;
    return out;
}

// A map of projective complexes: scalar matrices per degree, entry from an
// X-summand P_c to a Y-summand P_r multiplies |r><c|.
template <class K>
struct ProjMap {
    std::map<int, Mat<K>> comps;

    Mat<K> at(int deg, const ProjComplex<K>& src, const ProjComplex<K>& dst) const {
        auto it = comps.find(deg);
        if (it != comps.end()) return it->second;
        return Mat<K>(int(dst.at(deg).size()), int(src.at(deg).size()));
    }
};

template <class K>
void validate_proj_map(const PathAlgebra& alg, const ProjComplex<K>& src,
                       const ProjComplex<K>& dst, const ProjMap<K>& f) {
    int lo = std::min(src.deg_lo(), dst.deg_lo()) - 1;
    int hi = std::max(src.deg_hi(), dst.deg_hi()) + 1;
    for (int deg = lo; deg <= hi; ++deg) {
        Mat<K> fd = f.at(deg, src, dst);
        if (fd.rows() != int(dst.at(deg).size()) || fd.cols() != int(src.at(deg).size()))
            throw std::invalid_argument("proj map: component shape mismatch");
        const auto& s = src.at(deg);
        const auto& t = dst.at(deg);
        for (int i = 0; i < fd.rows(); ++i)
            for (int j = 0; j < fd.cols(); ++j)
                if (!fd(i, j).is_zero() && !alg.above(t[i], s[j]))
                    throw std::invalid_argument("proj map: entry outside Hom space");
        Mat<K> lhs = dst.diff(deg) * fd;
        Mat<K> rhs = f.at(deg + 1, src, dst) * src.diff(deg);
        if (!(lhs + (-rhs)).is_zero())
            throw std::invalid_argument("proj map: not a chain map");
    }
}

// standard mapping cone: Cone(f)^k = X^{k+1} (+) Y^k,
// d(a, b) = (-d_X a, f a + d_Y b)
template <class K>
ProjComplex<K> cone(const PathAlgebra& alg, const ProjComplex<K>& x, const ProjComplex<K>& y,
                    const ProjMap<K>& f) {
    validate_proj_map(alg, x, y, f);
    ProjComplex<K> out;
    int lo = std::min(x.deg_lo() - 1, y.deg_lo()) - 1;
    int hi = std::max(x.deg_hi() - 1, y.deg_hi()) + 1;
    for (int deg = lo; deg <= hi; ++deg) {
        std::vector<int> t = x.at(deg + 1);
        const auto& ty = y.at(deg);
        t.insert(t.end(), ty.begin(), ty.end());
        if (!t.empty()) out.terms[deg] = t;
    }
    for (int deg = lo; deg <= hi; ++deg) {
        int xs = int(x.at(deg + 1).size()), ys = int(y.at(deg).size());
        int xd = int(x.at(deg + 2).size()), yd = int(y.at(deg + 1).size());
        if ((xs + ys) == 0 || (xd + yd) == 0) continue;
        Mat<K> m(xd + yd, xs + ys);
        Mat<K> dx = x.diff(deg + 1);
        for (int i = 0; i < xd; ++i)
            for (int j = 0; j < xs; ++j) m(i, j) = -dx(i, j);
        Mat<K> fc = f.at(deg + 1, x, y);
        for (int i = 0; i < yd; ++i)
            for (int j = 0; j < xs; ++j) m(xd + i, j) = fc(i, j);
        Mat<K> dy = y.diff(deg);
        for (int i = 0; i < yd; ++i)
            for (int j = 0; j < ys; ++j) m(xd + i, xs + j) = dy(i, j);
        out.diffs[deg] = m;
    }
    validate_proj_complex(alg, out);
    return out;
}

// associated graded of a filtration X_0 -> X_1 -> ... -> X_n:
// (X_0, Cone(X_0 -> X_1), ..., Cone(X_{n-1} -> X_n)) plus the top piece X_n
template <class K>
struct Filtration {
    std::vector<ProjComplex<K>> pieces;
    std::vector<ProjMap<K>> maps;  // maps[i]: pieces[i] -> pieces[i+1]
};

template <class K>
struct AssociatedGraded {
    std::vector<ProjComplex<K>> graded;  // n+1 entries
    ProjComplex<K> top;
};

template <class K>
AssociatedGraded<K> associated_graded(const PathAlgebra& alg, const Filtration<K>& f) {
    if (f.pieces.empty()) throw std::invalid_argument("associated_graded: empty filtration");
    if (f.maps.size() + 1 != f.pieces.size())
        throw std::invalid_argument("associated_graded: map count mismatch");
    AssociatedGraded<K> out;
    out.graded.push_back(f.pieces.front());
    for (size_t i = 0; i < f.maps.size(); ++i)
        out.graded.push_back(cone(alg, f.pieces[i], f.pieces[i + 1], f.maps[i]));
    out.top = f.pieces.back();
    return out;
}

// The total Hom complex between complexes of projectives, with its basis:
// element (k, i, j) is the morphism P_{src[k][i]} -> P_{dst[k+n][j]}.
template <class K>
struct HomComplex {
    VecComplex<K> cx;
    // basis[deg - cx.min_deg] lists (source degree, source summand, target summand)
    std::vector<std::vector<std::array<int, 3>>> basis;

    int basis_index(int deg, int k, int i, int j) const {
        int o = deg - cx.min_deg;
        if (o < 0 || o >= int(basis.size())) return -1;
        for (size_t b = 0; b < basis[o].size(); ++b)
            if (basis[o][b] == std::array<int, 3>{k, i, j}) return int(b);
        return -1;
    }
};

template <class K>
HomComplex<K> hom_complex(const PathAlgebra& alg, const ProjComplex<K>& src,
                          const ProjComplex<K>& dst) {
    HomComplex<K> out;
    if (src.is_zero() || dst.is_zero()) return out;
    int nlo = dst.deg_lo() - src.deg_hi();
    int nhi = dst.deg_hi() - src.deg_lo();
    out.cx.min_deg = nlo;
    out.basis.resize(nhi - nlo + 1);
    for (int n = nlo; n <= nhi; ++n) {
        auto& list = out.basis[n - nlo];
        for (int k = src.deg_lo(); k <= src.deg_hi(); ++k) {
            const auto& s = src.at(k);
            const auto& t = dst.at(k + n);
            for (int i = 0; i < int(s.size()); ++i)
                for (int j = 0; j < int(t.size()); ++j)
                    if (alg.above(t[j], s[i])) list.push_back({k, i, j});
        }
        out.cx.dims.push_back(int(list.size()));
    }
    for (int n = nlo; n < nhi; ++n) {
        const auto& from = out.basis[n - nlo];
        const auto& to = out.basis[n + 1 - nlo];
        std::map<std::array<int, 3>, int> to_index;
        for (size_t b = 0; b < to.size(); ++b) to_index[to[b]] = int(b);
        Mat<K> m(int(to.size()), int(from.size()));
        for (size_t b = 0; b < from.size(); ++b) {
            auto [k, i, j] = from[b];
            // post-compose with the target differential
            Mat<K> dd = dst.diff(k + n);
            for (int j2 = 0; j2 < dd.rows(); ++j2) {
                if (dd(j2, j).is_zero()) continue;
                auto it = to_index.find({k, i, j2});
                if (it != to_index.end()) m(it->second, int(b)) += dd(j2, j);
            }
            // pre-compose with the source differential, with the sign -(-1)^n
            Mat<K> ds = src.diff(k - 1);
            for (int i2 = 0; i2 < ds.cols(); ++i2) {
                if (ds(i, i2).is_zero()) continue;
                auto it = to_index.find({k - 1, i2, j});
                if (it != to_index.end()) {
                    K v = ds(i, i2);
                    if (n % 2 == 0) v = -v;
                    m(it->second, int(b)) += v;
                }
            }
        }
        out.cx.d.push_back(m);
    }
    // trim leading/trailing zero degrees for a tidy complex
    return out;
}

// Correspondence functor data: a vertex map T -> R u {deleted}; summands over
// deleted vertices are dropped, entries relabel along the map.
template <class K>
struct FunctorImage {
    ProjComplex<K> image;
    std::map<int, std::vector<int>> summand_map;  // degree -> old summand -> new or -1
};

template <class K>
FunctorImage<K> apply_vertex_map(const PathAlgebra& src_alg, const PathAlgebra& dst_alg,
                                 const std::vector<int>& vertex_map, const ProjComplex<K>& x) {
    validate_proj_complex(src_alg, x);
    FunctorImage<K> out;
    for (const auto& [deg, t] : x.terms) {
        std::vector<int>& smap = out.summand_map[deg];
        std::vector<int> keep;
        smap.assign(t.size(), -1);
        for (size_t i = 0; i < t.size(); ++i) {
            int img = vertex_map[t[i]];
            if (img < 0) continue;
            smap[i] = int(keep.size());
            keep.push_back(img);
        }
        if (!keep.empty()) out.image.terms[deg] = keep;
    }
    for (const auto& [deg, m] : x.diffs) {
        const auto& smap_src = out.summand_map[deg];
        const auto& smap_dst = out.summand_map[deg + 1];
        int nsrc = int(out.image.at(deg).size());
        int ndst = int(out.image.at(deg + 1).size());
        if (nsrc == 0 || ndst == 0) continue;
        Mat<K> mm(ndst, nsrc);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                if (smap_dst[i] < 0 || smap_src[j] < 0) continue;
                mm(smap_dst[i], smap_src[j]) = m(i, j);
            }
        out.image.diffs[deg] = mm;
    }
    validate_proj_complex(dst_alg, out.image);
    return out;
}

// vertex map v -> q(i^{-1}(v)) of a correspondence, as indices of the
// materialized rooted quotient (-1 off the middle tree)
std::vector<int> correspondence_vertex_map(const Tree& t, const Correspondence& c);

}  // namespace arbor
