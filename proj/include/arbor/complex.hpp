#pragma once

// Bounded cochain complexes of finite-dimensional vector spaces, chain maps,
// homology with explicit representatives, duals, shifts and cones.

#include "arbor/matrix.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace arbor {

template <class K>
struct VecComplex {
    // dims[i] = dimension in degree min_deg + i; d[i] maps degree min_deg+i to
    // min_deg+i+1 (d has one entry fewer than dims; both may be empty).
    int min_deg = 0;
    std::vector<int> dims;
    std::vector<Mat<K>> d;

    int deg_lo() const { return min_deg; }
    int deg_hi() const { return min_deg + int(dims.size()) - 1; }
    int dim_at(int deg) const {
        int i = deg - min_deg;
        if (i < 0 || i >= int(dims.size())) return 0;
        return dims[i];
    }
    const Mat<K>* diff_at(int deg) const {
        int i = deg - min_deg;
        if (i < 0 || i >= int(d.size())) return nullptr;
        return &d[i];
    }
    bool is_zero() const {
        for (int x : dims)
            if (x) return false;
        return true;
    }

    void validate() const {
        if (d.size() + (dims.empty() ? 0 : 1) != dims.size() && !(dims.empty() && d.empty()))
            throw std::invalid_argument("complex: differential count mismatch");
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i])
                throw std::invalid_argument("complex: differential shape mismatch");
            if (i + 1 < d.size() && !(d[i + 1] * d[i]).is_zero())
                throw std::invalid_argument("complex: d*d != 0");
        }
    }

    long long euler() const {
        long long chi = 0;
        for (size_t i = 0; i < dims.size(); ++i) {
            int deg = min_deg + int(i);
            chi += (deg % 2 == 0) ? dims[i] : -dims[i];
        }
        return chi;
    }
};

// one-dimensional space concentrated in a single degree
template <class K>
VecComplex<K> line_complex(int deg, int dim = 1) {
    VecComplex<K> c;
    c.min_deg = deg;
    c.dims = {dim};
    return c;
}

template <class K>
std::map<int, int> homology_dims(const VecComplex<K>& c) {
    std::map<int, int> out;
    for (int deg = c.deg_lo(); deg <= c.deg_hi(); ++deg) {
        int n = c.dim_at(deg);
        if (n == 0) continue;
        const Mat<K>* dout = c.diff_at(deg);
        const Mat<K>* din = c.diff_at(deg - 1);
        int r_out = dout ? rank(*dout) : 0;
        int r_in = din ? rank(*din) : 0;
        int h = n - r_out - r_in;
        if (h) out[deg] = h;
    }
    return out;
}

// (C^∨)^{-i} = (C^i)^∨ with transposed differentials.
template <class K>
VecComplex<K> dual_complex(const VecComplex<K>& c) {
    VecComplex<K> out;
    out.min_deg = -c.deg_hi();
    out.dims.assign(c.dims.rbegin(), c.dims.rend());
    for (auto it = c.d.rbegin(); it != c.d.rend(); ++it) out.d.push_back(it->transpose());
    return out;
}

template <class K>
VecComplex<K> shift_complex(const VecComplex<K>& c, int s) {
    // (C[s])^i = C^{i+s}: content in degree a moves to degree a - s
    VecComplex<K> out = c;
    out.min_deg -= s;
    return out;
}

// A chain map is a matrix per degree (degrees like the source complex).
template <class K>
struct ChainMap {
    std::map<int, Mat<K>> comps;

    Mat<K> at(int deg, const VecComplex<K>& src, const VecComplex<K>& dst) const {
        auto it = comps.find(deg);
        if (it != comps.end()) return it->second;
        return Mat<K>(dst.dim_at(deg), src.dim_at(deg));
    }
};

template <class K>
void validate_chain_map(const VecComplex<K>& src, const VecComplex<K>& dst,
                        const ChainMap<K>& f) {
    int lo = std::min(src.deg_lo(), dst.deg_lo());
    int hi = std::max(src.deg_hi(), dst.deg_hi());
    for (int deg = lo; deg <= hi; ++deg) {
        Mat<K> fd = f.at(deg, src, dst);
        if (fd.rows() != dst.dim_at(deg) || fd.cols() != src.dim_at(deg))
            throw std::invalid_argument("chain map: component shape mismatch");
        // d_dst f = f d_src
        const Mat<K>* ds = src.diff_at(deg);
        const Mat<K>* dd = dst.diff_at(deg);
        Mat<K> lhs = dd ? (*dd) * fd : Mat<K>(dst.dim_at(deg + 1), src.dim_at(deg));
        Mat<K> fnext = f.at(deg + 1, src, dst);
        Mat<K> rhs = ds ? fnext * (*ds) : Mat<K>(dst.dim_at(deg + 1), src.dim_at(deg));
        if (!(lhs + (-rhs)).is_zero()) throw std::invalid_argument("chain map: does not commute");
    }
}

// Homology with explicit representative cycles, supporting induced maps.
template <class K>
class Homology {
public:
    explicit Homology(const VecComplex<K>& c) : cx_(c) {
        for (int deg = c.deg_lo(); deg <= c.deg_hi(); ++deg) {
            int n = c.dim_at(deg);
            if (n == 0) continue;
            const Mat<K>* dout = c.diff_at(deg);
            Mat<K> cycles = dout ? kernel_basis(*dout) : Mat<K>::identity(n);
            const Mat<K>* din = c.diff_at(deg - 1);
            // columns of din span the boundaries; extend to the cycles
            Mat<K> reps(n, 0);
            {
                SparseEliminator<K> elim;
                if (din)
                    for (int j = 0; j < din->cols(); ++j) {
                        SparseVec<K> col;
                        for (int i = 0; i < n; ++i)
                            if (!(*din)(i, j).is_zero()) col.emplace_back(i, (*din)(i, j));
                        elim.add_row(std::move(col));
                    }
                std::vector<int> chosen;
                for (int j = 0; j < cycles.cols(); ++j) {
                    SparseVec<K> col;
                    for (int i = 0; i < n; ++i)
                        if (!cycles(i, j).is_zero()) col.emplace_back(i, cycles(i, j));
                    if (elim.add_row(std::move(col))) chosen.push_back(j);
                }
                Mat<K> r(n, int(chosen.size()));
                for (size_t jj = 0; jj < chosen.size(); ++jj)
                    for (int i = 0; i < n; ++i) r(i, int(jj)) = cycles(i, chosen[jj]);
                reps = r;
            }
            if (reps.cols() == 0) continue;
            int bcols = din ? din->cols() : 0;
            Mat<K> solvemat(n, bcols + reps.cols());
            if (din)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < bcols; ++j) solvemat(i, j) = (*din)(i, j);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < reps.cols(); ++j) solvemat(i, bcols + j) = reps(i, j);
            reps_[deg] = reps;
            solve_[deg] = solvemat;
            bcols_[deg] = bcols;
        }
    }

    std::map<int, int> dims() const {
        std::map<int, int> out;
        for (const auto& [deg, r] : reps_) out[deg] = r.cols();
        return out;
    }

    int dim_at(int deg) const {
        auto it = reps_.find(deg);
        return it == reps_.end() ? 0 : it->second.cols();
    }

    // representative cycle of the i-th class in the given degree
    std::vector<K> representative(int deg, int i) const {
        const Mat<K>& r = reps_.at(deg);
        std::vector<K> v(r.rows());
        for (int k = 0; k < r.rows(); ++k) v[k] = r(k, i);
        return v;
    }

    // coordinates of a cycle's class in the representative basis
    std::vector<K> class_of(int deg, const std::vector<K>& cycle) const {
        auto it = solve_.find(deg);
        if (it == solve_.end()) {
            // homology vanishes; the class is zero (cycle must be a boundary)
            return {};
        }
        std::vector<K> x;
        if (!solve(it->second, cycle, x))
            throw std::logic_error("homology: vector is not a cycle of this complex");
        int b = bcols_.at(deg);
        return std::vector<K>(x.begin() + b, x.end());
    }

private:
    VecComplex<K> cx_;
    std::map<int, Mat<K>> reps_;
    std::map<int, Mat<K>> solve_;
    std::map<int, int> bcols_;
};

// Matrix of the map induced on homology in a fixed degree.
template <class K>
Mat<K> induced_map(const Homology<K>& hsrc, const Homology<K>& hdst,
                   const VecComplex<K>& src, const VecComplex<K>& dst, const ChainMap<K>& f,
                   int deg) {
    int hs = hsrc.dim_at(deg), hd = hdst.dim_at(deg);
    Mat<K> out(hd, hs);
    if (hs == 0 || hd == 0) return out;
    Mat<K> fd = f.at(deg, src, dst);
    for (int j = 0; j < hs; ++j) {
        std::vector<K> rep = hsrc.representative(deg, j);
        std::vector<K> img(dst.dim_at(deg));
        for (int i = 0; i < int(img.size()); ++i)
            for (int k = 0; k < int(rep.size()); ++k) img[i] += fd(i, k) * rep[k];
        std::vector<K> cls = hdst.class_of(deg, img);
        for (int i = 0; i < hd; ++i) out(i, j) = cls[i];
    }
    return out;
}

}  // namespace arbor
