#pragma once

// Dense and sparse exact linear algebra over an abstract field K.
// K must provide: default ctor (= 0), K(long long), +=, -=, *=, /=, unary -,
// ==, is_zero(), inverse(), str(), static zero()/one().

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arbor {

template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero()) continue;
                    r(i, j) += v * o(k, j);
                }
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }

    Mat scaled(const K& c) const {
        Mat r = *this;
        for (auto& v : r.a_) v *= c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

// Row echelon form in place; returns pivot columns.  Destructive.
template <class K>
std::vector<int> row_echelon(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        K inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return int(row_echelon(m).size());
}

// Basis of the right kernel {x : m x = 0}, as columns of the result.
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
    std::vector<int> pivots = row_echelon(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int k = n - int(pivots.size());
    Mat<K> ker(n, k);
    int col = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ker(free, col) = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) ker(pivots[r], col) = -m(int(r), free);
        ++col;
    }
    return ker;
}

// Solve m x = b; returns false if inconsistent.  x gets one solution.
template <class K>
bool solve(Mat<K> m, std::vector<K> b, std::vector<K>& x) {
    assert(int(b.size()) == m.rows());
    int n = m.cols();
    Mat<K> aug(m.rows(), n + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<int> pivots = row_echelon(aug);
    if (!pivots.empty() && pivots.back() == n) return false;
    x.assign(n, K());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(int(r), n);
    return true;
}

// Sparse vector: sorted (index, value) pairs, values nonzero.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

// Incremental sparse row-reducer: feed rows one at a time, tracks rank.
// Rows are reduced against stored pivot rows (keyed by leading index).
template <class K>
class SparseEliminator {
public:
    // Returns true if the row added a new pivot.
    bool add_row(SparseVec<K> row) {
        normalize(row);
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = pivot_by_lead_.find(lead);
            if (it == pivot_by_lead_.end()) {
                K inv = row.front().second.inverse();
                for (auto& e : row) e.second *= inv;
                pivot_by_lead_.emplace(lead, std::move(row));
                return true;
            }
            axpy(row, -row.front().second, it->second);
        }
        return false;
    }

    int rank() const { return int(pivot_by_lead_.size()); }

private:
    static void normalize(SparseVec<K>& row) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec<K> out;
        out.reserve(row.size());
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(e);
            if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        }
        row.swap(out);
    }

    // row += c * other (both sorted); leading entry of row is cancelled.
    static void axpy(SparseVec<K>& row, const K& c, const SparseVec<K>& other) {
        SparseVec<K> out;
        out.reserve(row.size() + other.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || other[j].first < row[i].first) {
                K v = c * other[j].second;
                if (!v.is_zero()) out.emplace_back(other[j].first, std::move(v));
                ++j;
            } else {
                K v = row[i].second + c * other[j].second;
                if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
                ++i; ++j;
            }
        }
        row.swap(out);
    }

    std::unordered_map<int, SparseVec<K>> pivot_by_lead_;
};

}  // namespace arbor
