#pragma once

// Exact elimination kernels, templated on the coefficient field.
//
// SparseVec keeps (index, value) pairs sorted by index with no zeros.  The
// Echelon class grows a row space one vector at a time; the pivot of a row is
// its largest index, so the "largest" coordinates are the ones eliminated and
// the smaller ones survive as basis representatives.

#include "plumbing/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace plumbing {

template <typename Scalar>
using SparseVec = std::vector<std::pair<int, Scalar>>;

template <typename Scalar>
SparseVec<Scalar> to_sparse(const std::map<int, Scalar>& m) {
    SparseVec<Scalar> out;
    out.reserve(m.size());
    for (const auto& [k, c] : m)
        if (!is_zero(c)) out.emplace_back(k, c);
    return out;
}

// Accumulate unsorted (index, value) terms into a normalized SparseVec.
template <typename Scalar>
SparseVec<Scalar> normalize(std::vector<std::pair<int, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<Scalar> out;
    for (auto& [k, c] : terms) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, std::move(c));
        if (is_zero(out.back().second)) out.pop_back();
    }
    return out;
}

template <typename Scalar>
class Echelon {
public:
    explicit Echelon(int dimension = 0) : pivot_of_(dimension, -1) {}

    int dimension() const { return static_cast<int>(pivot_of_.size()); }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int col) const { return pivot_of_[col] >= 0; }
    const std::vector<SparseVec<Scalar>>& rows() const { return rows_; }

    // Reduces v against the current rows and keeps it if it is independent.
    // Returns true iff the rank grew.
    bool insert(const SparseVec<Scalar>& v) {
        if (v.empty()) return false;
        if (pivot_of_[v.back().first] < 0) {
            // leading coordinate is new: no reduction needed
            const Scalar lead = v.back().second;
            SparseVec<Scalar> row;
            row.reserve(v.size());
            for (const auto& [k, c] : v) row.emplace_back(k, c / lead);
            pivot_of_[row.back().first] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(row));
            reduced_ = false;
            return true;
        }
        // general case: dense workspace plus a max-heap of touched indices
        if (work_.size() != pivot_of_.size()) {
            work_.assign(pivot_of_.size(), Scalar(0));
            touched_.assign(pivot_of_.size(), 0);
        }
        std::vector<int> heap;
        auto touch = [&](int k) {
            if (!touched_[k]) {
                touched_[k] = 1;
                heap.push_back(k);
                std::push_heap(heap.begin(), heap.end());
            }
        };
        for (const auto& [k, c] : v) {
            work_[k] = c;
            touch(k);
        }
        int lead = -1;
        while (!heap.empty()) {
            std::pop_heap(heap.begin(), heap.end());
            int k = heap.back();
            heap.pop_back();
            touched_[k] = 0;
            if (is_zero(work_[k])) continue;
            int r = pivot_of_[k];
            if (r < 0) {
                lead = k;
                break;
            }
            const Scalar f = work_[k];
            work_[k] = Scalar(0);
            for (const auto& [j, c] : rows_[r]) {
                if (j == k) continue;
                work_[j] -= f * c;
                touch(j);
            }
        }
        if (lead < 0) return false;
        SparseVec<Scalar> row;
        row.reserve(heap.size() + 1);
        for (int k : heap) {
            touched_[k] = 0;
            if (!is_zero(work_[k])) row.emplace_back(k, work_[k]);
            work_[k] = Scalar(0);
        }
        const Scalar top = work_[lead];
        work_[lead] = Scalar(0);
        for (auto& [k, c] : row) c = c / top;
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        row.emplace_back(lead, Scalar(1));
        pivot_of_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }

    // Brings the rows to reduced form: no row touches another row's pivot.
    void interreduce() {
        if (reduced_) return;
        std::vector<int> order;
        for (int c = 0; c < dimension(); ++c)
            if (pivot_of_[c] >= 0) order.push_back(c);
        // ascending pivots: lower rows are already clean when used
        for (int c : order) {
            int r = pivot_of_[c];
            std::map<int, Scalar> acc(rows_[r].begin(), rows_[r].end());
            auto it = acc.find(c);
            while (it != acc.begin()) {
                --it;
                int k = it->first;
                if (pivot_of_[k] < 0) continue;
                Scalar f = it->second;
                axpy(acc, -f, rows_[pivot_of_[k]]);
                it = acc.lower_bound(k);
            }
            rows_[r] = SparseVec<Scalar>(acc.begin(), acc.end());
        }
        reduced_ = true;
    }

    // Remainder of v modulo the row space, expressed on non-pivot coordinates.
    SparseVec<Scalar> normal_form(const SparseVec<Scalar>& v) {
        interreduce();
        std::map<int, Scalar> acc(v.begin(), v.end());
        for (const auto& [k, c] : v) {
            int r = pivot_of_[k];
            if (r < 0) continue;
            Scalar f = acc[k];
            if (!is_zero(f)) axpy(acc, -f, rows_[r]);
        }
        return to_sparse(acc);
    }

    std::vector<int> non_pivots() const {
        std::vector<int> out;
        for (int c = 0; c < dimension(); ++c)
            if (pivot_of_[c] < 0) out.push_back(c);
        return out;
    }

    const SparseVec<Scalar>& row_for_pivot(int col) const { return rows_[pivot_of_[col]]; }

private:
    static void axpy(std::map<int, Scalar>& acc, const Scalar& f, const SparseVec<Scalar>& row) {
        for (const auto& [k, c] : row) {
            auto [it, fresh] = acc.try_emplace(k, f * c);
            if (!fresh) {
                it->second += f * c;
            }
            if (is_zero(it->second)) acc.erase(it);
        }
    }

    std::vector<int> pivot_of_;
    std::vector<SparseVec<Scalar>> rows_;
    bool reduced_ = true;
    std::vector<Scalar> work_;
    std::vector<char> touched_;
};

// Dense exact helpers on Eigen matrices over a field.

template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
    int rank = 0;
    for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < a.rows(); ++r)
            if (!is_zero(a(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        a.row(piv).swap(a.row(rank));
        for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
            if (is_zero(a(r, col))) continue;
            Scalar f = a(r, col) / a(rank, col);
            for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
    const Eigen::Index n = a.rows();
    Scalar det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!is_zero(a(r, col))) { piv = r; break; }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (is_zero(a(r, col))) continue;
            Scalar f = a(r, col) / a(col, col);
            for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

// Solve a x = b for square invertible a; returns false if a is singular.
template <typename Scalar>
bool exact_solve(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
                 Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b,
                 Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!is_zero(a(r, col))) { piv = r; break; }
        if (piv < 0) return false;
        a.row(piv).swap(a.row(col));
        std::swap(b(piv), b(col));
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            Scalar f = a(r, col) / a(col, col);
            for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b(r) -= f * b(col);
        }
    }
    x.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
    return true;
}

} // namespace plumbing
