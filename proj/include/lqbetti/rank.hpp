#ifndef LQBETTI_RANK_HPP
#define LQBETTI_RANK_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lqb {

template <class F>
struct DenseMatrix {
    using Elem = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<Elem> a; // row-major

    DenseMatrix() = default;
    DenseMatrix(int r, int c, const F& field)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, field.zero()) {
        if (r < 0 || c < 0) throw std::invalid_argument("DenseMatrix: negative size");
    }

    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const {
        return a[static_cast<std::size_t>(r) * cols + c];
    }
};

// Gaussian elimination rank, destroying the matrix copy. Rows with a zero
// entry in the pivot column are left untouched, which keeps the sparse
// Koszul differentials cheap.
template <class F>
int rank_serial(DenseMatrix<F> m, const F& K) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!K.is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
        auto inv = K.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            if (K.is_zero(m.at(i, c))) continue;
            auto f = K.mul(m.at(i, c), inv);
            m.at(i, c) = K.zero();
            for (int k = c + 1; k < m.cols; ++k)
                m.at(i, k) = K.sub(m.at(i, k), K.mul(f, m.at(r, k)));
        }
        ++r;
    }
    return r;
}

// Same elimination with the row updates of each pivot step distributed
// across threads.
template <class F>
int rank_parallel(DenseMatrix<F> m, const F& K) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!K.is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
        auto inv = K.inv(m.at(r, c));
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = r + 1; i < m.rows; ++i) {
            if (K.is_zero(m.at(i, c))) continue;
            auto f = K.mul(m.at(i, c), inv);
            m.at(i, c) = K.zero();
            for (int k = c + 1; k < m.cols; ++k)
                m.at(i, k) = K.sub(m.at(i, k), K.mul(f, m.at(r, k)));
        }
        ++r;
    }
    return r;
}

// Threaded elimination only pays off once the update loop has real work.
template <class F>
int rank(const DenseMatrix<F>& m, const F& K) {
    if (m.rows >= 128 && m.cols >= 32) return rank_parallel(m, K);
    return rank_serial(m, K);
}

} // namespace lqb

#endif
