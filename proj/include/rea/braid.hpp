// Braid operators, q-exterior powers and their braidings.
//
// Basis convention: e_{i1} (x) ... (x) e_{ik} has index sum_p (i_p - 1) N^{k-p}
// (row-major, first tensor leg most significant).  Indices i are 1-based.
#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

#include "rea/exactq.hpp"

namespace rea {

template <class T>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const DenseMat& x, const DenseMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

using ExactMat = DenseMat<LaurentScalar>;
using GaussMat = DenseMat<GaussLaurent>;

// Matrix algebra on exact matrices; products skip zero entries, which keeps the
// very sparse braid matrices cheap.
template <class T>
DenseMat<T> operator*(const DenseMat<T>& x, const DenseMat<T>& y) {
    if (x.cols != y.rows) throw DomainError("matrix shape mismatch in product");
    DenseMat<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const T& ykj = y(k, j);
                if (!ykj.is_zero()) r(i, j) += xik * ykj;
            }
        }
    return r;
}

template <class T>
DenseMat<T> operator+(const DenseMat<T>& x, const DenseMat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DomainError("matrix shape mismatch in sum");
    DenseMat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

template <class T>
DenseMat<T> operator-(const DenseMat<T>& x, const DenseMat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DomainError("matrix shape mismatch in difference");
    DenseMat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

template <class T>
DenseMat<T> scaled(const DenseMat<T>& x, const T& s) {
    DenseMat<T> r = x;
    for (auto& v : r.a) v = v * s;
    return r;
}

template <class T>
DenseMat<T> kron(const DenseMat<T>& x, const DenseMat<T>& y) {
    DenseMat<T> r(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            if (x(i, j).is_zero()) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l)
                    if (!y(k, l).is_zero()) r(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
        }
    return r;
}

template <class T>
DenseMat<T> transpose(const DenseMat<T>& x) {
    DenseMat<T> r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

Eigen::MatrixXcd to_numeric(const ExactMat& m, double q0);
Eigen::MatrixXcd to_numeric(const GaussMat& m, double q0);
GaussMat to_gauss(const ExactMat& m);

struct BraidPair {
    ExactMat R;
    ExactMat Rinv;
};

// R^(e_k (x) e_l) = q^{-d_kl} e_l (x) e_k + (q^{-1}-q)[l<k] eps_{(l,k]} e_k (x) e_l.
// Without eps all interval signs are 1.  eps entries may be -1, 0 or 1.
BraidPair build_rhat(int N, const std::optional<std::vector<int>>& eps = std::nullopt);

// Product of the interval signs eps_{a+1} ... eps_b (1-based, empty product 1).
int eps_interval(const std::vector<int>& eps, int a, int b);

// Sparse vector in a tensor power, keyed by basis index.
using TensorVec = std::map<long, LaurentScalar>;

struct ExtBasis {
    int N = 0, k = 0;
    std::vector<std::vector<int>> basis;  // increasing index sets, lexicographic
    ExactMat embed;                       // N^k x C(N,k)
    ExactMat project;                     // C(N,k) x N^k, project * embed = 1
    int index_of(const std::vector<int>& I) const;
};

ExtBasis exterior_power(int N, int k);

// All k-subsets of {1..N} in lexicographic order.
std::vector<std::vector<int>> subsets(int N, int k);

// Braiding Lambda^k (x) Lambda^l -> Lambda^l (x) Lambda^k.  Column index is
// I*C(N,l)+J' for e_I (x) e_J', row index I'*C(N,k)+J for e_I' (x) e_J; the
// entry is the coefficient R^{IJ}_{I'J'}.
struct MinorBraiding {
    int N = 0, k = 0, l = 0;
    ExactMat R;     // Lambda^k (x) Lambda^l -> Lambda^l (x) Lambda^k
    ExactMat Rinv;  // Lambda^l (x) Lambda^k -> Lambda^k (x) Lambda^l
    // Coefficient R^{IJ}_{I'J'} with |I|=|J|=k and |I'|=|J'|=l.
    const LaurentScalar& coeff(const std::vector<int>& I, const std::vector<int>& J,
                               const std::vector<int>& Ip, const std::vector<int>& Jp) const;
    ExtBasis ek, el;
};

MinorBraiding minor_braiding(int N, int k, int l);

// Applies R^ (or its inverse) on tensor legs (pos, pos+1), 0-based, of a
// vector in (C^N)^{(x) len}.
TensorVec apply_rhat_legs(const TensorVec& v, int N, int len, int pos, bool inverse,
                          const std::vector<int>& eps = {});

}  // namespace rea
