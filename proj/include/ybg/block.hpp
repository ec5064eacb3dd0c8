#pragma once

#include <numeric>
#include <vector>

#include "ybg/matrix.hpp"

namespace ybg {

/// Block partition of a matrix: positive block heights/widths summing to the
/// matrix dimensions.
struct BlockPartition {
    std::vector<std::size_t> row_blocks;
    std::vector<std::size_t> col_blocks;

    std::size_t total_rows() const {
        return std::accumulate(row_blocks.begin(), row_blocks.end(), std::size_t{0});
    }
    std::size_t total_cols() const {
        return std::accumulate(col_blocks.begin(), col_blocks.end(), std::size_t{0});
    }
};

inline void validate_partition(const BlockPartition& p, const DenseMatrix& m) {
    if (p.row_blocks.empty() || p.col_blocks.empty())
        throw std::invalid_argument("partition: empty block list");
    for (std::size_t b : p.row_blocks)
        if (b == 0) throw std::invalid_argument("partition: zero-size row block");
    for (std::size_t b : p.col_blocks)
        if (b == 0) throw std::invalid_argument("partition: zero-size column block");
    if (p.total_rows() != m.rows() || p.total_cols() != m.cols())
        throw std::invalid_argument("partition: block sizes do not sum to matrix shape");
}

/// Partition of an n^2 x n^2 matrix into an n x n grid of n x n blocks.
inline BlockPartition canonical_partition(std::size_t dim) {
    std::size_t n = 0;
    while ((n + 1) * (n + 1) <= dim) ++n;
    if (n * n != dim)
        throw std::invalid_argument("canonical_partition: dimension is not a perfect square");
    return BlockPartition{std::vector<std::size_t>(n, n), std::vector<std::size_t>(n, n)};
}

/// Trivial partition: the whole matrix as a single block.
inline BlockPartition single_block(const DenseMatrix& m) {
    return BlockPartition{{m.rows()}, {m.cols()}};
}

struct PartitionedMatrix {
    DenseMatrix matrix;
    BlockPartition partition;

    PartitionedMatrix(DenseMatrix m, BlockPartition p)
        : matrix(std::move(m)), partition(std::move(p)) {
        validate_partition(partition, matrix);
    }
};

inline DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

namespace detail {

inline std::vector<std::size_t> offsets(const std::vector<std::size_t>& blocks) {
    std::vector<std::size_t> off(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) off[i + 1] = off[i] + blocks[i];
    return off;
}

/// For each scalar index, the block it falls in and the offset within it.
struct IndexMap {
    std::vector<std::size_t> block;
    std::vector<std::size_t> within;
    std::vector<std::size_t> off;  // block start offsets
};

inline IndexMap index_map(const std::vector<std::size_t>& blocks) {
    IndexMap m;
    m.off = offsets(blocks);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t w = 0; w < blocks[b]; ++w) {
            m.block.push_back(b);
            m.within.push_back(w);
        }
    return m;
}

}  // namespace detail

/// Tracy-Singh block Kronecker product: block (i,k),(j,l) of the result is
/// A_ij (x) B_kl, with outer index running over A's blocks. The result carries
/// the induced partition, flattened in the same (outer, inner) order, so the
/// box product of canonically partitioned matrices is canonically partitioned.
inline PartitionedMatrix tracy_singh(const PartitionedMatrix& a, const PartitionedMatrix& b) {
    const DenseMatrix& A = a.matrix;
    const DenseMatrix& B = b.matrix;
    const auto ar = detail::index_map(a.partition.row_blocks);
    const auto ac = detail::index_map(a.partition.col_blocks);
    const auto br = detail::index_map(b.partition.row_blocks);
    const auto bc = detail::index_map(b.partition.col_blocks);
    const std::size_t P = B.rows(), Q = B.cols();

    DenseMatrix out(A.rows() * P, A.cols() * Q);
    for (std::size_t x = 0; x < A.rows(); ++x) {
        const std::size_t i = ar.block[x];
        const std::size_t mi = a.partition.row_blocks[i];
        for (std::size_t y = 0; y < A.cols(); ++y) {
            const Complex axy = A(x, y);
            if (axy == Complex{0.0, 0.0}) continue;
            const std::size_t j = ac.block[y];
            const std::size_t nj = a.partition.col_blocks[j];
            for (std::size_t u = 0; u < P; ++u) {
                const std::size_t k = br.block[u];
                const std::size_t pk = b.partition.row_blocks[k];
                const std::size_t row =
                    ar.off[i] * P + mi * br.off[k] + ar.within[x] * pk + br.within[u];
                for (std::size_t v = 0; v < Q; ++v) {
                    const Complex bv = B(u, v);
                    if (bv == Complex{0.0, 0.0}) continue;
                    const std::size_t l = bc.block[v];
                    const std::size_t ql = b.partition.col_blocks[l];
                    const std::size_t col =
                        ac.off[j] * Q + nj * bc.off[l] + ac.within[y] * ql + bc.within[v];
                    out.at(row, col) = axy * bv;
                }
            }
        }
    }

    BlockPartition induced;
    for (std::size_t i = 0; i < a.partition.row_blocks.size(); ++i)
        for (std::size_t k = 0; k < b.partition.row_blocks.size(); ++k)
            induced.row_blocks.push_back(a.partition.row_blocks[i] * b.partition.row_blocks[k]);
    for (std::size_t j = 0; j < a.partition.col_blocks.size(); ++j)
        for (std::size_t l = 0; l < b.partition.col_blocks.size(); ++l)
            induced.col_blocks.push_back(a.partition.col_blocks[j] * b.partition.col_blocks[l]);
    return PartitionedMatrix(std::move(out), std::move(induced));
}

/// Commutation matrix K(m,n) of size mn: K vec_col(A) = vec_col(A^T) for m x n A,
/// and B (x) A = K(m,n) (A (x) B) K(s,t) for A in C^{n x s}, B in C^{m x t}.
inline DenseMatrix commutation_matrix(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("commutation_matrix: zero dimension");
    DenseMatrix k(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) k.at(i * n + j, j * m + i) = 1.0;
    return k;
}

/// Permutation on C^n (x) C^n (x) C^m (x) C^m exchanging the middle two factors:
/// sends e_x (x) e_y (x) e_x' (x) e_y' (ordered as (C^n (x) C^m)^(x)2) to the
/// regrouped basis vector of C^n (x) C^n (x) C^m (x) C^m.
inline DenseMatrix flip_middle(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("flip_middle: zero dimension");
    const std::size_t dim = (n * m) * (n * m);
    DenseMatrix f(dim, dim);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t xp = 0; xp < n; ++xp)
                for (std::size_t yp = 0; yp < m; ++yp) {
                    const std::size_t src = ((x * m + y) * n + xp) * m + yp;
                    const std::size_t dst = ((x * n + xp) * m + y) * m + yp;
                    f.at(dst, src) = 1.0;
                }
    return f;
}

/// Canonical box product realized as F^{-1} (a (x) b) F with the flip
/// permutation. Exact entry permutation: equal to tracy_singh with canonical
/// partitions entry for entry. Inputs must be n^2 x n^2 and m^2 x m^2.
inline DenseMatrix box_via_conjugation(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = canonical_partition(a.rows()).row_blocks.size();
    const std::size_t m = canonical_partition(b.rows()).row_blocks.size();
    if (!a.square() || !b.square())
        throw std::invalid_argument("box_via_conjugation: inputs must be square");
    const DenseMatrix f = flip_middle(n, m);
    // f is a permutation matrix, so its inverse is its transpose and the
    // conjugation only permutes entries (multiplications by 1, additions of 0).
    return matmul(matmul(f.transpose(), kronecker(a, b)), f);
}

}  // namespace ybg
