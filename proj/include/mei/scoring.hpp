#pragma once

#include <span>
#include <vector>

#include "mei/error.hpp"
#include "mei/tensor.hpp"

// Pure score kernels. All of them are different algebraic routes to the
// same block-term score: a sum over K partitions of local Tucker
// contractions between the head, tail, and relation partitions.
// Everything here is double precision and side-effect free.

namespace mei {

// <h, t, r> = sum_i h_i t_i r_i.
inline double trilinear_score(std::span<const double> h, std::span<const double> t,
                              std::span<const double> r) {
    if (h.size() != t.size() || h.size() != r.size())
        throw ShapeError("trilinear_score: vectors must have equal size");
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * t[i] * r[i];
    return s;
}

// m_xy = sum_z w_xyz * r_z, written into out (C_e * C_e, row-major).
inline void matching_matrix_into(const CoreTensor& core, std::span<const double> r_k,
                                 std::span<double> out) {
    const int ce = core.ce();
    const int cr = core.cr();
    if (r_k.size() != static_cast<std::size_t>(cr))
        throw ShapeError("matching_matrix: relation partition size mismatch");
    if (out.size() != static_cast<std::size_t>(ce) * ce)
        throw ShapeError("matching_matrix: output size mismatch");
    std::span<const double> w = core.flat();
    for (int xy = 0; xy < ce * ce; ++xy) {
        double m = 0.0;
        const double* tube = w.data() + static_cast<std::size_t>(xy) * cr;
        for (int z = 0; z < cr; ++z) m += tube[z] * r_k[z];
        out[xy] = m;
    }
}

// M_{W,r} = W x3 r_k, the relation-generated bilinear map between the
// head and tail partitions.
inline Mat matching_matrix(const CoreTensor& core, std::span<const double> r_k) {
    Mat m(core.ce(), core.ce());
    matching_matrix_into(core, r_k, m.flat());
    return m;
}

// h_k^T M t_k for a row-major ce x ce matrix.
inline double bilinear_form(std::span<const double> h_k, std::span<const double> m,
                            std::span<const double> t_k) {
    const std::size_t ce = h_k.size();
    double s = 0.0;
    for (std::size_t x = 0; x < ce; ++x) {
        double row = 0.0;
        const double* mrow = m.data() + x * ce;
        for (std::size_t y = 0; y < ce; ++y) row += mrow[y] * t_k[y];
        s += h_k[x] * row;
    }
    return s;
}

// One local interaction: W x1 h_k x2 t_k x3 r_k. Contracts mode 3
// first so the matching matrix can be reused by 1-N scoring.
inline double tucker_score_local(const CoreTensor& core, std::span<const double> h_k,
                                 std::span<const double> t_k, std::span<const double> r_k) {
    const int ce = core.ce();
    if (h_k.size() != static_cast<std::size_t>(ce) || t_k.size() != static_cast<std::size_t>(ce))
        throw ShapeError("tucker_score_local: entity partition size mismatch");
    std::vector<double> m(static_cast<std::size_t>(ce) * ce);
    matching_matrix_into(core, r_k, m);
    return bilinear_form(h_k, m, t_k);
}

namespace detail {

inline const CoreTensor& core_at(std::span<const CoreTensor> cores, int k, int num_partitions) {
    if (cores.size() == 1) return cores[0];  // shared core
    if (cores.size() != static_cast<std::size_t>(num_partitions))
        throw ShapeError("mei score: need 1 shared core or K per-partition cores");
    return cores[static_cast<std::size_t>(k)];
}

}  // namespace detail

// Block term score: sum over partitions of local Tucker scores.
// `cores` holds either one shared core or K per-partition cores.
inline double mei_score(const Partitioned& h, const Partitioned& t, const Partitioned& r,
                        std::span<const CoreTensor> cores) {
    const int k = h.partitions();
    if (t.partitions() != k || r.partitions() != k)
        throw ShapeError("mei_score: partition count mismatch between H, T, R");
    if (h.partition_size() != t.partition_size())
        throw ShapeError("mei_score: head/tail partition sizes differ");
    double s = 0.0;
    for (int i = 0; i < k; ++i)
        s += tucker_score_local(detail::core_at(cores, i, k), h.row(i), t.row(i), r.row(i));
    return s;
}

// Sparse bilinear form h^T M^(s) t where M^(s) is the block-diagonal
// matrix of the K matching matrices. The full D x D matrix is never
// materialized; only the diagonal blocks contribute.
inline double block_diagonal_score(std::span<const double> h, std::span<const double> t,
                                   std::span<const Mat> blocks) {
    if (h.size() != t.size()) throw ShapeError("block_diagonal_score: h/t size mismatch");
    std::size_t offset = 0;
    double s = 0.0;
    for (const Mat& block : blocks) {
        if (block.rows() != block.cols()) throw ShapeError("block_diagonal_score: block not square");
        const std::size_t ce = static_cast<std::size_t>(block.rows());
        if (offset + ce > h.size()) throw ShapeError("block_diagonal_score: blocks exceed D");
        s += bilinear_form(h.subspan(offset, ce), block.flat(), t.subspan(offset, ce));
        offset += ce;
    }
    if (offset != h.size()) throw ShapeError("block_diagonal_score: blocks do not cover D");
    return s;
}

// Sparse Tucker score: W^(s) x1 h x2 t x3 r with W^(s) the direct sum
// of the K local cores. Equivalent to mei_score on the partitioned
// views; the dense direct-sum core is never built.
inline double sparse_tucker_score(std::span<const double> h, std::span<const double> t,
                                  std::span<const double> r, int num_partitions,
                                  std::span<const CoreTensor> cores) {
    const CoreTensor& first = detail::core_at(cores, 0, num_partitions);
    Partitioned hp(h, num_partitions, first.ce());
    Partitioned tp(t, num_partitions, first.ce());
    Partitioned rp(r, num_partitions, first.cr());
    return mei_score(hp, tp, rp, cores);
}

}  // namespace mei
