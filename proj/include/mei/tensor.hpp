#pragma once

#include <span>
#include <vector>

#include "mei/error.hpp"

namespace mei {

// Dense third-order tensor of shape C_e x C_e x C_r, row-major.
// Entry (x, y, z) weights the product h_x * t_y * r_z of one local
// interaction, so the tensor fully defines the interaction mechanism.
class CoreTensor {
public:
    CoreTensor() = default;
    CoreTensor(int ce, int cr) : ce_(ce), cr_(cr), data_(static_cast<std::size_t>(ce) * ce * cr, 0.0) {
        if (ce < 1 || cr < 1) throw ShapeError("CoreTensor: sizes must be >= 1");
    }

    int ce() const { return ce_; }
    int cr() const { return cr_; }

    double& operator()(int x, int y, int z) {
        return data_[(static_cast<std::size_t>(x) * ce_ + y) * cr_ + z];
    }
    double operator()(int x, int y, int z) const {
        return data_[(static_cast<std::size_t>(x) * ce_ + y) * cr_ + z];
    }

    std::span<double> flat() { return data_; }
    std::span<const double> flat() const { return data_; }
    std::size_t size() const { return data_.size(); }

private:
    int ce_ = 0;
    int cr_ = 0;
    std::vector<double> data_;
};

// K x C view over a contiguous embedding vector of size D = K*C.
// Row k is partition k; the view does not own the data.
class Partitioned {
public:
    Partitioned(std::span<const double> data, int k, int c) : data_(data), k_(k), c_(c) {
        if (k < 1 || c < 1 || data.size() != static_cast<std::size_t>(k) * c)
            throw ShapeError("Partitioned: D must equal K*C");
    }

    int partitions() const { return k_; }
    int partition_size() const { return c_; }

    std::span<const double> row(int k) const {
        return data_.subspan(static_cast<std::size_t>(k) * c_, c_);
    }

    std::span<const double> flat() const { return data_; }

private:
    std::span<const double> data_;
    int k_;
    int c_;
};

// Small dense row-major matrix, used for matching matrices.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<double> flat() { return data_; }
    std::span<const double> flat() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace mei
