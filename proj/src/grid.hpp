#pragma once

#include <stdexcept>
#include <vector>

namespace nld {

// Uniform mesh on [0, L] with N nodes, x_j = j * dx, dx = L/(N-1).
class Grid1D {
public:
    Grid1D(double length, long node_count)
        : length_(length), node_count_(node_count) {
        if (!(length > 0.0)) throw std::invalid_argument("Grid1D: length must be positive");
        if (node_count < 3) throw std::invalid_argument("Grid1D: need at least 3 nodes");
    }

    double length() const { return length_; }
    long node_count() const { return node_count_; }
    double spacing() const { return length_ / static_cast<double>(node_count_ - 1); }
    double node(long j) const { return static_cast<double>(j) * spacing(); }

    std::vector<double> nodes() const {
        std::vector<double> x(node_count_);
        for (long j = 0; j < node_count_; ++j) x[j] = node(j);
        x.back() = length_;
        return x;
    }

    bool operator==(const Grid1D&) const = default;

private:
    double length_;
    long node_count_;
};

}  // namespace nld
