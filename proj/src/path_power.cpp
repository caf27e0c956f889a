#include "radiopath/path_power.hpp"

#include <cstdlib>
#include <string>

namespace radiopath {

PathPowerGraph::PathPowerGraph(int n_in, int m_in) : n(n_in), m(m_in) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    if (m < 1) throw std::invalid_argument("m must be a positive integer");
    if (m > n)
        throw std::invalid_argument(
            "m exceeds n; note that P_n^m = P_n^n for m >= n, resubmit with m = n");
}

int PathPowerGraph::distance(int u, int v) const {
    if (!contains(u) || !contains(v))
        throw std::invalid_argument("vertex out of range 0.." + std::to_string(n));
    const int gap = std::abs(u - v);
    return (gap + m - 1) / m;
}

int PathPowerGraph::diameter() const { return (n + m - 1) / m; }

PathPowerGraph build_graph(int n, int m) { return PathPowerGraph(n, m); }

Layering::Layering(const PathPowerGraph& g) : n_(g.n), m_(g.m) {
    diam_ = g.diameter();
    q_ = diam_ / 2;
    central_lo_ = q_ * m_;
    central_hi_ = diam_ % 2 == 0 ? central_lo_ : central_lo_ + m_;

    layer_of_.resize(n_ + 1);
    layers_.assign(q_ + 1, {});
    for (int v = 0; v <= n_; ++v) {
        int f = 0;
        if (v < central_lo_)
            f = (central_lo_ - v + m_ - 1) / m_;
        else if (v > central_hi_)
            f = (v - central_hi_ + m_ - 1) / m_;
        layer_of_[v] = f;
        layers_[f].push_back(v);  // positions visited in order, so layers stay sorted
    }

    s_layer_ = (n_ + 1) - (2 * q_ - 1) * m_ - static_cast<int>(layers_[0].size());
    s_mod_ = n_ % m_;
}

int Layering::layer_of(int v) const {
    if (v < 0 || v > n_) throw std::invalid_argument("vertex out of range");
    return layer_of_[v];
}

int Layering::central_count() const { return central_hi_ - central_lo_ + 1; }

int Layering::left_count() const { return q_ * m_; }

int Layering::right_count() const { return n_ - central_hi_; }

int Layering::right_cols(int i) const {
    if (i < 1 || i > q_) throw std::invalid_argument("layer row out of range");
    return i < q_ ? m_ : s_layer_;
}

int Layering::central(int t) const {
    if (t < 0 || t > central_hi_ - central_lo_)
        throw std::invalid_argument("no central vertex c_" + std::to_string(t));
    return central_lo_ + t;
}

int Layering::left(int i, int j) const {
    if (i < 1 || i > q_ || j < 1 || j > m_)
        throw std::invalid_argument("no left vertex l_{" + std::to_string(i) + "," +
                                    std::to_string(j) + "}");
    return central_lo_ - (i - 1) * m_ - j;
}

int Layering::right(int i, int j) const {
    if (i < 1 || i > q_ || j < 1 || j > right_cols(i))
        throw std::invalid_argument("no right vertex r_{" + std::to_string(i) + "," +
                                    std::to_string(j) + "}");
    return central_hi_ + (i - 1) * m_ + j;
}

bool Layering::is_left(int v) const {
    if (v < 0 || v > n_) throw std::invalid_argument("vertex out of range");
    return v < central_lo_;
}

bool Layering::is_right(int v) const {
    if (v < 0 || v > n_) throw std::invalid_argument("vertex out of range");
    return v > central_hi_;
}

Layering build_layering(const PathPowerGraph& g) { return Layering(g); }

}  // namespace radiopath
