#pragma once

#include "fatpart/numeric.hpp"

#include <vector>

namespace fatpart {

// Dense square matrix over the rationals; sized for desk-scale exact work.
class RatMat {
public:
    RatMat() = default;
    explicit RatMat(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), Rat(0)) {}

    static RatMat identity(int n) {
        RatMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    // diag(1,...,1,0,...,0) with l ones
    static RatMat projector(int n, int l);

    int order() const { return n_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const RatMat& x, const RatMat& y) = default;

    RatMat operator*(const RatMat& o) const;
    Rat trace() const;
    bool is_idempotent() const;
    bool is_identity() const;
    // Gauss-Jordan; throws on a singular matrix.
    RatMat inverse() const;

    // tr(M^m) for m = 1..K
    std::vector<Rat> power_sums(int K) const;

private:
    int n_ = 0;
    std::vector<Rat> a_;
};

}  // namespace fatpart
