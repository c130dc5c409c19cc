#include "fatpart/ratmat.hpp"

#include <stdexcept>

namespace fatpart {

RatMat RatMat::projector(int n, int l) {
    if (l < 0 || l > n) throw std::invalid_argument("projector rank out of range");
    RatMat m(n);
    for (int i = 0; i < l; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix order mismatch");
    RatMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += aik * o(k, j);
        }
    return out;
}

Rat RatMat::trace() const {
    Rat t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMat::is_idempotent() const { return *this * *this == *this; }

bool RatMat::is_identity() const { return *this == identity(n_); }

RatMat RatMat::inverse() const {
    RatMat a = *this;
    RatMat inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat p = a(col, col);
        for (int j = 0; j < n_; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (int j = 0; j < n_; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> RatMat::power_sums(int K) const {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(K));
    RatMat acc = *this;
    for (int m = 1; m <= K; ++m) {
        out.push_back(acc.trace());
        if (m < K) acc = acc * *this;
    }
    return out;
}

}  // namespace fatpart
