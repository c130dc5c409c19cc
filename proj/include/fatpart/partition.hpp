#pragma once

#include "fatpart/numeric.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace fatpart {

// Weakly decreasing positive parts; trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "2,2,1,1"; the empty partition is "-".
    static Partition parse(const std::string& s);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    // 1-based, zero beyond the stored length
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0; }

    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionClass {
    bool is_fat = false;
    bool is_even_parts = false;
    bool is_strict = false;
};

PartitionClass classify(const Partition& lam);

// (mu1, mu1, mu2, mu2, ...)
Partition fatten(const Partition& mu);
// Inverse of fatten; domain error on a non-fat partition.
Partition split_fat(const Partition& lam);

struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;
};

FrobeniusCoords frobenius(const Partition& lam);
Partition from_frobenius(const FrobeniusCoords& fc);

struct PartitionConstraints {
    enum class Filter { all, fat, even_parts, strict };
    std::optional<int> max_length;
    std::optional<int> max_part;
    Filter filter = Filter::all;
    int weight_min = 0;
    int weight_max = 0;
};

inline constexpr int kEnumerationWeightCap = 40;

// Graded order: weight ascending, parts lexicographically descending within a
// weight, so (4) precedes (3,1) precedes (2,2). Deterministic.
std::vector<Partition> enumerate_partitions(const PartitionConstraints& c,
                                            int weight_cap = kEnumerationWeightCap);

// Content product (a)_lambda = prod over cells (i,j) of (a + j - i).
template <class T>
T content_pochhammer(const T& a, const Partition& lam) {
    T out = T(1);
    const auto& parts = lam.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 1; j <= parts[i]; ++j)
            out *= a + T(static_cast<int>(j) - static_cast<int>(i) - 1);
    return out;
}

Int hook_product(const Partition& lam);

// Dimension of the S_d irrep; computed by the factorial-ratio formula and
// cross-checked against the hook-length formula.
Int dim_symmetric_group(const Partition& lam);

// s_lambda(p_infinity) = d_lambda / |lambda|!
Rat schur_at_pinfty(const Partition& lam);

}  // namespace fatpart
