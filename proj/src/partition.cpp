#include "fatpart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fatpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad partition string '" + s + "'");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

PartitionClass classify(const Partition& lam) {
    PartitionClass out;
    const auto& p = lam.parts();
    out.is_fat = true;
    if (p.size() % 2 != 0) out.is_fat = false;
    for (size_t i = 0; out.is_fat && i + 1 < p.size(); i += 2)
        if (p[i] != p[i + 1]) out.is_fat = false;
    out.is_even_parts = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    out.is_strict = true;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) out.is_strict = false;
    return out;
}

Partition fatten(const Partition& mu) {
    std::vector<int> out;
    out.reserve(2 * mu.parts().size());
    for (int p : mu.parts()) {
        out.push_back(p);
        out.push_back(p);
    }
    return Partition(std::move(out));
}

Partition split_fat(const Partition& lam) {
    if (!classify(lam).is_fat)
        throw std::domain_error("split_fat: " + lam.to_string() + " is not a fat partition");
    std::vector<int> out;
    const auto& p = lam.parts();
    for (size_t i = 0; i < p.size(); i += 2) out.push_back(p[i]);
    return Partition(std::move(out));
}

FrobeniusCoords frobenius(const Partition& lam) {
    FrobeniusCoords fc;
    Partition t = lam.conjugate();
    for (int i = 1; i <= lam.length() && lam.part(i) >= i; ++i) {
        fc.arms.push_back(lam.part(i) - i);
        fc.legs.push_back(t.part(i) - i);
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
    if (fc.arms.size() != fc.legs.size())
        throw std::invalid_argument("frobenius coordinates must have equal lengths");
    int d = static_cast<int>(fc.arms.size());
    int max_len = 0;
    for (int i = 0; i < d; ++i) max_len = std::max(max_len, fc.legs[static_cast<size_t>(i)] + i + 1);
    std::vector<int> parts(static_cast<size_t>(std::max(max_len, d)), 0);
    for (int i = 0; i < d; ++i) parts[static_cast<size_t>(i)] = fc.arms[static_cast<size_t>(i)] + i + 1;
    for (int i = 0; i < d; ++i) {
        int leg = fc.legs[static_cast<size_t>(i)];
        // column i+1 has length leg + i + 1: rows i+1..leg+i+1 reach column i+1
        for (int r = i + 1; r <= leg + i; ++r)
            parts[static_cast<size_t>(r)] = std::max(parts[static_cast<size_t>(r)], i + 1);
    }
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                   const PartitionConstraints& c, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition lam(cur);
        bool keep = true;
        switch (c.filter) {
            case PartitionConstraints::Filter::all: break;
            case PartitionConstraints::Filter::fat: keep = classify(lam).is_fat; break;
            case PartitionConstraints::Filter::even_parts: keep = classify(lam).is_even_parts; break;
            case PartitionConstraints::Filter::strict: keep = classify(lam).is_strict; break;
        }
        if (keep) out.push_back(std::move(lam));
        return;
    }
    if (c.max_length && static_cast<int>(cur.size()) >= *c.max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, cur, c, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const PartitionConstraints& c, int weight_cap) {
    if (c.weight_min < 0) throw std::invalid_argument("weight range lower bound must be >= 0");
    if (c.weight_max > weight_cap)
        throw std::invalid_argument("enumeration weight " + std::to_string(c.weight_max) +
                                    " exceeds the cap " + std::to_string(weight_cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int w = c.weight_min; w <= c.weight_max; ++w)
        enumerate_rec(w, c.max_part.value_or(w == 0 ? 1 : w), cur, c, out);
    return out;
}

Int hook_product(const Partition& lam) {
    Int prod = 1;
    Partition t = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            prod *= (lam.part(i) - j) + (t.part(j) - i) + 1;
    return prod;
}

Int dim_symmetric_group(const Partition& lam) {
    const int n = lam.length();
    Int num = factorial(lam.weight());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) num *= lam.part(i) - lam.part(j) - i + j;
    Int den = 1;
    for (int i = 1; i <= n; ++i) den *= factorial(lam.part(i) - i + n);
    if (num % den != 0) throw std::logic_error("dimension formula produced a non-integer");
    Int d = num / den;
    Int hooks = hook_product(lam);
    if (d * hooks != factorial(lam.weight()))
        throw std::logic_error("dimension formula disagrees with the hook-length formula for " +
                               lam.to_string());
    return d;
}

Rat schur_at_pinfty(const Partition& lam) {
    return Rat(dim_symmetric_group(lam), factorial(lam.weight()));
}

}  // namespace fatpart
