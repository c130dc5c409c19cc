#pragma once

#include "fatpart/ensembles.hpp"
#include "fatpart/numeric.hpp"
#include "fatpart/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fatpart {

struct VerificationReport {
    std::string case_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<Rat> exact_value;
    std::optional<MCEstimate> mc;
    bool pass = false;
    std::string criterion;
    long runtime_ms = 0;
    uint64_t seed = 0;
};

// Canonical line record: stable bytes for fixed (seed, thread cap); runtime is
// deliberately not part of it.
std::string report_record(const VerificationReport& r);
std::string report_human(const VerificationReport& r);

struct VerifyOptions {
    long samples = 0;  // 0: per-case default
    uint64_t seed = 20240801;
    int threads = 0;  // 0: FATPART_THREADS or hardware
    bool quick = false;
    // narrowing for the ensemble sweep cases
    std::optional<Partition> lambda;
    std::optional<int> k;  // symplectic half-order
    std::optional<int> N;  // orthogonal / quaternion order
    std::optional<long> L;
    // chain-equalities parameter overrides
    std::optional<int> l;
    std::optional<Rat> a;
    std::optional<Rat> x;
};

const std::vector<std::string>& verify_case_names();

// Runs one named case (one case usually emits several report lines, one per
// sub-check). Throws on an unknown name.
std::vector<VerificationReport> run_verify_case(const std::string& name, const VerifyOptions& opt);

std::vector<VerificationReport> run_verify_all(const VerifyOptions& opt);

inline bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace fatpart
