// SPDX-License-Identifier: Apache-2.0
#pragma once
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gav {

// Deterministic RNG. std::uniform_real_distribution is implementation-defined,
// so uniforms are mapped from raw mt19937_64 bits explicitly.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t bits() { return eng_(); }
    // Uniform in [0,1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Box-Muller; consumes two uniforms per pair, caches the second.
    double normal();
    int uniform_int(int lo, int hi);  // inclusive range

    // Stable derivation of per-task seeds from a session seed.
    static uint64_t derive(uint64_t seed, uint64_t stream);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::string sha256_hex(const uint8_t* data, size_t n);
std::string sha256_hex(const std::vector<uint8_t>& data);
uint64_t sha256_prefix64(const uint8_t* data, size_t n);

// FNV-1a, used for cheap per-chunk payload checksums.
uint32_t fnv1a32(const uint8_t* data, size_t n);

// Runs fn(i) for i in [0,n) on up to `workers` threads. Items are handed out
// in fixed blocks so results must not depend on execution order.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

// Process-wide GEMM thread count (Eigen). Defaults to min(hardware, 8);
// override with the GAV_THREADS environment variable.
void set_gemm_threads(int n);
int gemm_threads();

}  // namespace gav
