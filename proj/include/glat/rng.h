#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace glat {

// Deterministic, platform-independent RNG. splitmix64 core; every stream is
// derived from (seed, name, index...) so any point of the pipeline can be
// reproduced without replaying the streams that came before it.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng from(std::uint64_t seed, std::string_view name) {
        return Rng(mix(seed, hash_name(name)));
    }
    static Rng from(std::uint64_t seed, std::string_view name, std::uint64_t index) {
        return Rng(mix(mix(seed, hash_name(name)), index));
    }

    std::uint64_t state() const { return state_; }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Multiply-shift; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Uniform in [0, 1) with 24 bits, exact in float.
    float next_float() {
        return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f;
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Box-Muller with a cached spare.
    float next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - next_double();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = static_cast<float>(r * std::sin(t));
        has_spare_ = true;
        return static_cast<float>(r * std::cos(t));
    }

    // Sample k distinct values from [0, n) via partial Fisher-Yates.
    std::vector<int> sample_without_replacement(int n, int k);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t hash_name(std::string_view name) {
        // FNV-1a 64
        std::uint64_t h = 1469598103934665603ULL;
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        return h;
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool has_spare_ = false;
    float spare_ = 0.0f;
};

}  // namespace glat
