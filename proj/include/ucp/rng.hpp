#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ucp {

// Deterministic cross-platform randomness for fixtures and batteries.
// std::mt19937_64 has a portable bit stream; the standard distributions do
// not, so draws are reduced by plain modulo. The bias is negligible for the
// tiny bounds used here and, more importantly, identical everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // Uniform in [0, bound); bound >= 1.
    int below(int bound) {
        return static_cast<int>(gen_() % static_cast<std::uint64_t>(bound));
    }

    // Uniform in [lo, hi] inclusive.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    // True with probability tenths/10.
    bool chance_tenths(int tenths) { return below(10) < tenths; }

    // k distinct indices from {0..n-1} (a Fisher-Yates prefix), in draw order.
    std::vector<int> distinct(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < k; ++i) {
            const int j = i + below(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace ucp
