#include "ucp/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace ucp {

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(k);
    for (int i = 0; i < n(); ++i) out[labels[i]].push_back(i);
    return out;
}

Partition canonicalize(const std::vector<int>& labels) {
    if (labels.empty()) throw InvalidK("partition of an empty point set");
    std::unordered_map<int, int> remap;
    Partition p;
    p.labels.reserve(labels.size());
    for (int lab : labels) {
        auto [it, inserted] = remap.try_emplace(lab, static_cast<int>(remap.size()));
        p.labels.push_back(it->second);
    }
    p.k = static_cast<int>(remap.size());
    return p;
}

Partition from_labels(const std::vector<int>& labels, int k) {
    Partition p = canonicalize(labels);
    if (p.k != k) {
        throw WrongK("expected " + std::to_string(k) + " blocks, labels define " +
                     std::to_string(p.k));
    }
    return p;
}

void for_each_partition(int n, int k,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 1) throw InvalidK("partition of an empty point set");
    if (k < 1 || k > n) {
        throw InvalidK("block count " + std::to_string(k) + " out of range 1.." +
                       std::to_string(n));
    }
    Partition p;
    p.labels.assign(n, 0);
    p.k = k;
    // Depth-first over restricted-growth strings, ascending label at each
    // position, pruned so the final label count is exactly k.
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            visit(p);
            return;
        }
        const int remaining = n - pos;
        // After this position there must still be room to introduce the
        // k - used missing labels.
        const int hi = std::min(used, k - 1);
        for (int lab = 0; lab <= hi; ++lab) {
            const int used_next = std::max(used, lab + 1);
            if (k - used_next > remaining - 1) continue;
            p.labels[pos] = lab;
            self(self, pos + 1, used_next);
        }
    };
    rec(rec, 1, 1);
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 25) {
        throw InvalidK("stirling2 arguments out of range: n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
    }
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (int m = 1; m <= n; ++m) {
        for (int j = m; j >= 1; --j) {
            row[j] = static_cast<std::uint64_t>(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

std::uint64_t bell(int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

}  // namespace ucp
