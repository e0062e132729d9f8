#include "lqbetti/betti.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqb {

void BettiTable::add(int i, int j, std::int64_t v) {
    if (v == 0) return;
    auto it = entries_.find({i, j});
    if (it == entries_.end()) {
        entries_.emplace(Key{i, j}, v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

std::int64_t BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_homological_degree() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
}

int BettiTable::max_internal_degree() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.second);
    return m;
}

int BettiTable::min_internal_degree() const {
    if (entries_.empty()) return -1;
    int m = entries_.begin()->first.second;
    for (const auto& [k, v] : entries_) m = std::min(m, k.second);
    return m;
}

int BettiTable::regularity() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.second - k.first);
    return m;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

static void require_minimal(const CertificateCore& cert) {
    if (!cert.minimal)
        throw std::invalid_argument(
            "certificate of a non-minimal system: Betti/regularity/projdim "
            "formulas require a minimal generating system");
    if (cert.degrees.empty() || cert.degrees.size() != cert.ranks.size())
        throw std::invalid_argument("malformed certificate");
}

BettiTable betti_from_certificate(const CertificateCore& cert) {
    require_minimal(cert);
    BettiTable t;
    for (std::size_t p = 0; p < cert.steps(); ++p) {
        int j = cert.degrees[p];
        int n = cert.ranks[p];
        for (int i = 0; i <= n; ++i) t.add(i, i + j, binomial(n, i));
    }
    return t;
}

int regularity(const CertificateCore& cert) {
    require_minimal(cert);
    return *std::max_element(cert.degrees.begin(), cert.degrees.end());
}

int projdim(const CertificateCore& cert) {
    require_minimal(cert);
    return *std::max_element(cert.ranks.begin(), cert.ranks.end());
}

std::int64_t total_betti(const CertificateCore& cert, int i) {
    require_minimal(cert);
    std::int64_t s = 0;
    for (int n : cert.ranks) s += binomial(n, i);
    return s;
}

BettiTable incremental_betti(const BettiTable& prev, int d, int r) {
    if (r < 0) throw std::invalid_argument("incremental_betti: negative rank");
    if (d < 1) throw std::invalid_argument("incremental_betti: degree must be >= 1");
    BettiTable t = prev;
    for (int i = 0; i <= r; ++i) t.add(i, i + d, binomial(r, i));
    return t;
}

} // namespace lqb
