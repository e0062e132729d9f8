#ifndef LQBETTI_BETTI_HPP
#define LQBETTI_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lqb {

// Sparse table (i, j) -> beta_{i,j}; absent entries are zero.
class BettiTable {
public:
    using Key = std::pair<int, int>; // (homological degree i, internal degree j)

    void add(int i, int j, std::int64_t v);
    std::int64_t get(int i, int j) const;
    const std::map<Key, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int max_homological_degree() const; // max i; -1 when empty
    int max_internal_degree() const;    // max j; -1 when empty
    int min_internal_degree() const;    // min j; -1 when empty
    int regularity() const;             // max j - i; -1 when empty

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
    std::map<Key, std::int64_t> entries_;
};

std::int64_t binomial(int n, int k); // 0 when k < 0 or k > n

// Field-independent content of a linear-quotient certificate: the generator
// degrees d_p, the colon ranks n_p (minimal number of linear generators of
// <f_1,...,f_{p-1}> : f_p), and whether the system was certified minimal.
struct CertificateCore {
    std::vector<int> degrees;
    std::vector<int> ranks;
    bool minimal = false;

    std::size_t steps() const { return degrees.size(); }
};

// beta_{i,i+j} = sum over steps p with d_p = j of C(n_p, i).
// Valid only for minimal generating systems; non-minimal certificates are
// rejected (the formula's hypothesis is essential, not a formality).
BettiTable betti_from_certificate(const CertificateCore& cert);

int regularity(const CertificateCore& cert);  // max d_p
int projdim(const CertificateCore& cert);     // max n_p
std::int64_t total_betti(const CertificateCore& cert, int i); // sum C(n_p, i)

// Fold one generator of degree d whose colon has rank r into a table:
// adds C(r, i) at (i, i+d) for i = 0..r.
BettiTable incremental_betti(const BettiTable& prev, int d, int r);

} // namespace lqb

#endif
