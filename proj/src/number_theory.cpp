#include "lrec/number_theory.hpp"

#include <bit>

namespace lrec {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        int m = 0;
        while (n % d == 0) { n /= d; ++m; }
        out.emplace_back(d, m);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0) return false;
    return true;
}

unsigned big_omega(std::uint64_t n) {
    unsigned total = 0;
    for (const auto& [p, m] : factorize(n)) total += static_cast<unsigned>(m);
    return total;
}

int liouville(std::uint64_t n) { return big_omega(n) % 2 == 0 ? 1 : -1; }

int mobius(std::uint64_t n) {
    int sign = 1;
    for (const auto& [p, m] : factorize(n)) {
        if (m > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int thue_morse_sign(std::uint64_t n) {
    // Letter at rank n equals the bit-parity of n-1.
    return std::popcount(n - 1) % 2 == 0 ? 1 : -1;
}

Rational harmonic_number(unsigned n, unsigned k) {
    Rational h(0);
    for (unsigned m = 1; m <= n; ++m)
        h += 1 / pow_int(rational(m), k);
    return h;
}

std::vector<Rational> bernoulli_numbers(unsigned upto) {
    // sum_{j<=m} C(m+1,j) B_j = 0 for m >= 1, B_0 = 1.
    std::vector<Rational> b;
    b.reserve(upto + 1);
    b.push_back(rational(1));
    for (unsigned m = 1; m <= upto; ++m) {
        Rational sum(0);
        Rational binom(1);  // C(m+1, j), built incrementally
        for (unsigned j = 0; j < m; ++j) {
            sum += binom * b[j];
            binom = binom * rational(static_cast<long>(m + 1 - j)) / rational(static_cast<long>(j + 1));
        }
        b.push_back(-sum / binom);
    }
    return b;
}

}  // namespace lrec
