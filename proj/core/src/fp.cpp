#include "lcvanish/fp.hpp"

#include <numeric>

namespace lcv {

bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

u64 FpCtx::pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 FpCtx::inv(u64 a) const {
    if (a % p == 0)
        throw std::domain_error("FpCtx::inv: division by zero in Z/" +
                                std::to_string(p) + "Z");
    return pow(a, p - 2);
}

namespace {

// C(n, k) for n, k < p, by the multiplicative formula.
u64 binomial_small(u64 n, u64 k, const FpCtx& fp) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 num = 1, den = 1;
    for (u64 i = 1; i <= k; ++i) {
        num = fp.mul(num, (n - k + i) % fp.p);
        den = fp.mul(den, i % fp.p);
    }
    return fp.mul(num, fp.inv(den));
}

}  // namespace

u64 binomial_mod_p(u64 n, u64 k, const FpCtx& fp) {
    if (k > n) return 0;
    u64 r = 1;
    while (n || k) {
        u64 nd = n % fp.p, kd = k % fp.p;
        if (kd > nd) return 0;
        r = fp.mul(r, binomial_small(nd, kd, fp));
        n /= fp.p;
        k /= fp.p;
    }
    return r;
}

u64 multinomial_mod_p(u64 total, const std::vector<u64>& parts, const FpCtx& fp) {
    u64 sum = std::accumulate(parts.begin(), parts.end(), u64{0});
    if (sum != total)
        throw std::invalid_argument("multinomial_mod_p: parts do not sum to total");
    u64 r = 1, prefix = 0;
    for (u64 q : parts) {
        prefix += q;
        r = fp.mul(r, binomial_mod_p(prefix, q, fp));
        if (r == 0) return 0;
    }
    return r;
}

}  // namespace lcv
