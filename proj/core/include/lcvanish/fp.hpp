#ifndef LCVANISH_FP_HPP
#define LCVANISH_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lcv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 m);

/// Prime-field context. Residues are plain u64 values in [0, p);
/// the modulus lives here, not in the scalars.
struct FpCtx {
    u64 p;

    explicit FpCtx(u64 prime) : p(prime) {
        if (!is_prime(p))
            throw std::invalid_argument("FpCtx: modulus " + std::to_string(p) +
                                        " is not prime");
    }

    u64 reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<u64>(r);
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>((unsigned __int128)a * b % p);
    }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;  // throws on a == 0
};

/// C(n, k) mod p via Lucas' theorem: digit-wise binomials in base p.
u64 binomial_mod_p(u64 n, u64 k, const FpCtx& fp);

/// (total; parts)! = total! / prod parts_i! mod p.
/// Requires sum(parts) == total. Computed as a product of Lucas binomials
/// of the partial sums, so no factorial is ever formed.
u64 multinomial_mod_p(u64 total, const std::vector<u64>& parts, const FpCtx& fp);

}  // namespace lcv

#endif
