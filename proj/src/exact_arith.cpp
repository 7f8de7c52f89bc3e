#include "dioph/exact_arith.hpp"

#include <array>
#include <cstdint>

namespace dioph {

Integer gcd(const Integer& x, const Integer& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

std::optional<Integer> divide_exact(const Integer& n, const Integer& d) {
    if (d == 0) throw ZeroDivisor{};
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable prime test to base a. n odd, n > 2, n - 1 = 2^r * d.
bool sprp(uint64_t n, uint64_t a, uint64_t d, int r) {
    a %= n;
    if (a == 0) return true;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// This witness set decides primality for all n < 2^64.
constexpr std::array<uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : kWitnesses) {
        if (!sprp(n, a, d, r)) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 0) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw UnsupportedMagnitude{};
    uint64_t v = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32) {
        // mpz_get_ui truncates on 32-bit limbs only; limbs are 64-bit here,
        // but read both halves to stay portable.
        Integer hi = n >> 32;
        v = (static_cast<uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
            (mpz_get_ui(n.get_mpz_t()) & 0xffffffffull);
    }
    return is_prime_u64(v);
}

std::vector<Integer> signed_divisors_of_prime_square(const Integer& q) {
    if (!is_prime(q)) throw NotPrime("q is not prime");
    Integer q2 = q * q;
    return {-q2, -q, -1, 1, q, q2};
}

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ZeroDivisor{};
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

}  // namespace dioph
