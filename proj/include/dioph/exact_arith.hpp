#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace dioph {

// Unbounded signed integer. All arithmetic is exact; overflow cannot occur.
using Integer = mpz_class;

struct ZeroDivisor : std::invalid_argument {
    ZeroDivisor() : std::invalid_argument("division by zero") {}
};

struct UnsupportedMagnitude : std::out_of_range {
    UnsupportedMagnitude() : std::out_of_range("magnitude exceeds 2^64 primality bound") {}
};

struct NotPrime : std::invalid_argument {
    explicit NotPrime(const std::string& what) : std::invalid_argument(what) {}
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& x, const Integer& y);

/// n/d when d | n, nullopt otherwise. Never truncates. Throws ZeroDivisor on d = 0.
std::optional<Integer> divide_exact(const Integer& n, const Integer& d);

/// Deterministic primality for 0 <= n < 2^64 (fixed Miller-Rabin witness set).
/// Negative n is never prime. Throws UnsupportedMagnitude for n >= 2^64.
bool is_prime(const Integer& n);

/// The complete signed divisor set of q^2 for prime q:
/// {-q^2, -q, -1, 1, q, q^2} in ascending order. Throws NotPrime otherwise.
std::vector<Integer> signed_divisors_of_prime_square(const Integer& q);

// Exact rational, always stored reduced with positive denominator.
class Fraction {
public:
    Fraction(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

private:
    Integer num_;
    Integer den_;
};

}  // namespace dioph
