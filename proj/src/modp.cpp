#include "powops/modp.hpp"

#include <vector>

namespace powops {

namespace {

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long long mod_reduce(long long x, long long p)
{
    long long r = x % p;
    return r < 0 ? r + p : r;
}

long long pow_mod(long long base, long long exp, long long p)
{
    long long result = 1;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

// binom(a, b) mod p for a, b >= 0, by the multiplicative formula with the
// p-adic valuation of numerator and denominator tracked separately.
long long binom_nonneg_mod(long long a, long long b, long long p)
{
    if (b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    long long num = 1, den = 1, val = 0;
    for (long long i = 1; i <= b; ++i) {
        long long x = a - b + i;
        long long y = i;
        while (x % p == 0) {
            x /= p;
            ++val;
        }
        while (y % p == 0) {
            y /= p;
            --val;
        }
        num = num * mod_reduce(x, p) % p;
        den = den * mod_reduce(y, p) % p;
    }
    if (val > 0)
        return 0;
    return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

Prime::Prime(long long value) : value_(value)
{
    if (!is_prime(value))
        throw std::invalid_argument("Prime: " + std::to_string(value) + " is not prime");
}

Fp::Fp(long long residue, Prime p) : residue_(mod_reduce(residue, p.value())), prime_(p) {}

Fp Fp::operator+(Fp rhs) const
{
    if (prime_ != rhs.prime_)
        throw std::invalid_argument("Fp: mixed characteristics");
    return Fp(residue_ + rhs.residue_, prime_);
}

Fp Fp::operator-(Fp rhs) const
{
    if (prime_ != rhs.prime_)
        throw std::invalid_argument("Fp: mixed characteristics");
    return Fp(residue_ - rhs.residue_, prime_);
}

Fp Fp::operator*(Fp rhs) const
{
    if (prime_ != rhs.prime_)
        throw std::invalid_argument("Fp: mixed characteristics");
    return Fp(residue_ * rhs.residue_, prime_);
}

Fp Fp::operator-() const
{
    return Fp(-residue_, prime_);
}

Fp Fp::inverse() const
{
    if (residue_ == 0)
        throw std::domain_error("Fp: inverse of zero");
    return Fp(pow_mod(residue_, prime_.value() - 2, prime_.value()), prime_);
}

Fp binom_mod_p(long long a, long long b, Prime p)
{
    if (b < 0)
        return Fp(0, p);
    if (a >= 0)
        return Fp(binom_nonneg_mod(a, b, p.value()), p);
    // (1+t)^a with a < 0: coefficient (-1)^b binom(b-a-1, b)
    long long c = binom_nonneg_mod(b - a - 1, b, p.value());
    return (b % 2 != 0) ? -Fp(c, p) : Fp(c, p);
}

Fp lucas_check(long long a, long long b, Prime p)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("lucas_check: negative input");
    long long pv = p.value();
    // digit binomials by a Pascal row; all arguments are < p
    auto digit_binom = [pv](long long n, long long k) {
        if (k < 0 || k > n)
            return 0LL;
        std::vector<long long> row(static_cast<size_t>(n) + 1, 0);
        row[0] = 1;
        for (long long i = 1; i <= n; ++i) {
            for (long long j = i; j > 0; --j)
                row[j] = (row[j] + row[j - 1]) % pv;
        }
        return row[k];
    };
    long long result = 1;
    while ((a > 0 || b > 0) && result != 0) {
        result = result * digit_binom(a % pv, b % pv) % pv;
        a /= pv;
        b /= pv;
    }
    return Fp(result, p);
}

}  // namespace powops
