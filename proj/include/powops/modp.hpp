#ifndef POWOPS_MODP_HPP
#define POWOPS_MODP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powops {

/// A validated prime, the coefficient characteristic of the whole engine.
class Prime {
public:
    explicit Prime(long long value);

    long long value() const { return value_; }

    friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
    friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

private:
    long long value_;
};

/// Scalar in the field with p elements.  The residue is always reduced to [0, p).
class Fp {
public:
    Fp(long long residue, Prime p);

    long long residue() const { return residue_; }
    Prime prime() const { return prime_; }
    bool is_zero() const { return residue_ == 0; }

    Fp operator+(Fp rhs) const;
    Fp operator-(Fp rhs) const;
    Fp operator*(Fp rhs) const;
    Fp operator-() const;
    Fp inverse() const;

    Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
    Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
    Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

    friend bool operator==(Fp a, Fp b)
    {
        return a.prime_ == b.prime_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    long long residue_;
    Prime prime_;
};

/// Coefficient of t^b in the power series (1+t)^a, reduced mod p.
/// For a >= 0 this is the ordinary binomial; b < 0 gives 0; for a < 0 it is
/// (-1)^b * binom(b-a-1, b).
Fp binom_mod_p(long long a, long long b, Prime p);

/// Independent check for nonnegative arguments: product of binom(a_i, b_i)
/// over base-p digits.  Rejects negative input.
Fp lucas_check(long long a, long long b, Prime p);

}  // namespace powops

#endif
