#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "gencliff/errors.hpp"

namespace gencliff {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Rationals, PrimeField };

/// Coefficient ring descriptor: ZZ, QQ, or GF(p) with p prime (p < 2^31).
struct RingHandle {
    RingKind kind = RingKind::Integers;
    int64_t characteristic = 0;  // 0 for ZZ/QQ, p for GF(p)

    bool is_field() const { return kind != RingKind::Integers; }
    std::string spec() const;

    friend bool operator==(const RingHandle&, const RingHandle&) = default;
};

/// Parses "ZZ" | "QQ" | "GF(<prime>)".
RingHandle make_ring(std::string_view spec);

bool is_prime(int64_t n);

/// Exact ring element in canonical form: ZZ as an arbitrary-precision
/// integer, QQ as a reduced fraction with positive denominator, GF(p) as the
/// residue in [0, p). Zero always has num = 0, den = 1.
class Scalar {
public:
    Scalar() = default;  // 0 over ZZ

    static Scalar zero(const RingHandle& r) { return of(r, 0); }
    static Scalar one(const RingHandle& r) { return of(r, 1); }
    static Scalar of(const RingHandle& r, BigInt value);
    static Scalar of(const RingHandle& r, int64_t value) { return of(r, BigInt(value)); }
    /// num/den: exact division over ZZ (NotInvertible otherwise), reduced
    /// fraction over QQ, num * den^{-1} over GF(p).
    static Scalar fraction(const RingHandle& r, BigInt num, BigInt den);

    const RingHandle& ring() const { return ring_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse. DivisionByZero on 0; NotInvertible over ZZ
    /// for values other than +-1.
    Scalar inv() const;
    Scalar pow(uint64_t k) const;

    bool operator==(const Scalar& o) const { return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used only for canonical tie-breaking, not arithmetic.
    int cmp(const Scalar& o) const;

    std::string str() const;

private:
    RingHandle ring_{};
    BigInt num_{0};
    BigInt den_{1};

    static void check_same_ring(const Scalar& a, const Scalar& b);
};

}  // namespace gencliff
