#include "gencliff/coeffs.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gencliff {

const char* errc_name(Errc c)
{
    switch (c) {
        case Errc::MalformedRingSpec: return "MalformedRingSpec";
        case Errc::NotPrime: return "NotPrime";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownGenerator: return "UnknownGenerator";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::InconsistentForm: return "InconsistentForm";
        case Errc::NotAField: return "NotAField";
        case Errc::BoundTooSmall: return "BoundTooSmall";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::WeightMismatch: return "WeightMismatch";
        case Errc::SquareNotZero: return "SquareNotZero";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "Error";
}

bool is_prime(int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::string RingHandle::spec() const
{
    switch (kind) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "GF(" + std::to_string(characteristic) + ")";
    }
    return "?";
}

RingHandle make_ring(std::string_view spec)
{
    if (spec == "ZZ")
        return {RingKind::Integers, 0};
    if (spec == "QQ")
        return {RingKind::Rationals, 0};
    if (spec.size() > 4 && spec.substr(0, 3) == "GF(" && spec.back() == ')') {
        std::string_view body = spec.substr(3, spec.size() - 4);
        if (body.empty() || body.size() > 10)
            fail(Errc::MalformedRingSpec, "bad characteristic in '" + std::string(spec) + "'");
        int64_t p = 0;
        for (char c : body) {
            if (c < '0' || c > '9')
                fail(Errc::MalformedRingSpec, "bad characteristic in '" + std::string(spec) + "'");
            p = p * 10 + (c - '0');
        }
        if (p > (int64_t(1) << 31))
            fail(Errc::MalformedRingSpec, "characteristic exceeds 2^31");
        if (!is_prime(p))
            fail(Errc::NotPrime, std::to_string(p) + " is not prime");
        return {RingKind::PrimeField, p};
    }
    fail(Errc::MalformedRingSpec, "expected ZZ, QQ or GF(p), got '" + std::string(spec) + "'");
}

void Scalar::check_same_ring(const Scalar& a, const Scalar& b)
{
    if (!(a.ring_ == b.ring_))
        fail(Errc::RingMismatch, a.ring_.spec() + " vs " + b.ring_.spec());
}

Scalar Scalar::of(const RingHandle& r, BigInt value)
{
    Scalar s;
    s.ring_ = r;
    if (r.kind == RingKind::PrimeField) {
        value %= r.characteristic;
        if (value < 0)
            value += r.characteristic;
    }
    s.num_ = std::move(value);
    return s;
}

Scalar Scalar::fraction(const RingHandle& r, BigInt num, BigInt den)
{
    if (den == 0)
        fail(Errc::DivisionByZero, "zero denominator");
    switch (r.kind) {
        case RingKind::Integers: {
            if (num % den != 0)
                fail(Errc::NotInvertible, den.str() + " does not divide " + num.str() + " in ZZ");
            return of(r, num / den);
        }
        case RingKind::PrimeField:
            return of(r, std::move(num)) * of(r, std::move(den)).inv();
        case RingKind::Rationals: {
            if (den < 0) {
                num = -num;
                den = -den;
            }
            BigInt g = boost::multiprecision::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            Scalar s;
            s.ring_ = r;
            if (num == 0)
                den = 1;
            s.num_ = std::move(num);
            s.den_ = std::move(den);
            return s;
        }
    }
    fail(Errc::MalformedRingSpec, "unknown ring kind");
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_ring(*this, o);
    if (ring_.kind == RingKind::Rationals)
        return fraction(ring_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return of(ring_, num_ + o.num_);
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check_same_ring(*this, o);
    if (ring_.kind == RingKind::Rationals)
        return fraction(ring_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return of(ring_, num_ - o.num_);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_ring(*this, o);
    if (ring_.kind == RingKind::Rationals)
        return fraction(ring_, num_ * o.num_, den_ * o.den_);
    return of(ring_, num_ * o.num_);
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    s.num_ = -s.num_;
    if (ring_.kind == RingKind::PrimeField && s.num_ < 0)
        s.num_ += ring_.characteristic;
    return s;
}

Scalar Scalar::inv() const
{
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero");
    switch (ring_.kind) {
        case RingKind::Integers:
            if (num_ == 1 || num_ == -1)
                return *this;
            fail(Errc::NotInvertible, num_.str() + " is not a unit in ZZ");
        case RingKind::Rationals:
            return fraction(ring_, den_, num_);
        case RingKind::PrimeField: {
            // extended Euclid on machine words (p < 2^31)
            int64_t p = ring_.characteristic;
            int64_t a = num_.convert_to<int64_t>();
            int64_t t = 0, new_t = 1, r = p, new_r = a;
            while (new_r != 0) {
                int64_t q = r / new_r;
                int64_t tmp = t - q * new_t;
                t = new_t;
                new_t = tmp;
                tmp = r - q * new_r;
                r = new_r;
                new_r = tmp;
            }
            if (t < 0)
                t += p;
            return of(ring_, t);
        }
    }
    fail(Errc::MalformedRingSpec, "unknown ring kind");
}

Scalar Scalar::pow(uint64_t k) const
{
    Scalar acc = one(ring_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int Scalar::cmp(const Scalar& o) const
{
    if (num_ != o.num_)
        return num_ < o.num_ ? -1 : 1;
    if (den_ != o.den_)
        return den_ < o.den_ ? -1 : 1;
    return 0;
}

std::string Scalar::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace gencliff
