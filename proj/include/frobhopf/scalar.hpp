#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobhopf/errors.hpp"

namespace frobhopf {

/// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
/// Enough for Groebner coefficient growth over Q; no external bignum needed
/// at the scale this engine targets.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated quotient/remainder: q = trunc(a/b), a = q*b + r, sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);

    std::optional<long long> to_long() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // no leading zero limbs; empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

/// Rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const;
    Rational inverse() const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;
    static Rational from_string(const std::string& s);

private:
    BigInt num_, den_;
    void normalize();
};

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;
class Scalar;

/// Exact field of scalars: Q, F_p (p prime < 2^31), or a simple extension
/// K[t]/(f) with f monic irreducible. Extension nesting depth is capped at 2.
/// Immutable and freely shareable across threads once constructed.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    enum class Kind { Rationals, Prime, Extension };

    static FieldCtxPtr rationals();
    static FieldCtxPtr prime(uint32_t p);
    /// min_poly is constant-first and monic over `base`. Irreducibility is
    /// verified by root search (and quadratic-factor search over small finite
    /// bases) up to degree 4; beyond that it is the caller's obligation.
    static FieldCtxPtr extension(FieldCtxPtr base, std::vector<Scalar> min_poly);

    Kind kind() const { return kind_; }
    uint32_t prime_modulus() const { return p_; }
    const FieldCtxPtr& base() const { return base_; }
    const std::vector<Scalar>& min_poly() const { return min_poly_; }
    int extension_degree() const { return static_cast<int>(min_poly_.size()) - 1; }

    uint64_t characteristic() const;
    int depth() const;  // number of Extension layers
    /// |field| when finite and representable, nullopt otherwise.
    std::optional<uint64_t> size() const;
    bool same(const FieldCtx& o) const;
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const Rational& r) const;  // throws EmbedUndefined over F_p if p | den
    /// Element with given coordinates over the base field (Extension only).
    Scalar from_coords(std::vector<Scalar> coords) const;
    /// Enumerate element #i of a finite field (0 <= i < size()).
    Scalar element_at(uint64_t i) const;

private:
    Kind kind_ = Kind::Rationals;
    uint32_t p_ = 0;
    FieldCtxPtr base_;
    std::vector<Scalar> min_poly_;
    FieldCtx() = default;
};

/// Value-type exact field element tagged with its context.
class Scalar {
public:
    Scalar() = default;  // invalid; only for container defaults

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Rational& rational() const { return std::get<Rational>(payload_); }
    uint64_t residue() const { return std::get<uint64_t>(payload_); }
    const std::vector<Scalar>& coords() const { return std::get<std::vector<Scalar>>(payload_); }

    /// Human-readable form: "3/2", "4 mod 7", "t+1".
    std::string str() const;

private:
    friend class FieldCtx;
    FieldCtxPtr ctx_;
    std::variant<Rational, uint64_t, std::vector<Scalar>> payload_;

    static void require_same_ctx(const Scalar& a, const Scalar& b);
};

/// add/mul/neg/inv dispatch, mirroring the one-entry-point contract.
enum class FieldOp { Add, Mul, Neg, Inv };
Scalar field_arith(FieldOp op, const Scalar& x, const Scalar* y = nullptr);

/// Primitive n-th root of unity in ctx, if one is found: exhaustive over F_p,
/// bounded enumeration over extensions, {1,-1} over Q.
std::optional<Scalar> find_root_of_unity(const FieldCtxPtr& ctx, uint64_t n);

/// Deterministic Miller-Rabin, valid for all n < 2^32.
bool is_prime_u32(uint32_t n);

/// Coefficient-wise scalar embedding between compatible contexts:
/// identity, Q -> extension of Q, F_p -> extension of F_p, and the integral
/// reduction Q -> F_p (throws EmbedUndefined when p divides a denominator).
class ScalarEmbedding {
public:
    ScalarEmbedding(FieldCtxPtr from, FieldCtxPtr to);
    const FieldCtxPtr& from() const { return from_; }
    const FieldCtxPtr& to() const { return to_; }
    Scalar operator()(const Scalar& s) const;

private:
    FieldCtxPtr from_, to_;
};

} // namespace frobhopf
