#include "frobhopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace frobhopf {

// ---------------------------------------------------------------------------
// BigInt
// ---------------------------------------------------------------------------

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ULL - static_cast<unsigned long long>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

// Shift-and-subtract long division on magnitudes. Not the fastest scheme,
// but branch-free of the Knuth normalization subtleties; coefficient sizes
// in this engine stay small.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw DivisionByZero();
    if (a.sign_ == 0 || cmp_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    const size_t abits = a.mag_.size() * 32;
    std::vector<uint32_t> rem;  // running remainder magnitude
    std::vector<uint32_t> quo((a.mag_.size()), 0);
    auto bit_of = [](const std::vector<uint32_t>& m, size_t i) -> int {
        size_t limb = i / 32, off = i % 32;
        if (limb >= m.size()) return 0;
        return (m[limb] >> off) & 1u;
    };
    auto set_bit = [](std::vector<uint32_t>& m, size_t i) {
        size_t limb = i / 32, off = i % 32;
        if (limb >= m.size()) m.resize(limb + 1, 0);
        m[limb] |= (1u << off);
    };
    for (size_t i = abits; i-- > 0;) {
        // rem = rem*2 + bit i of a
        uint32_t carry = static_cast<uint32_t>(bit_of(a.mag_, i));
        for (size_t k = 0; k < rem.size(); ++k) {
            uint32_t next = rem[k] >> 31;
            rem[k] = (rem[k] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(carry);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (cmp_mag(rem, b.mag_) >= 0) {
            rem = sub_mag(rem, b.mag_);
            set_bit(quo, i);
        }
    }
    q = BigInt();
    q.mag_ = std::move(quo);
    q.trim();
    if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
    r = BigInt();
    r.mag_ = std::move(rem);
    r.trim();
    if (!r.mag_.empty()) r.sign_ = a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::optional<long long> BigInt::to_long() const {
    if (mag_.size() > 2) return std::nullopt;
    unsigned long long v = 0;
    if (mag_.size() >= 1) v = mag_[0];
    if (mag_.size() == 2) v |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sign_ >= 0) {
        if (v > 0x7fffffffffffffffULL) return std::nullopt;
        return static_cast<long long>(v);
    }
    if (v > 0x8000000000000000ULL) return std::nullopt;
    return -static_cast<long long>(v - 1) - 1;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw SpecParseError("empty integer literal");
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw SpecParseError("bad integer literal: " + s);
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt v = abs();
    BigInt ten(10);
    std::string digits;
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
        v = q;
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}
Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(den_, num_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// primality
// ---------------------------------------------------------------------------

static uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<__uint128_t>(r) * b % m;
        b = static_cast<__uint128_t>(b) * b % m;
        e >>= 1;
    }
    return r;
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // bases {2,3,5,7} are exact for n < 3,215,031,751 > 2^31
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<__uint128_t>(x) * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// polynomial helpers over an arbitrary FieldCtx (dense, constant-first)
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Scalar>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldCtxPtr& k) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, k->zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const FieldCtxPtr& k) {
    Poly r(std::max(a.size(), b.size()), k->zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

// a mod b, b nonzero (any leading coefficient)
Poly poly_mod(Poly a, const Poly& b, const FieldCtxPtr&) {
    poly_trim(a);
    Scalar lead_inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
        Scalar c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    return a;
}

// extended euclid: returns g = gcd(a,b) and u with u*a = g mod b
// (only the 'u' cofactor is needed for inverses)
void poly_ext_gcd(Poly a, Poly b, const FieldCtxPtr& k, Poly& g, Poly& u) {
    Poly u0 = {k->one()}, u1 = {};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // divide a by b
        Poly q;
        Poly r = a;
        Scalar lead_inv = b.back().inverse();
        q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, k->zero());
        while (r.size() >= b.size() && !r.empty()) {
            Scalar c = r.back() * lead_inv;
            size_t shift = r.size() - b.size();
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            poly_trim(r);
        }
        poly_trim(q);
        Poly u2 = poly_sub(u0, poly_mul(q, u1, k), k);
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
    }
    g = a;
    u = u0;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldCtx construction
// ---------------------------------------------------------------------------

FieldCtxPtr FieldCtx::rationals() {
    static FieldCtxPtr q = [] {
        auto c = std::shared_ptr<FieldCtx>(new FieldCtx());
        c->kind_ = Kind::Rationals;
        return FieldCtxPtr(c);
    }();
    return q;
}

FieldCtxPtr FieldCtx::prime(uint32_t p) {
    if (p >= (1u << 31)) throw SpecParseError("prime modulus must be < 2^31");
    if (!is_prime_u32(p)) throw SpecParseError("modulus is not prime: " + std::to_string(p));
    auto c = std::shared_ptr<FieldCtx>(new FieldCtx());
    c->kind_ = Kind::Prime;
    c->p_ = p;
    return c;
}

// forward-declared here, defined after Scalar ops
static bool check_irreducible(const FieldCtxPtr& base, const std::vector<Scalar>& f);

FieldCtxPtr FieldCtx::extension(FieldCtxPtr base, std::vector<Scalar> min_poly) {
    if (!base) throw SpecParseError("extension needs a base field");
    if (base->depth() >= 2) throw SpecParseError("extension nesting depth > 2");
    if (min_poly.size() < 3) throw SpecParseError("extension degree must be >= 2");
    for (auto& c : min_poly)
        if (!c.valid() || !c.ctx()->same(*base))
            throw ContextMismatch("min_poly coefficients must live in the base field");
    if (!min_poly.back().is_one()) throw SpecParseError("min_poly must be monic");
    if (!check_irreducible(base, min_poly))
        throw SpecParseError("min_poly is reducible over the base field");
    auto c = std::shared_ptr<FieldCtx>(new FieldCtx());
    c->kind_ = Kind::Extension;
    c->base_ = std::move(base);
    c->min_poly_ = std::move(min_poly);
    return c;
}

uint64_t FieldCtx::characteristic() const {
    switch (kind_) {
    case Kind::Rationals: return 0;
    case Kind::Prime: return p_;
    case Kind::Extension: return base_->characteristic();
    }
    return 0;
}

int FieldCtx::depth() const {
    return kind_ == Kind::Extension ? base_->depth() + 1 : 0;
}

std::optional<uint64_t> FieldCtx::size() const {
    switch (kind_) {
    case Kind::Rationals: return std::nullopt;
    case Kind::Prime: return p_;
    case Kind::Extension: {
        auto b = base_->size();
        if (!b) return std::nullopt;
        uint64_t r = 1;
        for (int i = 0; i < extension_degree(); ++i) {
            if (*b != 0 && r > UINT64_MAX / *b) return std::nullopt;
            r *= *b;
        }
        return r;
    }
    }
    return std::nullopt;
}

bool FieldCtx::same(const FieldCtx& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Prime: return p_ == o.p_;
    case Kind::Extension:
        if (!base_->same(*o.base_)) return false;
        if (min_poly_.size() != o.min_poly_.size()) return false;
        for (size_t i = 0; i < min_poly_.size(); ++i)
            if (!(min_poly_[i] == o.min_poly_[i])) return false;
        return true;
    }
    return false;
}

std::string FieldCtx::describe() const {
    switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p_);
    case Kind::Extension: {
        std::string s = base_->describe() + "[t]/(";
        for (size_t i = min_poly_.size(); i-- > 0;) {
            s += min_poly_[i].str();
            if (i > 0) s += "*t^" + std::to_string(i) + " + ";
        }
        return s + ")";
    }
    }
    return "?";
}

Scalar FieldCtx::zero() const { return from_int(0); }
Scalar FieldCtx::one() const { return from_int(1); }

Scalar FieldCtx::from_int(long long v) const {
    Scalar s;
    s.ctx_ = shared_from_this();
    switch (kind_) {
    case Kind::Rationals:
        s.payload_ = Rational(v);
        break;
    case Kind::Prime: {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        s.payload_ = static_cast<uint64_t>(r);
        break;
    }
    case Kind::Extension: {
        std::vector<Scalar> coords(extension_degree(), base_->zero());
        coords[0] = base_->from_int(v);
        s.payload_ = std::move(coords);
        break;
    }
    }
    return s;
}

Scalar FieldCtx::from_rational(const Rational& r) const {
    switch (kind_) {
    case Kind::Rationals: {
        Scalar s;
        s.ctx_ = shared_from_this();
        s.payload_ = r;
        return s;
    }
    case Kind::Prime: {
        BigInt p(static_cast<long long>(p_));
        BigInt dr = r.den() % p;
        if (dr.is_zero())
            throw EmbedUndefined("denominator divisible by " + std::to_string(p_));
        auto to_res = [&](const BigInt& b) -> uint64_t {
            BigInt m = b % p;
            long long v = *m.to_long();
            if (v < 0) v += p_;
            return static_cast<uint64_t>(v);
        };
        uint64_t n = to_res(r.num());
        uint64_t d = to_res(r.den());
        uint64_t dinv = powmod_u64(d, p_ - 2, p_);
        Scalar s;
        s.ctx_ = shared_from_this();
        s.payload_ = static_cast<uint64_t>(static_cast<__uint128_t>(n) * dinv % p_);
        return s;
    }
    case Kind::Extension: {
        std::vector<Scalar> coords(extension_degree(), base_->zero());
        coords[0] = base_->from_rational(r);
        Scalar s;
        s.ctx_ = shared_from_this();
        s.payload_ = std::move(coords);
        return s;
    }
    }
    throw EngineError(ErrorKind::Internal, "unreachable");
}

Scalar FieldCtx::from_coords(std::vector<Scalar> coords) const {
    if (kind_ != Kind::Extension) throw ContextMismatch("from_coords on non-extension field");
    if (static_cast<int>(coords.size()) != extension_degree())
        throw DimensionMismatch("extension coordinate count");
    for (auto& c : coords)
        if (!c.ctx()->same(*base_)) throw ContextMismatch("coordinate not in base field");
    Scalar s;
    s.ctx_ = shared_from_this();
    s.payload_ = std::move(coords);
    return s;
}

Scalar FieldCtx::element_at(uint64_t i) const {
    switch (kind_) {
    case Kind::Prime: {
        Scalar s;
        s.ctx_ = shared_from_this();
        s.payload_ = i % p_;
        return s;
    }
    case Kind::Extension: {
        auto b = base_->size();
        if (!b) throw ContextMismatch("element_at on infinite field");
        std::vector<Scalar> coords;
        coords.reserve(extension_degree());
        for (int d = 0; d < extension_degree(); ++d) {
            coords.push_back(base_->element_at(i % *b));
            i /= *b;
        }
        Scalar s;
        s.ctx_ = shared_from_this();
        s.payload_ = std::move(coords);
        return s;
    }
    case Kind::Rationals: throw ContextMismatch("element_at on Q");
    }
    throw EngineError(ErrorKind::Internal, "unreachable");
}

// ---------------------------------------------------------------------------
// Scalar arithmetic
// ---------------------------------------------------------------------------

void Scalar::require_same_ctx(const Scalar& a, const Scalar& b) {
    if (!a.valid() || !b.valid())
        throw ContextMismatch("uninitialized scalar");
    if (!a.ctx_->same(*b.ctx_))
        throw ContextMismatch(a.ctx_->describe() + " vs " + b.ctx_->describe());
}

bool Scalar::is_zero() const {
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals: return rational().is_zero();
    case FieldCtx::Kind::Prime: return residue() == 0;
    case FieldCtx::Kind::Extension:
        for (const auto& c : coords())
            if (!c.is_zero()) return false;
        return true;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals: return rational().is_one();
    case FieldCtx::Kind::Prime: return residue() == 1 % ctx_->prime_modulus();
    case FieldCtx::Kind::Extension: {
        const auto& c = coords();
        if (!c[0].is_one()) return false;
        for (size_t i = 1; i < c.size(); ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ctx(*this, o);
    Scalar r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals:
        r.payload_ = rational() + o.rational();
        break;
    case FieldCtx::Kind::Prime:
        r.payload_ = (residue() + o.residue()) % ctx_->prime_modulus();
        break;
    case FieldCtx::Kind::Extension: {
        std::vector<Scalar> c = coords();
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords()[i];
        r.payload_ = std::move(c);
        break;
    }
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals:
        r.payload_ = -rational();
        break;
    case FieldCtx::Kind::Prime: {
        uint64_t p = ctx_->prime_modulus();
        r.payload_ = residue() == 0 ? 0 : p - residue();
        break;
    }
    case FieldCtx::Kind::Extension: {
        std::vector<Scalar> c = coords();
        for (auto& x : c) x = -x;
        r.payload_ = std::move(c);
        break;
    }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ctx(*this, o);
    Scalar r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals:
        r.payload_ = rational() * o.rational();
        break;
    case FieldCtx::Kind::Prime:
        r.payload_ = static_cast<uint64_t>(
            static_cast<__uint128_t>(residue()) * o.residue() % ctx_->prime_modulus());
        break;
    case FieldCtx::Kind::Extension: {
        const auto& base = ctx_->base();
        Poly prod = poly_mul(coords(), o.coords(), base);
        Poly red = poly_mod(std::move(prod), ctx_->min_poly(), base);
        red.resize(ctx_->extension_degree(), base->zero());
        r.payload_ = std::move(red);
        break;
    }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals:
        r.payload_ = rational().inverse();
        break;
    case FieldCtx::Kind::Prime:
        r.payload_ = powmod_u64(residue(), ctx_->prime_modulus() - 2, ctx_->prime_modulus());
        break;
    case FieldCtx::Kind::Extension: {
        const auto& base = ctx_->base();
        Poly g, u;
        poly_ext_gcd(coords(), ctx_->min_poly(), base, g, u);
        // g is a nonzero constant since min_poly is irreducible
        Scalar ginv = g[0].inverse();
        Poly inv = poly_mod(u, ctx_->min_poly(), base);
        for (auto& c : inv) c *= ginv;
        inv.resize(ctx_->extension_degree(), base->zero());
        r.payload_ = std::move(inv);
        break;
    }
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!ctx_->same(*o.ctx_)) return false;
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals: return rational() == o.rational();
    case FieldCtx::Kind::Prime: return residue() == o.residue();
    case FieldCtx::Kind::Extension: {
        for (size_t i = 0; i < coords().size(); ++i)
            if (!(coords()[i] == o.coords()[i])) return false;
        return true;
    }
    }
    return false;
}

std::string Scalar::str() const {
    if (!valid()) return "<invalid>";
    switch (ctx_->kind()) {
    case FieldCtx::Kind::Rationals: return rational().to_string();
    case FieldCtx::Kind::Prime:
        return std::to_string(residue()) + " mod " + std::to_string(ctx_->prime_modulus());
    case FieldCtx::Kind::Extension: {
        const auto& c = coords();
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += c[i].str();
            } else {
                std::string cs = c[i].str();
                if (!c[i].is_one()) s += "(" + cs + ")*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
    }
    return "?";
}

Scalar field_arith(FieldOp op, const Scalar& x, const Scalar* y) {
    switch (op) {
    case FieldOp::Add:
        if (!y) throw DimensionMismatch("add needs two operands");
        return x + *y;
    case FieldOp::Mul:
        if (!y) throw DimensionMismatch("mul needs two operands");
        return x * *y;
    case FieldOp::Neg: return -x;
    case FieldOp::Inv: return x.inverse();
    }
    throw EngineError(ErrorKind::Internal, "unreachable");
}

// ---------------------------------------------------------------------------
// irreducibility (degree <= 4 check, as documented)
// ---------------------------------------------------------------------------

namespace {

Scalar poly_eval(const std::vector<Scalar>& f, const Scalar& x, const FieldCtxPtr& k) {
    Scalar acc = k->zero();
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

bool has_root_in_base(const FieldCtxPtr& base, const std::vector<Scalar>& f) {
    auto sz = base->size();
    if (sz && *sz <= 1u << 20) {
        for (uint64_t i = 0; i < *sz; ++i)
            if (poly_eval(f, base->element_at(i), base).is_zero()) return true;
        return false;
    }
    if (base->kind() == FieldCtx::Kind::Rationals) {
        // monic over Q: clear denominators, then any rational root r = p/q has
        // q | lead and p | constant of the integer model
        BigInt lcm(1);
        for (const auto& c : f) {
            const BigInt& d = c.rational().den();
            lcm = lcm / BigInt::gcd(lcm, d) * d;
        }
        std::vector<BigInt> g;
        for (const auto& c : f)
            g.push_back(c.rational().num() * (lcm / c.rational().den()));
        auto divisors = [](const BigInt& n) {
            std::vector<BigInt> out;
            BigInt a = n.abs();
            if (a.is_zero()) return out;
            auto small = a.to_long();
            long long bound = small ? *small : 1000000;  // cap the search, documented
            for (long long d = 1; d <= bound && d * d <= (small ? *small : bound * bound); ++d) {
                BigInt bd(d);
                if ((a % bd).is_zero()) {
                    out.push_back(bd);
                    out.push_back(a / bd);
                }
            }
            return out;
        };
        std::vector<BigInt> ps = divisors(g.front());
        std::vector<BigInt> qs = divisors(g.back());
        if (g.front().is_zero()) return true;  // 0 is a root
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int s : {1, -1}) {
                    Rational cand(s > 0 ? p : -p, q);
                    if (poly_eval(f, base->from_rational(cand), base).is_zero()) return true;
                }
        return false;
    }
    // large finite base: root search skipped, caller-asserted (documented)
    return false;
}

} // namespace

static bool check_irreducible(const FieldCtxPtr& base, const std::vector<Scalar>& f) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 1) return true;
    if (deg <= 3) return !has_root_in_base(base, f);
    if (deg == 4) {
        if (has_root_in_base(base, f)) return false;
        auto sz = base->size();
        if (sz && *sz <= 1000) {
            // search for a monic quadratic factor
            for (uint64_t i = 0; i < *sz; ++i)
                for (uint64_t j = 0; j < *sz; ++j) {
                    std::vector<Scalar> q = {base->element_at(i), base->element_at(j), base->one()};
                    if (poly_mod(f, q, base).empty()) return false;
                }
        }
        return true;  // over Q / large bases: quartic-into-quadratics is caller-asserted
    }
    return true;  // degree > 4: caller-asserted, documented constructor precondition
}

// ---------------------------------------------------------------------------
// roots of unity
// ---------------------------------------------------------------------------

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> f;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

Scalar scalar_pow(Scalar base, uint64_t e, const FieldCtxPtr& k) {
    Scalar r = k->one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool has_order_exactly(const Scalar& x, uint64_t n, const FieldCtxPtr& k) {
    if (x.is_zero()) return false;
    if (!scalar_pow(x, n, k).is_one()) return false;
    for (uint64_t q : prime_factors(n))
        if (scalar_pow(x, n / q, k).is_one()) return false;
    return true;
}

} // namespace

std::optional<Scalar> find_root_of_unity(const FieldCtxPtr& ctx, uint64_t n) {
    if (n == 0) throw DimensionMismatch("order must be positive");
    if (n == 1) return ctx->one();
    switch (ctx->kind()) {
    case FieldCtx::Kind::Rationals:
        if (n == 2) return ctx->from_int(-1);
        return std::nullopt;
    case FieldCtx::Kind::Prime: {
        uint64_t p = ctx->prime_modulus();
        if ((p - 1) % n != 0) return std::nullopt;
        if (p <= 1000000) {
            // exhaustive, smallest root first
            for (uint64_t x = 2; x < p; ++x) {
                Scalar s = ctx->from_int(static_cast<long long>(x));
                if (has_order_exactly(s, n, ctx)) return s;
            }
            return std::nullopt;
        }
        for (uint64_t c = 2; c < p; ++c) {
            Scalar g = scalar_pow(ctx->from_int(static_cast<long long>(c)), (p - 1) / n, ctx);
            if (has_order_exactly(g, n, ctx)) return g;
        }
        return std::nullopt;
    }
    case FieldCtx::Kind::Extension: {
        auto sz = ctx->size();
        if (sz && *sz <= 1u << 20) {
            for (uint64_t i = 0; i < *sz; ++i) {
                Scalar x = ctx->element_at(i);
                if (has_order_exactly(x, n, ctx)) return x;
            }
            return std::nullopt;
        }
        // infinite extension: bounded enumeration of small coordinate vectors
        // over {-1, 0, 1}; covers the cyclotomic generators used in practice.
        int d = ctx->extension_degree();
        uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= 3;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t c = code;
            std::vector<Scalar> coords;
            for (int i = 0; i < d; ++i) {
                coords.push_back(ctx->base()->from_int(static_cast<long long>(c % 3) - 1));
                c /= 3;
            }
            Scalar x = ctx->from_coords(std::move(coords));
            if (has_order_exactly(x, n, ctx)) return x;
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ScalarEmbedding
// ---------------------------------------------------------------------------

namespace {

bool is_extension_of(const FieldCtx& big, const FieldCtx& small) {
    if (big.same(small)) return true;
    if (big.kind() == FieldCtx::Kind::Extension) return is_extension_of(*big.base(), small);
    return false;
}

} // namespace

ScalarEmbedding::ScalarEmbedding(FieldCtxPtr from, FieldCtxPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
    bool ok = is_extension_of(*to_, *from_) ||
              (from_->kind() == FieldCtx::Kind::Rationals &&
               to_->characteristic() != 0);
    if (!ok)
        throw EmbedUndefined("no embedding " + from_->describe() + " -> " + to_->describe());
}

Scalar ScalarEmbedding::operator()(const Scalar& s) const {
    if (!s.ctx()->same(*from_)) throw ContextMismatch("embedding applied to foreign scalar");
    if (to_->same(*from_)) return s;
    if (to_->kind() == FieldCtx::Kind::Extension) {
        ScalarEmbedding into_base(from_, to_->base());
        std::vector<Scalar> coords(to_->extension_degree(), to_->base()->zero());
        coords[0] = into_base(s);
        return to_->from_coords(std::move(coords));
    }
    // Q -> F_p integral reduction
    return to_->from_rational(s.rational());
}

} // namespace frobhopf
