#include "gradix/field.hpp"

#include "gradix/error.hpp"

#include <cctype>

namespace gradix {

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p)
{
    if (p >= (std::int64_t(1) << 31)) throw ValidationError("field characteristic " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::prime_field;
    f.p = p;
    return f;
}

std::string FieldSpec::name() const
{
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

static std::int64_t reduce(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

Scalar Scalar::zero(const FieldSpec& f)
{
    return from_int(f, 0);
}

Scalar Scalar::one(const FieldSpec& f)
{
    return from_int(f, 1);
}

Scalar Scalar::from_int(const FieldSpec& f, long v)
{
    Scalar s;
    s.f_ = f;
    if (f.is_rational())
        s.v_ = mpq_class(v);
    else
        s.v_ = reduce(v, f.p);
    return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q)
{
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) {
        mpq_class c = q;
        c.canonicalize();
        s.v_ = c;
        return s;
    }
    mpz_class p(static_cast<long>(f.p));
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw DivisionByZero("denominator " + q.get_den().get_str() + " vanishes in " + f.name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    s.v_ = static_cast<std::int64_t>(r.get_si());
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw InputError("empty scalar");
    auto ok_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string a = t.substr(0, slash), b = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!ok_int(a) || !ok_int(b)) throw InputError("malformed scalar '" + text + "'");
    if (a[0] == '+') a = a.substr(1);
    if (b[0] == '+') b = b.substr(1);
    mpz_class num(a), den(b);
    if (den == 0) throw InputError("scalar '" + text + "' has zero denominator");
    return from_rational(f, mpq_class(num, den));
}

void Scalar::check(const Scalar& o) const
{
    if (!(f_ == o.f_)) throw ArgumentError("field mismatch: " + f_.name() + " vs " + o.f_.name());
}

bool Scalar::is_zero() const
{
    if (f_.is_rational()) return std::get<mpq_class>(v_) == 0;
    return std::get<std::int64_t>(v_) == 0;
}

bool Scalar::is_one() const
{
    if (f_.is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::int64_t>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check(o);
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    else
        s.v_ = reduce(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), f_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check(o);
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
    else
        s.v_ = reduce(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), f_.p);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check(o);
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    else
        s.v_ = reduce(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), f_.p);
    return s;
}

Scalar Scalar::operator-() const
{
    return zero(f_) - *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero in " + f_.name());
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational()) {
        s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
        return s;
    }
    // a^(p-2)
    std::int64_t base = std::get<std::int64_t>(v_), e = f_.p - 2, r = 1;
    while (e > 0) {
        if (e & 1) r = r * base % f_.p;
        base = base * base % f_.p;
        e >>= 1;
    }
    s.v_ = r;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(f_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    if (!(f_ == o.f_)) return false;
    return v_ == o.v_;
}

std::string Scalar::str() const
{
    if (f_.is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::int64_t>(v_));
}

}  // namespace gradix
