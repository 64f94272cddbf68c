#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace gradix {

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::int64_t p);

    bool is_rational() const { return kind == Kind::rationals; }
    std::string name() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

bool is_prime(std::int64_t n);

class Scalar {
public:
    Scalar() = default;  // rational zero
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
    // "a/b", "a", "-3" for Q; integers for Fp (reduced mod p).
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::int64_t residue() const { return std::get<std::int64_t>(v_); }

private:
    void check(const Scalar& o) const;

    FieldSpec f_;
    std::variant<mpq_class, std::int64_t> v_;
};

}  // namespace gradix
