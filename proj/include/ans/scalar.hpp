#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ans/errors.hpp"

namespace ans {

/// Exact unbounded integer and rational types. Word values grow
/// exponentially with word length, so fixed-width arithmetic is never used.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The coefficient semirings supported by the library.
enum class Semiring { N, Z, Q };

inline const char* semiring_name(Semiring ring) {
    switch (ring) {
        case Semiring::N: return "N";
        case Semiring::Z: return "Z";
        case Semiring::Q: return "Q";
    }
    return "?";
}

inline Semiring semiring_from_name(std::string_view name) {
    if (name == "N") return Semiring::N;
    if (name == "Z") return Semiring::Z;
    if (name == "Q") return Semiring::Q;
    throw ParseError("unknown semiring '" + std::string(name) + "' (expected N, Z or Q)");
}

/// True iff `from` embeds into `to` (N ⊆ Z ⊆ Q; reflexive).
inline bool semiring_embeds(Semiring from, Semiring to) {
    return static_cast<int>(from) <= static_cast<int>(to);
}

/// An exact scalar tagged by its semiring. N and Z scalars are integers
/// (N non-negative); Q scalars are rationals kept in lowest terms with a
/// positive denominator. All arithmetic checks that both operands carry
/// the same tag.
class Scalar {
public:
    Scalar() : ring_(Semiring::N), v_(0) {}

    Scalar(Semiring ring, Integer value) : ring_(ring), v_(std::move(value)) {
        check_domain();
    }

    Scalar(Semiring ring, const Integer& num, const Integer& den) : ring_(ring) {
        if (den == 0) throw Error("scalar denominator is zero");
        // cpp_rational rejects negative denominators; normalise the sign first.
        if (den < 0) {
            v_ = Rational(-num, -den);
        } else {
            v_ = Rational(num, den);
        }
        check_domain();
    }

    static Scalar zero(Semiring ring) { return Scalar(ring, Integer(0)); }
    static Scalar one(Semiring ring) { return Scalar(ring, Integer(1)); }

    /// Parses "123", "-7" or "22/7" (sign on the numerator).
    static Scalar parse(Semiring ring, std::string_view text) {
        const std::size_t slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Scalar(ring, Integer(std::string(text)));
            }
            Integer num{std::string(text.substr(0, slash))};
            Integer den{std::string(text.substr(slash + 1))};
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
            return Scalar(ring, num, den);
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const Error*>(&e)) throw;
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        }
    }

    Semiring ring() const { return ring_; }
    const Rational& value() const { return v_; }
    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }

    /// The value as an Integer; the scalar must be integral.
    Integer to_integer() const {
        if (!is_integer()) throw Error("scalar " + to_string() + " is not an integer");
        return numerator();
    }

    /// Entry-wise widening N -> Z -> Q. Narrowing is rejected.
    Scalar embedded(Semiring to) const {
        if (!semiring_embeds(ring_, to)) {
            throw SemiringError(std::string("cannot embed ") + semiring_name(ring_) + " into " +
                                semiring_name(to));
        }
        Scalar out;
        out.ring_ = to;
        out.v_ = v_;
        return out;
    }

    Scalar operator+(const Scalar& o) const {
        require_same_ring(o);
        return make(ring_, v_ + o.v_);
    }

    Scalar operator*(const Scalar& o) const {
        require_same_ring(o);
        return make(ring_, v_ * o.v_);
    }

    Scalar operator-(const Scalar& o) const {
        require_same_ring(o);
        if (ring_ == Semiring::N) throw SemiringError("subtraction is not defined in N");
        return make(ring_, v_ - o.v_);
    }

    Scalar operator-() const {
        if (ring_ == Semiring::N) throw SemiringError("negation is not defined in N");
        return make(ring_, -v_);
    }

    Scalar operator/(const Scalar& o) const {
        require_same_ring(o);
        if (ring_ != Semiring::Q) throw SemiringError("division requires semiring Q");
        if (o.v_ == 0) throw Error("division by zero");
        return make(ring_, v_ / o.v_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        require_same_ring(o);
        return v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    std::strong_ordering operator<=>(const Scalar& o) const {
        require_same_ring(o);
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }

private:
    static Scalar make(Semiring ring, Rational v) {
        Scalar s;
        s.ring_ = ring;
        s.v_ = std::move(v);
        return s;
    }

    void check_domain() const {
        switch (ring_) {
            case Semiring::N:
                if (denominator() != 1 || v_ < 0)
                    throw SemiringError("value " + to_string() + " is not in N");
                break;
            case Semiring::Z:
                if (denominator() != 1)
                    throw SemiringError("value " + to_string() + " is not in Z");
                break;
            case Semiring::Q:
                break;
        }
    }

    void require_same_ring(const Scalar& o) const {
        if (ring_ != o.ring_) {
            throw SemiringError(std::string("semiring mismatch: ") + semiring_name(ring_) +
                                " vs " + semiring_name(o.ring_));
        }
    }

    Semiring ring_;
    Rational v_;
};

}  // namespace ans
