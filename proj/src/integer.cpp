#include "canonica/integer.hpp"

#include <limits>
#include <stdexcept>

namespace canonica {

namespace {

mpz_class from_int64(std::int64_t v) {
    mpz_class r;
    // mpz_set_si takes a long, which is 64 bits on the supported platforms.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer::Integer(const std::string& decimal) {
    mpz_class v;
    if (v.set_str(decimal, 10) != 0) throw std::invalid_argument("not an integer: " + decimal);
    big_ = std::make_unique<mpz_class>(v);
    normalize();
}

Integer::Integer(const Integer& o)
    : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& o) {
    if (this != &o) {
        small_ = o.small_;
        big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

int Integer::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    *this = Integer(mpz_class(to_mpz() + o.to_mpz()));
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    *this = Integer(mpz_class(to_mpz() - o.to_mpz()));
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    *this = Integer(mpz_class(to_mpz() * o.to_mpz()));
    return *this;
}

void Integer::divmod(const Integer& a, const Integer& b, Integer& quot, Integer& rem) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
        quot = Integer(a.small_ / b.small_);
        rem = Integer(a.small_ % b.small_);
        return;
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    quot = Integer(q);
    rem = Integer(r);
}

bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (!a.big_ || !b.big_) return false;  // normalized: a big value never fits in 64 bits
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace canonica
