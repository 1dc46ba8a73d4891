#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace canonica {

// Arbitrary precision integer with an int64 fast path. Values leave the fast
// path only when an operation overflows.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
    explicit Integer(const mpz_class& v);
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o);
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o);
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    bool is_zero() const { return !big_ && small_ == 0; }
    int sign() const;
    bool fits_int64() const { return !big_; }
    std::int64_t to_int64() const;  // throws std::overflow_error when it does not fit
    mpz_class to_mpz() const;
    std::string to_string() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    // Truncating quotient and remainder, as in C++ integer division.
    static void divmod(const Integer& a, const Integer& b, Integer& quot, Integer& rem);

    friend bool operator==(const Integer& a, const Integer& b);
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

private:
    void normalize();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace canonica
