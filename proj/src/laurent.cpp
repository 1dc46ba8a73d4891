#include "canonica/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace canonica {

LaurentPoly::LaurentPoly(Integer c) {
    if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(int exp, Integer coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.front().exp;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.back().exp;
}

Integer LaurentPoly::coefficient(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coeff : Integer(0);
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coeff});
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp += k;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    if (k == 0) {
        Integer s = 0;
        for (const auto& t : terms_) s += t.coeff;
        return LaurentPoly(s);
    }
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    if (k > 0) {
        for (const auto& t : terms_) r.terms_.push_back({t.exp * k, t.coeff});
    } else {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({it->exp * k, it->coeff});
    }
    return r;
}

LaurentPoly LaurentPoly::negative_part() const {
    LaurentPoly r;
    for (const auto& t : terms_)
        if (t.exp < 0) r.terms_.push_back(t);
    return r;
}

LaurentPoly LaurentPoly::positive_part() const {
    LaurentPoly r;
    for (const auto& t : terms_)
        if (t.exp > 0) r.terms_.push_back(t);
    return r;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.sign() > 0; });
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp < a->exp) {
            out.push_back({b->exp, sign > 0 ? b->coeff : -b->coeff});
            ++b;
        } else {
            Integer c = std::move(a->coeff);
            if (sign > 0) c += b->coeff; else c -= b->coeff;
            if (!c.is_zero()) out.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int lo = a.min_exponent() + b.min_exponent();
    int hi = a.max_exponent() + b.max_exponent();
    std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) acc[static_cast<std::size_t>(s.exp + t.exp - lo)] += s.coeff * t.coeff;
    LaurentPoly r;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!acc[i].is_zero()) r.terms_.push_back({static_cast<int>(i) + lo, std::move(acc[i])});
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->coeff;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (neg) out += '-';
        else if (!out.empty()) out += '+';
        bool unit = c == Integer(1);
        if (it->exp == 0) {
            out += c.to_string();
            continue;
        }
        if (!unit) out += c.to_string() + "*";
        out += var;
        if (it->exp != 1) out += "^" + std::to_string(it->exp);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    std::vector<Term> terms;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            fail();
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        int exp = 0;
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) fail();
            ++i;
            if (i >= s.size() || s[i] != var) fail();
        }
        if (i < s.size() && s[i] == var) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) e += s[i++];
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty() || e == "-" || e == "+") fail();
                exp = std::stoi(e);
            }
        } else if (digits.empty()) {
            fail();
        }
        terms.push_back({exp, sign < 0 ? -coeff : coeff});
    }
    return from_terms(std::move(terms));
}

LaurentPoly quantum_integer(int n) {
    if (n < 0) throw std::invalid_argument("quantum_integer: negative argument");
    LaurentPoly r;
    for (int k = n - 1; k >= 1 - n; k -= 2) r += LaurentPoly::q(k);
    return r;
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    LaurentPoly r = 1;
    for (int k = 2; k <= n; ++k) r *= quantum_integer(k);
    return r;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& r) {
    if (r.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (p.is_zero()) return {};
    const int lead_exp = r.max_exponent();
    const Integer lead = r.coefficient(lead_exp);
    const int lowest_quotient_exp = p.min_exponent() - r.min_exponent();
    LaurentPoly rem = p;
    std::vector<LaurentPoly::Term> quot;
    while (!rem.is_zero()) {
        int e = rem.max_exponent() - lead_exp;
        if (e < lowest_quotient_exp) throw std::domain_error("exact_divide: not divisible");
        Integer qc, rc;
        Integer::divmod(rem.coefficient(rem.max_exponent()), lead, qc, rc);
        if (!rc.is_zero()) throw std::domain_error("exact_divide: not divisible");
        LaurentPoly t = LaurentPoly::monomial(e, qc);
        rem -= t * r;
        quot.push_back({e, qc});
    }
    return LaurentPoly::from_terms(std::move(quot));
}

}  // namespace canonica
