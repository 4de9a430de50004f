/**************************************************************************
 * include/centra/ffield.hpp
 *
 * Copyright 2026 The centra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "centra/errors.hpp"
#include "centra/number_theory.hpp"

namespace centra {

/// Largest field order supported by the table-driven arithmetic.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

/// Prime p, degree k and a monic degree-k modulus over GF(p).
/// `modulus` holds coefficients c_0 .. c_k (lowest first), c_k = 1.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> modulus{0, 1};

    std::uint64_t order() const { return nt::ipow(p, k); }

    /// `p,k,c0,c1,...,ck`
    std::string to_line() const {
        std::ostringstream os;
        os << p << ',' << k;
        for (auto c : modulus) os << ',' << c;
        return os.str();
    }

    static FieldSpec parse_line(const std::string& line);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace poly {

// Dense polynomials over GF(p), lowest coefficient first, no trailing zeros
// (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

/// Remainder of a modulo a non-zero b.
inline Poly rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - f * b[i] % p) % p);
        trim(a);
    }
    return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return rem(std::move(r), m, p);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    base = rem(std::move(base), m, p);
    for (; e; e >>= 1) {
        if (e & 1) r = mul_mod(r, base, m, p);
        base = mul_mod(base, base, m, p);
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace poly

/// Rabin's test: f | x^(p^k) - x and gcd(f, x^(p^(k/l)) - x) = 1 for every
/// prime l dividing k.
inline bool is_irreducible(std::uint32_t p, const poly::Poly& modulus) {
    poly::Poly f = modulus;
    poly::trim(f);
    if (f.size() < 2) return false;
    const auto k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    const poly::Poly x{0, 1};
    auto frob_power = [&](unsigned j) {
        poly::Poly r = x;
        for (unsigned i = 0; i < j; ++i) r = poly::pow_mod(r, p, f, p);
        return r;
    };
    if (poly::sub(frob_power(k), x, p) != poly::Poly{}) return false;
    for (auto l : nt::prime_divisors(k)) {
        poly::Poly g = poly::gcd(f, poly::sub(frob_power(k / static_cast<unsigned>(l)), x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

inline FieldSpec FieldSpec::parse_line(const std::string& line) {
    FieldSpec s;
    std::vector<long long> nums;
    std::string tok;
    std::istringstream is(line);
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            nums.push_back(std::stoll(tok, &used));
            if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidInput("field spec: bad number '" + tok + "'");
        }
    }
    if (nums.size() < 3) throw InvalidInput("field spec: expected p,k,coefficients");
    if (nums[0] < 2 || !nt::is_prime(static_cast<std::uint64_t>(nums[0])))
        throw InvalidInput("field spec: p is not prime");
    if (nums[1] < 1) throw InvalidInput("field spec: k must be positive");
    s.p = static_cast<std::uint32_t>(nums[0]);
    s.k = static_cast<std::uint32_t>(nums[1]);
    if (nums.size() != s.k + 3) throw InvalidInput("field spec: expected k+1 coefficients");
    s.modulus.clear();
    for (std::size_t i = 2; i < nums.size(); ++i) {
        if (nums[i] < 0 || nums[i] >= nums[0]) throw InvalidInput("field spec: coefficient out of range");
        s.modulus.push_back(static_cast<std::uint32_t>(nums[i]));
    }
    if (s.modulus.back() != 1) throw InvalidInput("field spec: modulus must be monic");
    return s;
}

namespace detail {

struct ModulusEntry {
    std::uint32_t p, k;
    std::uint32_t coeffs[17];
};

// Canonical moduli: for each (p, k) the monic irreducible polynomial whose
// packed low coefficients sum c_i p^i is smallest among those having x as a
// primitive element. Regenerate with canonical_modulus_search.
inline constexpr ModulusEntry kModuli[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 1, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {5, 2, {2, 1, 1}},
    {5, 3, {2, 3, 0, 1}},
    {7, 2, {3, 1, 1}},
    {7, 3, {2, 3, 0, 1}},
    {11, 2, {7, 1, 1}},
    {13, 2, {2, 1, 1}},
};

} // namespace detail

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^k) with log/antilog and Zech tables. Elements are packed integers
/// sum c_i p^i of the coefficient vector of their residue polynomial.
class FiniteField {
public:
    using value_type = std::uint32_t;

    static FieldPtr make(const FieldSpec& spec) {
        return std::shared_ptr<const FiniteField>(new FiniteField(spec));
    }
    static FieldPtr make(std::uint32_t p, std::uint32_t k = 1) { return make(canonical_spec(p, k)); }
    /// q must be a prime power.
    static FieldPtr make_order(std::uint64_t q) {
        auto pk = nt::prime_power(q);
        if (!pk) throw InvalidInput("field order " + std::to_string(q) + " is not a prime power");
        return make(static_cast<std::uint32_t>(pk->first), pk->second);
    }

    static FieldSpec canonical_spec(std::uint32_t p, std::uint32_t k);
    static FieldSpec canonical_modulus_search(std::uint32_t p, std::uint32_t k);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.k; }
    std::uint32_t order() const { return q_; }
    bool is_prime_field() const { return spec_.k == 1; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type primitive() const { return exp_[1]; }

    /// Image of an integer in the prime subfield.
    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(spec_.p);
        if (r < 0) r += spec_.p;
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const {
        if (spec_.k == 1) {
            value_type s = a + b;
            return s >= spec_.p ? s - spec_.p : s;
        }
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a], lb = log_[b];
        const std::uint32_t n = lb >= la ? lb - la : lb + (q_ - 1) - la;
        const std::int32_t z = zech_[n];
        if (z < 0) return 0;
        return exp_[la + static_cast<std::uint32_t>(z)];
    }

    value_type neg(value_type a) const {
        if (a == 0) return 0;
        if (spec_.k == 1) return spec_.p - a;
        return exp_[log_[a] + neg_one_log_];
    }

    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }

    value_type mul(value_type a, value_type b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    value_type inv(value_type a) const {
        if (a == 0) throw InvalidInput("inverse of zero field element");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    value_type pow(value_type a, long long e) const {
        if (a == 0) {
            if (e < 0) throw InvalidInput("negative power of zero field element");
            return e == 0 ? 1 : 0;
        }
        const long long m = static_cast<long long>(q_) - 1;
        long long r = (static_cast<long long>(log_[a]) * (e % m)) % m;
        if (r < 0) r += m;
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Discrete logarithm to the base primitive(); a must be non-zero.
    std::uint32_t log(value_type a) const {
        if (a == 0) throw InvalidInput("logarithm of zero");
        return log_[a];
    }

    /// Least n >= 1 with a^n = 1.
    std::uint64_t mult_order(value_type a) const {
        if (a == 0) throw InvalidInput("multiplicative order of zero");
        const std::uint64_t m = q_ - 1;
        return m / std::gcd<std::uint64_t>(m, log_[a]);
    }

    value_type frobenius(value_type a) const { return pow(a, spec_.p); }

    std::vector<std::uint32_t> coefficients(value_type a) const {
        std::vector<std::uint32_t> c(spec_.k);
        for (auto& x : c) {
            x = a % spec_.p;
            a /= spec_.p;
        }
        return c;
    }

    value_type from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() > spec_.k) throw InvalidInput("too many coefficients for field element");
        value_type v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= spec_.p) throw InvalidInput("coefficient out of range");
            v = v * spec_.p + c[i];
        }
        return v;
    }

    /// Polynomial multiplication reduced mod the modulus; the table-free route.
    value_type mul_slow(value_type a, value_type b) const {
        poly::Poly pa(coefficients(a)), pb(coefficients(b));
        poly::trim(pa);
        poly::trim(pb);
        poly::Poly r = poly::mul_mod(pa, pb, modulus_poly(), spec_.p);
        r.resize(spec_.k, 0);
        return from_coefficients(r);
    }

    /// Coefficient-wise addition; the table-free route.
    value_type add_slow(value_type a, value_type b) const {
        auto ca = coefficients(a), cb = coefficients(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % spec_.p;
        return from_coefficients(ca);
    }

private:
    explicit FiniteField(const FieldSpec& spec) : spec_(spec) {
        if (!nt::is_prime(spec_.p)) throw InvalidInput("field characteristic is not prime");
        if (spec_.k < 1 || spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() != 1)
            throw InvalidInput("field modulus must be monic of degree k");
        if (spec_.order() > kMaxFieldOrder) throw InvalidInput("field order exceeds 2^16");
        for (auto c : spec_.modulus)
            if (c >= spec_.p) throw InvalidInput("modulus coefficient out of range");
        if (!is_irreducible(spec_.p, spec_.modulus)) throw InvalidInput("field modulus is reducible");
        q_ = static_cast<std::uint32_t>(spec_.order());
        build_tables();
    }

    const poly::Poly& modulus_poly() const { return spec_.modulus; }

    void build_tables() {
        const std::uint32_t m = q_ - 1;
        exp_.assign(2 * static_cast<std::size_t>(m) + 1, 0);
        log_.assign(q_, 0);
        if (q_ == 2) {
            exp_.assign(3, 1);
            log_[1] = 0;
            zech_.assign(1, -1);
            neg_one_log_ = 0;
            return;
        }
        // smallest packed element of order q-1; for canonical moduli that is x
        value_type g = 0;
        for (value_type cand = 2; cand < q_ && g == 0; ++cand) {
            value_type cur = 1;
            std::uint32_t n = 0;
            do {
                cur = mul_slow(cur, cand);
                ++n;
            } while (cur != 1 && n <= m);
            if (n == m) g = cand;
        }
        value_type cur = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_slow(cur, g);
        }
        for (std::uint32_t i = m; i < exp_.size(); ++i) exp_[i] = exp_[i - m];
        zech_.assign(m, -1);
        for (std::uint32_t n = 0; n < m; ++n) {
            const value_type s = add_slow(1, exp_[n]);
            zech_[n] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
        }
        neg_one_log_ = (spec_.p == 2) ? 0 : m / 2;
    }

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<value_type> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::int32_t> zech_;
    std::uint32_t neg_one_log_ = 0;
};

inline FieldSpec FiniteField::canonical_modulus_search(std::uint32_t p, std::uint32_t k) {
    if (!nt::is_prime(p) || k < 1) throw InvalidInput("invalid field parameters");
    FieldSpec s;
    s.p = p;
    s.k = k;
    if (k == 1) {
        s.modulus = {0, 1};
        return s;
    }
    const std::uint64_t q = nt::ipow(p, k);
    if (q > kMaxFieldOrder) throw InvalidInput("field order exceeds 2^16");
    for (std::uint64_t code = 1; code < q; ++code) {
        poly::Poly f(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (f[0] == 0 || !is_irreducible(p, f)) continue;
        // x primitive iff x^((q-1)/l) != 1 for each prime l | q-1
        bool primitive = true;
        for (auto l : nt::prime_divisors(q - 1)) {
            if (poly::pow_mod({0, 1}, (q - 1) / l, f, p) == poly::Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            s.modulus = f;
            return s;
        }
    }
    throw InvalidInput("no primitive modulus found");
}

inline FieldSpec FiniteField::canonical_spec(std::uint32_t p, std::uint32_t k) {
    if (k == 1) {
        FieldSpec s;
        s.p = p;
        s.k = 1;
        s.modulus = {0, 1};
        return s;
    }
    for (const auto& e : detail::kModuli) {
        if (e.p == p && e.k == k) {
            FieldSpec s;
            s.p = p;
            s.k = k;
            s.modulus.assign(e.coeffs, e.coeffs + k + 1);
            return s;
        }
    }
    return canonical_modulus_search(p, k);
}

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws InvalidInput.
class FieldElement {
public:
    FieldElement(FieldPtr field, FiniteField::value_type v) : field_(std::move(field)), v_(v) {
        if (v_ >= field_->order()) throw InvalidInput("field element out of range");
    }

    static FieldElement from_coefficients(FieldPtr f, const std::vector<std::uint32_t>& c) {
        auto v = f->from_coefficients(c);
        return {std::move(f), v};
    }

    const FieldPtr& field() const { return field_; }
    FiniteField::value_type value() const { return v_; }
    std::vector<std::uint32_t> coefficients() const { return field_->coefficients(v_); }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(v_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(v_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(v_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(v_, check(o))}; }
    FieldElement operator-() const { return {field_, field_->neg(v_)}; }
    FieldElement inv() const { return {field_, field_->inv(v_)}; }
    FieldElement pow(long long e) const { return {field_, field_->pow(v_, e)}; }
    FieldElement frobenius() const { return {field_, field_->frobenius(v_)}; }
    std::uint64_t mult_order() const { return field_->mult_order(v_); }

    bool operator==(const FieldElement& o) const { return v_ == check(o); }

private:
    FiniteField::value_type check(const FieldElement& o) const {
        if (field_ != o.field_ && field_->spec() != o.field_->spec())
            throw InvalidInput("field elements from different fields");
        return o.v_;
    }

    FieldPtr field_;
    FiniteField::value_type v_;
};

} // namespace centra
