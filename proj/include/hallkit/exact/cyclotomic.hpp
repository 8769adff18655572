/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_m).
 *
 * An element of conductor m is stored as a polynomial in zeta_m of degree
 * below phi(m), reduced modulo the m-th cyclotomic polynomial. Elements of
 * different conductors are lifted to the lcm before any binary operation.
 */
#pragma once

#include "hallkit/exact/rational.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

namespace hallkit {

namespace detail {

using IntPoly = std::vector<long long>;

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den)
{
    // den is monic and divides num
    std::size_t n = num.size() - 1, d = den.size() - 1;
    IntPoly q(n - d + 1, 0);
    for (std::size_t i = n + 1; i-- > d;) {
        long long c = num[i];
        q[i - d] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= d; ++j)
                num[i - d + j] -= c * den[j];
    }
    return q;
}

inline IntPoly compute_cyclotomic(unsigned m, std::map<unsigned, IntPoly>& cache)
{
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        auto it = cache.find(d);
        if (it == cache.end())
            it = cache.emplace(d, compute_cyclotomic(d, cache)).first;
        p = poly_divide_exact(p, it->second);
    }
    return p;
}

inline const IntPoly& cyclotomic_polynomial(unsigned m)
{
    static std::mutex mu;
    static std::map<unsigned, IntPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, compute_cyclotomic(m, cache)).first;
    return it->second;
}

} // namespace detail

class Cyc {
public:
    Cyc() : m_(1), c_(1, Rat(0)) {}
    Cyc(const Rat& r) : m_(1), c_(1, r) {} // NOLINT(google-explicit-constructor)
    Cyc(long v) : Cyc(Rat(v)) {}           // NOLINT(google-explicit-constructor)

    /// zeta_m^k for any integer k.
    static Cyc root_of_unity(unsigned m, long k)
    {
        if (m == 0)
            throw std::invalid_argument("conductor must be positive");
        long e = ((k % static_cast<long>(m)) + m) % m;
        std::vector<Rat> poly(static_cast<std::size_t>(e) + 1, Rat(0));
        poly[e] = 1;
        return Cyc(m, std::move(poly));
    }

    /// Builds from an arbitrary-degree polynomial in zeta_m.
    static Cyc from_poly(unsigned m, std::vector<Rat> poly) { return Cyc(m, std::move(poly)); }

    unsigned conductor() const { return m_; }
    const std::vector<Rat>& coefficients() const { return c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0)
                return false;
        return true;
    }

    Rat to_rational() const
    {
        if (!is_rational())
            throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
        return c_[0];
    }

    /// Re-expresses the element in Q(zeta_target); target must be a multiple of the conductor.
    Cyc lift(unsigned target) const
    {
        if (target % m_ != 0)
            throw std::invalid_argument("lift target must be a multiple of the conductor");
        if (target == m_)
            return *this;
        unsigned step = target / m_;
        std::vector<Rat> poly(c_.size() == 0 ? 1 : (c_.size() - 1) * step + 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            poly[i * step] = c_[i];
        return Cyc(target, std::move(poly));
    }

    Cyc conj() const
    {
        std::vector<Rat> poly(m_, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            poly[(m_ - i) % m_] += c_[i];
        return Cyc(m_, std::move(poly));
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b)
    {
        unsigned l = std::lcm(a.m_, b.m_);
        Cyc x = a.lift(l), y = b.lift(l);
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyc operator-(const Cyc& a)
    {
        Cyc x = a;
        for (auto& v : x.c_)
            v = -v;
        return x;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    friend Cyc operator*(const Cyc& a, const Cyc& b)
    {
        unsigned l = std::lcm(a.m_, b.m_);
        Cyc x = a.lift(l), y = b.lift(l);
        if (l == 1)
            return Cyc(x.c_[0] * y.c_[0]);
        std::vector<Rat> poly(x.c_.size() + y.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j)
                if (y.c_[j] != 0)
                    poly[i + j] += x.c_[i] * y.c_[j];
        }
        return Cyc(l, std::move(poly));
    }
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend bool operator==(const Cyc& a, const Cyc& b)
    {
        unsigned l = std::lcm(a.m_, b.m_);
        return a.lift(l).c_ == b.lift(l).c_;
    }

    /// "c0+c1*z+c2*z^2" with z = zeta_conductor; zero terms omitted, "0" for zero.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            std::string coef = is_integer(c_[i]) ? numerator(c_[i]).str() : hallkit::to_string(c_[i]);
            if (!out.empty() && coef.front() != '-')
                out += "+";
            if (i == 0)
                out += coef;
            else {
                if (coef != "1")
                    out += (coef == "-1" ? "-" : coef + "*");
                out += "z";
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    Cyc(unsigned m, std::vector<Rat> poly) : m_(m)
    {
        const auto& phi = detail::cyclotomic_polynomial(m);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = poly.size(); i-- > deg;) {
            Rat lead = poly[i];
            if (lead == 0)
                continue;
            for (std::size_t j = 0; j <= deg; ++j)
                poly[i - deg + j] -= lead * phi[j];
        }
        poly.resize(deg, Rat(0));
        c_ = std::move(poly);
    }

    unsigned m_;
    std::vector<Rat> c_;
};

} // namespace hallkit
