#pragma once

#include <vector>

#include "deltakit/field.hpp"

namespace deltakit {

// Polynomial in one indeterminate z over GF(p), dense coefficient vector,
// index = power of z. Normalized: no trailing zero coefficients.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Fp> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(Fp v) { return ZPoly(std::vector<Fp>{v}); }
    // c * z^k
    static ZPoly monomial(Fp c, int k) {
        std::vector<Fp> v(k + 1);
        v[k] = c;
        return ZPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for the zero polynomial
    Fp coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Fp(); }
    const std::vector<Fp>& coeffs() const { return c_; }

    Fp eval(Fp x) const {
        Fp r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        std::vector<Fp> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return ZPoly(std::move(r));
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        std::vector<Fp> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return ZPoly(std::move(r));
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        std::vector<Fp> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return ZPoly(std::move(r));
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Fp> c_;
};

// Interpolation through (x_i, y_i) for distinct x_i, by Newton's divided
// differences. O(d^2).
inline ZPoly interpolate(const std::vector<Fp>& xs, const std::vector<Fp>& ys) {
    const std::size_t m = xs.size();
    std::vector<Fp> dd = ys; // divided differences, built column by column
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - level]).inv();
    ZPoly result;
    ZPoly basis = ZPoly::constant(fp(1));
    for (std::size_t i = 0; i < m; ++i) {
        result = result + ZPoly::constant(dd[i]) * basis;
        basis = basis * (ZPoly::monomial(fp(1), 1) - ZPoly::constant(xs[i]));
    }
    return result;
}

} // namespace deltakit
