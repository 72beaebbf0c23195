#pragma once

// Truncated Laurent series over the exact rationals, used as a scalar field
// by the chain engines to evaluate N -> infinity limits exactly: run the
// engine at N = 1/h and read coefficients of the result at h^0 (limits) or
// h^1 (leading 1/N corrections).
//
// Every value tracks its own absolute precision: coefficients are known for
// all exponents < prec().  Polynomial inputs are exact (prec = kExact);
// inexactness enters only through series inversion, which keeps a bounded
// window of terms.  Reading a coefficient at or beyond prec() throws, so a
// precision shortfall is loud rather than silently wrong.

#include "parrondo/scalar.hpp"

#include <algorithm>
#include <vector>

namespace parrondo {

struct PrecisionError : Error {
    using Error::Error;
};

class Laurent {
  public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    // Number of terms kept past the valuation when truncation is forced.
    static int& series_terms() {
        static int terms = 32;
        return terms;
    }

    Laurent() = default;
    Laurent(int v) : Laurent(Rational(v)) {}  // NOLINT: implicit for generic code
    explicit Laurent(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    static Laurent monomial(Rational c, int exp) {
        Laurent x(std::move(c));
        x.lo_ += exp;
        return x;
    }
    static Laurent generator() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool exact() const { return prec_ >= kExact; }
    int precision() const { return prec_; }
    // Valuation of a value that is zero within precision is its precision.
    int valuation() const { return c_.empty() ? prec_ : lo_; }

    Rational coeff(int k) const {
        if (k >= prec_) throw PrecisionError("laurent: coefficient beyond tracked precision");
        if (k < lo_ || k >= lo_ + static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k - lo_)];
    }

    // Exact if all coefficients from valuation to prec agree and both are
    // zero beyond; precision-limited equality.
    friend bool operator==(const Laurent& a, const Laurent& b) { return (a - b).is_zero(); }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.prec_ = std::min(a.prec_, b.prec_);
        if (a.is_zero() && b.is_zero()) return r;
        int lo = std::min(a.valuation(), b.valuation());
        int hi = std::min({r.prec_, std::max(a.stored_end(), b.stored_end())});
        if (hi <= lo) return r;
        r.lo_ = lo;
        r.c_.resize(static_cast<size_t>(hi - lo), Rational(0));
        a.accumulate_into(r, lo, hi, false);
        b.accumulate_into(r, lo, hi, false);
        r.normalize();
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.prec_ = std::min(a.prec_, b.prec_);
        if (a.is_zero() && b.is_zero()) return r;
        int lo = std::min(a.valuation(), b.valuation());
        int hi = std::min({r.prec_, std::max(a.stored_end(), b.stored_end())});
        if (hi <= lo) return r;
        r.lo_ = lo;
        r.c_.resize(static_cast<size_t>(hi - lo), Rational(0));
        a.accumulate_into(r, lo, hi, false);
        b.accumulate_into(r, lo, hi, true);
        r.normalize();
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.prec_ = mul_prec(a, b);
        if (a.is_zero() || b.is_zero()) return r;
        int lo = a.lo_ + b.lo_;
        int hi = std::min(r.prec_, lo + static_cast<int>(a.c_.size() + b.c_.size()) - 1);
        if (hi <= lo) return r;
        r.lo_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            const int base = a.lo_ + static_cast<int>(i) + b.lo_ - lo;
            if (base >= hi - lo) break;  // everything further is truncated away
            const size_t jmax = std::min(b.c_.size(), static_cast<size_t>(hi - lo - base));
            for (size_t j = 0; j < jmax; ++j) {
                if (!b.c_[j].is_zero()) r.c_[static_cast<size_t>(base) + j] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    Laurent inverse() const {
        if (is_zero()) throw Error("laurent: division by zero (within precision)");
        int v = lo_;
        // Unit part u with u0 != 0; invert as a power series.
        int avail = prec_ >= kExact ? kExact : prec_ - v;  // known unit terms
        int terms = std::min(avail, series_terms());
        std::vector<Rational> u(static_cast<size_t>(terms), Rational(0));
        for (int i = 0; i < terms && i < static_cast<int>(c_.size()); ++i) u[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        std::vector<Rational> w(static_cast<size_t>(terms), Rational(0));
        w[0] = 1 / u[0];
        for (int k = 1; k < terms; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc += u[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
            w[static_cast<size_t>(k)] = -acc / u[0];
        }
        Laurent r;
        r.lo_ = -v;
        r.prec_ = -v + terms;
        if (prec_ < kExact) r.prec_ = std::min(r.prec_, prec_ - 2 * v);
        r.c_.assign(w.begin(), w.end());
        r.c_.resize(static_cast<size_t>(std::max(0, r.prec_ - r.lo_)));
        r.normalize();
        return r;
    }

    friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator/=(const Laurent& o) { return *this = *this / o; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + rational_str(c_[i]) + ")h^" + std::to_string(lo_ + static_cast<int>(i));
        }
        return out;
    }

  private:
    int stored_end() const { return lo_ + static_cast<int>(c_.size()); }

    void accumulate_into(Laurent& r, int lo, int hi, bool negate) const {
        for (size_t i = 0; i < c_.size(); ++i) {
            int e = lo_ + static_cast<int>(i);
            if (e < lo || e >= hi) continue;
            if (negate)
                r.c_[static_cast<size_t>(e - lo)] -= c_[i];
            else
                r.c_[static_cast<size_t>(e - lo)] += c_[i];
        }
    }

    // x y with x known mod h^Px, y known mod h^Py is known mod
    // h^min(val(x)+Py, val(y)+Px); a term drops out when that factor is
    // exact.  valuation() of a zero-within-precision operand is its
    // precision, which is exactly the right bound for the product.
    static int mul_prec(const Laurent& a, const Laurent& b) {
        if (a.exact() && b.exact()) return kExact;
        long t1 = b.exact() ? static_cast<long>(kExact) : a.valuation() + static_cast<long>(b.prec_);
        long t2 = a.exact() ? static_cast<long>(kExact) : b.valuation() + static_cast<long>(a.prec_);
        return static_cast<int>(std::min({t1, t2, static_cast<long>(kExact)}));
    }

    void normalize() {
        size_t begin = 0, end = c_.size();
        while (begin < end && c_[begin].is_zero()) ++begin;
        while (end > begin && c_[end - 1].is_zero()) --end;
        if (begin == end) {
            c_.clear();
            lo_ = 0;
            return;
        }
        lo_ += static_cast<int>(begin);
        c_ = std::vector<Rational>(c_.begin() + static_cast<long>(begin), c_.begin() + static_cast<long>(end));
    }

    int lo_ = 0;
    int prec_ = kExact;
    std::vector<Rational> c_;
};

template <>
struct scalar_traits<Laurent> {
    static constexpr bool is_exact = true;
    static constexpr bool is_ordered = false;

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rational(1)); }
    static Laurent from_rational(const Rational& r) { return Laurent(r); }
    static double to_double(const Laurent& x) {
        return x.is_zero() ? 0.0 : scalar_traits<Rational>::to_double(x.coeff(x.valuation()));
    }
    static bool is_zero(const Laurent& x) { return x.is_zero(); }
    static bool near_zero(const Laurent& x) { return x.is_zero(); }
    static bool pivot_usable(const Laurent& x) { return !x.is_zero(); }
    // Prefer the pivot of minimal valuation; divisions then lose the least
    // absolute precision.
    static bool pivot_better(const Laurent& a, const Laurent& b) { return a.valuation() < b.valuation(); }
    static std::string str(const Laurent& x) { return x.str(); }
};

}  // namespace parrondo
