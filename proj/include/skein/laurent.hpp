#pragma once
/// Multivariate Laurent polynomials with integer coefficients over the
/// variables s, a, z, w, extended by a formal fourth root of unity i
/// (i^2 = -1 is folded into the coefficient sign, so each monomial carries
/// an i-exponent of 0 or 1).  Also a small univariate rational-function type
/// used for generic (indeterminate) computations.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/cyclotomic.hpp"

namespace skein {

constexpr int kNumVars = 4;
inline const char* kVarNames[kNumVars] = {"s", "a", "z", "w"};
enum Var : int { VAR_S = 0, VAR_A = 1, VAR_Z = 2, VAR_W = 3 };

struct Mono {
    std::array<int32_t, kNumVars> e{0, 0, 0, 0};
    uint8_t iexp = 0;  // 0 or 1 after normalization

    friend bool operator<(const Mono& x, const Mono& y) {
        if (x.e != y.e) return x.e < y.e;
        return x.iexp < y.iexp;
    }
    friend bool operator==(const Mono& x, const Mono& y) { return x.e == y.e && x.iexp == y.iexp; }
};

class Laurent {
  public:
    Laurent() = default;

    static Laurent from_int(const Int& c) {
        Laurent p;
        if (c != 0) p.terms_[Mono{}] = c;
        return p;
    }
    static Laurent from_int(long c) { return from_int(Int(c)); }

    /// c * i^iexp * prod_v var_v^{exps[v]}
    static Laurent monomial(const Int& c, std::array<int32_t, kNumVars> exps, int iexp = 0) {
        Laurent p;
        p.add_term(Mono{exps, 0}, c, iexp);
        return p;
    }
    static Laurent var_pow(Var v, int32_t e, const Int& c = Int(1), int iexp = 0) {
        std::array<int32_t, kNumVars> exps{0, 0, 0, 0};
        exps[v] = e;
        return monomial(c, exps, iexp);
    }
    static Laurent i_unit(int iexp = 1) { return monomial(Int(1), {0, 0, 0, 0}, iexp); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c, 0);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c, 0);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                for (int v = 0; v < kNumVars; ++v) m.e[v] = ma.e[v] + mb.e[v];
                p.add_term(m, ca * cb, ma.iexp + mb.iexp);
            }
        return p;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator*=(const Int& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coef] : terms_) coef *= c;
        return *this;
    }
    friend Laurent operator*(Laurent a, const Int& c) { return a *= c; }

    Laurent pow(long n) const {
        if (n < 0) {
            // only monomials are invertible here
            if (terms_.size() != 1) throw std::domain_error("Laurent::pow: negative power of non-monomial");
            const auto& [m, c] = *terms_.begin();
            if (c != 1 && c != -1) throw std::domain_error("Laurent::pow: negative power needs unit coefficient");
            Mono inv;
            for (int v = 0; v < kNumVars; ++v) inv.e[v] = -m.e[v];
            // (c i^t x^e)^-1 = c^-1 i^-t x^-e ; i^-1 = -i => i^{-t} = (-1)^t i^t for t in {0,1}
            Laurent base;
            Int cc = c;
            if (m.iexp == 1) cc = -cc;
            base.add_term(inv, cc, m.iexp);
            return base.pow(-n);
        }
        Laurent acc = from_int(1), base = *this;
        unsigned long u = (unsigned long)n;
        while (u) {
            if (u & 1) acc *= base;
            base *= base;
            u >>= 1;
        }
        return acc;
    }

    /// Substitute each variable by a unit monomial: var_v -> c_v * i^{t_v} * prod var^{E_v}.
    /// (General enough for mirrors s -> s^{-1} and the i-twisted a,z substitutions.)
    struct UnitSub {
        std::array<int32_t, kNumVars> e{0, 0, 0, 0};
        int iexp = 0;
        int sign = 1;
    };
    Laurent substitute_units(const std::array<std::optional<UnitSub>, kNumVars>& subs) const {
        Laurent out;
        for (const auto& [m, c] : terms_) {
            Mono nm;
            long itot = m.iexp;
            Int coeff = c;
            for (int v = 0; v < kNumVars; ++v) {
                if (!subs[v]) {
                    nm.e[v] += m.e[v];
                    continue;
                }
                const UnitSub& s = *subs[v];
                long ev = m.e[v];
                for (int u = 0; u < kNumVars; ++u) nm.e[u] += int32_t(ev) * s.e[u];
                itot += ev * s.iexp;
                if (s.sign < 0 && (ev % 2 != 0)) coeff = -coeff;
            }
            out.add_term(nm, coeff, itot);
        }
        return out;
    }

    /// Exact evaluation: each used variable must have a value; i evaluates to
    /// zeta_M^{M/4} (so 4 must divide the field order if any i appears).
    Cyclo eval(const FieldPtr& f, const std::array<std::optional<Cyclo>, kNumVars>& values) const {
        Cyclo acc = Cyclo::zero(f);
        bool need_i = false;
        for (const auto& [m, c] : terms_)
            if (m.iexp) need_i = true;
        Cyclo iunit = Cyclo::zero(f);
        if (need_i) {
            if (f->order() % 4 != 0) throw std::invalid_argument("Laurent::eval: need 4 | field order for i");
            iunit = Cyclo::zeta_pow(f, long(f->order()) / 4);
        }
        for (const auto& [m, c] : terms_) {
            Cyclo t = Cyclo::from_int(f, c);
            for (int v = 0; v < kNumVars; ++v) {
                if (m.e[v] == 0) continue;
                if (!values[v]) throw std::invalid_argument(std::string("Laurent::eval: no value for ") + kVarNames[v]);
                t *= values[v]->pow(m.e[v]);
            }
            if (m.iexp) t *= iunit;
            acc += t;
        }
        return acc;
    }

    std::complex<double> approx(const std::array<std::complex<double>, kNumVars>& values) const {
        std::complex<double> acc(0, 0);
        const std::complex<double> I(0, 1);
        for (const auto& [m, c] : terms_) {
            std::complex<double> t(c.get_d(), 0);
            for (int v = 0; v < kNumVars; ++v)
                if (m.e[v] != 0) t *= std::pow(values[v], m.e[v]);
            if (m.iexp) t *= I;
            acc += t;
        }
        return acc;
    }

    /// True if only variable v (and no i) occurs.
    bool univariate_in(Var v) const {
        for (const auto& [m, c] : terms_) {
            if (m.iexp) return false;
            for (int u = 0; u < kNumVars; ++u)
                if (u != v && m.e[u] != 0) return false;
        }
        return true;
    }
    std::map<int32_t, Int> univariate_coeffs(Var v) const {
        if (!univariate_in(v)) throw std::logic_error("not univariate");
        std::map<int32_t, Int> out;
        for (const auto& [m, c] : terms_) out[m.e[v]] = c;
        return out;
    }

    std::string serialize() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int ab = abs(c);
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            bool unit = (ab == 1);
            bool printed = false;
            if (!unit) {
                os << ab.get_str();
                printed = true;
            }
            if (m.iexp) {
                if (printed) os << "*";
                os << "i";
                printed = true;
            }
            for (int v = 0; v < kNumVars; ++v) {
                if (m.e[v] == 0) continue;
                if (printed) os << "*";
                os << kVarNames[v];
                if (m.e[v] != 1) os << "^" << m.e[v];
                printed = true;
            }
            if (!printed) os << "1";
        }
        return os.str();
    }

  private:
    void add_term(const Mono& m, const Int& c, long extra_iexp) {
        if (c == 0) return;
        long it = (long(m.iexp) + extra_iexp) % 4;
        if (it < 0) it += 4;
        Mono key = m;
        Int coeff = c;
        if (it >= 2) {
            coeff = -coeff;
            it -= 2;
        }
        key.iexp = uint8_t(it);
        auto [pos, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            pos->second += coeff;
            if (pos->second == 0) terms_.erase(pos);
        }
    }

    std::map<Mono, Int> terms_;
};

// ---------------------------------------------------------------------------
// Univariate rational functions over Q (variable is formal; by convention the
// s-slot of Laurent is used for storage and the display name is configurable).
// ---------------------------------------------------------------------------

namespace detail {

/// Dense integer polynomial helpers (ascending coefficients).
inline void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return c;
}
inline Int poly_content(const std::vector<Int>& p) {
    Int g(0);
    for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}
inline std::vector<Int> primitive_part(std::vector<Int> p) {
    trim(p);
    Int g = poly_content(p);
    if (g > 1)
        for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}
/// Pseudo-remainder of a by b (b nonempty).
inline std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    trim(a);
    int db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db) {
        int da = int(a.size()) - 1;
        Int lead = a.back();
        for (Int& c : a) c *= b.back();
        for (int k = 0; k <= db; ++k) mpz_submul(a[size_t(da - db + k)].get_mpz_t(), lead.get_mpz_t(), b[size_t(k)].get_mpz_t());
        trim(a);
        if (a.empty()) break;
    }
    return a;
}
inline std::vector<Int> poly_gcd(std::vector<Int> a, std::vector<Int> b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}
inline std::vector<Int> poly_div_exact(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (b.empty()) throw std::domain_error("poly division by zero");
    std::vector<Int> rem = a, q;
    trim(rem);
    if (rem.empty()) return {};
    if (rem.size() < b.size()) throw std::logic_error("poly_div_exact: not divisible");
    q.assign(rem.size() - b.size() + 1, Int(0));
    for (int qi = int(q.size()) - 1; qi >= 0; --qi) {
        Int c = rem[size_t(qi) + b.size() - 1];
        if (c % b.back() != 0) throw std::logic_error("poly_div_exact: not divisible");
        c /= b.back();
        q[size_t(qi)] = c;
        if (c != 0)
            for (size_t k = 0; k < b.size(); ++k) mpz_submul(rem[size_t(qi) + k].get_mpz_t(), c.get_mpz_t(), b[k].get_mpz_t());
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace detail

/// Element of Q(x) stored as num/den with: integer dense coefficients shifted
/// by a power of x (Laurent), den primitive with positive leading coefficient,
/// gcd(num_poly, den_poly) = 1, and x-powers factored so den has nonzero
/// constant term.  The shared x-shift lives in `shift` (numerator exponent
/// offset), so values are x^shift * num(x)/den(x).
class RatFunc {
  public:
    RatFunc() : shift_(0), num_{}, den_{Int(1)} {}
    static RatFunc from_int(long v) {
        RatFunc r;
        if (v != 0) r.num_ = {Int(v)};
        return r;
    }
    static RatFunc from_rat(const Rat& v) {
        RatFunc r;
        if (v != 0) {
            r.num_ = {Int(v.get_num())};
            r.den_ = {Int(v.get_den())};
        }
        return r;
    }
    /// c * x^e
    static RatFunc x_pow(long e, long c = 1) {
        RatFunc r;
        if (c != 0) {
            r.num_ = {Int(c)};
            r.shift_ = e;
        }
        return r;
    }

    bool is_zero() const { return num_.empty(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long sh = std::min(a.shift_, b.shift_);
        std::vector<Int> na = detail::poly_mul(a.shifted_num(sh), b.den_);
        std::vector<Int> nb = detail::poly_mul(b.shifted_num(sh), a.den_);
        if (na.size() < nb.size()) na.resize(nb.size());
        for (size_t j = 0; j < nb.size(); ++j) na[j] += nb[j];
        RatFunc r;
        r.shift_ = sh;
        r.num_ = std::move(na);
        r.den_ = detail::poly_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        for (Int& c : r.num_) c = -c;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        RatFunc r;
        r.shift_ = a.shift_ + b.shift_;
        r.num_ = detail::poly_mul(a.num_, b.num_);
        r.den_ = detail::poly_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
        if (a.is_zero()) return RatFunc();
        // invert b: strip x-powers so den keeps nonzero constant term
        RatFunc binv;
        binv.num_ = b.den_;
        binv.den_ = b.num_;
        binv.shift_ = -b.shift_;
        // den may have an x-power content; move it to shift
        size_t low = 0;
        while (low < binv.den_.size() && binv.den_[low] == 0) ++low;
        if (low > 0) {
            binv.den_.erase(binv.den_.begin(), binv.den_.begin() + long(low));
            binv.shift_ -= long(low);
        }
        binv.normalize();
        return a * binv;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long n) const {
        if (n < 0) return (RatFunc::from_int(1) / *this).pow(-n);
        RatFunc acc = RatFunc::from_int(1), base = *this;
        unsigned long u = (unsigned long)n;
        while (u) {
            if (u & 1) acc *= base;
            base *= base;
            u >>= 1;
        }
        return acc;
    }

    /// x -> x^{-1}
    RatFunc invert_variable() const {
        if (is_zero()) return RatFunc();
        RatFunc r;
        r.num_.assign(num_.rbegin(), num_.rend());
        r.den_.assign(den_.rbegin(), den_.rend());
        // value: x^shift num(x)/den(x) with x->1/x: x^{-shift} x^{-(dn-1)} rev_num / (x^{-(dd-1)} rev_den)
        r.shift_ = -shift_ - (long(num_.size()) - 1) + (long(den_.size()) - 1);
        r.normalize();
        return r;
    }

    Cyclo eval(const Cyclo& x) const {
        Cyclo n = Cyclo::zero(x.field()), d = Cyclo::zero(x.field());
        for (size_t j = num_.size(); j-- > 0;) {
            n *= x;
            n += Cyclo::from_int(x.field(), num_[j]);
        }
        for (size_t j = den_.size(); j-- > 0;) {
            d *= x;
            d += Cyclo::from_int(x.field(), den_[j]);
        }
        Cyclo r = n / d;
        if (shift_ != 0) r *= x.pow(shift_);
        return r;
    }
    Rat eval_rational(const Rat& x) const {
        Rat n(0), d(0);
        for (size_t j = num_.size(); j-- > 0;) n = n * x + Rat(num_[j]);
        for (size_t j = den_.size(); j-- > 0;) d = d * x + Rat(den_[j]);
        if (d == 0) throw std::domain_error("RatFunc pole at rational point");
        Rat r = n / d;
        if (shift_ != 0) {
            Rat xp(1);
            long e = shift_ < 0 ? -shift_ : shift_;
            for (long k = 0; k < e; ++k) xp *= x;
            if (shift_ < 0)
                r /= xp;
            else
                r *= xp;
        }
        r.canonicalize();
        return r;
    }

    /// If the value is a Laurent polynomial (den == const), return it in `slot`.
    std::optional<Laurent> as_laurent(Var slot = VAR_S) const {
        if (den_.size() != 1) return std::nullopt;
        Laurent p;
        for (size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] == 0) continue;
            Rat c(num_[j]);
            c /= Rat(den_[0]);
            c.canonicalize();
            if (c.get_den() != 1) return std::nullopt;
            p += Laurent::var_pow(slot, int32_t(long(j) + shift_), Int(c.get_num()));
        }
        return p;
    }

    std::string serialize(const std::string& var = "x") const {
        auto poly_str = [&](const std::vector<Int>& p, long sh) {
            if (p.empty()) return std::string("0");
            std::ostringstream os;
            bool first = true;
            for (size_t j = 0; j < p.size(); ++j) {
                if (p[j] == 0) continue;
                Int ab = abs(p[j]);
                os << (first ? (p[j] < 0 ? "-" : "") : (p[j] < 0 ? " - " : " + "));
                first = false;
                long e = long(j) + sh;
                if (ab != 1 || e == 0) os << ab.get_str();
                if (e != 0) {
                    if (ab != 1) os << "*";
                    os << var;
                    if (e != 1) os << "^" << e;
                }
            }
            return os.str();
        };
        std::string ns = poly_str(num_, shift_);
        if (den_.size() == 1 && den_[0] == 1) return ns;
        return "(" + ns + ") / (" + poly_str(den_, 0) + ")";
    }

    const std::vector<Int>& num_poly() const { return num_; }
    const std::vector<Int>& den_poly() const { return den_; }
    long shift() const { return shift_; }

  private:
    std::vector<Int> shifted_num(long target_shift) const {
        std::vector<Int> p(size_t(shift_ - target_shift), Int(0));
        p.insert(p.end(), num_.begin(), num_.end());
        return p;
    }

    void normalize() {
        detail::trim(num_);
        if (num_.empty()) {
            den_ = {Int(1)};
            shift_ = 0;
            return;
        }
        // move pure x-powers of num into shift
        size_t low = 0;
        while (low < num_.size() && num_[low] == 0) ++low;
        if (low > 0) {
            num_.erase(num_.begin(), num_.begin() + long(low));
            shift_ += long(low);
        }
        // den must have nonzero constant term (x-content belongs in shift)
        size_t dlow = 0;
        while (dlow < den_.size() && den_[dlow] == 0) ++dlow;
        if (dlow > 0) {
            den_.erase(den_.begin(), den_.begin() + long(dlow));
            shift_ -= long(dlow);
        }
        std::vector<Int> g = detail::poly_gcd(num_, den_);
        if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
            num_ = detail::poly_div_exact(num_, g);
            den_ = detail::poly_div_exact(den_, g);
        }
        // integer content: reduce gcd(content(num), content(den))
        Int cn = detail::poly_content(num_), cd = detail::poly_content(den_), gg;
        mpz_gcd(gg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (gg > 1) {
            for (Int& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), gg.get_mpz_t());
            for (Int& c : den_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), gg.get_mpz_t());
        }
        if (den_.back() < 0) {
            for (Int& c : num_) c = -c;
            for (Int& c : den_) c = -c;
        }
    }

    long shift_;
    std::vector<Int> num_;  // ascending, num_.back() != 0 unless empty, num_[0] != 0
    std::vector<Int> den_;  // ascending, den_[0] != 0, den_.back() > 0, coprime to num_
};

}  // namespace skein
