#pragma once
/// Exact arithmetic in cyclotomic fields Q(zeta_M).
///
/// Elements are represented in the power basis 1, z, z^2, ..., z^{phi(M)-1}
/// (z a fixed primitive M-th root of unity) as an integer numerator vector
/// with a single positive common denominator, kept in lowest terms.  All
/// arithmetic reduces modulo the M-th cyclotomic polynomial Phi_M, so equality
/// of values is literal equality of representations.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficients of the M-th cyclotomic polynomial, ascending degree, monic.
/// Computed as (x^M - 1) / prod{ Phi_d : d | M, d < M } by exact division.
inline const std::vector<Int>& cyclotomic_polynomial(unsigned M) {
    static std::map<unsigned, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    // work recursively without re-locking: local computation using cache reads
    // via a helper that assumes the lock is held.
    struct Helper {
        std::map<unsigned, std::vector<Int>>& cache;
        const std::vector<Int>& get(unsigned m) {
            auto found = cache.find(m);
            if (found != cache.end()) return found->second;
            std::vector<Int> num(m + 1);
            num[0] = -1;
            num[m] = 1;  // x^m - 1
            for (unsigned d = 1; d < m; ++d) {
                if (m % d != 0) continue;
                const std::vector<Int>& phi_d = get(d);
                // exact synthetic division num /= phi_d (phi_d monic)
                std::vector<Int> quot(num.size() - phi_d.size() + 1);
                std::vector<Int> rem = num;
                for (int qi = int(quot.size()) - 1; qi >= 0; --qi) {
                    Int c = rem[qi + phi_d.size() - 1];
                    quot[qi] = c;
                    if (c != 0)
                        for (size_t k = 0; k < phi_d.size(); ++k)
                            rem[qi + k] -= c * phi_d[k];
                }
                for (const Int& r : rem)
                    if (r != 0) throw std::logic_error("cyclotomic division not exact");
                num = std::move(quot);
            }
            return cache.emplace(m, std::move(num)).first->second;
        }
    } helper{cache};
    return helper.get(M);
}

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

/// A fixed cyclotomic field Q(zeta_M) with precomputed reduction data.
class CycloField : public std::enable_shared_from_this<CycloField> {
  public:
    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    const std::vector<Int>& modulus() const { return phi_; }

    /// Shared, cached field objects so elements can compare field identity cheaply.
    static FieldPtr get(unsigned M) {
        if (M == 0) throw std::invalid_argument("cyclotomic field order must be positive");
        static std::map<unsigned, FieldPtr> registry;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(M);
        if (it != registry.end()) return it->second;
        FieldPtr f(new CycloField(M));
        registry.emplace(M, f);
        return f;
    }

    /// Reduce an integer coefficient vector (any length) mod Phi_M in place,
    /// truncating to length degree().
    void reduce(std::vector<Int>& c) const {
        if (c.size() < degree_) {
            c.resize(degree_);
            return;
        }
        for (size_t idx = c.size(); idx-- > degree_;) {
            if (c[idx] == 0) continue;
            Int t;
            mpz_swap(t.get_mpz_t(), c[idx].get_mpz_t());  // c[idx] := 0
            // x^idx = x^{idx - deg} * x^deg, and x^deg == -sum phi[u] x^u.
            for (unsigned u = 0; u < degree_; ++u)
                if (phi_[u] != 0) mpz_submul(c[idx - degree_ + u].get_mpz_t(), t.get_mpz_t(), phi_[u].get_mpz_t());
        }
        c.resize(degree_);
    }

    /// Primitive root approximation exp(2*pi*i/M).
    std::complex<double> primitive_root_approx() const {
        const double two_pi = 6.283185307179586476925286766559;
        return {std::cos(two_pi / order_), std::sin(two_pi / order_)};
    }

  private:
    explicit CycloField(unsigned M) : order_(M) {
        const std::vector<Int>& p = cyclotomic_polynomial(M);
        phi_.assign(p.begin(), p.end() - 1);  // drop the leading 1; keep low coeffs
        degree_ = unsigned(phi_.size());
        if (degree_ == 0) throw std::logic_error("degenerate cyclotomic field");
    }

    unsigned order_;
    unsigned degree_;
    std::vector<Int> phi_;  // low coefficients of monic Phi_M (length degree_)
};

/// An element of Q(zeta_M): numerator vector over the power basis plus one
/// positive denominator, with gcd(content(num), den) == 1 canonically.
class Cyclo {
  public:
    Cyclo() = default;  // field-less zero; usable only as assignment target
    explicit Cyclo(FieldPtr f) : field_(std::move(f)), num_(field_->degree()), den_(1) {}

    static Cyclo zero(const FieldPtr& f) { return Cyclo(f); }
    static Cyclo one(const FieldPtr& f) {
        Cyclo x(f);
        x.num_[0] = 1;
        return x;
    }
    static Cyclo from_int(const FieldPtr& f, const Int& v) {
        Cyclo x(f);
        x.num_[0] = v;
        return x;
    }
    static Cyclo from_rat(const FieldPtr& f, const Rat& v) {
        Cyclo x(f);
        x.num_[0] = v.get_num();
        x.den_ = v.get_den();
        x.normalize();
        return x;
    }
    /// zeta_M^e (e arbitrary, reduced mod M).
    static Cyclo zeta_pow(const FieldPtr& f, long e) {
        long M = long(f->order());
        e %= M;
        if (e < 0) e += M;
        std::vector<Int> c(size_t(e) + 1);
        c[size_t(e)] = 1;
        f->reduce(c);
        Cyclo x(f);
        x.num_ = std::move(c);
        return x;
    }

    const FieldPtr& field() const { return field_; }
    bool has_field() const { return bool(field_); }

    bool is_zero() const {
        if (!field_) return true;
        for (const Int& c : num_)
            if (c != 0) return false;
        return true;
    }

    /// If the element lies in Q, return it.
    std::optional<Rat> as_rational() const {
        if (!field_) return Rat(0);
        for (size_t j = 1; j < num_.size(); ++j)
            if (num_[j] != 0) return std::nullopt;
        Rat r(num_[0]);
        r /= Rat(den_);
        r.canonicalize();
        return r;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (!a.field_ || !b.field_) return a.is_zero() && b.is_zero();
        if (a.field_->order() != b.field_->order()) {
            // compare through a common field
            unsigned L = std::lcm(a.field_->order(), b.field_->order());
            return a.lift_to(CycloField::get(L)) == b.lift_to(CycloField::get(L));
        }
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo& operator+=(const Cyclo& o) {
        align(o);
        const Cyclo& b = o.field_->order() == field_->order() ? o : throw std::logic_error("align failed");
        if (den_ == b.den_) {
            for (size_t j = 0; j < num_.size(); ++j) num_[j] += b.num_[j];
        } else {
            Int g, la, lb;
            mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), b.den_.get_mpz_t());
            la = b.den_ / g;  // multiply our parts by la
            lb = den_ / g;    // multiply other's parts by lb
            for (size_t j = 0; j < num_.size(); ++j) {
                num_[j] *= la;
                mpz_addmul(num_[j].get_mpz_t(), b.num_[j].get_mpz_t(), lb.get_mpz_t());
            }
            den_ *= la;
        }
        normalize();
        return *this;
    }
    Cyclo& operator-=(const Cyclo& o) {
        Cyclo t = o;
        t.negate();
        return *this += t;
    }
    Cyclo& operator*=(const Cyclo& o) {
        align(o);
        mul_assign(o);
        return *this;
    }
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }

    void negate() {
        for (Int& c : num_) c = -c;
    }
    Cyclo operator-() const {
        Cyclo t = *this;
        t.negate();
        return t;
    }

    Cyclo& operator*=(const Rat& r) {
        for (Int& c : num_) c *= r.get_num();
        den_ *= r.get_den();
        normalize();
        return *this;
    }
    Cyclo& operator*=(long v) {
        for (Int& c : num_) c *= v;
        normalize();
        return *this;
    }
    friend Cyclo operator*(Cyclo a, const Rat& r) { return a *= r; }
    friend Cyclo operator*(Cyclo a, long v) { return a *= v; }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_M.
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
        const unsigned deg = field_->degree();
        using Poly = std::vector<Rat>;
        auto degree_of = [](const Poly& p) {
            for (size_t j = p.size(); j-- > 0;)
                if (p[j] != 0) return int(j);
            return -1;
        };
        Poly r0(deg + 1), r1(deg);
        for (unsigned j = 0; j < deg; ++j) r0[j] = Rat(field_->modulus()[j]);
        r0[deg] = 1;
        for (unsigned j = 0; j < deg; ++j) {
            r1[j] = Rat(num_[j]);
            r1[j] /= Rat(den_);
            r1[j].canonicalize();
        }
        Poly s0(1, Rat(0)), s1(1, Rat(1));  // Bezout coefficients for *this
        while (true) {
            int d1 = degree_of(r1);
            if (d1 < 0) throw std::logic_error("cyclotomic inverse: zero remainder before unit gcd");
            if (d1 == 0) break;
            int d0 = degree_of(r0);
            // r0 = q*r1 + rem; update (r0,s0) <- (r1,s1), (r1,s1) <- (rem, s0 - q*s1)
            Poly rem = r0, q(size_t(d0 - d1 + 1));
            for (int qi = d0 - d1; qi >= 0; --qi) {
                Rat c = rem[size_t(qi + d1)] / r1[size_t(d1)];
                q[size_t(qi)] = c;
                if (c != 0)
                    for (int k = 0; k <= d1; ++k) rem[size_t(qi + k)] -= c * r1[size_t(k)];
            }
            Poly snew(std::max(s0.size(), s1.size() + q.size()));
            for (size_t j = 0; j < s0.size(); ++j) snew[j] = s0[j];
            for (size_t j = 0; j < s1.size(); ++j)
                for (size_t k = 0; k < q.size(); ++k) snew[j + k] -= q[k] * s1[j];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snew);
        }
        // r1 is a nonzero constant c: inverse = s1 / c mod Phi.
        Rat c = r1[0];
        Cyclo out(field_);
        // clear denominators of s1/c into (num, den)
        Int den(1);
        std::vector<Rat> coeffs(s1.size());
        for (size_t j = 0; j < s1.size(); ++j) {
            coeffs[j] = s1[j] / c;
            coeffs[j].canonicalize();
            Int g;
            mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), coeffs[j].get_den().get_mpz_t());
            den = g;
        }
        std::vector<Int> nums(s1.size());
        for (size_t j = 0; j < s1.size(); ++j) {
            Int scale = den / coeffs[j].get_den();
            nums[j] = coeffs[j].get_num() * scale;
        }
        field_->reduce(nums);
        out.num_ = std::move(nums);
        out.den_ = den;
        out.normalize();
        return out;
    }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a *= b.inverse(); }
    Cyclo& operator/=(const Cyclo& b) { return *this *= b.inverse(); }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo acc = Cyclo::one(field_), base = *this;
        unsigned long u = (unsigned long)e;
        while (u) {
            if (u & 1) acc *= base;
            base.mul_assign(base);
            u >>= 1;
        }
        return acc;
    }

    /// Galois twist zeta -> zeta^t (requires gcd(t, M) = 1).
    Cyclo galois(long t) const {
        long M = long(field_->order());
        t %= M;
        if (t < 0) t += M;
        std::vector<Int> c(size_t(field_->order()));
        for (size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] == 0) continue;
            size_t e = (j * size_t(t)) % size_t(M);
            c[e] += num_[j];
        }
        field_->reduce(c);
        Cyclo out(field_);
        out.num_ = std::move(c);
        out.den_ = den_;
        out.normalize();
        return out;
    }
    Cyclo conj() const { return galois(long(field_->order()) - 1); }
    bool is_real() const { return *this == conj(); }

    /// Embed into Q(zeta_L) for M | L.
    Cyclo lift_to(const FieldPtr& big) const {
        if (!field_) return Cyclo::zero(big);
        unsigned M = field_->order(), L = big->order();
        if (L == M && big.get() == field_.get()) return *this;
        if (L % M != 0) throw std::invalid_argument("lift_to: target order not a multiple");
        unsigned k = L / M;
        std::vector<Int> c(size_t(num_.size() - 1) * k + 1);
        for (size_t j = 0; j < num_.size(); ++j) c[j * k] = num_[j];
        big->reduce(c);
        Cyclo out(big);
        out.num_ = std::move(c);
        out.den_ = den_;
        out.normalize();
        return out;
    }

    std::complex<double> approx() const {
        if (!field_) return {0.0, 0.0};
        std::complex<double> z = field_->primitive_root_approx(), acc(0.0, 0.0);
        for (size_t j = num_.size(); j-- > 0;) acc = acc * z + std::complex<double>(num_[j].get_d(), 0.0);
        return acc / den_.get_d();
    }

    /// If *this equals zeta_M^e for some e, return e.
    std::optional<long> root_of_unity_log() const {
        for (long e = 0; e < long(field_->order()); ++e)
            if (*this == zeta_pow(field_, e)) return e;
        return std::nullopt;
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "cyc(" << (field_ ? field_->order() : 0) << ";";
        for (size_t j = 0; j < num_.size(); ++j) {
            if (j) os << ",";
            os << num_[j].get_str();
        }
        os << ";" << den_.get_str() << ")";
        return os.str();
    }

    static Cyclo parse(const std::string& text) {
        auto bad = [&]() { return std::invalid_argument("bad cyclotomic literal: " + text); };
        if (text.rfind("cyc(", 0) != 0 || text.back() != ')') throw bad();
        std::string body = text.substr(4, text.size() - 5);
        size_t p1 = body.find(';'), p2 = body.rfind(';');
        if (p1 == std::string::npos || p2 == p1) throw bad();
        unsigned M = unsigned(std::stoul(body.substr(0, p1)));
        Cyclo out(CycloField::get(M));
        std::string mid = body.substr(p1 + 1, p2 - p1 - 1);
        std::istringstream is(mid);
        std::string tok;
        size_t j = 0;
        while (std::getline(is, tok, ',')) {
            if (j >= out.num_.size()) throw bad();
            out.num_[j++] = Int(tok);
        }
        out.den_ = Int(body.substr(p2 + 1));
        out.normalize();
        return out;
    }

    /// Raw access for hot loops (rmatrix contraction).
    const std::vector<Int>& raw_num() const { return num_; }
    const Int& raw_den() const { return den_; }

    /// a += b * c without temporaries beyond one shared scratch buffer.
    static void addmul(Cyclo& a, const Cyclo& b, const Cyclo& c, std::vector<Int>& scratch) {
        if (b.is_zero() || c.is_zero()) return;
        if (a.is_zero() && !a.field_) a = Cyclo::zero(b.field_);
        const unsigned deg = a.field_->degree();
        scratch.assign(2 * deg, Int(0));
        for (unsigned j = 0; j < deg; ++j) {
            if (b.num_[j] == 0) continue;
            for (unsigned k = 0; k < deg; ++k) {
                if (c.num_[k] == 0) continue;
                mpz_addmul(scratch[j + k].get_mpz_t(), b.num_[j].get_mpz_t(), c.num_[k].get_mpz_t());
            }
        }
        a.field_->reduce(scratch);
        // a/da += s/(db*dc)
        Int dprod = b.den_ * c.den_;
        if (a.den_ == dprod) {
            for (unsigned j = 0; j < deg; ++j) a.num_[j] += scratch[j];
        } else {
            Int g, la, lb;
            mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), dprod.get_mpz_t());
            la = dprod / g;
            lb = a.den_ / g;
            for (unsigned j = 0; j < deg; ++j) {
                a.num_[j] *= la;
                mpz_addmul(a.num_[j].get_mpz_t(), scratch[j].get_mpz_t(), lb.get_mpz_t());
            }
            a.den_ *= la;
        }
        a.normalize();
    }

  private:
    void align(const Cyclo& o) {
        if (!field_ && !o.field_) throw std::logic_error("arithmetic on field-less zeros");
        if (!field_) *this = Cyclo::zero(o.field_);
        if (field_->order() != o.field_->order())
            throw std::invalid_argument("cyclotomic field order mismatch; lift explicitly");
    }

    void mul_assign(const Cyclo& o) {
        const unsigned deg = field_->degree();
        std::vector<Int> c(2 * deg);
        for (unsigned j = 0; j < deg; ++j) {
            if (num_[j] == 0) continue;
            for (unsigned k = 0; k < deg; ++k) {
                if (o.num_[k] == 0) continue;
                mpz_addmul(c[j + k].get_mpz_t(), num_[j].get_mpz_t(), o.num_[k].get_mpz_t());
            }
        }
        field_->reduce(c);
        num_ = std::move(c);
        den_ *= o.den_;
        normalize();
    }

    void normalize() {
        if (mpz_sgn(den_.get_mpz_t()) < 0) {
            den_ = -den_;
            for (Int& c : num_) c = -c;
        }
        if (den_ == 0) throw std::logic_error("zero denominator");
        Int g = den_;
        for (const Int& c : num_) {
            if (g == 1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (g > 1) {
            for (Int& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    FieldPtr field_;
    std::vector<Int> num_;
    Int den_{1};
};

/// Evaluate an integer-coefficient polynomial (ascending) at a cyclotomic point.
inline Cyclo eval_int_poly(const std::vector<Int>& coeffs, const Cyclo& x) {
    Cyclo acc = Cyclo::zero(x.field());
    for (size_t j = coeffs.size(); j-- > 0;) {
        acc *= x;
        acc += Cyclo::from_int(x.field(), coeffs[j]);
    }
    return acc;
}

}  // namespace skein
