#include "daha/cyclotomic.hpp"

#include <mpfr.h>

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

namespace daha {

namespace {

std::mutex phi_mutex;
std::map<int, std::vector<long long>>& phi_cache() {
    static std::map<int, std::vector<long long>> cache;
    return cache;
}

// Exact division of integer polynomials, remainder must vanish.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    int dd = static_cast<int>(den.size()) - 1;
    while (dd > 0 && den[dd] == 0) --dd;
    std::vector<long long> q(num.size() - dd, 0);
    for (int i = static_cast<int>(num.size()) - 1 - dd; i >= 0; --i) {
        long long c = num[i + dd] / den[dd];
        q[i] = c;
        for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw DomainError("inexact polynomial division");
    return q;
}

std::vector<long long> phi_unlocked(int n) {
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    std::vector<long long> den{1};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto pd = phi_unlocked(d);
        std::vector<long long> prod(den.size() + pd.size() - 1, 0);
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < pd.size(); ++j) prod[i + j] += den[i] * pd[j];
        den = std::move(prod);
    }
    auto q = poly_div_exact(std::move(num), den);
    phi_cache()[n] = q;
    return q;
}

constexpr int kMaxP = 512;
std::atomic<const RingTable*> ring_tables[kMaxP + 1] = {};
std::mutex ring_mutex;

}  // namespace

std::vector<long long> cyclotomic_poly(int n) {
    if (n < 1) throw DomainError("cyclotomic_poly: n must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_unlocked(n);
}

const RingTable& RingTable::get(int p) {
    if (p < 3 || p > kMaxP) throw DomainError("ring requires 3 <= p <= 512");
    const RingTable* t = ring_tables[p].load(std::memory_order_acquire);
    if (t) return *t;
    std::lock_guard<std::mutex> lock(ring_mutex);
    t = ring_tables[p].load(std::memory_order_relaxed);
    if (t) return *t;
    auto tab = std::make_unique<RingTable>();
    tab->p = p;
    tab->conductor = 4 * p;
    tab->min_poly = cyclotomic_poly(4 * p);
    tab->deg = static_cast<int>(tab->min_poly.size()) - 1;
    const int D = tab->deg;
    std::vector<Rational> cur(D);
    for (int i = 0; i < D; ++i) cur[i] = Rational(static_cast<long>(-tab->min_poly[i]));
    tab->reduction.push_back(cur);
    for (int k = 0; k < tab->conductor + D; ++k) {
        std::vector<Rational> next(D);
        Rational hi = cur[D - 1];
        for (int i = D - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (hi != 0)
            for (int i = 0; i < D; ++i) next[i] += hi * tab->reduction[0][i];
        tab->reduction.push_back(next);
        cur = std::move(next);
    }
    const RingTable* raw = tab.release();
    ring_tables[p].store(raw, std::memory_order_release);
    return *raw;
}

CycScalar::CycScalar(int p) : p_(p) {
    const auto& t = RingTable::get(p);
    a_.assign(t.deg, Rational(0));
    b_.assign(t.deg, Rational(0));
}

CycScalar CycScalar::from_rational(int p, const Rational& r) {
    CycScalar x(p);
    x.a_[0] = r;
    return x;
}

CycScalar CycScalar::sqrt_2p(int p) {
    CycScalar x(p);
    x.b_[0] = 1;
    return x;
}

CycScalar CycScalar::z_power(int p, long long k) {
    const auto& t = RingTable::get(p);
    long long kk = ((k % t.conductor) + t.conductor) % t.conductor;
    CycScalar x(p);
    if (kk < t.deg) {
        x.a_[kk] = 1;
    } else {
        const auto& row = t.reduction[kk - t.deg];
        for (int i = 0; i < t.deg; ++i) x.a_[i] = row[i];
    }
    return x;
}

CycScalar CycScalar::q_power(int p, long long k) { return z_power(p, 2 * k); }

CycScalar CycScalar::from_parts(int p, std::vector<Rational> a,
                                std::vector<Rational> b) {
    const auto& t = RingTable::get(p);
    if (static_cast<int>(a.size()) != t.deg || static_cast<int>(b.size()) != t.deg)
        throw DomainError("coefficient vectors must have length deg Phi_{4p}");
    CycScalar x(p);
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    return x;
}

bool CycScalar::is_zero() const {
    for (const auto& c : a_)
        if (c != 0) return false;
    for (const auto& c : b_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < a_.size(); ++i)
        if (a_[i] != 0) return false;
    for (const auto& c : b_)
        if (c != 0) return false;
    return true;
}

Rational CycScalar::rational_part() const {
    if (!is_rational()) throw DomainError("scalar is not rational");
    return a_[0];
}

void CycScalar::check_same_ring(const CycScalar& o) const {
    if (p_ != o.p_) throw RingMismatchError("scalars from different rings");
}

CycScalar CycScalar::operator-() const {
    CycScalar x = *this;
    for (auto& c : x.a_) c = -c;
    for (auto& c : x.b_) c = -c;
    return x;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    check_same_ring(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    for (size_t i = 0; i < b_.size(); ++i) b_[i] += o.b_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    check_same_ring(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    for (size_t i = 0; i < b_.size(); ++i) b_[i] -= o.b_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const Rational& r) {
    for (auto& c : a_) c *= r;
    for (auto& c : b_) c *= r;
    return *this;
}

namespace {

// multiply in Q[z]/Phi, writing into out (size deg)
void kmul(const RingTable& t, const std::vector<Rational>& x,
          const std::vector<Rational>& y, std::vector<Rational>& out) {
    const int D = t.deg;
    std::vector<Rational> full(2 * D - 1);
    for (int i = 0; i < D; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < D; ++j) {
            if (y[j] == 0) continue;
            full[i + j] += x[i] * y[j];
        }
    }
    out.assign(full.begin(), full.begin() + D);
    for (int k = D; k < 2 * D - 1; ++k) {
        if (full[k] == 0) continue;
        const auto& row = t.reduction[k - D];
        for (int i = 0; i < D; ++i)
            if (row[i] != 0) out[i] += full[k] * row[i];
    }
}

void kaddmul(std::vector<Rational>& acc, const std::vector<Rational>& x,
             const Rational& c) {
    for (size_t i = 0; i < acc.size(); ++i)
        if (x[i] != 0) acc[i] += x[i] * c;
}

bool kzero(const std::vector<Rational>& x) {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

// inverse in the field Q[z]/Phi via extended Euclid over Q[x]
std::vector<Rational> kinv(const RingTable& t, const std::vector<Rational>& a) {
    if (kzero(a)) throw NotInvertibleError("zero has no inverse");
    std::vector<Rational> r0;
    r0.reserve(t.min_poly.size());
    for (long long c : t.min_poly) r0.push_back(Rational(static_cast<long>(c)));
    std::vector<Rational> r1 = a;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    auto trim = [](std::vector<Rational>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    };
    trim(r1);
    while (true) {
        trim(r1);
        if (r1.size() == 1) {
            if (r1[0] == 0) throw NotInvertibleError("not invertible mod Phi");
            Rational inv = 1 / r1[0];
            std::vector<Rational> out(t.deg, Rational(0));
            for (size_t i = 0; i < s1.size() && i < out.size(); ++i)
                out[i] = s1[i] * inv;
            return out;
        }
        // divide r0 by r1
        std::vector<Rational> q(std::max<size_t>(1, r0.size() - r1.size() + 1),
                                Rational(0));
        std::vector<Rational> rem = r0;
        int dd = static_cast<int>(r1.size()) - 1;
        for (int i = static_cast<int>(rem.size()) - 1 - dd; i >= 0; --i) {
            Rational c = rem[i + dd] / r1[dd];
            q[i] = c;
            if (c != 0)
                for (int j = 0; j <= dd; ++j) rem[i + j] -= c * r1[j];
        }
        trim(rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s_next = s0 - q * s1
        std::vector<Rational> qs(q.size() + s1.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<Rational> snext(std::max(s0.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) snext[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
}

}  // namespace

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    check_same_ring(o);
    const auto& t = RingTable::get(p_);
    // most scalars are pure in t; skip the vanishing partial products
    const bool xa = !kzero(a_), xb = !kzero(b_);
    const bool ya = !kzero(o.a_), yb = !kzero(o.b_);
    std::vector<Rational> aa, bb, ab, ba;
    if (xa && ya) kmul(t, a_, o.a_, aa);
    if (xb && yb) kmul(t, b_, o.b_, bb);
    if (xa && yb) kmul(t, a_, o.b_, ab);
    if (xb && ya) kmul(t, b_, o.a_, ba);
    const Rational zero(0);
    for (int i = 0; i < t.deg; ++i) {
        a_[i] = (aa.empty() ? zero : aa[i]) +
                (bb.empty() ? zero : 2 * p_ * bb[i]);
        b_[i] = (ab.empty() ? zero : ab[i]) + (ba.empty() ? zero : ba[i]);
    }
    return *this;
}

bool CycScalar::is_unit() const {
    const auto& t = RingTable::get(p_);
    std::vector<Rational> a2, b2;
    kmul(t, a_, a_, a2);
    kmul(t, b_, b_, b2);
    kaddmul(a2, b2, Rational(-2 * p_));
    return !kzero(a2);
}

CycScalar CycScalar::inverse() const {
    const auto& t = RingTable::get(p_);
    std::vector<Rational> a2, b2;
    kmul(t, a_, a_, a2);
    kmul(t, b_, b_, b2);
    kaddmul(a2, b2, Rational(-2 * p_));
    if (kzero(a2))
        throw NotInvertibleError("norm a^2 - 2p b^2 vanishes");
    auto ninv = kinv(t, a2);
    CycScalar out(p_);
    kmul(t, a_, ninv, out.a_);
    kmul(t, b_, ninv, out.b_);
    for (auto& c : out.b_) c = -c;
    return out;
}

std::complex<double> CycScalar::embed_complex() const {
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, pi / (2 * p_));
    double s = std::sqrt(2.0 * p_);
    std::complex<double> va = 0, vb = 0, zk = 1;
    for (size_t i = 0; i < a_.size(); ++i) {
        va += a_[i].get_d() * zk;
        vb += b_[i].get_d() * zk;
        zk *= z;
    }
    return va + s * vb;
}

std::pair<std::string, std::string> CycScalar::embed_complex_str(int digits) const {
    if (digits < 1) throw DomainError("digits must be >= 1");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    mpfr_t pi, theta, c, s, re, im, term, sq, tmp;
    mpfr_inits2(prec, pi, theta, c, s, re, im, term, sq, tmp, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(re, 0, MPFR_RNDN);
    mpfr_set_ui(im, 0, MPFR_RNDN);
    mpfr_set_ui(sq, 2 * static_cast<unsigned long>(p_), MPFR_RNDN);
    mpfr_sqrt(sq, sq, MPFR_RNDN);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0 && b_[i] == 0) continue;
        mpfr_mul_ui(theta, pi, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_div_ui(theta, theta, 2 * static_cast<unsigned long>(p_), MPFR_RNDN);
        mpfr_sin_cos(s, c, theta, MPFR_RNDN);
        // coefficient a_i + sqrt(2p) b_i
        mpfr_set_q(term, a_[i].get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(tmp, b_[i].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(tmp, tmp, sq, MPFR_RNDN);
        mpfr_add(term, term, tmp, MPFR_RNDN);
        mpfr_mul(tmp, term, c, MPFR_RNDN);
        mpfr_add(re, re, tmp, MPFR_RNDN);
        mpfr_mul(tmp, term, s, MPFR_RNDN);
        mpfr_add(im, im, tmp, MPFR_RNDN);
    }
    auto fmt = [&](mpfr_t v) {
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", digits, v);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    };
    std::string rs = fmt(re), is = fmt(im);
    mpfr_clears(pi, theta, c, s, re, im, term, sq, tmp, (mpfr_ptr) nullptr);
    return {rs, is};
}

}  // namespace daha
