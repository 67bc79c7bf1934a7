#include "daha/qnum.hpp"

#include <atomic>
#include <memory>
#include <mutex>

namespace daha {

namespace {

// brackets and braces repeat with period 2p in s; the table also carries the
// inverses of the nonzero brackets, which every [s,j]/{s,j} evaluation needs
struct QNumTable {
    std::vector<CycScalar> bracket;      // [s] for s = 0..2p-1
    std::vector<CycScalar> brace;        // {s}
    std::vector<CycScalar> bracket_inv;  // [s]^{-1} where s % p != 0
};

constexpr int kMaxP = 512;
std::atomic<const QNumTable*> qnum_tables[kMaxP + 1] = {};
std::mutex qnum_mutex;

const QNumTable& qnum_table(int p) {
    if (p < 3 || p > kMaxP) throw DomainError("q-number table requires 3 <= p <= 512");
    const QNumTable* t = qnum_tables[p].load(std::memory_order_acquire);
    if (t) return *t;
    std::lock_guard<std::mutex> lock(qnum_mutex);
    t = qnum_tables[p].load(std::memory_order_relaxed);
    if (t) return *t;
    auto tab = std::make_unique<QNumTable>();
    CycScalar dqi =
        (CycScalar::q_power(p, 1) - CycScalar::q_power(p, -1)).inverse();
    for (int s = 0; s < 2 * p; ++s) {
        tab->bracket.push_back(
            (CycScalar::q_power(p, s) - CycScalar::q_power(p, -s)) * dqi);
        tab->brace.push_back(
            (CycScalar::q_power(p, s) + CycScalar::q_power(p, -s)) * dqi);
        tab->bracket_inv.push_back(s % p == 0 ? CycScalar::zero(p)
                                              : tab->bracket[s].inverse());
    }
    const QNumTable* raw = tab.release();
    qnum_tables[p].store(raw, std::memory_order_release);
    return *raw;
}

long long mod_2p(long long x, int p) {
    long long m = 2 * p;
    return ((x % m) + m) % m;
}

}  // namespace

void LaurentPoly::add_term(long long exp, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycScalar LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? CycScalar::zero(p_) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out(p_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::scaled(const CycScalar& c) const {
    LaurentPoly out(p_);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : terms_) out.add_term(e, x * c);
    return out;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
}

LaurentPoly LaurentPoly::substitute_zx(long long half_exp) const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c * CycScalar::z_power(p_, half_exp * e));
    return out;
}

CycScalar LaurentPoly::evaluate_z(long long half_exp) const {
    CycScalar acc = CycScalar::zero(p_);
    for (const auto& [e, c] : terms_)
        acc += c * CycScalar::z_power(p_, half_exp * e);
    return acc;
}

CycScalar LaurentPoly::log_derivative_z(long long half_exp) const {
    CycScalar acc = CycScalar::zero(p_);
    for (const auto& [e, c] : terms_) {
        CycScalar term = c * CycScalar::z_power(p_, half_exp * e);
        term *= Rational(static_cast<long>(e));
        acc += term;
    }
    return acc;
}

CycScalar q_bracket(int p, long long s) {
    return qnum_table(p).bracket[mod_2p(s, p)];
}

CycScalar q_brace(int p, long long s) {
    return qnum_table(p).brace[mod_2p(s, p)];
}

CycScalar bracket2(int p, long long s, long long j) {
    long long jj = mod_2p(j, p);
    if (jj == 0) return CycScalar::from_rational(p, Rational(static_cast<long>(s)));
    if (jj == p)
        return CycScalar::from_rational(
            p, Rational(static_cast<long>(parity_sign(s - 1) * s)));
    const QNumTable& t = qnum_table(p);
    return t.bracket[mod_2p(s * jj, p)] * t.bracket_inv[jj];
}

CycScalar brace2(int p, long long s, long long j) {
    long long jj = mod_2p(j, p);
    if (jj % p == 0) return CycScalar::zero(p);
    const QNumTable& t = qnum_table(p);
    return t.brace[mod_2p(s * jj, p)] * t.bracket_inv[jj];
}

CycScalar omega(int p, long long s) {
    if (s % p == 0) throw DomainError("omega_s undefined for s = 0 mod p");
    CycScalar bri = qnum_table(p).bracket_inv[mod_2p(s, p)];
    CycScalar num = CycScalar::sqrt_2p(p) * Rational(p * parity_sign(p + s + 1));
    return num * bri * bri;
}

CycScalar xi(int p, long long s) {
    if (s % p == 0) throw DomainError("xi_s undefined for s = 0 mod p");
    CycScalar num = CycScalar::sqrt_2p(p) * Rational(-p * parity_sign(p - s));
    CycScalar den = CycScalar::q_power(p, s) - CycScalar::q_power(p, -s);
    return num / den;
}

LaurentPoly chebyshev_U(int p, int s) {
    if (s < 1) throw DomainError("chebyshev_U: s must be >= 1");
    LaurentPoly out(p);
    for (int e = s - 1; e >= -(s - 1); e -= 2)
        out.add_term(e, CycScalar::one(p));
    return out;
}

}  // namespace daha
