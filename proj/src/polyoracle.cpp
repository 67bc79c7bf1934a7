#include "daha/polyoracle.hpp"

#include "daha/ybasis.hpp"

namespace daha {

LaurentPoly PolyOracle::reduce(const LaurentPoly& f) const {
    const long long hi = 2 * p_;
    const long long lo = -(2 * p_ - 1);
    LaurentPoly cur = f;
    bool changed = true;
    while (changed) {
        changed = false;
        LaurentPoly next(p_);
        for (const auto& [e, c] : cur.terms()) {
            if (e > hi) {
                next.add_term(e - 2 * p_, c * Rational(2));
                next.add_term(e - 4 * p_, -c);
                changed = true;
            } else if (e < lo) {
                next.add_term(e + 2 * p_, c * Rational(2));
                next.add_term(e + 4 * p_, -c);
                changed = true;
            } else {
                next.add_term(e, c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly PolyOracle::op_X(const LaurentPoly& f) const {
    LaurentPoly out(p_);
    for (const auto& [e, c] : f.terms()) out.add_term(e + 1, c);
    return reduce(out);
}

LaurentPoly PolyOracle::divided_difference(const LaurentPoly& f) const {
    LaurentPoly g = f.mirror() - f;
    if (g.empty()) return LaurentPoly(p_);
    long long mn = g.terms().begin()->first;
    long long mx = g.terms().rbegin()->first;
    // shift to an ordinary polynomial and divide by x^2 - 1
    std::vector<CycScalar> coeffs(static_cast<size_t>(mx - mn + 1),
                                  CycScalar::zero(p_));
    for (const auto& [e, c] : g.terms()) coeffs[e - mn] = c;
    int n = static_cast<int>(coeffs.size());
    std::vector<CycScalar> q(std::max(0, n - 2), CycScalar::zero(p_));
    for (int i = n - 3; i >= 0; --i) {
        CycScalar c = coeffs[i + 2];
        if (c.is_zero()) continue;
        q[i] = c;
        coeffs[i + 2] = CycScalar::zero(p_);
        coeffs[i] += c;
    }
    if (!(coeffs[0].is_zero() && (n < 2 || coeffs[1].is_zero())))
        throw DomainError("divided difference is not polynomial");
    LaurentPoly out(p_);
    for (size_t i = 0; i < q.size(); ++i)
        out.add_term(static_cast<long long>(i) + mn, q[i]);
    return out;
}

LaurentPoly PolyOracle::op_T(const LaurentPoly& f) const {
    CycScalar q = CycScalar::q_power(p_, 1);
    CycScalar qm1 = q - CycScalar::q_power(p_, -1);
    LaurentPoly out = f.mirror().scaled(q) + divided_difference(f).scaled(qm1);
    return reduce(out);
}

LaurentPoly PolyOracle::op_Y(const LaurentPoly& f) const {
    LaurentPoly tf = op_T(f);
    LaurentPoly ptf = tf.substitute_zx(2);  // X -> qX
    LaurentPoly sptf = ptf.mirror();
    return reduce(sptf.scaled(-CycScalar::one(p_)));
}

LaurentPoly PolyOracle::one() const {
    LaurentPoly f(p_);
    f.add_term(0, CycScalar::one(p_));
    return f;
}

LaurentPoly PolyOracle::w_poly(int s) const {
    LaurentPoly sum(p_);
    for (int j = 0; j <= 2 * p_ - 1; ++j)
        sum.add_term(j, CycScalar::q_power(p_, -static_cast<long long>(s) * j));
    LaurentPoly x2p(p_);
    x2p.add_term(2 * p_, CycScalar::one(p_));
    x2p.add_term(0, -CycScalar::one(p_));
    return reduce((x2p * sum).scaled(
        CycScalar::from_rational(p_, make_fraction(1, 4L * p_ * p_))));
}

LaurentPoly PolyOracle::e_poly(int s) const {
    LaurentPoly f(p_);
    f.add_term(0, CycScalar::from_rational(p_, make_fraction(1, 2 * p_)));
    for (int j = 1; j <= 2 * p_ - 1; ++j) {
        Rational c = make_fraction(2 * p_ - j, 4L * p_ * p_);
        f.add_term(j, CycScalar::q_power(p_, -static_cast<long long>(s) * j) * c);
        f.add_term(-j, CycScalar::q_power(p_, static_cast<long long>(s) * j) * c);
    }
    return reduce(f);
}

namespace {
CycScalar over_p_sqrt_2p(int p, int sign) {
    // sign / (p sqrt(2p)) = sign sqrt(2p) / (2 p^2)
    return CycScalar::sqrt_2p(p) * make_fraction(sign, 2L * p * p);
}
}  // namespace

LaurentPoly PolyOracle::u_poly(int s) const {
    const int p = p_;
    if (s < 1 || s > 2 * p) throw DomainError("u_poly: s out of range");
    // the two stated branches carry (-1)^s and (-1)^{p+(s-p)}: the same sign
    int sign = parity_sign(s);
    LaurentPoly a(p);
    if (s <= p) {
        if (p - s >= 1) a = a + chebyshev_U(p, p - s);
        a = a + chebyshev_U(p, p + s);
    } else {
        int ss = s - p;
        a = a + chebyshev_U(p, ss);
        a = a + chebyshev_U(p, 2 * p - ss);
    }
    LaurentPoly aq = a.substitute_zx(-2);  // X -> q^{-1} X
    LaurentPoly out = a.scaled(CycScalar::q_power(p, s)) +
                      aq.scaled(CycScalar::q_power(p, 1));
    return reduce(out.scaled(over_p_sqrt_2p(p, sign) * make_fraction(1, 2)));
}

LaurentPoly PolyOracle::k_poly(int s) const {
    const int p = p_;
    bool valid = (s >= 2 && s <= p - 1) || (s >= p + 2 && s <= 2 * p - 1);
    if (!valid) throw DomainError("k_poly: s out of range");
    int sign = s <= p ? parity_sign(s + 1) : parity_sign(s);
    LaurentPoly a = s <= p ? chebyshev_U(p, p - s) : chebyshev_U(p, s - p);
    LaurentPoly aq = a.substitute_zx(-2);
    LaurentPoly out = a.scaled(CycScalar::q_power(p, s)) +
                      aq.scaled(CycScalar::q_power(p, 1));
    return reduce(out.scaled(over_p_sqrt_2p(p, sign)));
}

LaurentPoly PolyOracle::f_special_poly(int s) const {
    const int p = p_;
    LaurentPoly x(p);
    x.add_term(1, CycScalar::one(p));
    LaurentPoly out(p);
    if (s == p) {
        out = chebyshev_U(p, 2 * p).scaled(
            CycScalar::from_rational(p, make_fraction(parity_sign(p + 1), 2)));
    } else if (s == 2 * p) {
        out = chebyshev_U(p, p);
    } else if (s == p + 1) {
        out = (x * chebyshev_U(p, 2 * p))
                  .scaled(CycScalar::q_power(p, 1) * make_fraction(parity_sign(p), 2));
    } else if (s == 1) {
        out = (x * chebyshev_U(p, p)).scaled(-CycScalar::q_power(p, 1));
    } else {
        throw DomainError("f_special_poly: s must be 1, p, p+1 or 2p");
    }
    return reduce(out.scaled(over_p_sqrt_2p(p, 1)));
}

std::pair<Vector, Vector> PolyOracle::decompose(const LaurentPoly& f) const {
    Vector ecoef, wcoef;
    ecoef.reserve(2 * p_);
    wcoef.reserve(2 * p_);
    for (int s = 1; s <= 2 * p_; ++s) {
        ecoef.push_back(f.evaluate_z(2 * s));
        wcoef.push_back(f.log_derivative_z(2 * s));
    }
    return {ecoef, wcoef};
}

LaurentPoly PolyOracle::reassemble(const Vector& ecoef, const Vector& wcoef) const {
    LaurentPoly out(p_);
    for (int s = 1; s <= 2 * p_; ++s) {
        out = out + e_poly(s).scaled(ecoef[s - 1]) + w_poly(s).scaled(wcoef[s - 1]);
    }
    return out;
}

Matrix PolyOracle::operator_matrix(
    LaurentPoly (PolyOracle::*op)(const LaurentPoly&) const) const {
    Matrix out(4 * p_, 4 * p_, p_);
    for (int s = 1; s <= 2 * p_; ++s) {
        for (int which = 0; which < 2; ++which) {
            LaurentPoly basis = which == 0 ? w_poly(s) : e_poly(s);
            int col = which == 0 ? s - 1 : 2 * p_ + s - 1;
            auto [ecoef, wcoef] = decompose((this->*op)(basis));
            for (int j = 1; j <= 2 * p_; ++j) {
                out.at(j - 1, col) = wcoef[j - 1];
                out.at(2 * p_ + j - 1, col) = ecoef[j - 1];
            }
        }
    }
    return out;
}

namespace {
CheckReport relation_report(const std::string& name, const Matrix& lhs,
                            const Matrix& rhs) {
    auto diff = lhs.first_difference(rhs);
    if (!diff) return CheckReport::pass(name);
    CheckReport r = CheckReport::fail(name);
    r.first_mismatch = Mismatch{diff->first, diff->second,
                                lhs.at(diff->first, diff->second),
                                rhs.at(diff->first, diff->second)};
    return r;
}
}  // namespace

CheckSuite PolyOracle::crosscheck_matrices(const RepZ& rep) const {
    CheckSuite suite{"oracle(p=" + std::to_string(p_) + ")", {}};
    if (rep.p() != p_) throw RingMismatchError("oracle/rep p mismatch");
    Matrix Xp = operator_matrix(&PolyOracle::op_X);
    Matrix Tp = operator_matrix(&PolyOracle::op_T);
    Matrix Yp = operator_matrix(&PolyOracle::op_Y);
    suite.add(relation_report("X matrices agree on span{w,e}", Xp,
                              we_block(rep, rep.build_X())));
    suite.add(relation_report("T matrices agree on span{w,e}", Tp,
                              we_block(rep, rep.build_T())));
    suite.add(relation_report("Y matrices agree on span{w,e}", Yp,
                              we_block(rep, rep.build_Y())));
    LaurentPoly sum(p_);
    for (int s = 1; s <= 2 * p_; ++s) sum = sum + e_poly(s);
    suite.add(sum == one() ? CheckReport::pass("sum of e_s equals 1")
                           : CheckReport::fail("sum of e_s equals 1"));
    return suite;
}

CheckSuite PolyOracle::verify(const RepZ& rep) const {
    const int p = p_;
    CheckSuite suite = crosscheck_matrices(rep);
    Matrix Xp = operator_matrix(&PolyOracle::op_X);
    Matrix Tp = operator_matrix(&PolyOracle::op_T);
    Matrix Yp = operator_matrix(&PolyOracle::op_Y);
    Matrix I = Matrix::identity(4 * p, p);
    CycScalar q = CycScalar::q_power(p, 1);
    Matrix quad = (Tp - I.scaled(q)) * (Tp + I.scaled(CycScalar::q_power(p, -1)));
    suite.add(quad.is_zero() ? CheckReport::pass("(T-q)(T+q^-1) = 0 on the quotient")
                             : CheckReport::fail("(T-q)(T+q^-1) = 0 on the quotient"));
    Matrix Tinv = Tp - I.scaled(q - CycScalar::q_power(p, -1));
    Matrix Yinv = Tinv * Yp * Tinv;
    suite.add(relation_report("TXT = X^-1 on the quotient", Tp * Xp * Tp,
                              Xp.inverse()));
    suite.add(relation_report("TY^-1T = Y on the quotient", Tp * Yinv * Tp, Yp));
    suite.add(relation_report("XY = q YXT^2 on the quotient", Xp * Yp,
                              (Yp * Xp * Tp * Tp).scaled(q)));

    // recursions driving the Y-eigenfunction construction; the operator
    // here is Y = -(s p T), which flips the sign relative to the version
    // without the leading minus
    bool rec1 = true, rec2 = true;
    for (int s = 1; s <= 2 * p; ++s) {
        LaurentPoly us = reduce(chebyshev_U(p, s));
        LaurentPoly usq = reduce(chebyshev_U(p, s).substitute_zx(-2));
        LaurentPoly lhs1 = op_Y(us);
        LaurentPoly want1 = usq.scaled(-q);
        if (!(lhs1 == reduce(want1))) rec1 = false;
        LaurentPoly lhs2 = op_Y(usq);
        LaurentPoly want2 =
            usq.scaled(-(CycScalar::q_power(p, s) + CycScalar::q_power(p, -s))) +
            us.scaled(CycScalar::q_power(p, -1));
        if (!(lhs2 == reduce(want2))) rec2 = false;
    }
    suite.add(rec1 ? CheckReport::pass("Y U_s(X) = -q U_s(q^-1 X)")
                   : CheckReport::fail("Y U_s(X) = -q U_s(q^-1 X)"));
    suite.add(rec2 ? CheckReport::pass(
                         "Y U_s(q^-1X) = -(q^s+q^-s) U_s(q^-1X) + q^-1 U_s(X)")
                   : CheckReport::fail(
                         "Y U_s(q^-1X) = -(q^s+q^-s) U_s(q^-1X) + q^-1 U_s(X)"));

    // dual path: decomposition of the eigenfunctions reproduces the
    // abstract coefficient tables
    YBasisBuilder yb(rep);
    bool du = true, dk = true, df = true;
    auto matches = [&](const LaurentPoly& f, const ZVector& v) {
        auto [ecoef, wcoef] = decompose(f);
        for (int j = 1; j <= 2 * p; ++j) {
            if (!(ecoef[j - 1] == v[rep.e_index(j)])) return false;
            if (!(wcoef[j - 1] == v[rep.w_index(j)])) return false;
        }
        return true;
    };
    for (int s = 1; s <= 2 * p; ++s)
        if (!matches(u_poly(s), yb.u_vector(s))) du = false;
    for (int s : rep.m_labels())
        if (!matches(k_poly(s), yb.k_vector(s))) dk = false;
    for (int s : {1, p, p + 1, 2 * p})
        if (!matches(f_special_poly(s), yb.f_vector(s))) df = false;
    suite.add(du ? CheckReport::pass("u eigenfunctions decompose to the u-table")
                 : CheckReport::fail("u eigenfunctions decompose to the u-table"));
    suite.add(dk ? CheckReport::pass("k eigenfunctions decompose to the k-table")
                 : CheckReport::fail("k eigenfunctions decompose to the k-table"));
    suite.add(df ? CheckReport::pass("special f eigenfunctions decompose to the f-table")
                 : CheckReport::fail("special f eigenfunctions decompose to the f-table"));
    return suite;
}

}  // namespace daha
