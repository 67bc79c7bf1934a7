#include "daha/ybasis.hpp"

#include "daha/qnum.hpp"

namespace daha {

namespace {
CycScalar inv_sqrt_2p(int p) {
    // 1/sqrt(2p) = sqrt(2p)/(2p)
    return CycScalar::sqrt_2p(p) * make_fraction(1, 2 * p);
}
}  // namespace

CycScalar YBasisBuilder::u_coeff_w(int j, int s) const {
    const int p = rep_.p();
    CycScalar inner = CycScalar::q_power(p, s) * brace2(p, s, j) -
                      CycScalar::q_power(p, 1) * brace2(p, s, j - 1);
    return inner * Rational(parity_sign(s + j)) * inv_sqrt_2p(p);
}

CycScalar YBasisBuilder::u_coeff_e(int j, int s) const {
    const int p = rep_.p();
    if (j == 1)
        return CycScalar::q_power(p, 1) * Rational(parity_sign(s)) * inv_sqrt_2p(p);
    if (j == 2 * p)
        return CycScalar::q_power(p, s) * Rational(parity_sign(s)) * inv_sqrt_2p(p);
    if (j == p + 1)
        return CycScalar::q_power(p, 1) * Rational(parity_sign(p + 1)) * inv_sqrt_2p(p);
    if (j == p)
        return CycScalar::q_power(p, s) * Rational(parity_sign(p + 1)) * inv_sqrt_2p(p);
    return CycScalar::zero(p);
}

CycScalar YBasisBuilder::k_coeff_e_generic(int j, int s) const {
    const int p = rep_.p();
    CycScalar inner = CycScalar::q_power(p, s) * bracket2(p, s, j) -
                      CycScalar::q_power(p, 1) * bracket2(p, s, j - 1);
    return inner * make_fraction(parity_sign(s + j), p) * inv_sqrt_2p(p);
}

CycScalar YBasisBuilder::k_coeff_w(int j, int s) const {
    const int p = rep_.p();
    CycScalar t1 = u_coeff_w(j, s) * make_fraction(-(p - s), p);
    CycScalar inner =
        CycScalar::q_power(p, s) * bracket2(p, s, j) * brace2(p, 1, j) -
        CycScalar::q_power(p, 1) * bracket2(p, s, j - 1) * brace2(p, 1, j - 1);
    CycScalar t2 = inner * make_fraction(-parity_sign(s + j), p) * inv_sqrt_2p(p);
    return t1 + t2;
}

CycScalar YBasisBuilder::k_coeff_e(int j, int s) const {
    const int p = rep_.p();
    CycScalar br = q_bracket(p, s);
    CycScalar q1 = CycScalar::q_power(p, 1);
    CycScalar qs = CycScalar::q_power(p, s);
    if (j == 1)
        return (qs * br + q1 * Rational(p - s)) * make_fraction(parity_sign(s + 1), p) *
               inv_sqrt_2p(p);
    if (j == p)
        return (q1 * br + qs * Rational(p - s)) * make_fraction(parity_sign(p), p) *
               inv_sqrt_2p(p);
    if (j == p + 1)
        return (qs * br + q1 * Rational(p - s)) * make_fraction(parity_sign(p), p) *
               inv_sqrt_2p(p);
    if (j == 2 * p)
        return (q1 * br + qs * Rational(p - s)) * make_fraction(parity_sign(s + 1), p) *
               inv_sqrt_2p(p);
    return k_coeff_e_generic(j, s);
}

CycScalar YBasisBuilder::f_coeff_w(int j, int s) const {
    const int p = rep_.p();
    CycScalar qm1 = CycScalar::q_power(p, 1) - CycScalar::q_power(p, -1);
    if (j == 1)
        return CycScalar::q_power(p, 2 * s) * Rational(2 * parity_sign(s + 1)) *
               qm1.inverse() * inv_sqrt_2p(p);
    if (j == p)
        return CycScalar::q_power(p, 1) * q_bracket(p, s) *
               Rational(parity_sign(p + 1)) * inv_sqrt_2p(p);
    if (j == p + 1)
        return CycScalar::q_power(p, 2 * s) * Rational(2 * parity_sign(p)) *
               qm1.inverse() * inv_sqrt_2p(p);
    if (j == 2 * p)
        return CycScalar::q_power(p, 1) * q_bracket(p, s) * Rational(parity_sign(s)) *
               inv_sqrt_2p(p);
    CycScalar t1 = k_coeff_e_generic(j, s) * Rational(-p * (p - j));
    CycScalar inner = CycScalar::q_power(p, 1) * bracket2(p, s, j - 1) +
                      CycScalar::q_power(p, s) * brace2(p, s, j);
    return t1 + inner * Rational(parity_sign(s + j)) * inv_sqrt_2p(p);
}

CycScalar YBasisBuilder::f_coeff_e(int j, int s) const {
    const int p = rep_.p();
    if (j == p)
        return CycScalar::q_power(p, s) * Rational(parity_sign(p + 1)) * inv_sqrt_2p(p);
    if (j == 2 * p)
        return CycScalar::q_power(p, s) * Rational(parity_sign(s)) * inv_sqrt_2p(p);
    return CycScalar::zero(p);
}

CycScalar YBasisBuilder::f_coeff_m(int j, int s) const {
    return k_coeff_e_generic(j, s) * Rational(-rep_.p() * rep_.p());
}

ZVector YBasisBuilder::u_vector(int s) const {
    if (s < 1 || s > 2 * rep_.p()) throw DomainError("u_vector: s out of range");
    ZVector v = rep_.zero_vector();
    for (int j = 1; j <= 2 * rep_.p(); ++j) {
        v[rep_.w_index(j)] = u_coeff_w(j, s);
        v[rep_.e_index(j)] = u_coeff_e(j, s);
    }
    return v;
}

ZVector YBasisBuilder::k_vector(int s) const {
    const int p = rep_.p();
    bool valid = (s >= 2 && s <= p - 1) || (s >= p + 2 && s <= 2 * p - 1);
    if (!valid) throw DomainError("k_vector: s out of range");
    ZVector v = rep_.zero_vector();
    for (int j = 1; j <= 2 * p; ++j) {
        v[rep_.w_index(j)] = k_coeff_w(j, s);
        v[rep_.e_index(j)] = k_coeff_e(j, s);
    }
    return v;
}

ZVector YBasisBuilder::f_vector(int s) const {
    const int p = rep_.p();
    if (s < 1 || s > 2 * p) throw DomainError("f_vector: s out of range");
    ZVector v = rep_.zero_vector();
    for (int j = 1; j <= 2 * p; ++j) {
        v[rep_.w_index(j)] = f_coeff_w(j, s);
        v[rep_.e_index(j)] = f_coeff_e(j, s);
    }
    for (int j : rep_.m_labels()) v[rep_.m_index(j)] = f_coeff_m(j, s);
    return v;
}

ZOperator YBasisBuilder::build_S() const {
    std::vector<ZVector> cols(rep_.dim());
    for (int s = 1; s <= 2 * rep_.p(); ++s) {
        cols[rep_.w_index(s)] = u_vector(s);
        cols[rep_.e_index(s)] = f_vector(s);
    }
    for (int s : rep_.m_labels()) cols[rep_.m_index(s)] = k_vector(s);
    return ZOperator::from_columns(cols);
}

ZOperator YBasisBuilder::invert_S(const ZOperator& S, const ZOperator& T) const {
    ZOperator cand = (T * S).scaled(CycScalar::q_power(rep_.p(), -1));
    if (!(S * cand == ZOperator::identity(rep_.dim(), rep_.p())))
        throw SingularMatrixError("S inverse candidate failed verification");
    return cand;
}

YBasis build_change_of_basis(const RepZ& rep) {
    YBasisBuilder b(rep);
    YBasis out;
    std::vector<ZVector> cols;
    for (int s = 1; s <= 2 * rep.p(); ++s) {
        out.u.push_back(b.u_vector(s));
        out.f.push_back(b.f_vector(s));
    }
    for (int s : rep.m_labels()) out.k.push_back(b.k_vector(s));
    for (const auto& v : out.u) cols.push_back(v);
    for (const auto& v : out.f) cols.push_back(v);
    for (const auto& v : out.k) cols.push_back(v);
    out.change_of_basis = ZOperator::from_columns(cols);
    out.change_of_basis.inverse();  // throws if the vectors are dependent
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

CheckSuite verify_ybasis(const RepZ& rep) {
    const int p = rep.p();
    CheckSuite suite{"ybasis(p=" + std::to_string(p) + ")", {}};
    YBasisBuilder b(rep);
    ZOperator T = rep.build_T();
    ZOperator Y = rep.build_Y();
    ZOperator Yinv = rep.invert_Y(Y, rep.invert_T(T));

    auto vec_is = [&](const ZVector& got, const ZVector& want) {
        for (int i = 0; i < rep.dim(); ++i)
            if (!(got[i] == want[i])) return false;
        return true;
    };

    bool ok_u = true, ok_k = true, ok_f = true;
    for (int s = 1; s <= 2 * p; ++s) {
        ZVector u = b.u_vector(s);
        ZVector want = u;
        for (auto& c : want) c *= CycScalar::q_power(p, s);
        if (!vec_is(Yinv * u, want)) ok_u = false;
        ZVector f = b.f_vector(s);
        ZVector wantf = f;
        for (int i = 0; i < rep.dim(); ++i)
            wantf[i] = CycScalar::q_power(p, s) * (f[i] + u[i]);
        if (!vec_is(Yinv * f, wantf)) ok_f = false;
    }
    for (int s : rep.m_labels()) {
        ZVector k = b.k_vector(s);
        ZVector want = k;
        for (auto& c : want) c *= CycScalar::q_power(p, s);
        if (!vec_is(Yinv * k, want)) ok_k = false;
    }
    suite.add(ok_u ? CheckReport::pass("Y^-1 u_s = q^s u_s")
                   : CheckReport::fail("Y^-1 u_s = q^s u_s"));
    suite.add(ok_k ? CheckReport::pass("Y^-1 k_s = q^s k_s")
                   : CheckReport::fail("Y^-1 k_s = q^s k_s"));
    suite.add(ok_f ? CheckReport::pass("Y^-1 f_s = q^s (f_s + u_s)")
                   : CheckReport::fail("Y^-1 f_s = q^s (f_s + u_s)"));

    // u_s and f_1, f_p, f_{p+1}, f_2p lie inside W = span{w, e_1, e_p,
    // e_{p+1}, e_2p}; generic f_s has zero e-components outside {p, 2p}
    // and the m-block of f_s vanishes for s in {1, p, p+1, 2p}
    bool membership = true;
    auto in_W = [&](const ZVector& v) {
        for (int j = 1; j <= 2 * p; ++j) {
            if (j == 1 || j == p || j == p + 1 || j == 2 * p) continue;
            if (!v[rep.e_index(j)].is_zero()) return false;
        }
        for (int j : rep.m_labels())
            if (!v[rep.m_index(j)].is_zero()) return false;
        return true;
    };
    for (int s = 1; s <= 2 * p; ++s)
        if (!in_W(b.u_vector(s))) membership = false;
    for (int s : {1, p, p + 1, 2 * p})
        if (!in_W(b.f_vector(s))) membership = false;
    suite.add(membership
                  ? CheckReport::pass("u_s and special f_s lie in the W submodule")
                  : CheckReport::fail("u_s and special f_s lie in the W submodule"));

    bool invertible = true;
    try {
        build_change_of_basis(rep);
    } catch (const SingularMatrixError&) {
        invertible = false;
    }
    suite.add(invertible ? CheckReport::pass("change-of-basis matrix invertible")
                         : CheckReport::fail("change-of-basis matrix invertible"));
    for (auto& r : verify_S_relations(rep).reports) suite.add(std::move(r));
    return suite;
}

CheckSuite verify_S_relations(const RepZ& rep) {
    const int p = rep.p();
    CheckSuite suite{"fourier(p=" + std::to_string(p) + ")", {}};
    YBasisBuilder b(rep);
    ZOperator X = rep.build_X(), T = rep.build_T(), Y = rep.build_Y();
    ZOperator Tinv = rep.invert_T(T);
    ZOperator Yinv = rep.invert_Y(Y, Tinv);
    ZOperator S = b.build_S();
    ZOperator Sinv = b.invert_S(S, T);
    CycScalar q = CycScalar::q_power(p, 1);
    suite.add(relation_report("S X S^-1 = Y^-1", S * X * Sinv, Yinv));
    suite.add(relation_report("S Y S^-1 = X T^2", S * Y * Sinv, X * T * T));
    suite.add(relation_report("S T S^-1 = T", S * T * Sinv, T));
    suite.add(relation_report("S^2 = q T^-1", S * S, Tinv.scaled(q)));
    return suite;
}

}  // namespace daha
