#include "daha/rep_z.hpp"

#include "daha/qnum.hpp"

namespace daha {

RepZ::RepZ(int p) : p_(p), dim_(6 * p - 4) {
    if (p < 3) throw DomainError("RepZ requires p >= 3");
    m_pos_.assign(2 * p + 1, -1);
    for (int s = 2; s <= p - 1; ++s) m_labels_.push_back(s);
    for (int s = p + 2; s <= 2 * p - 1; ++s) m_labels_.push_back(s);
    for (size_t i = 0; i < m_labels_.size(); ++i)
        m_pos_[m_labels_[i]] = 4 * p + static_cast<int>(i);
}

int RepZ::w_index(int s) const {
    int ss = ((s - 1) % (2 * p_) + 2 * p_) % (2 * p_) + 1;
    return ss - 1;
}

int RepZ::e_index(int s) const {
    int ss = ((s - 1) % (2 * p_) + 2 * p_) % (2 * p_) + 1;
    return 2 * p_ + ss - 1;
}

int RepZ::m_index(int s) const {
    if (s < 2 || s > 2 * p_ - 1 || m_pos_[s] < 0)
        throw DomainError("no m-basis vector with label " + std::to_string(s));
    return m_pos_[s];
}

BasisIndex RepZ::basis_index(int i) const {
    if (i < 2 * p_) return {BasisKind::W, i + 1};
    if (i < 4 * p_) return {BasisKind::E, i - 2 * p_ + 1};
    return {BasisKind::M, m_labels_[i - 4 * p_]};
}

std::string RepZ::basis_label(int i) const {
    BasisIndex b = basis_index(i);
    const char* k = b.kind == BasisKind::W ? "w" : b.kind == BasisKind::E ? "e" : "m";
    return k + std::to_string(b.s);
}

ZVector RepZ::zero_vector() const {
    return ZVector(dim_, CycScalar::zero(p_));
}

ZVector RepZ::basis_vector(int i) const {
    ZVector v = zero_vector();
    v[i] = CycScalar::one(p_);
    return v;
}

ZOperator RepZ::build_X() const {
    ZOperator A(dim_, dim_, p_);
    for (int s = 1; s <= 2 * p_; ++s) {
        CycScalar qs = CycScalar::q_power(p_, s);
        A.at(w_index(s), w_index(s)) = qs;
        A.at(e_index(s), e_index(s)) = qs;
        A.at(w_index(s), e_index(s)) = qs;
    }
    for (int s : m_labels_) A.at(m_index(s), m_index(s)) = CycScalar::q_power(p_, s);
    return A;
}

ZOperator RepZ::build_T() const {
    const int p = p_;
    ZOperator A(dim_, dim_, p);
    CycScalar q = CycScalar::q_power(p, 1);
    CycScalar qm1 = q - CycScalar::q_power(p, -1);
    for (int s = 1; s <= 2 * p; ++s) {
        if (s == p || s == 2 * p) {
            A.at(w_index(s), w_index(s)) = -CycScalar::q_power(p, -1);
            A.at(e_index(s), w_index(s)) = -qm1;
            A.at(e_index(s), e_index(s)) = q;
        } else {
            CycScalar br = q_bracket(p, s);
            CycScalar bri = br.inverse();
            CycScalar ratio = q_bracket(p, s - 1) * bri;
            A.at(w_index(s), w_index(s)) = -CycScalar::q_power(p, -s) * bri;
            A.at(w_index(2 * p - s), w_index(s)) += -ratio;
            A.at(e_index(s), e_index(s)) = -CycScalar::q_power(p, -s) * bri;
            A.at(e_index(2 * p - s), e_index(s)) += ratio;
            CycScalar c = CycScalar::from_rational(p, 2) * (qm1 * br * br).inverse();
            A.at(w_index(s), e_index(s)) += c;
            A.at(w_index(2 * p - s), e_index(s)) += -c;
        }
    }
    for (int s : m_labels_) {
        if (s == 2 * p - 1) {
            A.at(m_index(s), m_index(s)) = q;
            A.at(w_index(1), m_index(s)) = -(q + CycScalar::q_power(p, -1));
        } else if (s == p - 1) {
            A.at(m_index(s), m_index(s)) = q;
        } else {
            CycScalar bri = q_bracket(p, s).inverse();
            A.at(m_index(s), m_index(s)) = -CycScalar::q_power(p, -s) * bri;
            A.at(m_index(2 * p - s), m_index(s)) = q_bracket(p, s - 1) * bri;
        }
    }
    return A;
}

ZOperator RepZ::build_Y() const {
    const int p = p_;
    ZOperator A(dim_, dim_, p);
    CycScalar q = CycScalar::q_power(p, 1);
    CycScalar qm1 = q - CycScalar::q_power(p, -1);
    for (int s = 1; s <= 2 * p; ++s) {
        if (s == p || s == 2 * p) {
            // Yw_p = -q^{-1} w_{p+1} + (q - q^{-1}) e_{p+1}; w_2p maps to index 1
            A.at(w_index(s + 1), w_index(s)) = -CycScalar::q_power(p, -1);
            A.at(e_index(s + 1), w_index(s)) = qm1;
            A.at(e_index(s + 1), e_index(s)) = -q;
        } else {
            CycScalar br = q_bracket(p, s);
            CycScalar bri = br.inverse();
            CycScalar ratio = q_bracket(p, s - 1) * bri;
            A.at(w_index(2 * p - s + 1), w_index(s)) = -CycScalar::q_power(p, -s) * bri;
            A.at(w_index(s + 1), w_index(s)) += -ratio;
            A.at(e_index(2 * p - s + 1), e_index(s)) = CycScalar::q_power(p, -s) * bri;
            A.at(e_index(s + 1), e_index(s)) += -ratio;
            CycScalar c = CycScalar::from_rational(p, 2) * (qm1 * br * br).inverse();
            A.at(w_index(s + 1), e_index(s)) += -c;
            A.at(w_index(2 * p - s + 1), e_index(s)) += c;
        }
    }
    for (int s : m_labels_) {
        if (s == 2 * p - 1) {
            A.at(m_index(2), m_index(s)) = -q;
            A.at(w_index(2 * p), m_index(s)) = -(q + CycScalar::q_power(p, -1));
        } else if (s == p - 1) {
            A.at(m_index(p + 2), m_index(s)) = -q;
        } else {
            CycScalar bri = q_bracket(p, s).inverse();
            A.at(m_index(s + 1), m_index(s)) = -q_bracket(p, s - 1) * bri;
            A.at(m_index(2 * p - s + 1), m_index(s)) = CycScalar::q_power(p, -s) * bri;
        }
    }
    return A;
}

ZOperator RepZ::invert_T(const ZOperator& T) const {
    CycScalar qm1 = CycScalar::q_power(p_, 1) - CycScalar::q_power(p_, -1);
    ZOperator cand = T - ZOperator::identity(dim_, p_).scaled(qm1);
    if (!(T * cand == ZOperator::identity(dim_, p_)))
        throw SingularMatrixError("T inverse candidate failed verification");
    return cand;
}

ZOperator RepZ::invert_X(const ZOperator& X) const {
    ZOperator cand(dim_, dim_, p_);
    for (int s = 1; s <= 2 * p_; ++s) {
        CycScalar qis = CycScalar::q_power(p_, -s);
        cand.at(w_index(s), w_index(s)) = qis;
        cand.at(e_index(s), e_index(s)) = qis;
        cand.at(w_index(s), e_index(s)) = -qis;
    }
    for (int s : m_labels_) cand.at(m_index(s), m_index(s)) = CycScalar::q_power(p_, -s);
    if (!(X * cand == ZOperator::identity(dim_, p_)))
        throw SingularMatrixError("X inverse candidate failed verification");
    return cand;
}

ZOperator RepZ::invert_Y(const ZOperator& Y, const ZOperator& Tinv) const {
    ZOperator cand = Tinv * Y * Tinv;
    if (!(Y * cand == ZOperator::identity(dim_, p_)))
        throw SingularMatrixError("Y inverse candidate failed verification");
    return cand;
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

CheckSuite RepZ::verify_daha() const {
    return verify_daha_generators(build_X(), build_Y(), build_T());
}

CheckSuite RepZ::verify_daha_generators(const ZOperator& X, const ZOperator& Y,
                                        const ZOperator& T) const {
    CheckSuite suite{"daha(p=" + std::to_string(p_) + ")", {}};
    ZOperator I = ZOperator::identity(dim_, p_);
    ZOperator Xinv = X.inverse();
    ZOperator Yinv = Y.inverse();
    CycScalar q = CycScalar::q_power(p_, 1);
    suite.add(relation_report("TXT = X^-1", T * X * T, Xinv));
    suite.add(relation_report("TY^-1T = Y", T * Yinv * T, Y));
    suite.add(relation_report("XY = q YXT^2", X * Y, (Y * X * T * T).scaled(q)));
    ZOperator quad = (T - I.scaled(q)) * (T + I.scaled(CycScalar::q_power(p_, -1)));
    suite.add(relation_report("(T-q)(T+q^-1) = 0", quad, ZOperator(dim_, dim_, p_)));
    return suite;
}

ZVector RepZ::multiply(const ZVector& u, const ZVector& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw DomainError("multiply: wrong dimension");
    ZVector out = zero_vector();
    for (int s = 1; s <= 2 * p_; ++s) {
        const CycScalar& ue = u[e_index(s)];
        const CycScalar& ve = v[e_index(s)];
        out[e_index(s)] = ue * ve;
        out[w_index(s)] = ue * v[w_index(s)] + ve * u[w_index(s)];
    }
    for (int s : m_labels_)
        out[m_index(s)] = u[e_index(s)] * v[m_index(s)] + v[e_index(s)] * u[m_index(s)];
    return out;
}

ZVector RepZ::unit() const {
    ZVector v = zero_vector();
    for (int s = 1; s <= 2 * p_; ++s) v[e_index(s)] = CycScalar::one(p_);
    return v;
}

ZVector RepZ::gaussian_element() const {
    ZVector v = zero_vector();
    for (int s = 1; s <= 2 * p_; ++s)
        v[e_index(s)] = CycScalar::z_power(p_, -(static_cast<long long>(s) * s - 1));
    v[w_index(1)] += -CycScalar::one(p_);
    v[w_index(p_ + 1)] += CycScalar::z_power(p_, -static_cast<long long>(p_) * p_);
    for (int s : m_labels_) {
        CycScalar c = CycScalar::z_power(p_, -(static_cast<long long>(s) * s - 1));
        v[w_index(s)] += c * Rational(p_ - s);
        v[m_index(s)] += c * Rational(p_);
    }
    return v;
}

ZVector RepZ::invert_algebra_element(const ZVector& v) const {
    ZVector dinv = zero_vector();
    for (int s = 1; s <= 2 * p_; ++s) {
        const CycScalar& c = v[e_index(s)];
        if (c.is_zero())
            throw NotInvertibleError("algebra element has zero e_" +
                                     std::to_string(s) + " component");
        dinv[e_index(s)] = c.inverse();
    }
    ZVector nil = zero_vector();
    for (int s = 1; s <= 2 * p_; ++s) nil[w_index(s)] = v[w_index(s)];
    for (int s : m_labels_) nil[m_index(s)] = v[m_index(s)];
    ZVector correction = multiply(dinv, multiply(nil, dinv));
    ZVector out = dinv;
    for (int i = 0; i < dim_; ++i) out[i] -= correction[i];
    return out;
}

ZOperator RepZ::mult_operator(const ZVector& v) const {
    std::vector<ZVector> cols;
    cols.reserve(dim_);
    for (int i = 0; i < dim_; ++i) cols.push_back(multiply(v, basis_vector(i)));
    return ZOperator::from_columns(cols);
}

namespace {

bool spans_invariant(const RepZ& rep, const Matrix& A, const std::vector<int>& span) {
    std::vector<bool> in_span(rep.dim(), false);
    for (int i : span) in_span[i] = true;
    for (int i : span) {
        Vector col = A.column(i);
        for (int j = 0; j < rep.dim(); ++j)
            if (!in_span[j] && !col[j].is_zero()) return false;
    }
    return true;
}

}  // namespace

CheckSuite RepZ::submodule_checks() const {
    CheckSuite suite{"submodules(p=" + std::to_string(p_) + ")", {}};
    ZOperator X = build_X(), T = build_T(), Y = build_Y();

    std::vector<int> wspan;
    for (int s = 1; s <= 2 * p_; ++s) wspan.push_back(w_index(s));
    for (int s : {1, p_, p_ + 1, 2 * p_}) wspan.push_back(e_index(s));
    bool okW = spans_invariant(*this, X, wspan) && spans_invariant(*this, Y, wspan) &&
               spans_invariant(*this, T, wspan);
    suite.add(okW ? CheckReport::pass("W (dim 2p+4) invariant")
                  : CheckReport::fail("W (dim 2p+4) invariant"));

    std::vector<int> v2span;
    for (int s = 1; s <= 2 * p_; ++s) v2span.push_back(w_index(s));
    for (int s = 1; s <= 2 * p_; ++s) v2span.push_back(e_index(s));
    bool okV = spans_invariant(*this, X, v2span) && spans_invariant(*this, Y, v2span) &&
               spans_invariant(*this, T, v2span);
    suite.add(okV ? CheckReport::pass("span{w,e} (dim 4p) invariant")
                  : CheckReport::fail("span{w,e} (dim 4p) invariant"));

    std::vector<int> mspan;
    for (int s : m_labels_) mspan.push_back(m_index(s));
    bool m_invariant = spans_invariant(*this, X, mspan) &&
                       spans_invariant(*this, Y, mspan) &&
                       spans_invariant(*this, T, mspan);
    suite.add(!m_invariant ? CheckReport::pass("span{m} is not invariant")
                           : CheckReport::fail("span{m} is not invariant"));

    // on Z/W the E-block and M-block act identically under e_s <-> m_s
    bool blocks_equal = true;
    for (const ZOperator* A : {&X, &Y, &T}) {
        for (int s : m_labels_) {
            for (int j : m_labels_) {
                if (!(A->at(e_index(j), e_index(s)) == A->at(m_index(j), m_index(s))))
                    blocks_equal = false;
            }
        }
    }
    suite.add(blocks_equal ? CheckReport::pass("Z/W: E-block equals M-block")
                           : CheckReport::fail("Z/W: E-block equals M-block"));
    return suite;
}

Matrix we_block(const RepZ& rep, const ZOperator& A) {
    int n = 4 * rep.p();
    Matrix out(n, n, rep.p());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = A.at(i, j);
    return out;
}

CheckSuite verify_jordan_structure(const RepZ& rep) {
    const int p = rep.p();
    const int n = rep.dim();
    CheckSuite suite{"jordan(p=" + std::to_string(p) + ")", {}};
    ZOperator X = rep.build_X();
    ZOperator T = rep.build_T();
    ZOperator Y = rep.build_Y();
    ZOperator Yinv = rep.invert_Y(Y, rep.invert_T(T));
    ZOperator I = ZOperator::identity(n, p);

    struct BlockData {
        int blocks = 0;
        int size2 = 0;
    };
    auto analyze = [&](const ZOperator& A, std::vector<BlockData>& out) {
        int total2 = 0, total1 = 0;
        for (int s = 1; s <= 2 * p; ++s) {
            ZOperator As = A - I.scaled(CycScalar::q_power(p, s));
            int r1 = As.rank();
            int r2 = (As * As).rank();
            BlockData d;
            d.blocks = n - r1;
            d.size2 = r1 - r2;
            out.push_back(d);
            total2 += d.size2;
            total1 += d.blocks - d.size2;
        }
        return std::make_pair(total2, total1);
    };
    std::vector<BlockData> bx, by;
    auto [x2, x1] = analyze(X, bx);
    auto [y2, y1] = analyze(Yinv, by);
    suite.add(x2 == 2 * p && x1 == 2 * p - 4
                  ? CheckReport::pass("X: 2p size-2 and 2p-4 size-1 blocks")
                  : CheckReport::fail("X: 2p size-2 and 2p-4 size-1 blocks",
                                      std::to_string(x2) + " size-2, " +
                                          std::to_string(x1) + " size-1"));
    suite.add(y2 == 2 * p && y1 == 2 * p - 4
                  ? CheckReport::pass("Y^-1: 2p size-2 and 2p-4 size-1 blocks")
                  : CheckReport::fail("Y^-1: 2p size-2 and 2p-4 size-1 blocks",
                                      std::to_string(y2) + " size-2, " +
                                          std::to_string(y1) + " size-1"));
    bool same = true;
    for (int i = 0; i < 2 * p; ++i)
        if (bx[i].blocks != by[i].blocks || bx[i].size2 != by[i].size2) same = false;
    suite.add(same ? CheckReport::pass("Jordan data of X and Y^-1 coincide")
                   : CheckReport::fail("Jordan data of X and Y^-1 coincide"));
    return suite;
}

}  // namespace daha
