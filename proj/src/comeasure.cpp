#include "frobhopf/comeasure.hpp"

#include <algorithm>

namespace frobhopf {

// ---------------------------------------------------------------------------
// TableAlgebra
// ---------------------------------------------------------------------------

TableAlgebra::TableAlgebra(FieldCtxPtr field, std::vector<std::string> labels,
                           std::vector<std::vector<Vec>> mult, Vec unit)
    : field_(std::move(field)), labels_(std::move(labels)),
      mult_(std::move(mult)), unit_(std::move(unit)) {
    if (mult_.size() != labels_.size() || unit_.size() != labels_.size())
        throw DimensionMismatch("table algebra shape");
    for (const auto& row : mult_) {
        if (row.size() != labels_.size()) throw DimensionMismatch("table algebra shape");
        for (const auto& v : row)
            if (v.size() != labels_.size()) throw DimensionMismatch("table algebra shape");
    }
}

std::shared_ptr<const TableAlgebra> TableAlgebra::field_algebra(const FieldCtxPtr& k) {
    std::vector<std::vector<Vec>> mult(1, std::vector<Vec>(1, Vec{k->one()}));
    return std::make_shared<TableAlgebra>(k, std::vector<std::string>{"1"}, std::move(mult),
                                          Vec{k->one()});
}

std::shared_ptr<const TableAlgebra> TableAlgebra::tensor(
    const std::shared_ptr<const TableAlgebra>& x, const std::shared_ptr<const TableAlgebra>& y) {
    if (!x->field()->same(*y->field())) throw FieldMismatch("tensor factors");
    const FieldCtxPtr& k = x->field();
    size_t nx = x->dim(), ny = y->dim(), n = nx * ny;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
            labels.push_back(x->labels()[i] + "(x)" + y->labels()[j]);
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n, k->zero())));
    for (size_t i1 = 0; i1 < nx; ++i1)
        for (size_t j1 = 0; j1 < ny; ++j1)
            for (size_t i2 = 0; i2 < nx; ++i2)
                for (size_t j2 = 0; j2 < ny; ++j2) {
                    const Vec& px = x->product(i1, i2);
                    const Vec& py = y->product(j1, j2);
                    Vec& out = mult[i1 * ny + j1][i2 * ny + j2];
                    for (size_t a = 0; a < nx; ++a) {
                        if (px[a].is_zero()) continue;
                        for (size_t b = 0; b < ny; ++b)
                            if (!py[b].is_zero()) out[a * ny + b] += px[a] * py[b];
                    }
                }
    Vec unit(n, k->zero());
    for (size_t a = 0; a < nx; ++a)
        for (size_t b = 0; b < ny; ++b)
            unit[a * ny + b] = x->unit()[a] * y->unit()[b];
    return std::make_shared<TableAlgebra>(k, std::move(labels), std::move(mult), std::move(unit));
}

Vec TableAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("table product");
    Vec out = zero_vec();
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const Vec& row = mult_[i][j];
            for (size_t t = 0; t < dim(); ++t)
                if (!row[t].is_zero()) out[t] += c * row[t];
        }
    }
    return out;
}

bool TableAlgebra::is_zero_vec(const Vec& v) const {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// QuotientAlgebra
// ---------------------------------------------------------------------------

size_t QuotientAlgebra::index_of_word(const Word& w) const {
    auto it = std::lower_bound(basis.words.begin(), basis.words.end(), w, DegLexLess{});
    if (it == basis.words.end() || *it != w)
        throw EngineError(ErrorKind::Internal, "word is not a quotient basis element");
    return static_cast<size_t>(it - basis.words.begin());
}

Vec QuotientAlgebra::coords_of(const NCPoly& nf) const {
    Vec v(dim(), gb->presentation().field->zero());
    for (const auto& [w, c] : nf.terms()) v[index_of_word(w)] = c;
    return v;
}

QuotientAlgebra make_quotient_algebra(std::shared_ptr<const GBState> gb) {
    QuotientAlgebra q;
    q.gb = std::move(gb);
    QuotientDim qd = quotient_dimension(*q.gb);
    if (qd.kind == QuotientDim::Kind::Trivial) {
        q.basis.finite = true;
        q.basis.certificate_degree = 0;
        const FieldCtxPtr& k = q.gb->presentation().field;
        q.table = std::make_shared<TableAlgebra>(k, std::vector<std::string>{},
                                                 std::vector<std::vector<Vec>>{}, Vec{});
        return q;
    }
    if (qd.kind != QuotientDim::Kind::Finite)
        throw NotFinite("quotient undetermined at degree " +
                        std::to_string(q.gb->truncation()));
    q.basis = std::move(qd.basis);
    auto raw = multiplication_table(*q.gb, q.basis);
    const FieldCtxPtr& k = q.gb->presentation().field;
    std::vector<std::string> labels;
    for (const auto& w : q.basis.words) {
        std::string l = "[";
        for (size_t i = 0; i < w.size(); ++i)
            l += (i ? " " : "") + q.gb->presentation().generator_labels[w[i]];
        labels.push_back(l + "]");
    }
    Vec unit(q.basis.words.size(), k->zero());
    // 1 is the empty word, always a normal word of a nonzero quotient
    NCPoly one_nf = q.gb->normal_form(NCPoly::constant(k, k->one()));
    for (const auto& [w, c] : one_nf.terms()) {
        auto it = std::lower_bound(q.basis.words.begin(), q.basis.words.end(), w, DegLexLess{});
        unit[it - q.basis.words.begin()] = c;
    }
    q.table = std::make_shared<TableAlgebra>(k, std::move(labels), std::move(raw),
                                             std::move(unit));
    return q;
}

// ---------------------------------------------------------------------------
// universal presentation
// ---------------------------------------------------------------------------

UniversalComeasuring build_universal_comeasuring(OmegaAlgebraPtr A, OmegaAlgebraPtr B) {
    if (!A->field()->same(*B->field())) throw FieldMismatch("comeasuring endpoints");
    if (!A->signature().same(B->signature())) throw SignatureMismatch("comeasuring endpoints");
    const FieldCtxPtr& k = A->field();
    size_t nI = A->dim(), nJ = B->dim();

    auto pres = std::make_shared<Presentation>();
    pres->field = k;
    for (uint32_t beta = 0; beta < nJ; ++beta)
        for (uint32_t alpha = 0; alpha < nI; ++alpha)
            pres->generator_labels.push_back("(b" + std::to_string(beta) + "*|a" +
                                             std::to_string(alpha) + ")");

    UniversalComeasuring uc;
    uc.source = A;
    uc.target = B;

    const Signature& sig = A->signature();
    for (size_t oi = 0; oi < sig.ops().size(); ++oi) {
        const OpSig& sg = sig.ops()[oi];
        int s = sg.source_arity, t = sg.target_arity;
        // reverse index for B: target multi-index -> [(source multi-index, c)]
        std::map<uint64_t, std::vector<std::pair<uint64_t, Scalar>>> b_rev;
        for (const auto& [src, row] : B->table(static_cast<int>(oi)))
            for (const auto& [dst, c] : row.entries()) b_rev[dst].push_back({src, c});

        uint64_t nIs = pow_u64(nI, s), nJt = pow_u64(nJ, t);
        for (uint64_t aflat = 0; aflat < nIs; ++aflat) {
            auto alpha = unflatten_index(aflat, nI, s);
            const SparseTensor* arow = A->table_row(static_cast<int>(oi), aflat);
            for (uint64_t mflat = 0; mflat < nJt; ++mflat) {
                auto mu = unflatten_index(mflat, nJ, t);
                NCPoly rel(k);
                if (arow) {
                    for (const auto& [gflat, c] : arow->entries()) {
                        auto gamma = unflatten_index(gflat, nI, t);
                        Word w;
                        for (int r = 0; r < t; ++r)
                            w.push_back(static_cast<uint32_t>(uc.gen_index(mu[r], gamma[r])));
                        rel.add_term(w, c);
                    }
                }
                auto bit = b_rev.find(mflat);
                if (bit != b_rev.end()) {
                    for (const auto& [bflat, c] : bit->second) {
                        auto beta = unflatten_index(bflat, nJ, s);
                        Word w;
                        for (int r = 0; r < s; ++r)
                            w.push_back(static_cast<uint32_t>(uc.gen_index(beta[r], alpha[r])));
                        rel.add_term(w, -c);
                    }
                }
                if (!rel.is_zero()) pres->relations.push_back(std::move(rel));
            }
        }
    }
    uc.presentation = std::move(pres);
    return uc;
}

const QuotientAlgebra& ComeasurePair::quotient() const {
    if (!finite) throw NotFinite("pair quotient");
    return *finite;
}

ComeasurePair build_comeasure_pair(OmegaAlgebraPtr A, OmegaAlgebraPtr B, const GBOptions& opts) {
    ComeasurePair pair;
    pair.univ = build_universal_comeasuring(A, B);
    pair.gb = std::make_shared<GBState>(complete(*pair.univ.presentation, opts));
    const FieldCtxPtr& k = A->field();
    size_t nI = A->dim(), nJ = B->dim();
    pair.rho_nf.assign(nI, std::vector<NCPoly>(nJ, NCPoly(k)));
    for (uint32_t alpha = 0; alpha < nI; ++alpha)
        for (uint32_t beta = 0; beta < nJ; ++beta) {
            Word w{static_cast<uint32_t>(pair.univ.gen_index(beta, alpha))};
            pair.rho_nf[alpha][beta] =
                pair.gb->normal_form(NCPoly::monomial(k, std::move(w), k->one()));
        }
    if (pair.gb->status() != GBStatus::CompleteUpTo) {
        pair.finite = make_quotient_algebra(pair.gb);
        pair.rho_vec.assign(nI, std::vector<Vec>(nJ));
        for (uint32_t alpha = 0; alpha < nI; ++alpha)
            for (uint32_t beta = 0; beta < nJ; ++beta)
                pair.rho_vec[alpha][beta] = pair.finite->coords_of(pair.rho_nf[alpha][beta]);
    }
    return pair;
}

// ---------------------------------------------------------------------------
// axiom checks
// ---------------------------------------------------------------------------

namespace {

// shared walker: compare LHS(alpha, mu) = sum_gamma A[alpha->gamma] prod q_{mu_r gamma_r}
// against RHS(alpha, mu) = sum_beta B[beta->mu] prod q_{beta_r alpha_r},
// with product/compare abstracted over the Q representation.
template <typename Elem, typename GetQ, typename Product, typename IsZero>
std::vector<ComeasViolation> verify_generic(const OmegaAlgebra& A, const OmegaAlgebra& B,
                                            const Elem& one, GetQ getq, Product prod,
                                            IsZero is_zero) {
    std::vector<ComeasViolation> bad;
    size_t nI = A.dim(), nJ = B.dim();
    const Signature& sig = A.signature();
    for (size_t oi = 0; oi < sig.ops().size(); ++oi) {
        const OpSig& sg = sig.ops()[oi];
        int s = sg.source_arity, t = sg.target_arity;
        std::map<uint64_t, std::vector<std::pair<uint64_t, Scalar>>> b_rev;
        for (const auto& [src, row] : B.table(static_cast<int>(oi)))
            for (const auto& [dst, c] : row.entries()) b_rev[dst].push_back({src, c});
        uint64_t nIs = pow_u64(nI, s), nJt = pow_u64(nJ, t);
        for (uint64_t aflat = 0; aflat < nIs; ++aflat) {
            auto alpha = unflatten_index(aflat, nI, s);
            const SparseTensor* arow = A.table_row(static_cast<int>(oi), aflat);
            for (uint64_t mflat = 0; mflat < nJt; ++mflat) {
                auto mu = unflatten_index(mflat, nJ, t);
                Elem diff = one;   // placeholder; rebuilt below
                bool have = false;
                if (arow) {
                    for (const auto& [gflat, c] : arow->entries()) {
                        auto gamma = unflatten_index(gflat, nI, t);
                        Elem term = one;
                        for (int r = 0; r < t; ++r) term = prod(term, getq(gamma[r], mu[r]));
                        term = term * c;
                        diff = have ? diff + term : term;
                        have = true;
                    }
                }
                auto bit = b_rev.find(mflat);
                if (bit != b_rev.end()) {
                    for (const auto& [bflat, c] : bit->second) {
                        auto beta = unflatten_index(bflat, nJ, s);
                        Elem term = one;
                        for (int r = 0; r < s; ++r) term = prod(term, getq(alpha[r], beta[r]));
                        term = term * (-c);
                        diff = have ? diff + term : term;
                        have = true;
                    }
                }
                if (have && !is_zero(diff))
                    bad.push_back({sg.name, unflatten_index(aflat, nI, s),
                                   unflatten_index(mflat, nJ, t)});
            }
        }
    }
    return bad;
}

// Thin wrappers giving NCPoly and Vec a uniform "Elem" interface.
struct PolyElem {
    NCPoly p;
    PolyElem operator+(const PolyElem& o) const { return {p + o.p}; }
    PolyElem operator*(const Scalar& c) const { return {p.scaled(c)}; }
};
struct VecElem {
    Vec v;
    const TableAlgebra* alg;
    VecElem operator+(const VecElem& o) const {
        Vec r = v;
        for (size_t i = 0; i < r.size(); ++i) r[i] += o.v[i];
        return {r, alg};
    }
    VecElem operator*(const Scalar& c) const {
        Vec r = v;
        for (auto& x : r) x *= c;
        return {r, alg};
    }
};

} // namespace

std::vector<ComeasViolation> verify_comeasuring(const OmegaAlgebra& A, const OmegaAlgebra& B,
                                                const std::vector<std::vector<NCPoly>>& rho,
                                                const GBState& gb) {
    const FieldCtxPtr& k = A.field();
    PolyElem one{NCPoly::constant(k, k->one())};
    return verify_generic<PolyElem>(
        A, B, one,
        [&](uint32_t alpha, uint32_t beta) { return PolyElem{rho[alpha][beta]}; },
        [&](const PolyElem& x, const PolyElem& y) {
            return PolyElem{gb.normal_form(x.p.times(y.p))};
        },
        [&](const PolyElem& x) { return gb.normal_form(x.p).is_zero(); });
}

std::vector<ComeasViolation> verify_comeasuring(const TableComeasuring& cm) {
    VecElem one{cm.Q->unit(), cm.Q.get()};
    return verify_generic<VecElem>(
        *cm.source, *cm.target, one,
        [&](uint32_t alpha, uint32_t beta) { return VecElem{cm.rho[alpha][beta], cm.Q.get()}; },
        [&](const VecElem& x, const VecElem& y) { return VecElem{cm.Q->multiply(x.v, y.v), cm.Q.get()}; },
        [&](const VecElem& x) { return cm.Q->is_zero_vec(x.v); });
}

TableComeasuring comeasuring_from_morphism(const LinearMap& f) {
    auto bad = check_omega_morphism(f);
    if (!bad.empty()) throw NotAFrobeniusMorphism("comeasuring_from_morphism: op " + bad[0].op);
    TableComeasuring cm;
    cm.source = f.domain;
    cm.target = f.codomain;
    cm.Q = TableAlgebra::field_algebra(f.domain->field());
    cm.rho.assign(f.domain->dim(), std::vector<Vec>(f.codomain->dim()));
    for (uint32_t alpha = 0; alpha < f.domain->dim(); ++alpha)
        for (uint32_t beta = 0; beta < f.codomain->dim(); ++beta)
            cm.rho[alpha][beta] = Vec{f.m[beta][alpha]};
    return cm;
}

// ---------------------------------------------------------------------------
// AlgebraMapToQuotient
// ---------------------------------------------------------------------------

Vec AlgebraMapToQuotient::eval_word(const Word& w) const {
    Vec acc = codomain->unit();
    if (!opposite) {
        for (uint32_t g : w) acc = codomain->multiply(acc, generator_images.at(g));
    } else {
        for (size_t i = w.size(); i-- > 0;)
            acc = codomain->multiply(acc, generator_images.at(w[i]));
    }
    return acc;
}

Vec AlgebraMapToQuotient::eval_poly(const NCPoly& p) const {
    Vec out = codomain->zero_vec();
    for (const auto& [w, c] : p.terms()) {
        Vec t = eval_word(w);
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * t[i];
    }
    return out;
}

std::vector<size_t> AlgebraMapToQuotient::failing_relations() const {
    std::vector<size_t> bad;
    for (size_t i = 0; i < domain->relations.size(); ++i)
        if (!codomain->is_zero_vec(eval_poly(domain->relations[i]))) bad.push_back(i);
    return bad;
}

std::vector<Vec> AlgebraMapToQuotient::matrix_on(const QuotientAlgebra& dq) const {
    std::vector<Vec> cols;
    cols.reserve(dq.dim());
    for (const auto& w : dq.basis.words) cols.push_back(eval_word(w));
    return cols;   // cols[j] = image of j-th basis word
}

// ---------------------------------------------------------------------------
// opcategory structure maps
// ---------------------------------------------------------------------------

AlgebraMapToQuotient comeasuring_d(const ComeasurePair& pairAC, const ComeasurePair& pairBC,
                                   const ComeasurePair& pairAB) {
    if (!pairAC.is_finite() || !pairBC.is_finite() || !pairAB.is_finite())
        throw NotFinite("comeasuring_d needs finite quotients on all three pairs");
    const auto& QBC = pairBC.quotient();
    const auto& QAB = pairAB.quotient();
    auto cod = TableAlgebra::tensor(QBC.table, QAB.table);
    size_t nI = pairAC.univ.source->dim();     // A basis
    size_t nJ = pairAB.univ.target->dim();     // B basis
    size_t nK = pairAC.univ.target->dim();     // C basis
    AlgebraMapToQuotient d;
    d.domain = pairAC.univ.presentation;
    d.codomain = cod;
    d.generator_images.assign(nI * nK, Vec(cod->dim(), cod->field()->zero()));
    size_t dimAB = QAB.dim();
    for (uint32_t gamma = 0; gamma < nK; ++gamma)
        for (uint32_t alpha = 0; alpha < nI; ++alpha) {
            Vec& img = d.generator_images[pairAC.univ.gen_index(gamma, alpha)];
            for (uint32_t beta = 0; beta < nJ; ++beta) {
                const Vec& xbc = pairBC.rho_vec[beta][gamma];   // x^{BC}_{gamma,beta}
                const Vec& xab = pairAB.rho_vec[alpha][beta];   // x^{AB}_{beta,alpha}
                for (size_t u = 0; u < xbc.size(); ++u) {
                    if (xbc[u].is_zero()) continue;
                    for (size_t v = 0; v < dimAB; ++v)
                        if (!xab[v].is_zero()) img[u * dimAB + v] += xbc[u] * xab[v];
                }
            }
        }
    auto bad = d.failing_relations();
    if (!bad.empty())
        throw RelationNotKilled("comeasuring_d relation #" + std::to_string(bad[0]));
    return d;
}

AlgebraMapToQuotient comeasuring_counit(const ComeasurePair& pairAA) {
    const OmegaAlgebra& A = *pairAA.univ.source;
    if (pairAA.univ.target.get() != pairAA.univ.source.get() &&
        !(pairAA.univ.target->dim() == A.dim() &&
          pairAA.univ.target->field()->same(*A.field())))
        throw DimensionMismatch("counit needs the self pair");
    const FieldCtxPtr& k = A.field();
    AlgebraMapToQuotient e;
    e.domain = pairAA.univ.presentation;
    e.codomain = TableAlgebra::field_algebra(k);
    size_t n = A.dim();
    e.generator_images.assign(n * n, Vec{k->zero()});
    for (uint32_t mu = 0; mu < n; ++mu)
        e.generator_images[pairAA.univ.gen_index(mu, mu)] = Vec{k->one()};
    auto bad = e.failing_relations();
    if (!bad.empty())
        throw RelationNotKilled("counit relation #" + std::to_string(bad[0]));
    return e;
}

namespace {

// Common shell for both antipode directions; `formula` produces the image of
// generator x^{BA}_{p,mu}.
template <typename F>
AlgebraMapToQuotient antipode_common(const ComeasurePair& pairBA, const ComeasurePair& pairAB,
                                     F formula) {
    if (!pairBA.is_finite() || !pairAB.is_finite())
        throw NotFinite("antipode needs both quotients finite");
    const auto& QAB = pairAB.quotient();
    AlgebraMapToQuotient S;
    S.domain = pairBA.univ.presentation;
    S.codomain = QAB.table;
    S.opposite = true;
    size_t nI = pairBA.univ.target->dim();   // A basis (target of B->A)
    size_t nJ = pairBA.univ.source->dim();   // B basis
    S.generator_images.assign(nI * nJ, Vec(QAB.dim(), QAB.table->field()->zero()));
    for (uint32_t p = 0; p < nI; ++p)
        for (uint32_t mu = 0; mu < nJ; ++mu)
            S.generator_images[pairBA.univ.gen_index(p, mu)] = formula(p, mu);
    auto bad = S.failing_relations();
    if (!bad.empty())
        throw RelationNotKilled("antipode relation #" + std::to_string(bad[0]));
    return S;
}

} // namespace

AlgebraMapToQuotient antipode_S(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                                const ComeasurePair& pairBA, const ComeasurePair& pairAB) {
    const auto& QAB = pairAB.quotient();
    const FieldCtxPtr& k = A.field();
    // S(x^{BA}_{p,mu}) = sum_{q,beta} E^A_{p,q} nu_B(b_beta b_mu) x^{AB}_{beta,q}
    return antipode_common(pairBA, pairAB, [&](uint32_t p, uint32_t mu) {
        Vec img(QAB.dim(), k->zero());
        for (const auto& [pq, cas] : A.casimir()) {
            if (pq.first != p) continue;
            uint32_t q = pq.second;
            for (uint32_t beta = 0; beta < B.dim(); ++beta) {
                Scalar nu = B.counit_of(B.multiply(B.carrier()->basis_vector(beta),
                                                   B.carrier()->basis_vector(mu)));
                if (nu.is_zero()) continue;
                const Vec& x = pairAB.rho_vec[q][beta];
                Scalar c = cas * nu;
                for (size_t t = 0; t < img.size(); ++t)
                    if (!x[t].is_zero()) img[t] += c * x[t];
            }
        }
        return img;
    });
}

AlgebraMapToQuotient antipode_S_inverse(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                                        const ComeasurePair& pairBA, const ComeasurePair& pairAB) {
    const auto& QAB = pairAB.quotient();
    const FieldCtxPtr& k = A.field();
    // S'(x^{BA}_{r,mu}) = sum_{p,beta} E^A_{p,r} nu_B(b_mu b_beta) x^{AB}_{beta,p}
    return antipode_common(pairBA, pairAB, [&](uint32_t r, uint32_t mu) {
        Vec img(QAB.dim(), k->zero());
        for (const auto& [pq, cas] : A.casimir()) {
            if (pq.second != r) continue;
            uint32_t p = pq.first;
            for (uint32_t beta = 0; beta < B.dim(); ++beta) {
                Scalar nu = B.counit_of(B.multiply(B.carrier()->basis_vector(mu),
                                                   B.carrier()->basis_vector(beta)));
                if (nu.is_zero()) continue;
                const Vec& x = pairAB.rho_vec[p][beta];
                Scalar c = cas * nu;
                for (size_t t = 0; t < img.size(); ++t)
                    if (!x[t].is_zero()) img[t] += c * x[t];
            }
        }
        return img;
    });
}

AlgebraMapToQuotient factor_comeasuring(const TableComeasuring& cm,
                                        const UniversalComeasuring& univ) {
    if (cm.source->dim() != univ.source->dim() || cm.target->dim() != univ.target->dim())
        throw DimensionMismatch("factor_comeasuring endpoints");
    AlgebraMapToQuotient phi;
    phi.domain = univ.presentation;
    phi.codomain = cm.Q;
    size_t nI = univ.source->dim(), nJ = univ.target->dim();
    phi.generator_images.assign(nI * nJ, cm.Q->zero_vec());
    for (uint32_t beta = 0; beta < nJ; ++beta)
        for (uint32_t alpha = 0; alpha < nI; ++alpha)
            phi.generator_images[univ.gen_index(beta, alpha)] = cm.rho[alpha][beta];
    auto bad = phi.failing_relations();
    if (!bad.empty())
        throw RelationNotKilled("factor_comeasuring: input is not a comeasuring (relation #" +
                                std::to_string(bad[0]) + ")");
    return phi;
}

// ---------------------------------------------------------------------------
// triviality oracle, scalar extension
// ---------------------------------------------------------------------------

namespace {
bool char_divides(uint64_t characteristic, int64_t x) {
    if (characteristic == 0) return x == 0;
    int64_t c = static_cast<int64_t>(characteristic);
    return x % c == 0;
}
} // namespace

TrivialityVerdict triviality_oracle(const BuilderSpec& a, const BuilderSpec& b,
                                    uint64_t characteristic) {
    int64_t na = static_cast<int64_t>(a.n), nb = static_cast<int64_t>(b.n);
    if (a.kind == b.kind) {
        // group-group and matrix-matrix share the |G|-|H| / n-m condition
        return char_divides(characteristic, na - nb) ? TrivialityVerdict::Unknown
                                                     : TrivialityVerdict::Trivial;
    }
    int64_t n = a.kind == BuilderSpec::Kind::Matrix ? na : nb;    // matrix size
    int64_t g = a.kind == BuilderSpec::Kind::Matrix ? nb : na;    // group order
    if (!char_divides(characteristic, n - g) || !char_divides(characteristic, n - 1))
        return TrivialityVerdict::Trivial;
    return TrivialityVerdict::Unknown;
}

OmegaAlgebraPtr extend_scalars(const OmegaAlgebra& alg, const FieldCtxPtr& new_ctx) {
    ScalarEmbedding embed(alg.field(), new_ctx);
    auto out = std::make_shared<OmegaAlgebra>(new_ctx, alg.signature(), alg.basis());
    for (size_t oi = 0; oi < alg.signature().ops().size(); ++oi) {
        const OpSig& sg = alg.signature().ops()[oi];
        for (const auto& [src, row] : alg.table(static_cast<int>(oi)))
            for (const auto& [dst, c] : row.entries())
                out->set_constant(sg.name, unflatten_index(src, alg.dim(), sg.source_arity),
                                  unflatten_index(dst, alg.dim(), sg.target_arity), embed(c));
    }
    return out;
}

} // namespace frobhopf
