#include "frobhopf/measure.hpp"

#include <algorithm>

namespace frobhopf {

// ---------------------------------------------------------------------------
// linalg
// ---------------------------------------------------------------------------

std::vector<std::vector<Scalar>> nullspace(Matrix rows, size_t cols, const FieldCtxPtr& k) {
    size_t nrows = rows.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < nrows; ++c) {
        size_t piv = nrows;
        for (size_t i = r; i < nrows; ++i)
            if (!rows[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == nrows) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][c].inverse();
        for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, k->zero());
        v[free] = k->one();
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix try_invert(const Matrix& m, const FieldCtxPtr& k) {
    size_t n = m.size();
    Matrix a = m;
    Matrix inv = identity_matrix(n, k);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return {};
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Scalar s = a[c][c].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldCtxPtr& k) {
    size_t n = a.size(), mdim = b.empty() ? 0 : b[0].size(), inner = b.size();
    Matrix r(n, std::vector<Scalar>(mdim, k->zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < mdim; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

Matrix identity_matrix(size_t n, const FieldCtxPtr& k) {
    Matrix r(n, std::vector<Scalar>(n, k->zero()));
    for (size_t i = 0; i < n; ++i) r[i][i] = k->one();
    return r;
}

// ---------------------------------------------------------------------------
// DualCoalgebra
// ---------------------------------------------------------------------------

Vec DualCoalgebra::delta_apply(const Vec& v) const {
    size_t n = dim();
    Vec out(n * n, field()->zero());
    for (uint32_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& [j, k, c] : delta[i]) out[static_cast<size_t>(j) * n + k] += v[i] * c;
    }
    return out;
}

Scalar DualCoalgebra::counit_apply(const Vec& v) const {
    Scalar s = field()->zero();
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s += v[i] * counit[i];
    return s;
}

std::vector<std::pair<std::vector<uint32_t>, Scalar>> DualCoalgebra::delta_power(uint32_t i,
                                                                                 int m) const {
    if (m == 1) return {{{i}, field()->one()}};
    std::vector<std::pair<std::vector<uint32_t>, Scalar>> out;
    // Delta^m = (Delta^{m-1} ot Id) Delta, flattened
    for (const auto& [j, k, c] : delta[i]) {
        for (const auto& [tuple, c2] : delta_power(j, m - 1)) {
            auto t = tuple;
            t.push_back(k);
            out.push_back({std::move(t), c * c2});
        }
    }
    return out;
}

DualCoalgebra dual_coalgebra(std::shared_ptr<const QuotientAlgebra> Q) {
    if (!Q->basis.finite) throw NotFinite("dual coalgebra");
    DualCoalgebra C;
    C.Q = std::move(Q);
    size_t n = C.Q->dim();
    const FieldCtxPtr& k = C.Q->gb->presentation().field;
    C.delta.assign(n, {});
    C.counit.assign(n, k->zero());
    for (uint32_t j = 0; j < n; ++j)
        for (uint32_t l = 0; l < n; ++l) {
            const Vec& prod = C.Q->table->product(j, l);
            for (uint32_t i = 0; i < n; ++i)
                if (!prod[i].is_zero()) C.delta[i].push_back({j, l, prod[i]});
        }
    for (uint32_t i = 0; i < n; ++i) C.counit[i] = C.Q->table->unit()[i];

    // coassociativity / counitality re-verified
    for (uint32_t i = 0; i < n; ++i) {
        Vec lhs(n * n * n, k->zero()), rhs(n * n * n, k->zero());
        for (const auto& [j, l, c] : C.delta[i]) {
            for (const auto& [p, q, c2] : C.delta[j])
                lhs[(static_cast<size_t>(p) * n + q) * n + l] += c * c2;
            for (const auto& [p, q, c2] : C.delta[l])
                rhs[(static_cast<size_t>(j) * n + p) * n + q] += c * c2;
        }
        if (lhs != rhs)
            throw EngineError(ErrorKind::Internal, "dual coalgebra not coassociative");
        Vec left(n, k->zero()), right(n, k->zero());
        for (const auto& [j, l, c] : C.delta[i]) {
            left[l] += C.counit[j] * c;
            right[j] += C.counit[l] * c;
        }
        Vec e(n, k->zero());
        e[i] = k->one();
        if (left != e || right != e)
            throw EngineError(ErrorKind::Internal, "dual coalgebra not counital");
    }
    return C;
}

// ---------------------------------------------------------------------------
// MeasuringAction
// ---------------------------------------------------------------------------

MeasuringAction measuring_action(const ComeasurePair& pair,
                                 std::shared_ptr<const DualCoalgebra> C) {
    if (!pair.is_finite()) throw NotFinite("measuring action");
    MeasuringAction act;
    act.C = std::move(C);
    act.source = pair.univ.source;
    act.target = pair.univ.target;
    size_t nI = act.source->dim(), nJ = act.target->dim(), n = act.C->dim();
    act.psi.assign(n, std::vector<DenseTensor>(nI));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t alpha = 0; alpha < nI; ++alpha) {
            DenseTensor v(nJ, act.source->field()->zero());
            for (uint32_t beta = 0; beta < nJ; ++beta) v[beta] = pair.rho_vec[alpha][beta][i];
            act.psi[i][alpha] = std::move(v);
        }
    return act;
}

LinearMap MeasuringAction::induced_map(const Vec& v) const {
    LinearMap f = LinearMap::zero(source, target);
    for (uint32_t alpha = 0; alpha < source->dim(); ++alpha)
        for (uint32_t beta = 0; beta < target->dim(); ++beta) {
            Scalar s = source->field()->zero();
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) s += v[i] * psi[i][alpha][beta];
            f.m[beta][alpha] = s;
        }
    return f;
}

namespace {

// psi_m(w_i* ot T) for a dense m-tensor T over the source basis.
DenseTensor psi_power(const MeasuringAction& act, uint32_t i, const DenseTensor& T, int m) {
    size_t nI = act.source->dim(), nJ = act.target->dim();
    const FieldCtxPtr& k = act.source->field();
    if (m == 0) {
        DenseTensor out(1, k->zero());
        out[0] = act.C->counit[i] * T[0];
        return out;
    }
    DenseTensor out(pow_u64(nJ, m), k->zero());
    auto split = act.C->delta_power(i, m);
    for (uint64_t aflat = 0; aflat < T.size(); ++aflat) {
        if (T[aflat].is_zero()) continue;
        auto alpha = unflatten_index(aflat, nI, m);
        for (const auto& [tuple, c] : split) {
            std::vector<std::pair<uint64_t, Scalar>> acc = {{0, T[aflat] * c}};
            for (int r = 0; r < m; ++r) {
                std::vector<std::pair<uint64_t, Scalar>> next;
                const DenseTensor& leg = act.psi[tuple[r]][alpha[r]];
                for (const auto& [flat, coef] : acc)
                    for (uint32_t b = 0; b < nJ; ++b)
                        if (!leg[b].is_zero()) next.push_back({flat * nJ + b, coef * leg[b]});
                acc = std::move(next);
                if (acc.empty()) break;
            }
            for (const auto& [flat, coef] : acc) out[flat] += coef;
        }
    }
    return out;
}

} // namespace

std::vector<MeasViolation> verify_measuring(const MeasuringAction& act) {
    std::vector<MeasViolation> bad;
    const OmegaAlgebra& A = *act.source;
    const OmegaAlgebra& B = *act.target;
    const FieldCtxPtr& k = A.field();
    size_t nI = A.dim();
    for (size_t oi = 0; oi < A.signature().ops().size(); ++oi) {
        const OpSig& sg = A.signature().ops()[oi];
        int s = sg.source_arity, t = sg.target_arity;
        uint64_t nIs = pow_u64(nI, s);
        for (uint32_t i = 0; i < act.C->dim(); ++i) {
            for (uint64_t aflat = 0; aflat < nIs; ++aflat) {
                DenseTensor e(nIs, k->zero());
                e[aflat] = k->one();
                DenseTensor lhs =
                    psi_power(act, i, A.apply_op_index(static_cast<int>(oi), e), t);
                DenseTensor rhs =
                    B.apply_op_index(static_cast<int>(oi), psi_power(act, i, e, s));
                if (lhs != rhs)
                    bad.push_back({sg.name, i, unflatten_index(aflat, nI, s)});
            }
        }
    }
    return bad;
}

// ---------------------------------------------------------------------------
// grouplikes / primitives
// ---------------------------------------------------------------------------

bool is_grouplike(const DualCoalgebra& C, const Vec& v) {
    if (!C.counit_apply(v).is_one()) return false;
    size_t n = C.dim();
    Vec dv = C.delta_apply(v);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!(dv[j * n + k] == v[j] * v[k])) return false;
    return true;
}

std::vector<Vec> grouplikes_enumerate(const DualCoalgebra& C, uint64_t budget) {
    const FieldCtxPtr& k = C.field();
    auto fsize = k->size();
    if (!fsize)
        throw BudgetExceeded("exhaustive grouplike search needs a finite field; "
                             "use grouplikes_verify with candidates over Q");
    size_t n = C.dim();
    double total = 1;
    for (size_t i = 0; i < n; ++i) total *= static_cast<double>(*fsize);
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("grouplike search space exceeds budget " + std::to_string(budget));
    std::vector<Vec> found;
    if (n == 0) return found;

    if (k->kind() == FieldCtx::Kind::Prime) {
        // fast path on raw residues
        uint64_t p = k->prime_modulus();
        std::vector<std::vector<uint64_t>> cube(n * n, std::vector<uint64_t>(n, 0));
        for (uint32_t i = 0; i < n; ++i)
            for (const auto& [j, l, c] : C.delta[i]) cube[j * n + l][i] = c.residue();
        std::vector<uint64_t> eps(n);
        for (size_t i = 0; i < n; ++i) eps[i] = C.counit[i].residue();
        std::vector<uint64_t> v(n, 0);
        while (true) {
            uint64_t e = 0;
            for (size_t i = 0; i < n; ++i) e = (e + eps[i] * v[i]) % p;
            if (e == 1) {
                bool ok = true;
                for (size_t j = 0; j < n && ok; ++j)
                    for (size_t l = 0; l < n && ok; ++l) {
                        uint64_t s = 0;
                        const auto& row = cube[j * n + l];
                        for (size_t i = 0; i < n; ++i) s = (s + row[i] * v[i]) % p;
                        if (s != v[j] * v[l] % p) ok = false;
                    }
                if (ok) {
                    Vec sv(n, k->zero());
                    for (size_t i = 0; i < n; ++i)
                        sv[i] = k->from_int(static_cast<long long>(v[i]));
                    found.push_back(std::move(sv));
                }
            }
            size_t pos = n;
            bool done = false;
            while (pos-- > 0) {
                if (++v[pos] < p) break;
                v[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
        return found;
    }

    uint64_t space = 1;
    for (size_t i = 0; i < n; ++i) space *= *fsize;
    for (uint64_t code = 0; code < space; ++code) {
        uint64_t c = code;
        Vec v(n, k->zero());
        for (size_t i = n; i-- > 0;) {
            v[i] = k->element_at(c % *fsize);
            c /= *fsize;
        }
        if (is_grouplike(C, v)) found.push_back(std::move(v));
    }
    return found;
}

std::vector<Vec> grouplikes_verify(const DualCoalgebra& C, const std::vector<Vec>& candidates) {
    std::vector<Vec> out;
    for (const auto& v : candidates)
        if (is_grouplike(C, v)) out.push_back(v);
    return out;
}

std::vector<Vec> primitives(const DualCoalgebra& C, const Vec& g, const Vec& h) {
    const FieldCtxPtr& k = C.field();
    size_t n = C.dim();
    if (!is_grouplike(C, g) || !is_grouplike(C, h))
        throw DimensionMismatch("primitives need grouplike anchors");
    Matrix rows(n * n, std::vector<Scalar>(n, k->zero()));
    for (uint32_t i = 0; i < n; ++i)
        for (const auto& [j, l, c] : C.delta[i]) rows[static_cast<size_t>(j) * n + l][i] += c;
    for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) {
            rows[j * n + l][l] -= g[j];
            rows[j * n + l][j] -= h[l];
        }
    return nullspace(std::move(rows), n, k);
}

// ---------------------------------------------------------------------------
// category structure
// ---------------------------------------------------------------------------

std::vector<std::vector<Vec>> compose_m(const ComeasurePair& pairAC,
                                        const ComeasurePair& pairBC,
                                        const ComeasurePair& pairAB) {
    auto d = comeasuring_d(pairAC, pairBC, pairAB);
    const auto& QAC = pairAC.quotient();
    auto M = d.matrix_on(QAC);   // M[kk] = d(w_kk) over the tensor basis
    size_t dimBC = pairBC.quotient().dim();
    size_t dimAB = pairAB.quotient().dim();
    std::vector<std::vector<Vec>> m(
        dimBC, std::vector<Vec>(dimAB, Vec(QAC.dim(), pairAC.gb->presentation().field->zero())));
    for (size_t kk = 0; kk < QAC.dim(); ++kk)
        for (size_t i = 0; i < dimBC; ++i)
            for (size_t j = 0; j < dimAB; ++j) m[i][j][kk] = M[kk][i * dimAB + j];
    return m;
}

Vec unit_j(const ComeasurePair& pairAA) {
    auto e = comeasuring_counit(pairAA);
    const auto& Q = pairAA.quotient();
    Vec j(Q.dim(), pairAA.gb->presentation().field->zero());
    for (size_t i = 0; i < Q.dim(); ++i) j[i] = e.eval_word(Q.basis.words[i])[0];
    return j;
}

Matrix antipode_dual(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                     const ComeasurePair& pairAB, const ComeasurePair& pairBA) {
    // transpose of S: Q(B->A) -> Q(A->B)^op gives s: C(A->B) -> C(B->A)
    auto S = antipode_S(A, B, pairBA, pairAB);
    auto M = S.matrix_on(pairBA.quotient());   // M[j] = S(w_j^{B->A}) over Q(A->B)-basis
    size_t dAB = pairAB.quotient().dim();
    size_t dBA = pairBA.quotient().dim();
    Matrix cols(dAB, Vec(dBA, A.field()->zero()));
    for (size_t j = 0; j < dBA; ++j)
        for (size_t i = 0; i < dAB; ++i) cols[i][j] = M[j][i];
    return cols;   // cols[i] = s(w_i*^{A->B}) in C(B->A)-coordinates
}

// ---------------------------------------------------------------------------
// hopf_category_check
// ---------------------------------------------------------------------------

namespace {

Vec apply_cols(const Matrix& cols, const Vec& v, const FieldCtxPtr& k, size_t out_dim) {
    Vec out(out_dim, k->zero());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t r = 0; r < out_dim; ++r) out[r] += v[i] * cols[i][r];
    }
    return out;
}

Vec scaled_vec(Vec v, const Scalar& c) {
    for (auto& x : v) x *= c;
    return v;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

} // namespace

HopfCheckReport hopf_category_check(const std::vector<FrobeniusAlgebra>& objects,
                                    const GBOptions& opts) {
    HopfCheckReport rep;
    size_t N = objects.size();
    const FieldCtxPtr& k = objects.at(0).field();
    auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

    std::vector<std::vector<ComeasurePair>> P(N);
    std::vector<std::vector<DualCoalgebra>> C(N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            P[i].push_back(build_comeasure_pair(objects[i].carrier(), objects[j].carrier(), opts));
            if (!P[i][j].is_finite())
                throw NotFinite("pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
            C[i].push_back(
                dual_coalgebra(std::make_shared<const QuotientAlgebra>(P[i][j].quotient())));
        }
    rep.hom_dims.assign(N, std::vector<size_t>(N, 0));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) rep.hom_dims[i][j] = C[i][j].dim();

    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            auto act = measuring_action(P[i][j], std::make_shared<const DualCoalgebra>(C[i][j]));
            if (!verify_measuring(act).empty())
                fail("measuring axioms fail for pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
        }

    // composition tables m[i][j][l]: C[j][l] ot C[i][j] -> C[i][l]
    std::vector<std::vector<std::vector<std::vector<std::vector<Vec>>>>> m(N);
    for (size_t i = 0; i < N; ++i) {
        m[i].resize(N);
        for (size_t j = 0; j < N; ++j) {
            m[i][j].resize(N);
            for (size_t l = 0; l < N; ++l) m[i][j][l] = compose_m(P[i][l], P[j][l], P[i][j]);
        }
    }
    std::vector<Vec> units(N);
    for (size_t i = 0; i < N; ++i) units[i] = unit_j(P[i][i]);

    // enriched associativity on basis triples
    bool assoc_ok = true;
    for (size_t i = 0; i < N && assoc_ok; ++i)
        for (size_t j = 0; j < N && assoc_ok; ++j)
            for (size_t l = 0; l < N && assoc_ok; ++l)
                for (size_t w = 0; w < N && assoc_ok; ++w)
                    for (size_t f = 0; f < C[l][w].dim() && assoc_ok; ++f)
                        for (size_t g = 0; g < C[j][l].dim() && assoc_ok; ++g)
                            for (size_t h = 0; h < C[i][j].dim() && assoc_ok; ++h) {
                                const Vec& fg = m[j][l][w][f][g];   // in C[j][w]
                                Vec lhs(C[i][w].dim(), k->zero());
                                for (size_t t = 0; t < fg.size(); ++t) {
                                    if (fg[t].is_zero()) continue;
                                    const Vec& part = m[i][j][w][t][h];
                                    for (size_t r = 0; r < lhs.size(); ++r)
                                        lhs[r] += fg[t] * part[r];
                                }
                                const Vec& gh = m[i][j][l][g][h];   // in C[i][l]
                                Vec rhs(C[i][w].dim(), k->zero());
                                for (size_t t = 0; t < gh.size(); ++t) {
                                    if (gh[t].is_zero()) continue;
                                    const Vec& part = m[i][l][w][f][t];
                                    for (size_t r = 0; r < rhs.size(); ++r)
                                        rhs[r] += gh[t] * part[r];
                                }
                                if (!vec_eq(lhs, rhs)) {
                                    fail("associativity fails at objects (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(l) + "," +
                                         std::to_string(w) + ")");
                                    assoc_ok = false;
                                }
                            }

    // unitality
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            for (size_t p = 0; p < C[i][j].dim(); ++p) {
                Vec e(C[i][j].dim(), k->zero());
                e[p] = k->one();
                Vec left(C[i][j].dim(), k->zero());
                for (size_t t = 0; t < units[j].size(); ++t) {
                    if (units[j][t].is_zero()) continue;
                    const Vec& part = m[i][j][j][t][p];
                    for (size_t r = 0; r < left.size(); ++r) left[r] += units[j][t] * part[r];
                }
                Vec right(C[i][j].dim(), k->zero());
                for (size_t t = 0; t < units[i].size(); ++t) {
                    if (units[i][t].is_zero()) continue;
                    const Vec& part = m[i][i][j][p][t];
                    for (size_t r = 0; r < right.size(); ++r) right[r] += units[i][t] * part[r];
                }
                if (!vec_eq(left, e) || !vec_eq(right, e)) {
                    fail("unitality fails for pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
                    break;
                }
            }

    // m is a coalgebra map
    bool coalg_ok = true;
    for (size_t i = 0; i < N && coalg_ok; ++i)
        for (size_t j = 0; j < N && coalg_ok; ++j)
            for (size_t l = 0; l < N && coalg_ok; ++l) {
                size_t du = C[j][l].dim(), dv = C[i][j].dim(), dt = C[i][l].dim();
                for (size_t u = 0; u < du && coalg_ok; ++u)
                    for (size_t v = 0; v < dv && coalg_ok; ++v) {
                        const Vec& muv = m[i][j][l][u][v];
                        Vec lhs = C[i][l].delta_apply(muv);
                        Vec rhs(dt * dt, k->zero());
                        for (const auto& [p1, p2, c1] : C[j][l].delta[u])
                            for (const auto& [q1, q2, c2] : C[i][j].delta[v]) {
                                const Vec& m1 = m[i][j][l][p1][q1];
                                const Vec& m2 = m[i][j][l][p2][q2];
                                Scalar cc = c1 * c2;
                                for (size_t a = 0; a < dt; ++a) {
                                    if (m1[a].is_zero()) continue;
                                    for (size_t b = 0; b < dt; ++b)
                                        if (!m2[b].is_zero())
                                            rhs[a * dt + b] += cc * m1[a] * m2[b];
                                }
                            }
                        if (!vec_eq(lhs, rhs)) {
                            fail("m is not a coalgebra map at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(l) + ")");
                            coalg_ok = false;
                        }
                        if (coalg_ok) {
                            Scalar el = C[i][l].counit_apply(muv);
                            Scalar er = C[j][l].counit[u] * C[i][j].counit[v];
                            if (!(el == er)) {
                                fail("counit multiplicativity fails at (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(l) + ")");
                                coalg_ok = false;
                            }
                        }
                    }
            }
    for (size_t i = 0; i < N; ++i)
        if (!is_grouplike(C[i][i], units[i]))
            fail("unit j_" + std::to_string(i) + " is not grouplike");

    // antipodes and their identities
    std::vector<std::vector<Matrix>> s(N, std::vector<Matrix>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            s[i][j] = antipode_dual(objects[i], objects[j], P[i][j], P[j][i]);

    rep.units = units;
    rep.antipodes = s;
    rep.compositions = m;
    rep.grouplikes.assign(N, std::vector<std::vector<Vec>>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            try {
                rep.grouplikes[i][j] = grouplikes_enumerate(C[i][j]);
            } catch (const BudgetExceeded&) {
                // enumeration not feasible here (infinite field or too large)
            }

    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            size_t dij = C[i][j].dim(), dji = C[j][i].dim();
            for (size_t p = 0; p < dij; ++p) {
                // (I)  sum m_{jij}(p^(1) ot s(p^(2))) = eps(p) j_j
                Vec acc1(C[j][j].dim(), k->zero());
                // (II) sum m_{iji}(s(p^(1)) ot p^(2)) = eps(p) j_i
                Vec acc2(C[i][i].dim(), k->zero());
                for (const auto& [p1, p2, c] : C[i][j].delta[p]) {
                    const Vec& sp2 = s[i][j][p2];
                    for (size_t y = 0; y < dji; ++y) {
                        if (sp2[y].is_zero()) continue;
                        const Vec& part = m[j][i][j][p1][y];
                        Scalar cc = c * sp2[y];
                        for (size_t r = 0; r < acc1.size(); ++r) acc1[r] += cc * part[r];
                    }
                    const Vec& sp1 = s[i][j][p1];
                    for (size_t x = 0; x < dji; ++x) {
                        if (sp1[x].is_zero()) continue;
                        const Vec& part = m[i][j][i][x][p2];
                        Scalar cc = c * sp1[x];
                        for (size_t r = 0; r < acc2.size(); ++r) acc2[r] += cc * part[r];
                    }
                }
                Scalar eps = C[i][j].counit[p];
                if (!vec_eq(acc1, scaled_vec(units[j], eps)) ||
                    !vec_eq(acc2, scaled_vec(units[i], eps))) {
                    fail("antipode identity fails for pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") at basis " + std::to_string(p));
                    break;
                }
                // anti-comultiplicativity: Delta(s(p)) = sum c s(p^(2)) ot s(p^(1))
                Vec ds = C[j][i].delta_apply(s[i][j][p]);
                Vec expect(dji * dji, k->zero());
                for (const auto& [p1, p2, c] : C[i][j].delta[p]) {
                    const Vec& a = s[i][j][p2];
                    const Vec& b = s[i][j][p1];
                    for (size_t x = 0; x < dji; ++x) {
                        if (a[x].is_zero()) continue;
                        for (size_t y = 0; y < dji; ++y)
                            if (!b[y].is_zero()) expect[x * dji + y] += c * a[x] * b[y];
                    }
                }
                if (!vec_eq(ds, expect)) {
                    fail("antipode anti-comultiplicativity fails for pair (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
                    break;
                }
            }
            if (is_symmetric(objects[i]) && is_symmetric(objects[j])) {
                bool ok = true;
                for (size_t p = 0; p < dij && ok; ++p) {
                    Vec round = apply_cols(s[j][i], s[i][j][p], k, dij);
                    Vec e(dij, k->zero());
                    e[p] = k->one();
                    ok = vec_eq(round, e);
                }
                if (!ok)
                    fail("s_{ji} s_{ij} != Id for symmetric pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
            }
        }

    return rep;
}

// ---------------------------------------------------------------------------
// gamma / pi duality
// ---------------------------------------------------------------------------

DualityReport gamma_pi_factorization_check(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                                           const GBOptions& opts) {
    DualityReport rep;
    const FieldCtxPtr& k = A.field();
    auto fail = [&](const std::string& w) { rep.failures.push_back(w); };

    auto pairAB = build_comeasure_pair(A.carrier(), B.carrier(), opts);
    auto pairBA = build_comeasure_pair(B.carrier(), A.carrier(), opts);
    if (!pairAB.is_finite() || !pairBA.is_finite()) throw NotFinite("duality check");
    DualCoalgebra CAB = dual_coalgebra(std::make_shared<const QuotientAlgebra>(pairAB.quotient()));
    DualCoalgebra CBA = dual_coalgebra(std::make_shared<const QuotientAlgebra>(pairBA.quotient()));
    rep.dim_AB = CAB.dim();

    auto DA = dual_frobenius(A);
    auto DB = dual_frobenius(B);
    auto pairDD = build_comeasure_pair(DA.dual.carrier(), DB.dual.carrier(), opts);
    if (!pairDD.is_finite()) throw NotFinite("dual-pair quotient");
    DualCoalgebra CDD = dual_coalgebra(std::make_shared<const QuotientAlgebra>(pairDD.quotient()));
    rep.dim_dual = CDD.dim();

    auto act = measuring_action(pairAB, std::make_shared<const DualCoalgebra>(CAB));
    size_t nA = A.dim(), nB = B.dim();
    size_t dAB = CAB.dim(), dBA = CBA.dim(), dDD = CDD.dim();

    // gamma: C(A->B) -> C(A*->B*) via the iota-conjugated measuring
    // psi*(w* ot f) = iota_B(psi(w* ot iota_A^{-1}(f))), read as a comeasuring
    // rho*: A* -> B* ot Q(A->B) and factored through the universal one.
    {
        TableComeasuring star;
        star.source = DA.dual.carrier();
        star.target = DB.dual.carrier();
        star.Q = pairAB.quotient().table;
        star.rho.assign(nA, std::vector<Vec>(nB, Vec(dAB, k->zero())));
        for (uint32_t alpha = 0; alpha < nA; ++alpha) {
            DenseTensor f_in_A = DA.iota_inv.apply(DA.dual.carrier()->basis_vector(alpha));
            for (size_t i = 0; i < dAB; ++i) {
                DenseTensor img(nB, k->zero());
                for (uint32_t a = 0; a < nA; ++a) {
                    if (f_in_A[a].is_zero()) continue;
                    for (uint32_t b = 0; b < nB; ++b) img[b] += f_in_A[a] * act.psi[i][a][b];
                }
                DenseTensor in_Bstar = DB.iota.apply(img);
                for (uint32_t mu = 0; mu < nB; ++mu) star.rho[alpha][mu][i] = in_Bstar[mu];
            }
        }
        if (!verify_comeasuring(star).empty())
            fail("iota-conjugated action is not a comeasuring");
        auto phi = factor_comeasuring(star, pairDD.univ);
        auto M = phi.matrix_on(pairDD.quotient());   // Q(A*->B*) basis -> Q(A->B)
        rep.gamma.assign(dAB, Vec(dDD, k->zero()));
        for (size_t j = 0; j < dDD; ++j)
            for (size_t i = 0; i < dAB; ++i) rep.gamma[i][j] = M[j][i];
    }

    // pi: C(A*->B*) -> C(B->A) via the evaluation pairing: the algebra map
    // Q(B->A) -> Q(A*->B*)^op sends x^{BA}_{alpha,mu} to the rho-coefficient
    // of the dual universal coaction.
    {
        AlgebraMapToQuotient phi;
        phi.domain = pairBA.univ.presentation;
        phi.codomain = pairDD.quotient().table;
        phi.opposite = true;
        phi.generator_images.assign(nA * nB, Vec(dDD, k->zero()));
        for (uint32_t alpha = 0; alpha < nA; ++alpha)
            for (uint32_t mu = 0; mu < nB; ++mu)
                phi.generator_images[pairBA.univ.gen_index(alpha, mu)] =
                    pairDD.rho_vec[alpha][mu];
        auto badrel = phi.failing_relations();
        if (!badrel.empty()) {
            fail("pairing map does not kill the relations of Q(B->A)");
            return rep;
        }
        auto M = phi.matrix_on(pairBA.quotient());   // Q(B->A) basis -> Q(A*->B*)
        rep.pi.assign(dDD, Vec(dBA, k->zero()));
        for (size_t j = 0; j < dBA; ++j)
            for (size_t i = 0; i < dDD; ++i) rep.pi[i][j] = M[j][i];
    }

    rep.antipode = antipode_dual(A, B, pairAB, pairBA);   // C(A->B) -> C(B->A)

    if (!rep.failures.empty()) return rep;

    auto check_coalgebra_map = [&](const Matrix& cols, const DualCoalgebra& dom,
                                   const DualCoalgebra& cod, bool cop, const std::string& name) {
        for (uint32_t p = 0; p < dom.dim(); ++p) {
            const Vec& img = cols[p];
            Vec lhs = cod.delta_apply(img);
            Vec rhs(cod.dim() * cod.dim(), k->zero());
            for (const auto& [p1, p2, c] : dom.delta[p]) {
                const Vec& a = cols[cop ? p2 : p1];
                const Vec& b = cols[cop ? p1 : p2];
                for (size_t x = 0; x < cod.dim(); ++x) {
                    if (a[x].is_zero()) continue;
                    for (size_t y = 0; y < cod.dim(); ++y)
                        if (!b[y].is_zero()) rhs[x * cod.dim() + y] += c * a[x] * b[y];
                }
            }
            if (!vec_eq(lhs, rhs)) {
                fail(name + " does not commute with the comultiplication");
                return;
            }
            if (!(cod.counit_apply(img) == dom.counit[p])) {
                fail(name + " does not preserve the counit");
                return;
            }
        }
    };
    check_coalgebra_map(rep.gamma, CAB, CDD, false, "gamma");
    check_coalgebra_map(rep.pi, CDD, CBA, true, "pi");

    if (dAB == dDD) {
        Matrix g_rows(dDD, Vec(dAB, k->zero()));
        for (size_t i = 0; i < dAB; ++i)
            for (size_t j = 0; j < dDD; ++j) g_rows[j][i] = rep.gamma[i][j];
        if (try_invert(g_rows, k).empty()) fail("gamma is singular");
    } else {
        fail("dim C(A->B) != dim C(A*->B*)");
    }
    if (dDD == dBA) {
        Matrix p_rows(dBA, Vec(dDD, k->zero()));
        for (size_t i = 0; i < dDD; ++i)
            for (size_t j = 0; j < dBA; ++j) p_rows[j][i] = rep.pi[i][j];
        if (try_invert(p_rows, k).empty()) fail("pi is singular");
    } else {
        fail("dim C(A*->B*) != dim C(B->A)");
    }

    for (size_t p = 0; p < dAB && rep.failures.empty(); ++p) {
        Vec via = apply_cols(rep.pi, rep.gamma[p], k, dBA);
        if (!vec_eq(via, rep.antipode[p])) fail("pi o gamma != antipode");
    }
    return rep;
}

} // namespace frobhopf
