#include "frobhopf/frobenius.hpp"

namespace frobhopf {

const Signature& frobenius_signature() {
    static Signature sig({{"mu", 2, 1}, {"eta", 0, 1}, {"delta", 1, 2}, {"nu", 1, 0}});
    return sig;
}

namespace {

DenseTensor op1(const OmegaAlgebra& a, const char* name, const DenseTensor& in) {
    return a.apply_op(name, in);
}

// tensor product of a k1-tensor and a k2-tensor over the same carrier
DenseTensor tensor_prod(const DenseTensor& x, const DenseTensor& y, size_t n, int k2) {
    uint64_t ysz = pow_u64(n, k2);
    DenseTensor out(x.size() * ysz, x.empty() ? Scalar() : x[0].ctx()->zero());
    for (uint64_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (uint64_t j = 0; j < ysz; ++j)
            if (!y[j].is_zero()) out[i * ysz + j] = x[i] * y[j];
    }
    return out;
}

// apply op to one tensor leg of a k-tensor: positions [pos, pos+src_arity)
DenseTensor apply_at(const OmegaAlgebra& a, const char* name, const DenseTensor& in,
                     int k, int pos) {
    int oi = a.signature().index_of(name);
    const OpSig& sg = a.signature().ops()[oi];
    size_t n = a.dim();
    int s = sg.source_arity, t = sg.target_arity;
    uint64_t left = pow_u64(n, pos);
    uint64_t mid_in = pow_u64(n, s);
    uint64_t right = pow_u64(n, k - pos - s);
    DenseTensor out(left * pow_u64(n, t) * right, a.field()->zero());
    for (uint64_t l = 0; l < left; ++l)
        for (uint64_t r = 0; r < right; ++r) {
            DenseTensor slice(mid_in, a.field()->zero());
            bool nonzero = false;
            for (uint64_t m = 0; m < mid_in; ++m) {
                const Scalar& v = in[(l * mid_in + m) * right + r];
                slice[m] = v;
                nonzero = nonzero || !v.is_zero();
            }
            if (!nonzero) continue;
            DenseTensor res = a.apply_op_index(oi, slice);
            for (uint64_t m = 0; m < res.size(); ++m)
                if (!res[m].is_zero()) {
                    uint64_t idx = (l * res.size() + m) * right + r;
                    out[idx] += res[m];
                }
        }
    return out;
}

bool tensors_equal(const DenseTensor& a, const DenseTensor& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

} // namespace

std::vector<AxiomViolation> validate_frobenius(const OmegaAlgebra& A) {
    if (!A.signature().same(frobenius_signature()))
        throw SignatureMismatch("carrier does not have the Frobenius signature");
    std::vector<AxiomViolation> bad;
    size_t n = A.dim();
    const FieldCtxPtr& k = A.field();

    DenseTensor one = op1(A, "eta", DenseTensor{k->one()});

    // associativity and units on basis pairs/triples
    for (uint32_t i = 0; i < n; ++i) {
        DenseTensor ei = A.basis_vector(i);
        DenseTensor left = op1(A, "mu", tensor_prod(one, ei, n, 1));
        DenseTensor right = op1(A, "mu", tensor_prod(ei, one, n, 1));
        if (!tensors_equal(left, ei)) bad.push_back({"unit-left", {i}});
        if (!tensors_equal(right, ei)) bad.push_back({"unit-right", {i}});
    }
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t l = 0; l < n; ++l) {
                DenseTensor t3(pow_u64(n, 3), k->zero());
                t3[(static_cast<uint64_t>(i) * n + j) * n + l] = k->one();
                DenseTensor lhs = op1(A, "mu", apply_at(A, "mu", t3, 3, 0));
                DenseTensor rhs = op1(A, "mu", apply_at(A, "mu", t3, 3, 1));
                if (!tensors_equal(lhs, rhs)) bad.push_back({"assoc", {i, j, l}});
            }

    // coassociativity / counit on basis elements
    for (uint32_t i = 0; i < n; ++i) {
        DenseTensor d = op1(A, "delta", A.basis_vector(i));
        DenseTensor lhs = apply_at(A, "delta", d, 2, 0);
        DenseTensor rhs = apply_at(A, "delta", d, 2, 1);
        if (!tensors_equal(lhs, rhs)) bad.push_back({"coassoc", {i}});
        DenseTensor cl = apply_at(A, "nu", d, 2, 0);   // (nu ot id)Delta
        DenseTensor cr = apply_at(A, "nu", d, 2, 1);   // (id ot nu)Delta
        if (!tensors_equal(cl, A.basis_vector(i))) bad.push_back({"counit-left", {i}});
        if (!tensors_equal(cr, A.basis_vector(i))) bad.push_back({"counit-right", {i}});
    }

    // Frobenius conditions: Delta mu = (id ot mu)(Delta ot id) = (mu ot id)(id ot Delta)
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            DenseTensor t2(pow_u64(n, 2), k->zero());
            t2[static_cast<uint64_t>(i) * n + j] = k->one();
            DenseTensor mid = op1(A, "delta", op1(A, "mu", t2));
            DenseTensor lhs = apply_at(A, "mu", apply_at(A, "delta", t2, 2, 0), 3, 1);
            DenseTensor rhs = apply_at(A, "mu", apply_at(A, "delta", t2, 2, 1), 3, 0);
            if (!tensors_equal(lhs, mid)) bad.push_back({"frobenius-left", {i, j}});
            if (!tensors_equal(rhs, mid)) bad.push_back({"frobenius-right", {i, j}});
        }

    // Casimir property e^1 ot e^2 a = a e^1 ot e^2 and counital identities
    DenseTensor cas = op1(A, "delta", one);
    for (uint32_t a = 0; a < n; ++a) {
        DenseTensor ea = A.basis_vector(a);
        // e^1 ot (e^2 a): multiply second leg on the right by a
        DenseTensor rightmul = apply_at(A, "mu", tensor_prod(cas, ea, n, 1), 3, 1);
        DenseTensor leftmul(pow_u64(n, 2), k->zero());
        {
            DenseTensor tmp = apply_at(A, "mu", tensor_prod(ea, cas, n, 2), 3, 0);
            leftmul = tmp;
        }
        if (!tensors_equal(rightmul, leftmul)) bad.push_back({"casimir", {a}});
    }
    {
        DenseTensor lhs = apply_at(A, "nu", cas, 2, 0);  // nu(e^1) e^2
        DenseTensor rhs = apply_at(A, "nu", cas, 2, 1);  // e^1 nu(e^2)
        if (!tensors_equal(lhs, one)) bad.push_back({"casimir-counit-left", {}});
        if (!tensors_equal(rhs, one)) bad.push_back({"casimir-counit-right", {}});
    }
    return bad;
}

bool casimir_is_symmetric(const OmegaAlgebra& A) {
    DenseTensor one = A.apply_op("eta", DenseTensor{A.field()->one()});
    DenseTensor cas = A.apply_op("delta", one);
    size_t n = A.dim();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (!(cas[static_cast<uint64_t>(i) * n + j] == cas[static_cast<uint64_t>(j) * n + i]))
                return false;
    return true;
}

FrobeniusAlgebra FrobeniusAlgebra::create(OmegaAlgebraPtr carrier) {
    auto bad = validate_frobenius(*carrier);
    if (!bad.empty()) {
        std::string msg = bad[0].axiom + " at (";
        for (size_t i = 0; i < bad[0].witness.size(); ++i)
            msg += (i ? "," : "") + std::to_string(bad[0].witness[i]);
        msg += "); " + std::to_string(bad.size()) + " violation(s) total";
        throw FrobeniusViolation(msg);
    }
    FrobeniusAlgebra f;
    f.carrier_ = std::move(carrier);
    const OmegaAlgebra& A = *f.carrier_;
    f.unit_ = A.apply_op("eta", DenseTensor{A.field()->one()});
    f.counit_.resize(A.dim(), A.field()->zero());
    for (uint32_t i = 0; i < A.dim(); ++i)
        f.counit_[i] = A.apply_op("nu", A.basis_vector(i))[0];
    DenseTensor cas = A.apply_op("delta", f.unit_);
    size_t n = A.dim();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            const Scalar& c = cas[static_cast<uint64_t>(i) * n + j];
            if (!c.is_zero()) f.casimir_.push_back({{i, j}, c});
        }
    return f;
}

DenseTensor FrobeniusAlgebra::multiply(const DenseTensor& a, const DenseTensor& b) const {
    return carrier_->apply_op("mu", tensor_prod(a, b, dim(), 1));
}

Scalar FrobeniusAlgebra::counit_of(const DenseTensor& a) const {
    Scalar s = field()->zero();
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) s += a[i] * counit_[i];
    return s;
}

FrobeniusAlgebra group_algebra(const FieldCtxPtr& ctx,
                               const std::vector<std::vector<uint32_t>>& cayley,
                               uint32_t unit_index,
                               const std::vector<uint32_t>& inverse) {
    size_t n = cayley.size();
    if (n == 0) throw NotAGroup("empty Cayley table");
    for (const auto& row : cayley)
        if (row.size() != n) throw NotAGroup("Cayley table is not square");
    for (const auto& row : cayley)
        for (uint32_t v : row)
            if (v >= n) throw NotAGroup("Cayley entry out of range");
    if (unit_index >= n || inverse.size() != n) throw NotAGroup("unit/inverse data malformed");
    for (uint32_t x = 0; x < n; ++x) {
        if (cayley[unit_index][x] != x || cayley[x][unit_index] != x)
            throw NotAGroup("unit law fails at " + std::to_string(x));
        if (cayley[x][inverse[x]] != unit_index || cayley[inverse[x]][x] != unit_index)
            throw NotAGroup("inverse law fails at " + std::to_string(x));
    }
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y)
            for (uint32_t z = 0; z < n; ++z)
                if (cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]])
                    throw NotAGroup("associativity fails at (" + std::to_string(x) + "," +
                                    std::to_string(y) + "," + std::to_string(z) + ")");

    std::vector<std::string> labels(n);
    for (uint32_t i = 0; i < n; ++i)
        labels[i] = i == unit_index ? "e" : "g" + std::to_string(i);
    auto alg = std::make_shared<OmegaAlgebra>(ctx, frobenius_signature(), labels);
    Scalar one = ctx->one();
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y)
            alg->set_constant("mu", {x, y}, {cayley[x][y]}, one);
    alg->set_constant("eta", {}, {unit_index}, one);
    // Delta(g) = sum_h g h^-1 ot h
    for (uint32_t g = 0; g < n; ++g)
        for (uint32_t h = 0; h < n; ++h)
            alg->set_constant("delta", {g}, {cayley[g][inverse[h]], h}, one);
    alg->set_constant("nu", {unit_index}, {}, one);
    return FrobeniusAlgebra::create(alg);
}

FrobeniusAlgebra cyclic_group_algebra(const FieldCtxPtr& ctx, uint32_t n) {
    if (n == 0) throw NotAGroup("cyclic group order must be positive");
    std::vector<std::vector<uint32_t>> cayley(n, std::vector<uint32_t>(n));
    std::vector<uint32_t> inv(n);
    for (uint32_t i = 0; i < n; ++i) {
        inv[i] = (n - i) % n;
        for (uint32_t j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
    }
    return group_algebra(ctx, cayley, 0, inv);
}

FrobeniusAlgebra klein_four_algebra(const FieldCtxPtr& ctx) {
    // C2 x C2, elements coded as bit pairs 0..3, product = xor
    std::vector<std::vector<uint32_t>> cayley(4, std::vector<uint32_t>(4));
    std::vector<uint32_t> inv(4);
    for (uint32_t i = 0; i < 4; ++i) {
        inv[i] = i;
        for (uint32_t j = 0; j < 4; ++j) cayley[i][j] = i ^ j;
    }
    return group_algebra(ctx, cayley, 0, inv);
}

FrobeniusAlgebra matrix_algebra(const FieldCtxPtr& ctx, uint32_t n) {
    if (n == 0) throw DimensionMismatch("matrix size must be positive");
    std::vector<std::string> labels;
    auto idx = [n](uint32_t i, uint32_t j) { return i * n + j; };
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    auto alg = std::make_shared<OmegaAlgebra>(ctx, frobenius_signature(), labels);
    Scalar one = ctx->one();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            for (uint32_t k = 0; k < n; ++k) {
                // E_ij E_jk = E_ik
                alg->set_constant("mu", {idx(i, j), idx(j, k)}, {idx(i, k)}, one);
                // Delta(E_ij) = sum_k E_ik ot E_kj
                alg->set_constant("delta", {idx(i, j)}, {idx(i, k), idx(k, j)}, one);
            }
            if (i == j) {
                alg->set_constant("eta", {}, {idx(i, i)}, one);
                alg->set_constant("nu", {idx(i, i)}, {}, one);
            }
        }
    return FrobeniusAlgebra::create(alg);
}

DualFrobenius dual_frobenius(const FrobeniusAlgebra& A) {
    const OmegaAlgebra& C = *A.carrier();
    size_t n = A.dim();
    const FieldCtxPtr& k = A.field();
    std::vector<std::string> labels;
    for (const auto& l : A.basis()) labels.push_back(l + "*");
    auto dual = std::make_shared<OmegaAlgebra>(k, frobenius_signature(), labels);

    // cache Delta on basis elements of A
    std::vector<DenseTensor> delta_of(n);
    for (uint32_t i = 0; i < n; ++i) delta_of[i] = C.apply_op("delta", C.basis_vector(i));

    // (a_i* . a_j*)(a_l) = a_i*(a_l^(2)) a_j*(a_l^(1)) = Delta(a_l)[j][i]
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t l = 0; l < n; ++l) {
                const Scalar& c = delta_of[l][static_cast<uint64_t>(j) * n + i];
                if (!c.is_zero()) dual->set_constant("mu", {i, j}, {l}, c);
            }
    // unit of A* is nu_A
    for (uint32_t i = 0; i < n; ++i)
        if (!A.counit()[i].is_zero()) dual->set_constant("eta", {}, {i}, A.counit()[i]);
    // Delta(a_i*)(a_p ot a_q) = a_i*(a_q a_p)
    for (uint32_t p = 0; p < n; ++p)
        for (uint32_t q = 0; q < n; ++q) {
            DenseTensor prod = A.multiply(C.basis_vector(q), C.basis_vector(p));
            for (uint32_t i = 0; i < n; ++i)
                if (!prod[i].is_zero()) dual->set_constant("delta", {i}, {p, q}, prod[i]);
        }
    // nu_{A*}(a_i*) = a_i*(1)
    for (uint32_t i = 0; i < n; ++i)
        if (!A.unit()[i].is_zero()) dual->set_constant("nu", {i}, {}, A.unit()[i]);

    DualFrobenius out{FrobeniusAlgebra::create(dual), {}, {}};

    // iota(a)(b) = nu(ab): column a, row b
    LinearMap iota = LinearMap::zero(A.carrier(), out.dual.carrier());
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = 0; b < n; ++b) {
            DenseTensor prod = A.multiply(C.basis_vector(a), C.basis_vector(b));
            iota.m[b][a] = A.counit_of(prod);
        }
    }
    // iota_inv(f) = f(e^1) e^2
    LinearMap iota_inv = LinearMap::zero(out.dual.carrier(), A.carrier());
    for (const auto& [pq, c] : A.casimir()) {
        // f = a_j*: contributes c * delta_{j, p} * a_q
        iota_inv.m[pq.second][pq.first] += c;
    }
    out.iota = std::move(iota);
    out.iota_inv = std::move(iota_inv);
    return out;
}

bool is_symmetric(const FrobeniusAlgebra& A) { return casimir_is_symmetric(*A.carrier()); }

LinearMap invert_frobenius_morphism(const LinearMap& h,
                                    const FrobeniusAlgebra& A,
                                    const FrobeniusAlgebra& B) {
    auto bad = check_omega_morphism(h);
    if (!bad.empty())
        throw NotAFrobeniusMorphism("intertwining fails for op " + bad[0].op);
    size_t nA = A.dim();
    LinearMap g = LinearMap::zero(B.carrier(), A.carrier());
    // g(b) = e^1 nu_B(h(e^2) b)
    for (uint32_t b = 0; b < B.dim(); ++b) {
        DenseTensor gb(nA, A.field()->zero());
        for (const auto& [pq, c] : A.casimir()) {
            DenseTensor he2 = h.apply(A.carrier()->basis_vector(pq.second));
            DenseTensor prod = B.multiply(he2, B.carrier()->basis_vector(b));
            gb[pq.first] += c * B.counit_of(prod);
        }
        for (uint32_t r = 0; r < nA; ++r) g.m[r][b] = gb[r];
    }
    LinearMap gh = g.compose_after(h);
    LinearMap hg = h.compose_after(g);
    if (!gh.equals(LinearMap::identity(A.carrier())) ||
        !hg.equals(LinearMap::identity(B.carrier())))
        throw EngineError(ErrorKind::Internal, "canonical inverse failed to invert");
    return g;
}

} // namespace frobhopf
