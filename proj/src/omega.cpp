#include "frobhopf/omega.hpp"

#include <algorithm>

namespace frobhopf {

Signature::Signature(std::vector<OpSig> ops) : ops_(std::move(ops)) {
    for (size_t i = 0; i < ops_.size(); ++i) {
        if (ops_[i].source_arity < 0 || ops_[i].source_arity > 4 ||
            ops_[i].target_arity < 0 || ops_[i].target_arity > 4)
            throw SignatureMismatch("arity out of range for op " + ops_[i].name);
        for (size_t j = i + 1; j < ops_.size(); ++j)
            if (ops_[i].name == ops_[j].name)
                throw SignatureMismatch("duplicate op name " + ops_[i].name);
    }
}

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].name == name) return static_cast<int>(i);
    throw UnknownOp(name);
}

bool Signature::same(const Signature& o) const {
    if (ops_.size() != o.ops_.size()) return false;
    for (size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].name != o.ops_[i].name ||
            ops_[i].source_arity != o.ops_[i].source_arity ||
            ops_[i].target_arity != o.ops_[i].target_arity)
            return false;
    return true;
}

uint64_t flatten_index(const std::vector<uint32_t>& idx, size_t n) {
    uint64_t f = 0;
    for (uint32_t v : idx) {
        if (v >= n) throw DimensionMismatch("basis index out of range");
        f = f * n + v;
    }
    return f;
}

std::vector<uint32_t> unflatten_index(uint64_t flat, size_t n, int arity) {
    std::vector<uint32_t> idx(arity, 0);
    for (int k = arity; k-- > 0;) {
        idx[k] = static_cast<uint32_t>(flat % n);
        flat /= n;
    }
    return idx;
}

uint64_t pow_u64(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void SparseTensor::add(uint64_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const auto& e, uint64_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, {idx, c});
    }
}

OmegaAlgebra::OmegaAlgebra(FieldCtxPtr field, Signature sig, std::vector<std::string> basis)
    : field_(std::move(field)), sig_(std::move(sig)), basis_(std::move(basis)) {
    if (basis_.empty()) throw DimensionMismatch("carrier must have dimension >= 1");
    tables_.resize(sig_.ops().size());
}

void OmegaAlgebra::set_constant(const std::string& op, const std::vector<uint32_t>& src,
                                const std::vector<uint32_t>& dst, const Scalar& c) {
    int oi = sig_.index_of(op);
    const OpSig& sg = sig_.ops()[oi];
    if (static_cast<int>(src.size()) != sg.source_arity ||
        static_cast<int>(dst.size()) != sg.target_arity)
        throw DimensionMismatch("multi-index arity for op " + op);
    if (!c.ctx()->same(*field_)) throw ContextMismatch("structure constant field");
    if (c.is_zero()) return;
    tables_[oi][flatten_index(src, dim())].add(flatten_index(dst, dim()), c);
}

const SparseTensor* OmegaAlgebra::table_row(int op_index, uint64_t src_flat) const {
    auto it = tables_[op_index].find(src_flat);
    return it == tables_[op_index].end() ? nullptr : &it->second;
}

DenseTensor OmegaAlgebra::apply_op(const std::string& op, const DenseTensor& input) const {
    return apply_op_index(sig_.index_of(op), input);
}

DenseTensor OmegaAlgebra::apply_op_index(int oi, const DenseTensor& input) const {
    const OpSig& sg = sig_.ops()[oi];
    size_t n = dim();
    if (input.size() != pow_u64(n, sg.source_arity))
        throw DimensionMismatch("input tensor size for op " + sg.name);
    DenseTensor out(pow_u64(n, sg.target_arity), field_->zero());
    for (const auto& [src, row] : tables_[oi]) {
        const Scalar& x = input[src];
        if (x.is_zero()) continue;
        for (const auto& [dst, c] : row.entries()) out[dst] += x * c;
    }
    return out;
}

DenseTensor OmegaAlgebra::basis_vector(uint32_t i) const {
    DenseTensor v(dim(), field_->zero());
    v.at(i) = field_->one();
    return v;
}

LinearMap LinearMap::zero(OmegaAlgebraPtr dom, OmegaAlgebraPtr cod) {
    LinearMap f;
    f.m.assign(cod->dim(), std::vector<Scalar>(dom->dim(), dom->field()->zero()));
    f.domain = std::move(dom);
    f.codomain = std::move(cod);
    return f;
}

LinearMap LinearMap::identity(OmegaAlgebraPtr alg) {
    LinearMap f = zero(alg, alg);
    for (size_t i = 0; i < alg->dim(); ++i) f.m[i][i] = alg->field()->one();
    return f;
}

DenseTensor LinearMap::apply(const DenseTensor& v) const {
    if (v.size() != domain->dim()) throw DimensionMismatch("linear map input");
    DenseTensor out(codomain->dim(), codomain->field()->zero());
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero() && !m[r][c].is_zero()) out[r] += m[r][c] * v[c];
    return out;
}

DenseTensor LinearMap::apply_power(const DenseTensor& v, int k) const {
    size_t n = domain->dim(), mdim = codomain->dim();
    if (v.size() != pow_u64(n, k)) throw DimensionMismatch("tensor power input");
    if (k == 0) return v;
    DenseTensor out(pow_u64(mdim, k), codomain->field()->zero());
    for (uint64_t src = 0; src < v.size(); ++src) {
        if (v[src].is_zero()) continue;
        auto sidx = unflatten_index(src, n, k);
        // expand f(e_{s1}) ot ... ot f(e_{sk}) sparsely
        std::vector<std::pair<uint64_t, Scalar>> acc = {{0, v[src]}};
        for (int leg = 0; leg < k; ++leg) {
            std::vector<std::pair<uint64_t, Scalar>> next;
            for (const auto& [flat, coef] : acc)
                for (size_t r = 0; r < mdim; ++r) {
                    const Scalar& e = m[r][sidx[leg]];
                    if (e.is_zero()) continue;
                    next.emplace_back(flat * mdim + r, coef * e);
                }
            acc = std::move(next);
        }
        for (const auto& [flat, coef] : acc) out[flat] += coef;
    }
    return out;
}

LinearMap LinearMap::compose_after(const LinearMap& inner) const {
    if (!inner.codomain->field()->same(*domain->field()) ||
        inner.codomain->dim() != domain->dim())
        throw DimensionMismatch("composition");
    LinearMap r = zero(inner.domain, codomain);
    for (size_t i = 0; i < codomain->dim(); ++i)
        for (size_t j = 0; j < inner.domain->dim(); ++j) {
            Scalar s = domain->field()->zero();
            for (size_t k = 0; k < domain->dim(); ++k) s += m[i][k] * inner.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

bool LinearMap::equals(const LinearMap& o) const {
    if (m.size() != o.m.size()) return false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != o.m[i].size()) return false;
        for (size_t j = 0; j < m[i].size(); ++j)
            if (!(m[i][j] == o.m[i][j])) return false;
    }
    return true;
}

std::vector<MorphismViolation> check_omega_morphism(const LinearMap& f) {
    const OmegaAlgebra& A = *f.domain;
    const OmegaAlgebra& B = *f.codomain;
    if (!A.signature().same(B.signature()))
        throw SignatureMismatch("morphism endpoints carry different signatures");
    std::vector<MorphismViolation> bad;
    size_t n = A.dim();
    for (size_t oi = 0; oi < A.signature().ops().size(); ++oi) {
        const OpSig& sg = A.signature().ops()[oi];
        uint64_t srcs = pow_u64(n, sg.source_arity);
        for (uint64_t src = 0; src < srcs; ++src) {
            DenseTensor e(srcs, A.field()->zero());
            e[src] = A.field()->one();
            DenseTensor lhs = f.apply_power(A.apply_op_index(static_cast<int>(oi), e),
                                            sg.target_arity);
            DenseTensor rhs = B.apply_op_index(static_cast<int>(oi),
                                               f.apply_power(e, sg.source_arity));
            if (lhs != rhs)
                bad.push_back({sg.name, unflatten_index(src, n, sg.source_arity)});
        }
    }
    return bad;
}

} // namespace frobhopf
