#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frobhopf/scalar.hpp"

namespace frobhopf {

/// Operation symbol with source/target tensor arities (both <= 4).
struct OpSig {
    std::string name;
    int source_arity = 0;
    int target_arity = 0;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<OpSig> ops);
    const std::vector<OpSig>& ops() const { return ops_; }
    int index_of(const std::string& name) const;  // throws UnknownOp
    bool same(const Signature& o) const;

private:
    std::vector<OpSig> ops_;
};

/// Multi-indices (alpha_1..alpha_s) are flattened row-major:
/// flat = ((alpha_1 * n + alpha_2) * n + ...) so that alpha_1 varies slowest.
uint64_t flatten_index(const std::vector<uint32_t>& idx, size_t n);
std::vector<uint32_t> unflatten_index(uint64_t flat, size_t n, int arity);
uint64_t pow_u64(uint64_t b, int e);

/// Sparse vector over a flattened multi-index space; entries sorted, nonzero.
class SparseTensor {
public:
    SparseTensor() = default;
    void add(uint64_t idx, const Scalar& c);
    const std::vector<std::pair<uint64_t, Scalar>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<std::pair<uint64_t, Scalar>> entries_;
};

/// Dense coefficient vector over a flattened multi-index space.
using DenseTensor = std::vector<Scalar>;

class OmegaAlgebra;
using OmegaAlgebraPtr = std::shared_ptr<const OmegaAlgebra>;

/// Finite-dimensional Omega-algebra: labeled basis plus one sparse
/// structure-constant table per operation. Immutable once built.
class OmegaAlgebra {
public:
    OmegaAlgebra(FieldCtxPtr field, Signature sig, std::vector<std::string> basis);

    /// c = coefficient of the target multi-index `dst` in omega(e_src).
    void set_constant(const std::string& op, const std::vector<uint32_t>& src,
                      const std::vector<uint32_t>& dst, const Scalar& c);

    const FieldCtxPtr& field() const { return field_; }
    const Signature& signature() const { return sig_; }
    const std::vector<std::string>& basis() const { return basis_; }
    size_t dim() const { return basis_.size(); }

    const std::map<uint64_t, SparseTensor>& table(int op_index) const { return tables_[op_index]; }
    const SparseTensor* table_row(int op_index, uint64_t src_flat) const;

    DenseTensor apply_op(const std::string& op, const DenseTensor& input) const;
    DenseTensor apply_op_index(int op_index, const DenseTensor& input) const;

    /// Basis vector as a dense tensor of arity 1.
    DenseTensor basis_vector(uint32_t i) const;

private:
    FieldCtxPtr field_;
    Signature sig_;
    std::vector<std::string> basis_;
    std::vector<std::map<uint64_t, SparseTensor>> tables_;
};

/// Matrix of a linear map between two algebras' carriers, codomain x domain.
struct LinearMap {
    OmegaAlgebraPtr domain;
    OmegaAlgebraPtr codomain;
    std::vector<std::vector<Scalar>> m;  // m[row over codomain][col over domain]

    static LinearMap zero(OmegaAlgebraPtr dom, OmegaAlgebraPtr cod);
    static LinearMap identity(OmegaAlgebraPtr alg);
    DenseTensor apply(const DenseTensor& v) const;
    /// Kronecker power applied to an arity-k dense tensor over the domain.
    DenseTensor apply_power(const DenseTensor& v, int k) const;
    LinearMap compose_after(const LinearMap& inner) const;  // this o inner
    bool equals(const LinearMap& o) const;
};

struct MorphismViolation {
    std::string op;
    std::vector<uint32_t> source_index;
};

/// Checks f^{ot} o omega_A = omega_B o f^{os} on every basis multi-index.
std::vector<MorphismViolation> check_omega_morphism(const LinearMap& f);

} // namespace frobhopf
