#pragma once

#include "frobhopf/omega.hpp"

namespace frobhopf {

/// The fixed Frobenius signature: mu (2->1), eta (0->1), delta (1->2), nu (1->0).
const Signature& frobenius_signature();

struct AxiomViolation {
    std::string axiom;                  // "assoc", "unit", "coassoc", "counit", "frobenius", ...
    std::vector<uint32_t> witness;      // basis indices where it fails
};

/// Full validation of a carrier with the Frobenius signature: associativity,
/// unit, coassociativity, counit, both Frobenius conditions, the Casimir
/// property and the counital Casimir identities. Coassociativity is checked
/// independently of associativity even though one can be deduced from the
/// other for honest Frobenius data.
std::vector<AxiomViolation> validate_frobenius(const OmegaAlgebra& carrier);

/// Transpose test on Delta(1); meaningful for validated carriers but callable
/// on raw ones (used by the twisted test fixtures).
bool casimir_is_symmetric(const OmegaAlgebra& carrier);

class FrobeniusAlgebra {
public:
    /// Validates eagerly; throws FrobeniusViolation with the first witnesses.
    static FrobeniusAlgebra create(OmegaAlgebraPtr carrier);

    const OmegaAlgebraPtr& carrier() const { return carrier_; }
    const FieldCtxPtr& field() const { return carrier_->field(); }
    size_t dim() const { return carrier_->dim(); }
    const std::vector<std::string>& basis() const { return carrier_->basis(); }

    const DenseTensor& unit() const { return unit_; }
    const DenseTensor& counit() const { return counit_; }
    /// Casimir element Delta(1) as sparse entries ((i,j), c) for e = sum c a_i ot a_j.
    const std::vector<std::pair<std::pair<uint32_t, uint32_t>, Scalar>>& casimir() const {
        return casimir_;
    }

    DenseTensor multiply(const DenseTensor& a, const DenseTensor& b) const;
    Scalar counit_of(const DenseTensor& a) const;

private:
    OmegaAlgebraPtr carrier_;
    DenseTensor unit_, counit_;
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, Scalar>> casimir_;
};

/// Group algebra k[G] from a Cayley table (table[x][y] = index of xy),
/// with Delta(g) = sum_h g h^-1 ot h and nu = delta_{e}. Group axioms are
/// re-verified even though unit/inverses are supplied.
FrobeniusAlgebra group_algebra(const FieldCtxPtr& ctx,
                               const std::vector<std::vector<uint32_t>>& cayley,
                               uint32_t unit_index,
                               const std::vector<uint32_t>& inverse);

FrobeniusAlgebra cyclic_group_algebra(const FieldCtxPtr& ctx, uint32_t n);
FrobeniusAlgebra klein_four_algebra(const FieldCtxPtr& ctx);

/// M_n(k) on the basis E_ij with nu = trace.
FrobeniusAlgebra matrix_algebra(const FieldCtxPtr& ctx, uint32_t n);

struct DualFrobenius {
    FrobeniusAlgebra dual;   // A* with (f.g)(a) = f(a^(2)) g(a^(1)), 1 = nu
    LinearMap iota;          // A -> A*, a |-> nu(a-)
    LinearMap iota_inv;      // A* -> A, f |-> f(e^1) e^2
};
DualFrobenius dual_frobenius(const FrobeniusAlgebra& A);

bool is_symmetric(const FrobeniusAlgebra& A);

/// Canonical inverse g(b) = e^1 nu_B(h(e^2) b); verifies h is a Frobenius
/// morphism first and that the result inverts h on both sides.
LinearMap invert_frobenius_morphism(const LinearMap& h,
                                    const FrobeniusAlgebra& A,
                                    const FrobeniusAlgebra& B);

} // namespace frobhopf
