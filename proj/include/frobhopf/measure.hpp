#pragma once

#include "frobhopf/comeasure.hpp"
#include "frobhopf/linalg.hpp"

namespace frobhopf {

/// Linear dual of a finite quotient algebra: comultiplication table
/// Delta(w_i*) = sum c^i_{jk} w_j* ot w_k* with c^i_{jk} = coefficient of w_i
/// in w_j w_k, counit = coefficients of 1. Coassociativity and counitality
/// are re-verified at construction.
struct DualCoalgebra {
    std::shared_ptr<const QuotientAlgebra> Q;
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, Scalar>>> delta;
    std::vector<Scalar> counit;

    size_t dim() const { return counit.size(); }
    const FieldCtxPtr& field() const { return Q->gb->presentation().field; }
    /// Delta applied to a coefficient vector, dense over dim x dim.
    Vec delta_apply(const Vec& v) const;
    Scalar counit_apply(const Vec& v) const;
    /// Iterated comultiplication of a basis functional: list of
    /// (index tuple of length m, coefficient).
    std::vector<std::pair<std::vector<uint32_t>, Scalar>> delta_power(uint32_t i, int m) const;
};

DualCoalgebra dual_coalgebra(std::shared_ptr<const QuotientAlgebra> Q);

/// psi[i][alpha] = psi(w_i* ot a_alpha) in B-coordinates, read off the
/// coaction: psi(f ot a) = (B ot f) rho(a).
struct MeasuringAction {
    std::shared_ptr<const DualCoalgebra> C;
    OmegaAlgebraPtr source, target;   // A, B
    std::vector<std::vector<DenseTensor>> psi;

    /// Induced linear map A -> B of a functional vector.
    LinearMap induced_map(const Vec& v) const;
};

MeasuringAction measuring_action(const ComeasurePair& pair,
                                 std::shared_ptr<const DualCoalgebra> C);

struct MeasViolation {
    std::string op;
    uint32_t functional;                 // C-basis index
    std::vector<uint32_t> source_index;  // A-basis multi-index
};

/// p(omega_A(a)) = omega_B(p(a)) on every C-basis functional and A-basis
/// multi-index, with p(a_1 ot ... ot a_m) expanded through iterated Delta.
std::vector<MeasViolation> verify_measuring(const MeasuringAction& act);

bool is_grouplike(const DualCoalgebra& C, const Vec& v);
/// All grouplikes by exhaustive enumeration over a finite field;
/// BudgetExceeded if |k|^dim > budget. Deterministic lexicographic order.
std::vector<Vec> grouplikes_enumerate(const DualCoalgebra& C, uint64_t budget = 10000000);
/// Over Q (or anywhere): filter supplied candidates.
std::vector<Vec> grouplikes_verify(const DualCoalgebra& C, const std::vector<Vec>& candidates);

/// Basis of {x : Delta x = g ot x + x ot h} for grouplike g, h.
std::vector<Vec> primitives(const DualCoalgebra& C, const Vec& g, const Vec& h);

/// m: C(B->C) ot C(A->B) -> C(A->C) as the transpose of comeasuring_d;
/// result[i][j] = m(u_i* ot v_j*) in C(A->C)-coordinates.
std::vector<std::vector<Vec>> compose_m(const ComeasurePair& pairAC,
                                        const ComeasurePair& pairBC,
                                        const ComeasurePair& pairAB);

/// j in C(A->A): the counit character e as a functional vector.
Vec unit_j(const ComeasurePair& pairAA);

/// s: C(B->A) -> C(A->B), transpose of the opcategory antipode
/// Q(A->B) -> Q(B->A)^op. Columns indexed by C(B->A)-basis.
Matrix antipode_dual(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                     const ComeasurePair& pairAB, const ComeasurePair& pairBA);

struct HopfCheckReport {
    std::vector<std::string> failures;
    std::vector<std::vector<size_t>> hom_dims;          // dim C(i->j)
    std::vector<Vec> units;                             // j_i in C(i->i)
    std::vector<std::vector<Matrix>> antipodes;         // s[i][j]: C(i->j) -> C(j->i)
    /// m[i][j][l][u][v] = m(u-th of C(j->l), v-th of C(i->j)) in C(i->l).
    std::vector<std::vector<std::vector<std::vector<std::vector<Vec>>>>> compositions;
    /// grouplike inventories per pair when the field admits enumeration
    /// within the default budget; empty otherwise.
    std::vector<std::vector<std::vector<Vec>>> grouplikes;
    bool pass() const { return failures.empty(); }
};

/// Full Hopf-category axiom suite over the universal measuring coalgebras of
/// a finite object class: enriched associativity/unitality, m and j are
/// coalgebra maps, both antipode convolution identities, antipode
/// anti-(co)multiplicativity, and s o s = Id for symmetric objects.
HopfCheckReport hopf_category_check(const std::vector<FrobeniusAlgebra>& objects,
                                    const GBOptions& opts = {});

struct DualityReport {
    std::vector<std::string> failures;
    size_t dim_AB = 0;       // dim C(A->B)
    size_t dim_dual = 0;     // dim C(A*->B*)
    Matrix gamma;            // C(A->B) -> C(A*->B*)
    Matrix pi;               // C(A*->B*) -> C(B->A)
    Matrix antipode;         // s: C(A->B) -> C(B->A)
    bool pass() const { return failures.empty(); }
};

/// gamma via the iota-conjugated measuring, pi via the evaluation pairing;
/// verifies both are invertible coalgebra maps and that pi o gamma equals the
/// antipode matrix exactly.
DualityReport gamma_pi_factorization_check(const FrobeniusAlgebra& A,
                                           const FrobeniusAlgebra& B,
                                           const GBOptions& opts = {});

} // namespace frobhopf
