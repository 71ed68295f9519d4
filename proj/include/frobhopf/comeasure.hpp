#pragma once

#include <optional>

#include "frobhopf/frobenius.hpp"
#include "frobhopf/ncgb.hpp"

namespace frobhopf {

/// Coordinates over the basis of a TableAlgebra.
using Vec = std::vector<Scalar>;

/// Finite-dimensional associative algebra with explicit structure tables.
/// Dimension 0 (the zero algebra of a trivial quotient) is allowed.
class TableAlgebra {
public:
    TableAlgebra(FieldCtxPtr field, std::vector<std::string> labels,
                 std::vector<std::vector<Vec>> mult, Vec unit);
    static std::shared_ptr<const TableAlgebra> field_algebra(const FieldCtxPtr& k);
    static std::shared_ptr<const TableAlgebra> tensor(const std::shared_ptr<const TableAlgebra>& x,
                                                      const std::shared_ptr<const TableAlgebra>& y);

    const FieldCtxPtr& field() const { return field_; }
    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const Vec& product(size_t i, size_t j) const { return mult_[i][j]; }

    Vec zero_vec() const { return Vec(dim(), field_->zero()); }
    Vec multiply(const Vec& a, const Vec& b) const;
    bool is_zero_vec(const Vec& v) const;

private:
    FieldCtxPtr field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> mult_;
    Vec unit_;
};

/// Finite quotient of a presentation: completed GB, normal-word basis and the
/// induced multiplication table.
struct QuotientAlgebra {
    std::shared_ptr<const GBState> gb;
    QuotientBasis basis;
    std::shared_ptr<const TableAlgebra> table;

    size_t dim() const { return basis.words.size(); }
    size_t index_of_word(const Word& w) const;           // throws if not a basis word
    Vec coords_of(const NCPoly& normal_form) const;
};

QuotientAlgebra make_quotient_algebra(std::shared_ptr<const GBState> gb);

/// Universal comeasuring presentation for rho: A -> B ot Q, generators
/// x_{beta,alpha} indexed target-major: gen = beta * dim(A) + alpha.
struct UniversalComeasuring {
    OmegaAlgebraPtr source;   // A
    OmegaAlgebraPtr target;   // B
    std::shared_ptr<const Presentation> presentation;
    size_t gen_index(uint32_t beta, uint32_t alpha) const {
        return static_cast<size_t>(beta) * source->dim() + alpha;
    }
};

UniversalComeasuring build_universal_comeasuring(OmegaAlgebraPtr A, OmegaAlgebraPtr B);

/// Everything the rest of the pipeline needs about one ordered pair (A -> B):
/// the presentation, its completion, and (when finite) the quotient algebra
/// plus the coaction in normal form / coordinates.
struct ComeasurePair {
    UniversalComeasuring univ;
    std::shared_ptr<const GBState> gb;
    std::vector<std::vector<NCPoly>> rho_nf;   // [alpha][beta], normal forms
    std::optional<QuotientAlgebra> finite;
    std::vector<std::vector<Vec>> rho_vec;     // [alpha][beta], set when finite

    GBStatus status() const { return gb->status(); }
    bool is_finite() const { return finite.has_value(); }
    const QuotientAlgebra& quotient() const;   // throws NotFinite
};

ComeasurePair build_comeasure_pair(OmegaAlgebraPtr A, OmegaAlgebraPtr B,
                                   const GBOptions& opts = {});

struct ComeasViolation {
    std::string op;
    std::vector<uint32_t> source_index;
    std::vector<uint32_t> target_index;
};

/// Comeasuring with a concrete finite algebra Q.
struct TableComeasuring {
    OmegaAlgebraPtr source, target;
    std::shared_ptr<const TableAlgebra> Q;
    std::vector<std::vector<Vec>> rho;   // [alpha][beta] in Q-coordinates
};

/// Axiom check rho^t(omega_A(a)) = (omega_B ot Q)(rho^s(a)) on every basis
/// multi-index, comparing normal forms in the presented quotient.
std::vector<ComeasViolation> verify_comeasuring(const OmegaAlgebra& A, const OmegaAlgebra& B,
                                                const std::vector<std::vector<NCPoly>>& rho,
                                                const GBState& gb);
std::vector<ComeasViolation> verify_comeasuring(const TableComeasuring& cm);

/// The trivial comeasuring (Q = k) attached to an Omega-morphism f: A -> B.
TableComeasuring comeasuring_from_morphism(const LinearMap& f);

/// Algebra map from a presentation into a finite algebra, given by generator
/// images; `opposite` reverses the codomain multiplication order.
struct AlgebraMapToQuotient {
    std::shared_ptr<const Presentation> domain;
    std::shared_ptr<const TableAlgebra> codomain;
    std::vector<Vec> generator_images;
    bool opposite = false;

    Vec eval_word(const Word& w) const;
    Vec eval_poly(const NCPoly& p) const;
    /// Relations of the domain that do not vanish.
    std::vector<size_t> failing_relations() const;
    /// Linear extension on a finite quotient basis of the domain,
    /// codomain-dim x domain-dim.
    std::vector<Vec> matrix_on(const QuotientAlgebra& domain_quotient) const;
};

/// d: Q(A->C) -> Q(B->C) ot Q(A->B), generator x^{AC}_{c,a} |->
/// sum_b x^{BC}_{c,b} ot x^{AB}_{b,a}; the leg order matches
/// (rho_{BC} ot Id) rho_{AB}. Requires all three quotients finite.
AlgebraMapToQuotient comeasuring_d(const ComeasurePair& pairAC,
                                   const ComeasurePair& pairBC,
                                   const ComeasurePair& pairAB);

/// e: Q(A->A) -> k, e(x_{mu,alpha}) = delta; verified to kill all relations.
AlgebraMapToQuotient comeasuring_counit(const ComeasurePair& pairAA);

/// S: Q(B->A) -> Q(A->B)^op read off the Casimir-twisted coaction
/// rho-bar(b) = e^1 nu_B(e^{2[0]} b) ot e^{2[1]}.
AlgebraMapToQuotient antipode_S(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                                const ComeasurePair& pairBA, const ComeasurePair& pairAB);

/// S': same typing, from rho'(b) = e^2 nu_B(b e^{1[0]}) ot e^{1[1]};
/// two-sided inverse of S.
AlgebraMapToQuotient antipode_S_inverse(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B,
                                        const ComeasurePair& pairBA, const ComeasurePair& pairAB);

/// Unique factorization phi: universal presentation -> Q with
/// (B ot phi) rho_univ = rho_cm; throws RelationNotKilled on invalid input.
AlgebraMapToQuotient factor_comeasuring(const TableComeasuring& cm,
                                        const UniversalComeasuring& univ);

struct BuilderSpec {
    enum class Kind { Group, Matrix } kind;
    uint64_t n = 1;   // |G| or matrix size
};
enum class TrivialityVerdict { Trivial, Unknown };

/// Arithmetic triviality conditions for group/matrix pairs; independent of
/// any Groebner computation.
TrivialityVerdict triviality_oracle(const BuilderSpec& a, const BuilderSpec& b,
                                    uint64_t characteristic);

/// Same basis, embedded structure constants; validates against the carrier's
/// signature-independent invariants by construction.
OmegaAlgebraPtr extend_scalars(const OmegaAlgebra& alg, const FieldCtxPtr& new_ctx);

} // namespace frobhopf
