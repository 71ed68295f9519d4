#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobhopf/scalar.hpp"

namespace frobhopf {

/// Monomial in the free algebra: a sequence of generator indices; empty = 1.
using Word = std::vector<uint32_t>;

/// Degree-lexicographic order: compare total degree first, then generator
/// indices left to right. Degree-compatible, so truncated completion is sound.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sparse noncommutative polynomial; terms kept sorted descending in deglex,
/// no zero coefficients.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(FieldCtxPtr field) : field_(std::move(field)) {}
    static NCPoly constant(const FieldCtxPtr& field, const Scalar& c);
    static NCPoly monomial(const FieldCtxPtr& field, Word w, const Scalar& c);

    const FieldCtxPtr& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }
    const Word& leading_word() const { return terms_.front().first; }
    const Scalar& leading_coeff() const { return terms_.front().second; }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.size()); }

    void add_term(const Word& w, const Scalar& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly scaled(const Scalar& c) const;
    NCPoly monic() const;
    /// u * this * v with word concatenation.
    NCPoly conjugated(const Word& u, const Word& v) const;
    /// Free-algebra product.
    NCPoly times(const NCPoly& o) const;
    /// Multiply denominators away over Q (no-op elsewhere).
    NCPoly integralized() const;
    Scalar coeff_of(const Word& w) const;  // zero scalar if absent
    bool operator==(const NCPoly& o) const;

private:
    FieldCtxPtr field_;
    std::vector<std::pair<Word, Scalar>> terms_;
};

struct Presentation {
    FieldCtxPtr field;
    std::vector<std::string> generator_labels;
    std::vector<NCPoly> relations;
    size_t generator_count() const { return generator_labels.size(); }
};

enum class GBStatus { CompleteUpTo, SaturatedFinite, Trivial };

struct GBOptions {
    int degree = 8;                               // truncation D
    int hard_cap = 12;
    size_t term_store_soft_cap = 4u << 20;        // total stored terms (~64 MB)
};

enum class ReduceStrategy { LeftmostFirstMatch, RightmostLastMatch };

struct QuotientBasis {
    std::vector<Word> words;       // normal words, sorted in deglex
    bool finite = false;
    int certificate_degree = -1;   // first degree with zero normal words
};

/// Completed (possibly truncated) rewriting system for a two-sided ideal.
class GBState {
public:
    const Presentation& presentation() const { return pres_; }
    int truncation() const { return truncation_; }
    GBStatus status() const { return status_; }
    /// True when the pair queue drained with no ambiguity skipped for degree:
    /// the basis is then a full (untruncated) Groebner basis.
    bool exhaustive() const { return exhaustive_; }
    const std::vector<NCPoly>& basis() const { return basis_; }
    int certificate_degree() const { return certificate_degree_; }

    NCPoly normal_form(const NCPoly& p,
                       ReduceStrategy strategy = ReduceStrategy::LeftmostFirstMatch) const;

    /// Normal words of degree <= max_degree, grouped by degree.
    std::vector<std::vector<Word>> normal_words_by_degree(int max_degree) const;

private:
    friend GBState complete(const Presentation&, const GBOptions&);
    Presentation pres_;
    int truncation_ = 0;
    GBStatus status_ = GBStatus::CompleteUpTo;
    bool exhaustive_ = false;
    int certificate_degree_ = -1;
    std::vector<NCPoly> basis_;
    size_t max_lead_len_ = 0;
    std::set<Word> lead_set_;

    bool word_is_normal(const Word& w) const;
    /// Finds a reducible (position, length, basis index) in w, or false.
    bool find_reduction(const Word& w, ReduceStrategy strategy,
                        size_t& pos, size_t& len, size_t& which) const;
};

/// Overlap (Bergman diamond) completion up to the given total degree, with
/// FIFO pair processing in discovery order.
GBState complete(const Presentation& pres, const GBOptions& opts = {});

struct QuotientDim {
    enum class Kind { Finite, Trivial, Undetermined } kind;
    size_t dimension = 0;                 // valid when Finite
    QuotientBasis basis;                  // valid when Finite
    int degree_checked = 0;               // for Undetermined
    size_t count_so_far = 0;              // for Undetermined
};

QuotientDim quotient_dimension(const GBState& gb);

/// Entry (i,j) = normal_form(w_i w_j) in coordinates over the normal-word
/// basis. Requires a finite quotient.
std::vector<std::vector<std::vector<Scalar>>>
multiplication_table(const GBState& gb, const QuotientBasis& basis);

} // namespace frobhopf
