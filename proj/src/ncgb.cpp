#include "frobhopf/ncgb.hpp"

#include <algorithm>

namespace frobhopf {

// ---------------------------------------------------------------------------
// NCPoly
// ---------------------------------------------------------------------------

namespace {
// descending deglex
bool term_before(const Word& a, const Word& b) { return DegLexLess{}(b, a); }
} // namespace

NCPoly NCPoly::constant(const FieldCtxPtr& field, const Scalar& c) {
    NCPoly p(field);
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::monomial(const FieldCtxPtr& field, Word w, const Scalar& c) {
    NCPoly p(field);
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const auto& t, const Word& x) { return term_before(t.first, x); });
    if (it != terms_.end() && it->first == w) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {w, c});
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    // merge two sorted term lists
    NCPoly r(field_ ? field_ : o.field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        bool take_left;
        if (i == terms_.size()) take_left = false;
        else if (j == o.terms_.size()) take_left = true;
        else if (terms_[i].first == o.terms_[j].first) {
            Scalar s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
            ++i; ++j;
            continue;
        } else take_left = term_before(terms_[i].first, o.terms_[j].first);
        if (take_left) r.terms_.push_back(terms_[i++]);
        else r.terms_.push_back(o.terms_[j++]);
    }
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + o.scaled(-(o.field_ ? o.field_ : field_)->one()); }

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r(field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [w, s] : terms_) r.terms_.push_back({w, s * c});
    return r;
}

NCPoly NCPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

NCPoly NCPoly::conjugated(const Word& u, const Word& v) const {
    NCPoly r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& [w, s] : terms_) {
        Word nw;
        nw.reserve(u.size() + w.size() + v.size());
        nw.insert(nw.end(), u.begin(), u.end());
        nw.insert(nw.end(), w.begin(), w.end());
        nw.insert(nw.end(), v.begin(), v.end());
        r.terms_.push_back({std::move(nw), s});
    }
    // concatenation with fixed u, v preserves deglex order between terms
    return r;
}

NCPoly NCPoly::times(const NCPoly& o) const {
    NCPoly r(field_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::integralized() const {
    if (is_zero() || field_->kind() != FieldCtx::Kind::Rationals) return *this;
    BigInt lcm(1);
    for (const auto& [w, s] : terms_) {
        const BigInt& d = s.rational().den();
        lcm = lcm / BigInt::gcd(lcm, d) * d;
    }
    if (lcm.is_one()) return *this;
    return scaled(field_->from_rational(Rational(lcm, BigInt(1))));
}

Scalar NCPoly::coeff_of(const Word& w) const {
    for (const auto& [tw, c] : terms_)
        if (tw == w) return c;
    return field_->zero();
}

bool NCPoly::operator==(const NCPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

bool GBState::word_is_normal(const Word& w) const {
    size_t p, l, which;
    return !find_reduction(w, ReduceStrategy::LeftmostFirstMatch, p, l, which);
}

bool GBState::find_reduction(const Word& w, ReduceStrategy strategy,
                             size_t& pos, size_t& len, size_t& which) const {
    const bool leftmost = strategy == ReduceStrategy::LeftmostFirstMatch;
    Word sub;
    auto basis_index_for = [&](const Word& lead) -> size_t {
        if (leftmost) {
            for (size_t b = 0; b < basis_.size(); ++b)
                if (basis_[b].leading_word() == lead) return b;
        } else {
            for (size_t b = basis_.size(); b-- > 0;)
                if (basis_[b].leading_word() == lead) return b;
        }
        return basis_.size();
    };
    auto scan_at = [&](size_t i) -> bool {
        size_t maxl = std::min(max_lead_len_, w.size() - i);
        for (size_t l = 1; l <= maxl; ++l) {
            sub.assign(w.begin() + i, w.begin() + i + l);
            if (!lead_set_.count(sub)) continue;
            size_t found = basis_index_for(sub);
            if (found == basis_.size()) continue;
            pos = i;
            len = l;
            which = found;
            return true;
        }
        return false;
    };
    if (leftmost) {
        for (size_t i = 0; i < w.size(); ++i)
            if (scan_at(i)) return true;
    } else {
        for (size_t i = w.size(); i-- > 0;)
            if (scan_at(i)) return true;
    }
    return false;
}

NCPoly GBState::normal_form(const NCPoly& p, ReduceStrategy strategy) const {
    if (status_ == GBStatus::Trivial) return NCPoly(p.field());  // whole algebra collapses
    NCPoly result(p.field());
    NCPoly work = p;
    while (!work.is_zero()) {
        const Word w = work.leading_word();
        const Scalar c = work.leading_coeff();
        size_t pos, len, which;
        if (!find_reduction(w, strategy, pos, len, which)) {
            result.add_term(w, c);
            // drop the leading term
            NCPoly lead = NCPoly::monomial(p.field(), w, c);
            work = work - lead;
            continue;
        }
        const NCPoly& g = basis_[which];
        Word u(w.begin(), w.begin() + pos);
        Word v(w.begin() + pos + len, w.end());
        // work -= c * u g v   (g monic: leading term cancels exactly)
        work = work - g.conjugated(u, v).scaled(c);
    }
    return result;
}

// ---------------------------------------------------------------------------
// completion
// ---------------------------------------------------------------------------

namespace {

struct PairTask {
    size_t i, j;     // basis ids (j's lead starts inside i's lead end)
    size_t overlap;  // suffix length of lead(i) equal to prefix of lead(j)
};

bool word_contains(const Word& big, const Word& small) {
    if (small.empty() || small.size() > big.size()) return small.empty();
    for (size_t i = 0; i + small.size() <= big.size(); ++i)
        if (std::equal(small.begin(), small.end(), big.begin() + i)) return true;
    return false;
}

} // namespace

GBState complete(const Presentation& pres, const GBOptions& opts) {
    if (opts.degree > opts.hard_cap)
        throw CapExceeded("degree " + std::to_string(opts.degree) + " exceeds hard cap " +
                          std::to_string(opts.hard_cap));
    int max_rel_deg = 0;
    for (const auto& r : pres.relations)
        max_rel_deg = std::max(max_rel_deg, r.degree());
    if (opts.degree < max_rel_deg)
        throw CapExceeded("degree below maximal relation degree");

    GBState gb;
    gb.pres_ = pres;
    gb.truncation_ = opts.degree;

    std::deque<NCPoly> inputs;
    for (const auto& r : pres.relations)
        if (!r.is_zero()) inputs.push_back(r.integralized());
    std::deque<PairTask> pairs;
    std::vector<bool> alive;
    size_t stored_terms = 0;
    bool skipped_any = false;
    bool trivial = false;

    auto discover_pairs = [&](size_t idx) {
        const Word& u = gb.basis_[idx].leading_word();
        for (size_t other = 0; other < gb.basis_.size(); ++other) {
            if (!alive[other]) continue;
            const Word& v = gb.basis_[other].leading_word();
            // overlaps u-suffix == v-prefix, proper on both sides
            for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
                if (std::equal(u.end() - k, u.end(), v.begin())) {
                    if (u.size() + v.size() - k <= static_cast<size_t>(opts.degree))
                        pairs.push_back({idx, other, k});
                    else
                        skipped_any = true;
                }
            }
            if (other == idx) continue;
            for (size_t k = 1; k < v.size() && k < u.size(); ++k) {
                if (std::equal(v.end() - k, v.end(), u.begin())) {
                    if (u.size() + v.size() - k <= static_cast<size_t>(opts.degree))
                        pairs.push_back({other, idx, k});
                    else
                        skipped_any = true;
                }
            }
        }
    };

    auto insert_poly = [&](NCPoly p) {
        p = gb.normal_form(p);
        if (p.is_zero()) return;
        if (p.degree() == 0) {
            trivial = true;
            return;
        }
        p = p.monic();
        stored_terms += p.term_count();
        if (stored_terms > opts.term_store_soft_cap)
            throw ResourceLimit("relation store exceeded " +
                                std::to_string(opts.term_store_soft_cap) + " terms");
        // retire basis elements that mention the new leading word anywhere
        const Word lw = p.leading_word();  // by value: p is moved below
        for (size_t b = 0; b < gb.basis_.size(); ++b) {
            if (!alive[b]) continue;
            bool affected = false;
            for (const auto& [w, c] : gb.basis_[b].terms())
                if (word_contains(w, lw)) {
                    affected = true;
                    break;
                }
            if (affected) {
                alive[b] = false;
                gb.lead_set_.erase(gb.basis_[b].leading_word());
                inputs.push_back(gb.basis_[b]);
                stored_terms -= std::min(stored_terms, gb.basis_[b].term_count());
            }
        }
        size_t idx = gb.basis_.size();
        gb.basis_.push_back(std::move(p));
        alive.push_back(true);
        gb.lead_set_.insert(lw);
        gb.max_lead_len_ = std::max(gb.max_lead_len_, lw.size());
        discover_pairs(idx);
    };

    while (!trivial && (!inputs.empty() || !pairs.empty())) {
        if (!inputs.empty()) {
            NCPoly p = std::move(inputs.front());
            inputs.pop_front();
            insert_poly(std::move(p));
            continue;
        }
        PairTask t = pairs.front();
        pairs.pop_front();
        if (!alive[t.i] || !alive[t.j]) continue;
        const NCPoly& gi = gb.basis_[t.i];
        const NCPoly& gj = gb.basis_[t.j];
        const Word& u = gi.leading_word();
        const Word& v = gj.leading_word();
        Word a(u.begin(), u.end() - t.overlap);   // u = a c
        Word b(v.begin() + t.overlap, v.end());   // v = c b
        // S-polynomial g_i b - a g_j: both have leading word a c b, cancelling
        NCPoly s = gi.conjugated({}, b) - gj.conjugated(a, {});
        insert_poly(std::move(s));
    }

    // compact dead entries
    std::vector<NCPoly> compact;
    for (size_t b = 0; b < gb.basis_.size(); ++b)
        if (alive.size() > b && alive[b]) compact.push_back(std::move(gb.basis_[b]));
    gb.basis_ = std::move(compact);
    gb.lead_set_.clear();
    gb.max_lead_len_ = 0;
    for (const auto& g : gb.basis_) {
        gb.lead_set_.insert(g.leading_word());
        gb.max_lead_len_ = std::max(gb.max_lead_len_, g.leading_word().size());
    }

    if (trivial) {
        gb.status_ = GBStatus::Trivial;
        gb.exhaustive_ = true;
        gb.basis_.clear();
        gb.basis_.push_back(NCPoly::constant(pres.field, pres.field->one()));
        gb.lead_set_.clear();
        gb.lead_set_.insert(Word{});
        gb.max_lead_len_ = 0;
        return gb;
    }

    gb.exhaustive_ = !skipped_any;

    auto by_deg = gb.normal_words_by_degree(opts.degree);
    gb.status_ = GBStatus::CompleteUpTo;
    for (int d = 0; d <= opts.degree; ++d) {
        if (by_deg[d].empty()) {
            gb.status_ = GBStatus::SaturatedFinite;
            gb.certificate_degree_ = d;
            break;
        }
    }
    return gb;
}

std::vector<std::vector<Word>> GBState::normal_words_by_degree(int max_degree) const {
    std::vector<std::vector<Word>> out(max_degree + 1);
    if (status_ == GBStatus::Trivial) return out;
    size_t gens = pres_.generator_count();
    if (!word_is_normal({})) return out;  // 1 in ideal (defensively unreachable)
    out[0].push_back({});
    for (int d = 0; d < max_degree; ++d) {
        for (const Word& w : out[d]) {
            for (uint32_t g = 0; g < gens; ++g) {
                Word nw = w;
                nw.push_back(g);
                // w is normal, so only suffixes ending at the new letter matter
                bool normal = true;
                size_t maxl = std::min(max_lead_len_, nw.size());
                Word sub;
                for (size_t l = 1; l <= maxl && normal; ++l) {
                    sub.assign(nw.end() - l, nw.end());
                    if (lead_set_.count(sub)) normal = false;
                }
                if (normal) out[d + 1].push_back(std::move(nw));
            }
        }
    }
    return out;
}

QuotientDim quotient_dimension(const GBState& gb) {
    QuotientDim q;
    if (gb.status() == GBStatus::Trivial) {
        q.kind = QuotientDim::Kind::Trivial;
        return q;
    }
    auto by_deg = gb.normal_words_by_degree(gb.truncation());
    size_t total = 0;
    for (int d = 0; d <= gb.truncation(); ++d) {
        if (by_deg[d].empty()) {
            q.kind = QuotientDim::Kind::Finite;
            q.basis.finite = true;
            q.basis.certificate_degree = d;
            for (int e = 0; e < d; ++e)
                for (auto& w : by_deg[e]) q.basis.words.push_back(std::move(w));
            q.dimension = q.basis.words.size();
            return q;
        }
        total += by_deg[d].size();
    }
    q.kind = QuotientDim::Kind::Undetermined;
    q.degree_checked = gb.truncation();
    q.count_so_far = total;
    return q;
}

std::vector<std::vector<std::vector<Scalar>>>
multiplication_table(const GBState& gb, const QuotientBasis& basis) {
    if (!basis.finite) throw NotFinite("multiplication table needs a finite quotient");
    size_t n = basis.words.size();
    // Products reach degree 2(d*-1); beyond the truncation their normal forms
    // are only trustworthy when completion drained every ambiguity.
    int maxprod = 2 * std::max(basis.certificate_degree - 1, 0);
    if (maxprod > gb.truncation() && !gb.exhaustive())
        throw NotFinite("products exceed the truncation degree of a non-exhaustive basis");
    std::vector<std::vector<std::vector<Scalar>>> table(
        n, std::vector<std::vector<Scalar>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Word w = basis.words[i];
            w.insert(w.end(), basis.words[j].begin(), basis.words[j].end());
            NCPoly nf = gb.normal_form(
                NCPoly::monomial(gb.presentation().field, std::move(w),
                                 gb.presentation().field->one()));
            std::vector<Scalar> coords(n, gb.presentation().field->zero());
            for (const auto& [word, c] : nf.terms()) {
                auto it = std::lower_bound(basis.words.begin(), basis.words.end(), word,
                                           DegLexLess{});
                if (it == basis.words.end() || *it != word)
                    throw EngineError(ErrorKind::Internal,
                                      "normal form leaves the quotient basis");
                coords[it - basis.words.begin()] = c;
            }
            table[i][j] = std::move(coords);
        }
    return table;
}

} // namespace frobhopf
