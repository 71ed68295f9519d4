#include <doctest.h>

#include <random>

#include "frobhopf/ncgb.hpp"

using namespace frobhopf;

namespace {

NCPoly poly(const FieldCtxPtr& k, std::initializer_list<std::pair<Word, long long>> terms) {
    NCPoly p(k);
    for (const auto& [w, c] : terms) p.add_term(w, k->from_int(c));
    return p;
}

Presentation pres(const FieldCtxPtr& k, size_t gens, std::vector<NCPoly> rels) {
    Presentation p;
    p.field = k;
    for (size_t i = 0; i < gens; ++i) p.generator_labels.push_back("x" + std::to_string(i));
    p.relations = std::move(rels);
    return p;
}

NCPoly random_poly(const Presentation& p, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 6), deg(0, max_degree),
        gen(0, static_cast<int>(p.generator_count()) - 1);
    std::uniform_int_distribution<long long> coef(-4, 4);
    NCPoly out(p.field);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) w.push_back(static_cast<uint32_t>(gen(rng)));
        out.add_term(w, p.field->from_int(coef(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("one-generator involution: k[x]/(x^2-1)") {
    auto k = FieldCtx::rationals();
    auto p = pres(k, 1, {poly(k, {{{0, 0}, 1}, {{}, -1}})});
    GBState gb = complete(p);
    CHECK(gb.status() == GBStatus::SaturatedFinite);
    CHECK(gb.exhaustive());
    auto qd = quotient_dimension(gb);
    REQUIRE(qd.kind == QuotientDim::Kind::Finite);
    CHECK(qd.dimension == 2);
    CHECK(qd.basis.words == std::vector<Word>{{}, {0}});
    // x^3 -> x
    NCPoly x3 = poly(k, {{{0, 0, 0}, 1}});
    CHECK(gb.normal_form(x3) == poly(k, {{{0}, 1}}));
    // every relation reduces to zero
    for (const auto& r : p.relations) CHECK(gb.normal_form(r).is_zero());
}

TEST_CASE("trivial ideal is reported when 1 is generated") {
    auto k = FieldCtx::rationals();
    // x and x - 1 together force 1 = 0
    auto p = pres(k, 1, {poly(k, {{{0}, 1}}), poly(k, {{{0}, 1}, {{}, -1}})});
    GBState gb = complete(p);
    CHECK(gb.status() == GBStatus::Trivial);
    auto qd = quotient_dimension(gb);
    CHECK(qd.kind == QuotientDim::Kind::Trivial);
    CHECK(gb.normal_form(poly(k, {{{}, 5}})).is_zero());
}

TEST_CASE("commuting pair stays undetermined with the right growth") {
    auto k = FieldCtx::prime(5);
    // y x - x y : the quotient is k[x,y], infinite
    auto p = pres(k, 2, {poly(k, {{{1, 0}, 1}, {{0, 1}, -1}})});
    GBState gb = complete(p, {.degree = 8});
    CHECK(gb.status() == GBStatus::CompleteUpTo);
    auto qd = quotient_dimension(gb);
    REQUIRE(qd.kind == QuotientDim::Kind::Undetermined);
    CHECK(qd.degree_checked == 8);
    CHECK(qd.count_so_far == 45);  // sum_{d<=8} (d+1) monomials x^a y^b
}

TEST_CASE("overlap completion finds the hidden linear relation") {
    auto k = FieldCtx::rationals();
    // x^2 - x and x^2 - 1 give x = 1 after completion, so dim = 1
    auto p = pres(k, 1, {poly(k, {{{0, 0}, 1}, {{0}, -1}}), poly(k, {{{0, 0}, 1}, {{}, -1}})});
    GBState gb = complete(p);
    auto qd = quotient_dimension(gb);
    REQUIRE(qd.kind == QuotientDim::Kind::Finite);
    CHECK(qd.dimension == 1);
}

TEST_CASE("S-overlap polynomials reduce to zero after completion") {
    auto k = FieldCtx::prime(7);
    auto p = pres(k, 2,
                  {poly(k, {{{0, 1, 0}, 1}, {{0}, 3}}),
                   poly(k, {{{1, 0, 1}, 1}, {{1}, 2}}),
                   poly(k, {{{0, 0}, 1}, {{1, 1}, 1}})});
    GBState gb = complete(p, {.degree = 8});
    const auto& basis = gb.basis();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            const Word& u = basis[i].leading_word();
            const Word& v = basis[j].leading_word();
            for (size_t o = 1; o < u.size() && o < v.size(); ++o) {
                if (!std::equal(u.end() - o, u.end(), v.begin())) continue;
                if (u.size() + v.size() - o > static_cast<size_t>(gb.truncation())) continue;
                Word b(v.begin() + o, v.end());
                Word a(u.begin(), u.end() - o);
                NCPoly s = basis[i].conjugated({}, b) - basis[j].conjugated(a, {});
                CHECK(gb.normal_form(s).is_zero());
            }
        }
    for (const auto& r : p.relations) CHECK(gb.normal_form(r).is_zero());
}

TEST_CASE("confluence: two reduction strategies agree on random input") {
    auto k = FieldCtx::prime(5);
    auto p = pres(k, 2,
                  {poly(k, {{{0, 0}, 1}, {{}, -1}}),
                   poly(k, {{{1, 1}, 1}, {{}, -1}}),
                   poly(k, {{{1, 0}, 1}, {{0, 1}, -1}})});
    GBState gb = complete(p, {.degree = 8});
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        NCPoly q = random_poly(p, 8, rng);
        CHECK(gb.normal_form(q, ReduceStrategy::LeftmostFirstMatch) ==
              gb.normal_form(q, ReduceStrategy::RightmostLastMatch));
    }
}

TEST_CASE("normal words are closed under subwords") {
    auto k = FieldCtx::prime(3);
    auto p = pres(k, 2,
                  {poly(k, {{{0, 0, 0}, 1}, {{}, -1}}), poly(k, {{{1, 1}, 1}, {{0}, 1}})});
    GBState gb = complete(p, {.degree = 6});
    auto by_deg = gb.normal_words_by_degree(6);
    auto is_normal_listed = [&](const Word& w) {
        if (w.size() > 6) return true;
        const auto& bucket = by_deg[w.size()];
        return std::find(bucket.begin(), bucket.end(), w) != bucket.end();
    };
    for (const auto& bucket : by_deg)
        for (const auto& w : bucket)
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t len = 1; i + len <= w.size(); ++len)
                    CHECK(is_normal_listed(Word(w.begin() + i, w.begin() + i + len)));
}

TEST_CASE("dimension is invariant under generator relabeling") {
    auto k = FieldCtx::rationals();
    std::vector<NCPoly> rels = {poly(k, {{{0, 1}, 1}, {{}, -1}}),
                                poly(k, {{{1, 0}, 1}, {{}, -1}}),
                                poly(k, {{{0, 0, 0}, 1}, {{}, -1}})};
    auto p = pres(k, 2, rels);
    auto qd1 = quotient_dimension(complete(p));
    // swap generators 0 <-> 1
    std::vector<NCPoly> swapped;
    for (const auto& r : rels) {
        NCPoly s(k);
        for (const auto& [w, c] : r.terms()) {
            Word sw;
            for (uint32_t g : w) sw.push_back(1 - g);
            s.add_term(sw, c);
        }
        swapped.push_back(s);
    }
    auto qd2 = quotient_dimension(complete(pres(k, 2, swapped)));
    REQUIRE(qd1.kind == QuotientDim::Kind::Finite);
    REQUIRE(qd2.kind == QuotientDim::Kind::Finite);
    CHECK(qd1.dimension == qd2.dimension);
    CHECK(qd1.dimension == 3);  // x y = y x = 1, x^3 = 1: k[C3]
}

TEST_CASE("multiplication table of a finite quotient") {
    auto k = FieldCtx::rationals();
    auto p = pres(k, 1, {poly(k, {{{0, 0}, 1}, {{}, -1}})});
    GBState gb = complete(p);
    auto qd = quotient_dimension(gb);
    auto table = multiplication_table(gb, qd.basis);
    // basis {1, x}: x*x = 1
    CHECK(table[1][1][0] == k->one());
    CHECK(table[1][1][1] == k->zero());
    CHECK(table[0][1][1] == k->one());  // 1*x = x
}

TEST_CASE("degree caps are enforced") {
    auto k = FieldCtx::rationals();
    auto p = pres(k, 1, {poly(k, {{{0, 0}, 1}, {{}, -1}})});
    CHECK_THROWS_AS(complete(p, {.degree = 13}), CapExceeded);
    CHECK_THROWS_AS(complete(p, {.degree = 1}), CapExceeded);
}

TEST_CASE("deglex order sanity") {
    DegLexLess less;
    CHECK(less({}, {0}));
    CHECK(less({1}, {0, 0}));
    CHECK(less({0, 1}, {1, 0}));
    CHECK(!less({1, 0}, {0, 1}));
}

TEST_CASE("random ideal elements always reduce to zero") {
    // soundness: for random small presentations, any combination
    // sum u_i r_i v_i of the relations must reduce to 0 after completion
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        auto k = trial % 2 ? FieldCtx::prime(5) : FieldCtx::rationals();
        std::uniform_int_distribution<int> ngens(1, 3), nrels(1, 3);
        size_t gens = ngens(rng);
        std::vector<NCPoly> rels;
        int rcount = nrels(rng);
        for (int r = 0; r < rcount; ++r) {
            NCPoly p(k);
            std::uniform_int_distribution<int> nterms(1, 3), deg(0, 2);
            std::uniform_int_distribution<long long> coef(-3, 3);
            int terms = nterms(rng);
            for (int t = 0; t < terms; ++t) {
                Word w;
                int d = deg(rng);
                for (int i = 0; i < d; ++i) w.push_back(rng() % gens);
                p.add_term(w, k->from_int(coef(rng)));
            }
            if (!p.is_zero()) rels.push_back(p);
        }
        if (rels.empty()) continue;
        auto p = pres(k, gens, rels);
        GBState gb = complete(p, {.degree = 6});
        std::uniform_int_distribution<int> pick(0, static_cast<int>(rels.size()) - 1);
        for (int combo = 0; combo < 10; ++combo) {
            NCPoly elem(k);
            for (int parts = 0; parts < 3; ++parts) {
                Word u, v;
                std::uniform_int_distribution<int> deg(0, 2);
                int du = deg(rng), dv = deg(rng);
                for (int i = 0; i < du; ++i) u.push_back(rng() % gens);
                for (int i = 0; i < dv; ++i) v.push_back(rng() % gens);
                std::uniform_int_distribution<long long> coef(-2, 2);
                elem = elem + rels[pick(rng)].conjugated(u, v).scaled(k->from_int(coef(rng)));
            }
            if (elem.degree() > 6) continue;  // stay inside the certified range
            CHECK(gb.normal_form(elem).is_zero());
        }
    }
}
