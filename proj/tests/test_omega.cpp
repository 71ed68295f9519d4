#include <doctest.h>

#include <random>

#include "frobhopf/frobenius.hpp"
#include "frobhopf/omega.hpp"

using namespace frobhopf;

namespace {

OmegaAlgebraPtr c2_carrier(const FieldCtxPtr& k) {
    return cyclic_group_algebra(k, 2).carrier();
}

DenseTensor pair_tensor(const OmegaAlgebra& a, uint32_t i, uint32_t j) {
    DenseTensor t(a.dim() * a.dim(), a.field()->zero());
    t[static_cast<uint64_t>(i) * a.dim() + j] = a.field()->one();
    return t;
}

} // namespace

TEST_CASE("apply_op: group algebra multiplication g*g = e") {
    auto k = FieldCtx::rationals();
    auto A = c2_carrier(k);
    DenseTensor out = A->apply_op("mu", pair_tensor(*A, 1, 1));
    CHECK(out[0] == k->one());
    CHECK(out[1] == k->zero());
}

TEST_CASE("apply_op: unit law checked, not assumed") {
    auto k = FieldCtx::prime(5);
    auto A = cyclic_group_algebra(k, 3).carrier();
    DenseTensor one = A->apply_op("eta", DenseTensor{k->one()});
    for (uint32_t i = 0; i < A->dim(); ++i) {
        DenseTensor in(A->dim() * A->dim(), k->zero());
        for (uint32_t j = 0; j < A->dim(); ++j)
            in[static_cast<uint64_t>(j) * A->dim() + i] = one[j];
        CHECK(A->apply_op("mu", in) == A->basis_vector(i));
    }
}

TEST_CASE("apply_op: matrix units E12 * E21 = E11") {
    auto k = FieldCtx::rationals();
    auto M2 = matrix_algebra(k, 2);
    const auto& A = *M2.carrier();
    // basis order E11, E12, E21, E22
    DenseTensor out = A.apply_op("mu", pair_tensor(A, 1, 2));
    CHECK(out[0] == k->one());
    for (uint32_t i = 1; i < 4; ++i) CHECK(out[i] == k->zero());
    CHECK(A.apply_op("mu", pair_tensor(A, 1, 1)) == DenseTensor(4, k->zero()));
}

TEST_CASE("apply_op is multilinear") {
    auto k = FieldCtx::prime(7);
    auto A = cyclic_group_algebra(k, 4).carrier();
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> d(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        DenseTensor x(A->dim() * A->dim(), k->zero());
        DenseTensor y(A->dim() * A->dim(), k->zero());
        for (auto& v : x) v = k->from_int(d(rng));
        for (auto& v : y) v = k->from_int(d(rng));
        Scalar c = k->from_int(d(rng));
        DenseTensor combo(x.size(), k->zero());
        for (size_t i = 0; i < x.size(); ++i) combo[i] = x[i] + c * y[i];
        DenseTensor lhs = A->apply_op("mu", combo);
        DenseTensor rx = A->apply_op("mu", x);
        DenseTensor ry = A->apply_op("mu", y);
        for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == rx[i] + c * ry[i]);
    }
}

TEST_CASE("unknown op and dimension mismatch") {
    auto k = FieldCtx::rationals();
    auto A = c2_carrier(k);
    CHECK_THROWS_AS(A->apply_op("comul", DenseTensor{k->one()}), UnknownOp);
    CHECK_THROWS_AS(A->apply_op("mu", DenseTensor{k->one()}), DimensionMismatch);
}

TEST_CASE("morphism check: identity passes") {
    auto k = FieldCtx::rationals();
    auto A = cyclic_group_algebra(k, 3).carrier();
    CHECK(check_omega_morphism(LinearMap::identity(A)).empty());
}

TEST_CASE("morphism check: C3 swap automorphism passes") {
    auto k = FieldCtx::rationals();
    auto A = cyclic_group_algebra(k, 3).carrier();
    LinearMap tau = LinearMap::zero(A, A);
    tau.m[0][0] = k->one();   // e -> e
    tau.m[2][1] = k->one();   // a -> b
    tau.m[1][2] = k->one();   // b -> a
    CHECK(check_omega_morphism(tau).empty());
}

TEST_CASE("morphism check: collapsing map is caught at mu(g,g)") {
    auto k = FieldCtx::rationals();
    auto A = c2_carrier(k);
    LinearMap f = LinearMap::zero(A, A);
    f.m[0][0] = k->one();   // e -> e, g -> 0
    auto bad = check_omega_morphism(f);
    REQUIRE(!bad.empty());
    bool found = false;
    for (const auto& v : bad)
        if (v.op == "mu" && v.source_index == std::vector<uint32_t>{1, 1}) found = true;
    CHECK(found);
}

TEST_CASE("composition of morphisms is a morphism") {
    auto k = FieldCtx::prime(5);
    auto A = cyclic_group_algebra(k, 3).carrier();
    LinearMap tau = LinearMap::zero(A, A);
    tau.m[0][0] = k->one();
    tau.m[2][1] = k->one();
    tau.m[1][2] = k->one();
    REQUIRE(check_omega_morphism(tau).empty());
    LinearMap tau2 = tau.compose_after(tau);
    CHECK(check_omega_morphism(tau2).empty());
    CHECK(tau2.equals(LinearMap::identity(A)));
}
