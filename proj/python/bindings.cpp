// Python bindings: thin JSON-in / JSON-out wrappers over the core engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobhopf/json_io.hpp"
#include "frobhopf/measure.hpp"
#include "frobhopf/reproduce.hpp"

namespace py = pybind11;
using namespace frobhopf;

namespace {

struct Parsed {
    FieldCtxPtr field;
    FrobeniusAlgebra a;
    FrobeniusAlgebra b;
};

Parsed parse_two(const std::string& a, const std::string& b, const std::string& field) {
    FieldCtxPtr k = parse_field_arg(field);
    return {k, parse_algebra_arg(a, k), parse_algebra_arg(b, k)};
}

std::string dimension_json(const std::string& a, const std::string& b,
                           const std::string& field, int degree) {
    auto in = parse_two(a, b, field);
    auto pair = build_comeasure_pair(in.a.carrier(), in.b.carrier(), {.degree = degree});
    auto qd = quotient_dimension(*pair.gb);
    json r;
    switch (qd.kind) {
    case QuotientDim::Kind::Trivial: r["status"] = "Trivial"; break;
    case QuotientDim::Kind::Finite:
        r["status"] = "Finite";
        r["dimension"] = qd.dimension;
        break;
    case QuotientDim::Kind::Undetermined:
        r["status"] = "UndeterminedAtDegree";
        r["degree_checked"] = qd.degree_checked;
        r["normal_words_so_far"] = qd.count_so_far;
        break;
    }
    return r.dump();
}

std::string comeasure_json(const std::string& a, const std::string& b,
                           const std::string& field, int degree) {
    auto in = parse_two(a, b, field);
    auto pair = build_comeasure_pair(in.a.carrier(), in.b.carrier(), {.degree = degree});
    return comeasuring_to_json(pair, json{{"arg", a}}, json{{"arg", b}}).dump();
}

std::string validate_json_fn(const std::string& spec, const std::string& field) {
    FieldCtxPtr k = parse_field_arg(field);
    auto alg = parse_algebra_arg(spec, k);
    json r;
    r["valid"] = true;
    r["dimension"] = alg.dim();
    r["symmetric"] = is_symmetric(alg);
    return r.dump();
}

std::string build_json_fn(const std::string& spec, const std::string& field) {
    FieldCtxPtr k = parse_field_arg(field);
    auto alg = parse_algebra_arg(spec, k);
    return algebra_to_json(*alg.carrier(), true).dump();
}

std::string grouplikes_json(const std::string& a, const std::string& b,
                            const std::string& field, int degree, uint64_t budget) {
    auto in = parse_two(a, b, field);
    auto pair = build_comeasure_pair(in.a.carrier(), in.b.carrier(), {.degree = degree});
    auto C = dual_coalgebra(std::make_shared<const QuotientAlgebra>(pair.quotient()));
    auto gs = grouplikes_enumerate(C, budget);
    json r;
    r["count"] = gs.size();
    json vecs = json::array();
    for (const auto& g : gs) {
        json v = json::array();
        for (const auto& c : g) v.push_back(scalar_to_json(c));
        vecs.push_back(std::move(v));
    }
    r["grouplikes"] = std::move(vecs);
    return r.dump();
}

std::string primitives_json(const std::string& a, const std::string& b,
                            const std::string& field, int degree) {
    auto in = parse_two(a, b, field);
    auto pair = build_comeasure_pair(in.a.carrier(), in.b.carrier(), {.degree = degree});
    auto C = dual_coalgebra(std::make_shared<const QuotientAlgebra>(pair.quotient()));
    Vec j = unit_j(pair);
    auto basis = primitives(C, j, j);
    json r;
    r["dimension_of_space"] = basis.size();
    return r.dump();
}

std::string antipode_json(const std::string& a, const std::string& b,
                          const std::string& field, int degree) {
    auto in = parse_two(a, b, field);
    auto pairBA = build_comeasure_pair(in.b.carrier(), in.a.carrier(), {.degree = degree});
    auto pairAB = build_comeasure_pair(in.a.carrier(), in.b.carrier(), {.degree = degree});
    auto S = antipode_S(in.a, in.b, pairBA, pairAB);
    json images = json::array();
    for (const auto& img : S.generator_images) {
        json v = json::array();
        for (const auto& c : img) v.push_back(scalar_to_json(c));
        images.push_back(std::move(v));
    }
    return json{{"S_generator_images", images}}.dump();
}

std::string hopf_check_json(const std::vector<std::string>& objects, const std::string& field,
                            int degree) {
    FieldCtxPtr k = parse_field_arg(field);
    std::vector<FrobeniusAlgebra> objs;
    for (const auto& o : objects) objs.push_back(parse_algebra_arg(o, k));
    auto rep = hopf_category_check(objs, {.degree = degree});
    json r;
    r["pass"] = rep.pass();
    r["failures"] = rep.failures;
    json dims = json::array();
    for (const auto& row : rep.hom_dims) dims.push_back(row);
    r["hom_dims"] = std::move(dims);
    return r.dump();
}

std::string duality_check_json(const std::string& a, const std::string& b,
                               const std::string& field, int degree) {
    auto in = parse_two(a, b, field);
    auto rep = gamma_pi_factorization_check(in.a, in.b, {.degree = degree});
    json r;
    r["pass"] = rep.pass();
    r["failures"] = rep.failures;
    r["dim_C_AB"] = rep.dim_AB;
    r["dim_C_dual"] = rep.dim_dual;
    return r.dump();
}

std::string reproduce_json(const std::string& id, int degree, uint64_t budget) {
    auto out = run_reproduce(id, degree, budget);
    json r = out.results;
    r["example"] = out.example;
    return r.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact universal (co)measuring computations for Frobenius algebras";
    m.attr("__version__") = engine_version();

    m.def("validate", &validate_json_fn, py::arg("spec"), py::arg("field") = "Q",
          "validate a Frobenius algebra spec; returns a JSON string");
    m.def("build", &build_json_fn, py::arg("spec"), py::arg("field") = "Q",
          "resolve a builder spec to structure constants (JSON string)");
    m.def("dimension", &dimension_json, py::arg("a"), py::arg("b"), py::arg("field") = "Q",
          py::arg("degree") = 8,
          "status/dimension of the universal comeasuring quotient a -> b");
    m.def("comeasure", &comeasure_json, py::arg("a"), py::arg("b"), py::arg("field") = "Q",
          py::arg("degree") = 8, "full comeasuring payload (JSON string)");
    m.def("grouplikes", &grouplikes_json, py::arg("a"), py::arg("b"), py::arg("field"),
          py::arg("degree") = 8, py::arg("budget") = 10000000,
          "grouplike inventory of C(a -> b) over a finite field");
    m.def("unit_primitives", &primitives_json, py::arg("a"), py::arg("b"), py::arg("field"),
          py::arg("degree") = 8, "(unit, unit)-primitive space dimension");
    m.def("antipode", &antipode_json, py::arg("a"), py::arg("b"), py::arg("field") = "Q",
          py::arg("degree") = 8, "opcategory antipode generator images");
    m.def("hopf_check", &hopf_check_json, py::arg("objects"), py::arg("field") = "Q",
          py::arg("degree") = 8, "Hopf-category axiom suite over an object list");
    m.def("duality_check", &duality_check_json, py::arg("a"), py::arg("b"),
          py::arg("field") = "Q", py::arg("degree") = 8,
          "gamma/pi duality and antipode factorization");
    m.def("reproduce", &reproduce_json, py::arg("id"), py::arg("degree") = 8,
          py::arg("budget") = 10000000, "replay a named worked example");
    m.def("reproduce_ids", &reproduce_ids, "list of known reproduce identifiers");

    py::register_exception<EngineError>(m, "EngineError");
}
