// frobhopf: exact computation of universal (co)measuring structure between
// finite-dimensional Frobenius algebras.
//
// Exit codes: 0 success, 2 validation failure, 3 resource limit.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "frobhopf/json_io.hpp"
#include "frobhopf/measure.hpp"
#include "frobhopf/reproduce.hpp"

using namespace frobhopf;

namespace {

struct CommonOpts {
    std::string field = "Q";
    int degree = 8;
    uint64_t budget = 10000000;
    std::string out;
    std::string format = "json";
};

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void emit(const json& report, const CommonOpts& opts) {
    std::string text = report.dump(2) + "\n";
    if (!opts.out.empty()) {
        std::ofstream f(opts.out);
        if (!f) throw SpecParseError("cannot write " + opts.out);
        f << text;
    } else {
        std::cout << text;
    }
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_field = true) {
    if (with_field) cmd->add_option("--field", opts.field, "field: Q, F<p>, or JSON descriptor");
    cmd->add_option("--degree", opts.degree, "Groebner truncation degree (default 8, cap 12)");
    cmd->add_option("--budget", opts.budget, "grouplike enumeration budget");
    cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format (json)")
        ->check(CLI::IsMember({"json"}));
}

const char* status_str(GBStatus s) {
    switch (s) {
    case GBStatus::CompleteUpTo: return "UndeterminedAtDegree";
    case GBStatus::SaturatedFinite: return "Finite";
    case GBStatus::Trivial: return "Trivial";
    }
    return "?";
}

json scalar_display(const Scalar& s) { return s.str(); }

json dims_json(const std::vector<std::vector<size_t>>& dims) {
    json out = json::array();
    for (const auto& row : dims) out.push_back(row);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal measuring/comeasuring engine for Frobenius algebras"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string a_arg, b_arg, spec_arg, id_arg;
    std::vector<std::string> objects_arg;
    std::string g_arg = "unit", h_arg = "unit";

    auto* validate = app.add_subcommand("validate", "validate the Frobenius axioms of a spec");
    validate->add_option("--spec", spec_arg, "algebra spec")->required();
    add_common(validate, opts);

    auto* build = app.add_subcommand("build", "resolve a builder spec to structure constants");
    build->add_option("--spec", spec_arg, "algebra spec")->required();
    add_common(build, opts);

    auto* comeasure = app.add_subcommand("comeasure",
                                         "universal comeasuring presentation a -> b");
    comeasure->add_option("--a", a_arg, "source algebra")->required();
    comeasure->add_option("--b", b_arg, "target algebra")->required();
    add_common(comeasure, opts);

    auto* dimension = app.add_subcommand("dimension", "quotient dimension / triviality");
    dimension->add_option("--a", a_arg, "source algebra")->required();
    dimension->add_option("--b", b_arg, "target algebra")->required();
    add_common(dimension, opts);

    auto* dualco = app.add_subcommand("dual-coalgebra",
                                      "comultiplication tables of the measuring coalgebra");
    dualco->add_option("--a", a_arg, "source algebra")->required();
    dualco->add_option("--b", b_arg, "target algebra")->required();
    add_common(dualco, opts);

    auto* grouplikes = app.add_subcommand("grouplikes", "grouplike inventory of C(a -> b)");
    grouplikes->add_option("--a", a_arg, "source algebra")->required();
    grouplikes->add_option("--b", b_arg, "target algebra")->required();
    add_common(grouplikes, opts);

    auto* prim = app.add_subcommand("primitives", "(g,h)-primitive space of C(a -> b)");
    prim->add_option("--a", a_arg, "source algebra")->required();
    prim->add_option("--b", b_arg, "target algebra")->required();
    prim->add_option("--anchor-g", g_arg, "grouplike: 'unit' or index into the grouplike list");
    prim->add_option("--anchor-h", h_arg, "grouplike: 'unit' or index into the grouplike list");
    add_common(prim, opts);

    auto* antipode = app.add_subcommand("antipode", "opcategory antipode S and dual matrix");
    antipode->add_option("--a", a_arg, "source algebra")->required();
    antipode->add_option("--b", b_arg, "target algebra")->required();
    add_common(antipode, opts);

    auto* hopf = app.add_subcommand("hopf-check", "Hopf-category axiom suite");
    hopf->add_option("--objects", objects_arg, "object list, e.g. group:C2,k")
        ->required()
        ->delimiter(',');
    add_common(hopf, opts);

    auto* duality = app.add_subcommand("duality-check", "gamma/pi duality and S = pi o gamma");
    duality->add_option("--a", a_arg, "first algebra")->required();
    duality->add_option("--b", b_arg, "second algebra")->required();
    add_common(duality, opts);

    auto* repro = app.add_subcommand("reproduce", "replay a named worked example");
    repro->add_option("id", id_arg, "example identifier (or 'list')")->required();
    add_common(repro, opts, false);

    CLI11_PARSE(app, argc, argv);
    auto t0 = std::chrono::steady_clock::now();

    try {
        GBOptions gbo{.degree = opts.degree, .hard_cap = 12};
        FieldCtxPtr field = parse_field_arg(opts.field);

        if (*validate || *build) {
            json spec;
            if (spec_arg == "@-") {
                spec = json::parse(std::cin);
            } else if (spec_arg[0] == '@') {
                std::ifstream in(spec_arg.substr(1));
                if (!in) throw SpecParseError("cannot open " + spec_arg.substr(1));
                spec = json::parse(in);
            } else if (spec_arg[0] == '{') {
                spec = json::parse(spec_arg);
            }
            FrobeniusAlgebra alg = spec.is_null() ? parse_algebra_arg(spec_arg, field)
                                                  : frobenius_from_spec(spec, field);
            json results;
            results["valid"] = true;
            results["dimension"] = alg.dim();
            results["symmetric"] = is_symmetric(alg);
            if (*build) results["algebra"] = algebra_to_json(*alg.carrier(), true);
            emit(make_report(*validate ? "validate" : "build",
                             json{{"spec", spec_arg}, {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        if (*comeasure || *dimension) {
            FrobeniusAlgebra A = parse_algebra_arg(a_arg, field);
            FrobeniusAlgebra B = parse_algebra_arg(b_arg, field);
            auto pair = build_comeasure_pair(A.carrier(), B.carrier(), gbo);
            auto qd = quotient_dimension(*pair.gb);
            json results;
            results["status"] = status_str(pair.status());
            if (qd.kind == QuotientDim::Kind::Finite) results["dimension"] = qd.dimension;
            if (qd.kind == QuotientDim::Kind::Undetermined) {
                results["degree_checked"] = qd.degree_checked;
                results["normal_words_so_far"] = qd.count_so_far;
            }
            if (*comeasure)
                results["comeasuring"] =
                    comeasuring_to_json(pair, json{{"arg", a_arg}}, json{{"arg", b_arg}});
            emit(make_report(*comeasure ? "comeasure" : "dimension",
                             json{{"a", a_arg}, {"b", b_arg}, {"field", opts.field},
                                  {"degree", opts.degree}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        auto build_dual = [&](json& results) {
            FrobeniusAlgebra A = parse_algebra_arg(a_arg, field);
            FrobeniusAlgebra B = parse_algebra_arg(b_arg, field);
            auto pair = build_comeasure_pair(A.carrier(), B.carrier(), gbo);
            if (!pair.is_finite())
                throw NotFinite("quotient undetermined at degree " +
                                std::to_string(opts.degree));
            auto C = std::make_shared<const DualCoalgebra>(
                dual_coalgebra(std::make_shared<const QuotientAlgebra>(pair.quotient())));
            results["dimension"] = C->dim();
            return std::make_pair(std::move(pair), C);
        };

        if (*dualco) {
            json results;
            auto [pair, C] = build_dual(results);
            json delta = json::array();
            for (uint32_t i = 0; i < C->dim(); ++i) {
                json row = json::array();
                for (const auto& [j, l, c] : C->delta[i])
                    row.push_back(json{{"j", j}, {"k", l}, {"c", scalar_display(c)}});
                delta.push_back(std::move(row));
            }
            results["delta"] = std::move(delta);
            json counit = json::array();
            for (const auto& c : C->counit) counit.push_back(scalar_display(c));
            results["counit"] = std::move(counit);
            emit(make_report("dual-coalgebra",
                             json{{"a", a_arg}, {"b", b_arg}, {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        if (*grouplikes) {
            json results;
            auto [pair, C] = build_dual(results);
            auto gs = grouplikes_enumerate(*C, opts.budget);
            results["count"] = gs.size();
            json vecs = json::array();
            for (const auto& g : gs) {
                json v = json::array();
                for (const auto& c : g) v.push_back(scalar_display(c));
                vecs.push_back(std::move(v));
            }
            results["grouplikes"] = std::move(vecs);
            emit(make_report("grouplikes",
                             json{{"a", a_arg}, {"b", b_arg}, {"field", opts.field},
                                  {"budget", opts.budget}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        if (*prim) {
            json results;
            auto built = build_dual(results);
            auto& pair = built.first;
            auto& C = built.second;
            auto pick = [&](const std::string& arg) -> Vec {
                if (arg == "unit") return unit_j(pair);
                auto gs = grouplikes_enumerate(*C, opts.budget);
                size_t idx = std::stoul(arg);
                if (idx >= gs.size()) throw SpecParseError("grouplike index out of range");
                return gs[idx];
            };
            auto basis = primitives(*C, pick(g_arg), pick(h_arg));
            results["dimension_of_space"] = basis.size();
            json vecs = json::array();
            for (const auto& v : basis) {
                json row = json::array();
                for (const auto& c : v) row.push_back(scalar_display(c));
                vecs.push_back(std::move(row));
            }
            results["basis"] = std::move(vecs);
            emit(make_report("primitives",
                             json{{"a", a_arg}, {"b", b_arg}, {"g", g_arg}, {"h", h_arg},
                                  {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        if (*antipode) {
            FrobeniusAlgebra A = parse_algebra_arg(a_arg, field);
            FrobeniusAlgebra B = parse_algebra_arg(b_arg, field);
            auto pairBA = build_comeasure_pair(B.carrier(), A.carrier(), gbo);
            auto pairAB = build_comeasure_pair(A.carrier(), B.carrier(), gbo);
            auto S = antipode_S(A, B, pairBA, pairAB);
            json results;
            json images = json::array();
            for (const auto& img : S.generator_images) {
                json v = json::array();
                for (const auto& c : img) v.push_back(scalar_display(c));
                images.push_back(std::move(v));
            }
            results["S_generator_images"] = std::move(images);
            auto s = antipode_dual(A, B, pairAB, pairBA);
            json rows = json::array();
            for (const auto& col : s) {
                json v = json::array();
                for (const auto& c : col) v.push_back(scalar_display(c));
                rows.push_back(std::move(v));
            }
            results["antipode_dual_columns"] = std::move(rows);
            emit(make_report("antipode",
                             json{{"a", a_arg}, {"b", b_arg}, {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return 0;
        }

        if (*hopf) {
            std::vector<FrobeniusAlgebra> objs;
            for (const auto& o : objects_arg) objs.push_back(parse_algebra_arg(o, field));
            auto rep = hopf_category_check(objs, gbo);
            json results;
            results["pass"] = rep.pass();
            results["hom_dims"] = dims_json(rep.hom_dims);
            results["failures"] = rep.failures;
            auto vec_json = [](const Vec& v) {
                json row = json::array();
                for (const auto& c : v) row.push_back(scalar_display(c));
                return row;
            };
            auto matrix_json = [&](const Matrix& cols) {
                json m = json::array();
                for (const auto& col : cols) m.push_back(vec_json(col));
                return m;
            };
            json units = json::array();
            for (const auto& u : rep.units) units.push_back(vec_json(u));
            results["units"] = std::move(units);
            json antipodes = json::array();
            for (const auto& row : rep.antipodes) {
                json r = json::array();
                for (const auto& mat : row) r.push_back(matrix_json(mat));
                antipodes.push_back(std::move(r));
            }
            results["antipode_matrices"] = std::move(antipodes);
            json comps = json::array();
            for (size_t i = 0; i < rep.compositions.size(); ++i)
                for (size_t j = 0; j < rep.compositions.size(); ++j)
                    for (size_t l = 0; l < rep.compositions.size(); ++l) {
                        json entry;
                        entry["objects"] = {i, j, l};
                        json table = json::array();
                        for (const auto& row : rep.compositions[i][j][l]) {
                            json r = json::array();
                            for (const auto& v : row) r.push_back(vec_json(v));
                            table.push_back(std::move(r));
                        }
                        entry["table"] = std::move(table);
                        comps.push_back(std::move(entry));
                    }
            results["composition_tables"] = std::move(comps);
            json gls = json::array();
            for (size_t i = 0; i < rep.grouplikes.size(); ++i)
                for (size_t j = 0; j < rep.grouplikes.size(); ++j) {
                    if (rep.grouplikes[i][j].empty() && rep.hom_dims[i][j] > 0) continue;
                    json entry;
                    entry["pair"] = {i, j};
                    json vs = json::array();
                    for (const auto& g : rep.grouplikes[i][j]) vs.push_back(vec_json(g));
                    entry["grouplikes"] = std::move(vs);
                    gls.push_back(std::move(entry));
                }
            results["grouplike_inventories"] = std::move(gls);
            // named self-case summaries: the universal acting Hopf algebra C(A->A)
            json acting = json::array();
            for (size_t i = 0; i < objs.size(); ++i) {
                json entry;
                entry["object"] = objects_arg[i];
                entry["dim"] = rep.hom_dims[i][i];
                entry["unit"] = vec_json(rep.units[i]);
                entry["antipode"] = matrix_json(rep.antipodes[i][i]);
                bool involutive = true;
                const auto& s = rep.antipodes[i][i];
                for (size_t p = 0; p < s.size() && involutive; ++p) {
                    Vec round(s.size(), field->zero());
                    for (size_t t = 0; t < s.size(); ++t) {
                        if (s[p][t].is_zero()) continue;
                        for (size_t r = 0; r < s.size(); ++r) round[r] += s[p][t] * s[t][r];
                    }
                    for (size_t r = 0; r < s.size(); ++r)
                        if (!(round[r] == (r == p ? field->one() : field->zero())))
                            involutive = false;
                }
                entry["antipode_involutive"] = involutive;
                if (!rep.grouplikes[i][i].empty() || rep.hom_dims[i][i] == 0)
                    entry["grouplike_count"] = rep.grouplikes[i][i].size();
                acting.push_back(std::move(entry));
            }
            results["universal_acting_hopf"] = std::move(acting);
            // axiom families, summarized from the failure list
            auto none_mention = [&](const char* key) {
                for (const auto& f : rep.failures)
                    if (f.find(key) != std::string::npos) return false;
                return true;
            };
            results["axiom_checks"] = json{
                {"measuring", none_mention("measuring")},
                {"associativity", none_mention("associativity")},
                {"unitality", none_mention("unitality")},
                {"coalgebra_maps", none_mention("coalgebra map") && none_mention("counit")},
                {"units_grouplike", none_mention("not grouplike")},
                {"antipode_identities", none_mention("antipode identity")},
                {"anti_comultiplicativity", none_mention("anti-comultiplicativity")},
                {"involutive_on_symmetric", none_mention("symmetric pair")}};
            emit(make_report("hopf-check",
                             json{{"objects", objects_arg}, {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return rep.pass() ? 0 : 2;
        }

        if (*duality) {
            FrobeniusAlgebra A = parse_algebra_arg(a_arg, field);
            FrobeniusAlgebra B = parse_algebra_arg(b_arg, field);
            auto rep = gamma_pi_factorization_check(A, B, gbo);
            json results;
            results["pass"] = rep.pass();
            results["dim_C_AB"] = rep.dim_AB;
            results["dim_C_dual"] = rep.dim_dual;
            results["failures"] = rep.failures;
            emit(make_report("duality-check",
                             json{{"a", a_arg}, {"b", b_arg}, {"field", opts.field}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return rep.pass() ? 0 : 2;
        }

        if (*repro) {
            if (id_arg == "list") {
                json results;
                results["ids"] = reproduce_ids();
                emit(make_report("reproduce", json{{"id", "list"}}, std::move(results),
                                 ms_since(t0), opts.degree),
                     opts);
                return 0;
            }
            auto outcome = run_reproduce(id_arg, opts.degree, opts.budget);
            json results = outcome.results;
            results["example"] = outcome.example;
            emit(make_report("reproduce", json{{"id", id_arg}, {"degree", opts.degree}},
                             std::move(results), ms_since(t0), opts.degree),
                 opts);
            return outcome.pass ? 0 : 2;
        }
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Resource ? 3 : 2;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
