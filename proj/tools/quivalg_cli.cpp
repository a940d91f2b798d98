#include "quivalg/errors.hpp"
#include "quivalg/examples.hpp"
#include "quivalg/keller.hpp"
#include "quivalg/subalgebra.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace quivalg;

namespace {

struct Globals {
    int max_len = 32;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

struct Outcome {
    Json result;
    bool pass = true;
    std::string dot;  // used with --format dot
};

struct Inputs {
    std::string qp, pres, graph, word, word2, dot, module_from, module_to, complex;
    std::string pi;
    int arrow = 0, vertex = 0, bound = 3, from = 0, to = 0;
    std::size_t cap = 100000;
    bool as_given = false;
};

VertexSet vertex_list(const std::string& text) {
    Word w = parse_word_list(text);
    return VertexSet(w.begin(), w.end());
}

Word require_word(const Inputs& in) {
    if (in.word.empty()) throw SchemaViolation("--word is required");
    return parse_word_list(in.word);
}

Quiver require_graph(const Inputs& in) {
    if (in.graph.empty()) throw SchemaViolation("--graph is required");
    return quiver_from_json(read_json_file(in.graph)).quiver;
}

FrozenQP require_qp(const Inputs& in) {
    if (in.qp.empty()) throw SchemaViolation("--qp is required");
    return qp_from_json(read_json_file(in.qp));
}

AlgebraPresentation require_pres(const Inputs& in) {
    if (in.pres.empty()) throw SchemaViolation("--pres is required");
    return presentation_from_json(read_json_file(in.pres));
}

Quiver rep_orientation(const Inputs& in) {
    Quiver g = require_graph(in);
    if (in.as_given) return g;
    Word w = require_word(in);
    VertexSet unused;
    for (int v : g.vertices())
        if (std::find(w.begin(), w.end(), v) == w.end()) unused.insert(v);
    return admissible_orientation(full_subquiver(g, unused), w);
}

Json words_json(const std::vector<Word>& ws) {
    Json j = Json::array();
    for (const auto& w : ws) j.push_back(w);
    return j;
}

Json derived_json(const DerivedPresentation& d) {
    Json j = presentation_to_json(d.pres);
    j["relation_arrows"] = d.relation_arrows;
    j["zero_relation_arrows"] = d.zero_relation_arrows;
    return j;
}

Json resolution_json(const Resolution& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json x = Json::object();
        for (const auto& [v, m] : t) x[std::to_string(v)] = m;
        terms.push_back(std::move(x));
    }
    Json j = {{"terms", std::move(terms)}};
    j["projective_dimension"] = r.projective_dimension ? Json(*r.projective_dimension) : Json("above bound");
    return j;
}

Json graded_quiver_json(const Quiver& q, const std::optional<DegreeMap>& d) {
    return quiver_to_json(q, d ? &*d : nullptr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quivers with potential, frozen Jacobian algebras and cluster-tilting objects"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Inputs in;
    app.add_option("--max-len", g.max_len, "Path-length limit for quotient and ideal certificates")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_flag("--timing", g.timing, "Print elapsed time on stderr");

    std::function<Outcome()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<Outcome()> fn) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->callback([&action, fn] { action = fn; });
        return s;
    };
    auto group = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->require_subcommand(1);
        return s;
    };

    // qp
    CLI::App* qp = group("qp", "Quivers with potential");
    auto* qp_derive = leaf(qp, "derive", "Cyclic derivatives", [&] {
        FrozenQP x = require_qp(in);
        Json rels = Json::array();
        for (const auto& r : jacobian_relations(x))
            if (in.arrow == 0 || r.arrow == in.arrow)
                rels.push_back({{"arrow", r.arrow}, {"derivative", element_to_json(r.derivative)}, {"zero", r.zero}});
        if (in.arrow != 0 && rels.empty())
            rels.push_back({{"arrow", in.arrow}, {"derivative", element_to_json(cyclic_derivative(x.quiver, x.potential, in.arrow))}});
        return Outcome{rels};
    });
    qp_derive->add_option("--qp", in.qp)->required();
    qp_derive->add_option("--arrow", in.arrow, "Only this arrow id");
    auto* qp_check = leaf(qp, "check", "Hypotheses (H1)-(H4)", [&] {
        FrozenQP x = require_qp(in);
        VertexSet pi = in.pi.empty() ? x.frozen.vertices : vertex_list(in.pi);
        HypothesisReport h = check_hypotheses(x, pi);
        return Outcome{hypotheses_to_json(h), h.all_pass()};
    });
    qp_check->add_option("--qp", in.qp)->required();
    qp_check->add_option("--pi", in.pi, "Projective-injective vertices, comma separated (default F0)");
    auto* qp_red = leaf(qp, "reduced", "Reducedness of the potential", [&] {
        ReducedReport r = is_reduced_qp(require_qp(in));
        return Outcome{Json{{"reduced", r.reduced}, {"reasons", r.reasons}}};
    });
    qp_red->add_option("--qp", in.qp)->required();

    // subalgebra
    CLI::App* sub = group("subalgebra", "A = B_0, A-bar and B-bar");
    auto* sub_a = leaf(sub, "a", "Degree-zero subalgebra A", [&] { return Outcome{derived_json(degree_zero_presentation(require_qp(in)))}; });
    auto* sub_abar = leaf(sub, "abar", "A-bar = A / A e_F A", [&] { return Outcome{derived_json(bar_quotient_presentation(require_qp(in)))}; });
    auto* sub_bbar = leaf(sub, "bbar", "(Q-bar, W-bar)", [&] { return Outcome{qp_to_json(bar_jacobian_qp(require_qp(in)))}; });
    for (auto* s : {sub_a, sub_abar, sub_bbar}) s->add_option("--qp", in.qp)->required();

    // keller
    CLI::App* kel = group("keller", "Keller's QP of an algebra of global dimension 2");
    auto* kel_ext = leaf(kel, "extend", "Add one arrow per relation", [&] {
        KellerExtension k = keller_extend(require_pres(in));
        return Outcome{Json{{"quiver", quiver_to_json(k.quiver)}, {"added_arrows", k.added_arrows}, {"potential", potential_to_json(k.potential)}}};
    });
    kel_ext->add_option("--pres", in.pres)->required();
    auto* kel_ver = leaf(kel, "verify", "Compare Keller's QP of A-bar with (Q-bar, W-bar)", [&] {
        FrozenQP x = require_qp(in);
        std::optional<VertexSet> pi;
        if (!in.pi.empty()) pi = vertex_list(in.pi);
        KellerReport r = verify_endomorphism_match(x, pi, g.max_len);
        return Outcome{keller_report_to_json(r), r.match()};
    });
    kel_ver->add_option("--qp", in.qp)->required();
    kel_ver->add_option("--pi", in.pi);

    // coxeter
    CLI::App* cox = group("coxeter", "Coxeter groups of graphs");
    auto* cox_sys = leaf(cox, "system", "Coxeter matrix", [&] {
        CoxeterSystem s = coxeter_system(require_graph(in));
        Json m = Json::array();
        for (int a : s.generators) {
            Json row = Json::array();
            for (int b : s.generators) {
                int o = s.order(a, b);
                row.push_back(o == kInfinity ? Json("inf") : Json(o));
            }
            m.push_back(std::move(row));
        }
        return Outcome{Json{{"generators", s.generators}, {"m", std::move(m)}}};
    });
    auto* cox_red = leaf(cox, "reduced", "Is the word reduced", [&] {
        return Outcome{Json(is_reduced(coxeter_system(require_graph(in)), require_word(in)))};
    });
    auto* cox_reduce = leaf(cox, "reduce", "A reduced word for the same element", [&] {
        return Outcome{Json(reduce_word(coxeter_system(require_graph(in)), require_word(in)))};
    });
    auto* cox_eq = leaf(cox, "equal", "Do two words give the same element", [&] {
        return Outcome{Json(elements_equal(coxeter_system(require_graph(in)), require_word(in), parse_word_list(in.word2)))};
    });
    auto* cox_enum = leaf(cox, "enumerate", "All elements as shortlex reduced words", [&] {
        auto ws = enumerate_group(coxeter_system(require_graph(in)), in.cap);
        return Outcome{Json{{"order", ws.size()}, {"elements", words_json(ws)}}};
    });
    for (auto* s : {cox_sys, cox_red, cox_reduce, cox_eq, cox_enum}) s->add_option("--graph", in.graph)->required();
    for (auto* s : {cox_red, cox_reduce, cox_eq}) s->add_option("--word", in.word)->required();
    cox_eq->add_option("--word2", in.word2)->required();
    cox_enum->add_option("--cap", in.cap);

    // birs
    CLI::App* birs = group("birs", "The QP of a reduced word");
    auto* birs_last = leaf(birs, "last", "Last occurrence of each letter", [&] {
        Json j = Json::object();
        for (auto [v, p] : last_occurrences(require_word(in))) j[std::to_string(v)] = p;
        return Outcome{j};
    });
    auto* birs_orient = leaf(birs, "orient", "Admissible orientation", [&] {
        Quiver o = admissible_orientation(require_graph(in), require_word(in));
        return Outcome{quiver_to_json(o), true, to_dot(o)};
    });
    auto* birs_build = leaf(birs, "build", "Q_w, W_w, F and φ", [&] {
        BirsQP b = build_birs_qp(require_graph(in), require_word(in));
        std::string dot = to_dot(b.qp.quiver, &b.qp.frozen, &*b.qp.phi);
        if (!in.dot.empty()) {
            std::ofstream f(in.dot);
            if (!f) throw SchemaViolation("cannot write " + in.dot);
            f << dot;
        }
        Json j = birs_to_json(b);
        j["hypotheses"] = hypotheses_to_json(b.hypotheses);
        return Outcome{j, true, dot};
    });
    birs_last->add_option("--word", in.word)->required();
    for (auto* s : {birs_orient, birs_build}) {
        s->add_option("--graph", in.graph)->required();
        s->add_option("--word", in.word)->required();
    }
    birs_build->add_option("--dot", in.dot, "Also write DOT to this file");

    // alg
    CLI::App* alg = group("alg", "Finite-dimensional quotients kQ/I");
    auto* alg_basis = leaf(alg, "basis", "Certified basis", [&] { return Outcome{algebra_to_json(quotient_basis(require_pres(in), g.max_len))}; });
    auto* alg_dim = leaf(alg, "dim", "Dimension", [&] { return Outcome{Json(algebra_dimension(require_pres(in), g.max_len))}; });
    auto* alg_gl = leaf(alg, "gldim", "Global dimension up to a bound", [&] {
        auto d = global_dimension(quotient_basis(require_pres(in), g.max_len), in.bound);
        return Outcome{d ? Json(*d) : Json("above bound")};
    });
    auto* alg_res = leaf(alg, "resolve", "Minimal projective resolution of a simple", [&] {
        FDAlgebra a = quotient_basis(require_pres(in), g.max_len);
        return Outcome{resolution_json(projective_resolution(a, simple_module(a.quiver, in.vertex), in.bound))};
    });
    auto* alg_exact = leaf(alg, "exact", "Exactness of a complex of modules", [&] {
        if (in.complex.empty()) throw SchemaViolation("--complex is required");
        Json j = read_json_file(in.complex);
        AlgebraPresentation p = presentation_from_json(j.at("presentation"));
        std::vector<FDModule> mods;
        for (const Json& m : j.at("modules")) {
            mods.push_back(module_from_json(p.quiver, m));
            validate_module(mods.back(), &p);
        }
        std::vector<ModuleMap> maps;
        for (const Json& f : j.at("maps")) {
            ModuleMap mm;
            std::size_t k = maps.size();
            if (k + 1 >= mods.size()) throw SchemaViolation("too many maps");
            for (int v : p.quiver.vertices()) {
                Matrix m(mods[k + 1].dim(v), mods[k].dim(v));
                if (f.contains(std::to_string(v))) {
                    const Json& rows = f.at(std::to_string(v));
                    if (rows.size() != m.rows()) throw SchemaViolation("map has the wrong shape");
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        if (rows[r].size() != m.cols()) throw SchemaViolation("map has the wrong shape");
                        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c].get<std::string>());
                    }
                }
                mm.comps[v] = std::move(m);
            }
            maps.push_back(std::move(mm));
        }
        ComplexReport cr = check_complex_exact(mods, maps);
        return Outcome{Json{{"exact", cr.exact}, {"homology", cr.homology}}, cr.exact};
    });
    for (auto* s : {alg_basis, alg_dim, alg_gl, alg_res, alg_exact}) s->add_option("--pres", in.pres);
    for (auto* s : {alg_basis, alg_dim, alg_gl, alg_res}) s->get_option("--pres")->required();
    alg_gl->add_option("--bound", in.bound);
    alg_res->add_option("--vertex", in.vertex)->required();
    alg_res->add_option("--bound", in.bound);
    alg_exact->add_option("--complex", in.complex, "JSON {presentation, modules, maps}")->required();

    // rep
    CLI::App* rep = group("rep", "Λ_w and the modules T_p");
    auto* rep_lambda = leaf(rep, "lambda", "Λ_w with its certificate", [&] {
        LambdaW lw = lambda_w(rep_orientation(in), require_word(in), g.max_len);
        Json j = algebra_to_json(lw.algebra);
        j["vanishing_layer"] = lw.vanishing_layer;
        j["layers"] = lw.layers;
        return Outcome{j};
    });
    auto* rep_tw = leaf(rep, "tw", "The summands T_p", [&] {
        LambdaW lw = lambda_w(rep_orientation(in), require_word(in), g.max_len);
        Json arr = Json::array();
        for (const auto& t : lw.summands) arr.push_back(module_to_json(t));
        return Outcome{Json{{"quiver", quiver_to_json(lw.dq.quiver, &lw.dq.degrees)}, {"summands", std::move(arr)}}};
    });
    auto* rep_hom = leaf(rep, "hom", "Graded Hom(T_from, T_to)", [&] {
        LambdaW lw = lambda_w(rep_orientation(in), require_word(in), g.max_len);
        int n = static_cast<int>(lw.summands.size());
        if (in.from < 1 || in.from > n || in.to < 1 || in.to > n) throw SchemaViolation("summand index out of range");
        Json j = Json::object();
        for (const auto& [d, maps] : graded_hom_space(lw.summands[in.from - 1], lw.summands[in.to - 1]))
            j[std::to_string(d)] = maps.size();
        return Outcome{Json{{"dims_by_degree", j}}};
    });
    auto* rep_end = leaf(rep, "endquiver", "Gabriel quiver of End(T_w)", [&] {
        LambdaW lw = lambda_w(rep_orientation(in), require_word(in), g.max_len);
        EndQuiver eq = end_gabriel_quiver(lw.summands);
        Json j = graded_quiver_json(eq.quiver, eq.degrees);
        j["end_dim"] = eq.end_dim;
        return Outcome{j, true, to_dot(eq.quiver, nullptr, eq.degrees ? &*eq.degrees : nullptr)};
    });
    for (auto* s : {rep_lambda, rep_tw, rep_hom, rep_end}) {
        s->add_option("--graph", in.graph)->required();
        s->add_option("--word", in.word)->required();
        s->add_flag("--as-given", in.as_given, "Use the graph's arrow directions instead of the admissible orientation");
    }
    rep_hom->add_option("--from", in.from)->required();
    rep_hom->add_option("--to", in.to)->required();

    // verify-example
    std::string which;
    auto* ver = app.add_subcommand("verify-example", "Reproduce a worked example");
    ver->add_option("example", which)->required()->check(CLI::IsMember({"5.1", "5.2"}));
    ver->callback([&] {
        action = [&] {
            ExampleReport r = which == "5.1" ? verify_triangle_example(g.max_len) : verify_mutated_a3_example(g.max_len);
            return Outcome{r.to_json(), r.pass()};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    std::string command;
    for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: SchemaViolation: " << e.what() << "\n";
        return 2;
    }
    if (g.timing)
        std::cerr << "elapsed "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";

    std::string text;
    if (g.format == "dot") {
        if (o.dot.empty()) {
            std::cerr << "error: this command has no DOT output\n";
            return 2;
        }
        text = o.dot;
    } else {
        text = Json{{"command", command}, {"pass", o.pass}, {"result", o.result}}.dump(2) + "\n";
    }
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "error: cannot write " << g.out << "\n";
            return 2;
        }
        f << text;
    }
    return o.pass ? 0 : 1;
}
