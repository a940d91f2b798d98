#include "quivalg/json_io.hpp"

#include "quivalg/errors.hpp"

#include <fstream>
#include <sstream>

namespace quivalg {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw SchemaViolation(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaViolation(std::string(what) + " must be an integer");
    return j.get<int>();
}

int key_int(const std::string& key, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw SchemaViolation(std::string(what) + " key \"" + key + "\" is not an integer");
    }
}

Rational as_rational(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw SchemaViolation("coefficient must be a \"p/q\" string");
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw SchemaViolation(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& x : j) out.push_back(as_int(x, what));
    return out;
}

Json degree_map_json(const DegreeMap& d) {
    Json j = Json::object();
    for (const auto& [id, v] : d) j[std::to_string(id)] = v;
    return j;
}

DegreeMap degree_map_from(const Json& j) {
    if (!j.is_object()) throw SchemaViolation("degree map must be an object");
    DegreeMap d;
    for (const auto& [k, v] : j.items()) d[key_int(k, "degree map")] = as_int(v, "degree");
    return d;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw SchemaViolation(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaViolation("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

Json quiver_to_json(const Quiver& q, const DegreeMap* degrees) {
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows()) {
        Json x = {{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}};
        if (a.name) x["name"] = *a.name;
        if (degrees && degrees->count(a.id)) x["deg"] = degrees->at(a.id);
        arrows.push_back(std::move(x));
    }
    return Json{{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

ParsedQuiver quiver_from_json(const Json& j) {
    std::vector<int> vertices = int_list(field(j, "vertices"), "vertex");
    const Json& arr = field(j, "arrows");
    if (!arr.is_array()) throw SchemaViolation("\"arrows\" must be an array");
    std::vector<Arrow> arrows;
    DegreeMap degrees;
    bool all_deg = true;
    for (const Json& a : arr) {
        Arrow x{as_int(field(a, "id"), "id"), as_int(field(a, "src"), "src"), as_int(field(a, "tgt"), "tgt"), std::nullopt};
        if (a.contains("name")) {
            if (!a.at("name").is_string()) throw SchemaViolation("arrow name must be a string");
            x.name = a.at("name").get<std::string>();
        }
        if (a.contains("deg")) {
            int d = as_int(a.at("deg"), "deg");
            if (d != 0 && d != 1) throw SchemaViolation("deg must be 0 or 1");
            degrees[x.id] = d;
        } else {
            all_deg = false;
        }
        arrows.push_back(std::move(x));
    }
    ParsedQuiver out{build_quiver(vertices, arrows), std::nullopt};
    if (all_deg && !arrows.empty()) out.degrees = degrees;
    return out;
}

Json frozen_to_json(const FrozenData& f) {
    return Json{{"frozen_vertices", std::vector<int>(f.vertices.begin(), f.vertices.end())}};
}

VertexSet frozen_from_json(const Json& j) {
    auto v = int_list(field(j, "frozen_vertices"), "frozen vertex");
    return VertexSet(v.begin(), v.end());
}

Json element_to_json(const PathElement& x) {
    Json out = Json::array();
    for (const auto& [p, c] : x.terms) {
        if (p.arrows.empty())
            out.push_back({{"coef", to_string(c)}, {"vertex", p.source}});
        else
            out.push_back({{"coef", to_string(c)}, {"path", p.arrows}});
    }
    return out;
}

PathElement element_from_json(const Quiver& q, const Json& j) {
    if (!j.is_array()) throw SchemaViolation("path element must be an array");
    PathElement x;
    for (const Json& t : j) {
        Rational c = as_rational(field(t, "coef"));
        if (t.contains("vertex")) {
            int v = as_int(t.at("vertex"), "vertex");
            if (!q.has_vertex(v)) throw UnknownVertex(std::to_string(v));
            x.add(Path::stationary(v), c);
        } else {
            auto word = int_list(field(t, "path"), "arrow id");
            if (word.empty()) throw SchemaViolation("empty path needs \"vertex\"");
            x.add(Path::from_word(q, word), c);
        }
    }
    return x;
}

Json potential_to_json(const Potential& w) {
    Json out = Json::array();
    for (const auto& [p, c] : w.element.terms) out.push_back({{"coef", to_string(c)}, {"cycle", p.arrows}});
    return out;
}

Potential potential_from_json(const Quiver& q, const Json& j) {
    if (!j.is_array()) throw SchemaViolation("potential must be an array");
    Potential w;
    for (const Json& t : j) w.add(Path::from_word(q, int_list(field(t, "cycle"), "arrow id")), as_rational(field(t, "coef")));
    return w;
}

Json qp_to_json(const FrozenQP& qp) {
    Json j = {{"quiver", quiver_to_json(qp.quiver)},
              {"potential", potential_to_json(qp.potential)},
              {"frozen_vertices", std::vector<int>(qp.frozen.vertices.begin(), qp.frozen.vertices.end())}};
    if (qp.phi) j["phi"] = degree_map_json(*qp.phi);
    return j;
}

FrozenQP qp_from_json(const Json& j) {
    ParsedQuiver pq = quiver_from_json(field(j, "quiver"));
    Potential w = potential_from_json(pq.quiver, field(j, "potential"));
    VertexSet frozen;
    if (j.contains("frozen_vertices")) frozen = frozen_from_json(j);
    std::optional<DegreeMap> phi = pq.degrees;
    if (j.contains("phi")) phi = degree_map_from(j.at("phi"));
    return make_qp(pq.quiver, w, frozen, phi);
}

Json presentation_to_json(const AlgebraPresentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relations) rels.push_back(element_to_json(r));
    const DegreeMap* deg = p.degrees ? &*p.degrees : nullptr;
    return Json{{"quiver", quiver_to_json(p.quiver, deg)}, {"relations", std::move(rels)}};
}

AlgebraPresentation presentation_from_json(const Json& j) {
    ParsedQuiver pq = quiver_from_json(field(j, "quiver"));
    AlgebraPresentation p{pq.quiver, {}, pq.degrees};
    const Json& rels = field(j, "relations");
    if (!rels.is_array()) throw SchemaViolation("\"relations\" must be an array");
    for (const Json& r : rels) p.relations.push_back(element_from_json(pq.quiver, r));
    return p;
}

Json word_to_json(const WordInput& w) {
    return Json{{"graph", quiver_to_json(w.graph)}, {"letters", w.letters}};
}

WordInput word_from_json(const Json& j) {
    return WordInput{quiver_from_json(field(j, "graph")).quiver, int_list(field(j, "letters"), "letter")};
}

Word parse_word_list(const std::string& text) {
    Word w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        w.push_back(key_int(item, "word letter"));
    }
    return w;
}

Json birs_to_json(const BirsQP& b) {
    Json j = qp_to_json(b.qp);
    Json kinds = Json::object(), positions = Json::object();
    for (const auto& [id, k] : b.kinds) kinds[std::to_string(id)] = to_string(k);
    for (const auto& [v, t] : b.position_type) positions[std::to_string(v)] = t;
    j["kinds"] = std::move(kinds);
    j["positions"] = std::move(positions);
    return j;
}

Json module_to_json(const FDModule& m) {
    Json dims = Json::object(), mats = Json::object();
    for (int v : m.quiver.vertices()) dims[std::to_string(v)] = m.dim(v);
    for (const auto& [id, mat] : m.mats) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(to_string(mat(r, c)));
            rows.push_back(std::move(row));
        }
        mats[std::to_string(id)] = std::move(rows);
    }
    Json j = {{"dims", std::move(dims)}, {"mats", std::move(mats)}};
    if (m.grading) {
        Json g = Json::object();
        for (const auto& [v, d] : *m.grading) g[std::to_string(v)] = d;
        j["grading"] = std::move(g);
    }
    return j;
}

FDModule module_from_json(const Quiver& q, const Json& j) {
    FDModule m;
    m.quiver = q;
    const Json& dims = field(j, "dims");
    if (!dims.is_object()) throw SchemaViolation("\"dims\" must be an object");
    for (int v : q.vertices()) m.dims[v] = 0;
    for (const auto& [k, d] : dims.items()) {
        int v = key_int(k, "dims");
        if (!q.has_vertex(v)) throw UnknownVertex(k);
        int n = as_int(d, "dimension");
        if (n < 0) throw SchemaViolation("negative dimension");
        m.dims[v] = static_cast<std::size_t>(n);
    }
    const Json& mats = field(j, "mats");
    if (!mats.is_object()) throw SchemaViolation("\"mats\" must be an object");
    for (const Arrow& a : q.arrows()) m.mats[a.id] = Matrix(m.dim(a.src), m.dim(a.tgt));
    for (const auto& [k, rows] : mats.items()) {
        int id = key_int(k, "mats");
        if (!q.has_arrow(id)) throw UnknownArrow(k);
        const Arrow& a = q.arrow(id);
        if (!rows.is_array() || rows.size() != m.dim(a.src)) throw SchemaViolation("matrix of arrow " + k + " has the wrong row count");
        Matrix mat(m.dim(a.src), m.dim(a.tgt));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array() || rows[r].size() != m.dim(a.tgt)) throw SchemaViolation("matrix of arrow " + k + " has the wrong column count");
            for (std::size_t c = 0; c < rows[r].size(); ++c) mat(r, c) = as_rational(rows[r][c]);
        }
        m.mats[id] = std::move(mat);
    }
    if (j.contains("grading")) {
        std::map<int, std::vector<int>> g;
        for (int v : q.vertices()) g[v] = {};
        for (const auto& [k, d] : j.at("grading").items()) g[key_int(k, "grading")] = int_list(d, "degree");
        m.grading = std::move(g);
    }
    validate_module(m);
    return m;
}

Json hypotheses_to_json(const HypothesisReport& h) {
    auto one = [](const HypothesisResult& r) { return Json{{"pass", r.pass}, {"witness", r.witness}}; };
    return Json{{"H1", one(h.h1)}, {"H2", one(h.h2)}, {"H3", one(h.h3)}, {"H4", one(h.h4)},
                {"leading_terms_distinct", h.leading_terms_distinct}, {"all_pass", h.all_pass()}};
}

Json keller_report_to_json(const KellerReport& r) {
    Json renaming = Json::object();
    for (const auto& [a, b] : r.renaming) renaming[std::to_string(a)] = b;
    Json j = {{"quiver_match", r.quiver_match},
              {"potential_match", r.potential_match},
              {"ambiguities", r.ambiguities},
              {"renaming", std::move(renaming)},
              {"hypotheses", hypotheses_to_json(r.hypotheses)},
              {"warnings", r.warnings}};
    j["abar_global_dimension"] = r.abar_global_dimension ? Json(*r.abar_global_dimension) : Json("above bound");
    return j;
}

Json algebra_to_json(const FDAlgebra& a) {
    Json basis = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) {
        Json b = {{"source", a.basis[k].source}, {"target", a.basis[k].target}, {"path", a.basis[k].arrows}, {"length", a.lengths[k]}};
        if (a.degrees) b["deg"] = (*a.degrees)[k];
        basis.push_back(std::move(b));
    }
    return Json{{"dim", a.dim()}, {"stabilized_length", a.stabilized_length}, {"basis", std::move(basis)}};
}

}  // namespace quivalg
