#include "schub/json_io.hpp"

#include <algorithm>

namespace schub {

namespace {

int read_dimension(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw MalformedInput("expected an object with an integer field \"n\"");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxGroundSet) throw MalformedInput("\"n\" out of range");
    return n;
}

WeightVector read_vector(const Json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw MalformedInput(std::string(what) + " must be an array of length n");
    WeightVector v;
    v.reserve(n);
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw MalformedInput(std::string(what) + " entries must be integers");
        v.push_back(e.get<int>());
    }
    return v;
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        Json term;
        term["exp"] = exp;
        term["coeff"] = coeff.get_str();
        terms.push_back(std::move(term));
    }
    Json j;
    j["n"] = f.num_vars();
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    int n = read_dimension(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw MalformedInput("polynomial needs a \"terms\" array");
    Polynomial f(n);
    for (const Json& term : j["terms"]) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
            throw MalformedInput("each term needs \"exp\" and \"coeff\"");
        WeightVector exp = read_vector(term["exp"], n, "term exponent");
        for (int e : exp)
            if (e < 0) throw MalformedInput("exponents must be nonnegative");
        Int coeff;
        const Json& c = term["coeff"];
        if (c.is_string()) {
            try {
                coeff = Int(c.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw MalformedInput("coefficient is not a decimal integer");
            }
        } else if (c.is_number_integer()) {
            coeff = Int(static_cast<long>(c.get<long long>()));
        } else {
            throw MalformedInput("coefficient must be a string or integer");
        }
        f.add_term(exp, coeff);
    }
    return f;
}

Json diagram_to_json(const Diagram& d) {
    Json columns = Json::array();
    for (int j = 1; j <= d.n(); ++j) columns.push_back(subset_elements(d.column(j)));
    Json cells = Json::array();
    for (const auto& [i, j] : d.cells()) cells.push_back(Json::array({i, j}));
    Json out;
    out["n"] = d.n();
    out["columns"] = std::move(columns);
    out["cells"] = std::move(cells);
    return out;
}

Diagram diagram_from_json(const Json& j) {
    int n = read_dimension(j);
    if (!j.contains("columns") || !j["columns"].is_array() ||
        static_cast<int>(j["columns"].size()) != n)
        throw MalformedInput("diagram needs a \"columns\" array of length n");
    std::vector<Subset> columns;
    columns.reserve(n);
    for (const Json& col : j["columns"]) {
        if (!col.is_array()) throw MalformedInput("each column must be an array of rows");
        std::vector<int> rows;
        for (const Json& e : col) {
            if (!e.is_number_integer()) throw MalformedInput("row indices must be integers");
            rows.push_back(e.get<int>());
        }
        columns.push_back(subset_from_elements(rows, n));
    }
    return Diagram(n, std::move(columns));
}

namespace {

std::vector<Subset> subsets_by_size_then_lex(int n) {
    std::vector<Subset> all;
    for (Subset s = 1; s <= full_set(n) && n > 0; ++s) {
        all.push_back(s);
        if (s == full_set(n)) break;
    }
    std::sort(all.begin(), all.end(), [](Subset a, Subset b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return subset_elements(a) < subset_elements(b);
    });
    return all;
}

}  // namespace

Json polytope_to_json(const GeneralizedPermutahedron& p) {
    Json z = Json::array();
    for (Subset s : subsets_by_size_then_lex(p.n())) {
        Json entry;
        entry["I"] = subset_elements(s);
        entry["z"] = p.z(s);
        z.push_back(std::move(entry));
    }
    Json j;
    j["n"] = p.n();
    j["z"] = std::move(z);
    return j;
}

GeneralizedPermutahedron polytope_from_json(const Json& j) {
    int n = read_dimension(j);
    if (!j.contains("z") || !j["z"].is_array())
        throw MalformedInput("polytope needs a \"z\" array");
    std::vector<long long> z(std::size_t{1} << n, 0);
    std::vector<bool> seen(z.size(), false);
    for (const Json& entry : j["z"]) {
        if (!entry.is_object() || !entry.contains("I") || !entry["I"].is_array() ||
            !entry.contains("z") || !entry["z"].is_number_integer())
            throw MalformedInput("each z entry needs \"I\" and an integer \"z\"");
        std::vector<int> elems;
        for (const Json& e : entry["I"]) {
            if (!e.is_number_integer()) throw MalformedInput("subset entries must be integers");
            elems.push_back(e.get<int>());
        }
        Subset s = subset_from_elements(elems, n);
        if (s == 0) throw MalformedInput("z is indexed by nonempty subsets");
        if (seen[s]) throw MalformedInput("duplicate subset in z");
        seen[s] = true;
        z[s] = entry["z"].get<long long>();
    }
    for (Subset s = 1; s < seen.size(); ++s)
        if (!seen[s]) throw MalformedInput("z must cover every nonempty subset");
    return GeneralizedPermutahedron(n, std::move(z));
}

Json lattice_points_to_json(const LatticePointSet& s) {
    Json points = Json::array();
    for (const WeightVector& v : s.points) points.push_back(v);
    Json j;
    j["n"] = s.n;
    j["points"] = std::move(points);
    return j;
}

LatticePointSet lattice_points_from_json(const Json& j) {
    int n = read_dimension(j);
    if (!j.contains("points") || !j["points"].is_array())
        throw MalformedInput("lattice point set needs a \"points\" array");
    LatticePointSet out;
    out.n = n;
    for (const Json& p : j["points"]) out.points.insert(read_vector(p, n, "point"));
    return out;
}

Json report_to_json(const SweepReport& report) {
    Json failed = Json::array();
    for (const SweepFailure& f : report.failures) {
        Json entry;
        entry["item"] = f.item;
        entry["check"] = f.check;
        entry["detail"] = f.detail;
        failed.push_back(std::move(entry));
    }
    Json j;
    j["sweep"] = report.sweep;
    j["total"] = report.total;
    j["passed"] = report.passed;
    j["failed"] = std::move(failed);
    j["seed"] = report.seed;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace schub
