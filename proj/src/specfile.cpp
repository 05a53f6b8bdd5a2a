#include "frobkit/specfile.hpp"

#include <json.hpp>

#include <sstream>

namespace frobkit {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError("rational must be a string like \"3\" or \"-2/5\"", where);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError(e.what(), where);
    }
}

MatQ matrix_field(const json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SpecError("expected " + std::to_string(n) + " rows", where);
    MatQ m(n, VecQ(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        const json& row = j[i];
        std::string rw = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw SpecError("expected " + std::to_string(n) + " entries", rw);
        for (int k = 0; k < n; ++k)
            m[i][k] = rational_field(row[k], rw + "[" + std::to_string(k) + "]");
    }
    return m;
}

MultiPoly terms_field(const json& j, int n, const std::string& where) {
    if (!j.is_array()) throw SpecError("expected an array of {coeff, exps} terms", where);
    MultiPoly p(n);
    for (size_t t = 0; t < j.size(); ++t) {
        std::string tw = where + "[" + std::to_string(t) + "]";
        const json& term = j[t];
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
            throw SpecError("term needs coeff and exps", tw);
        Rational c = rational_field(term["coeff"], tw + ".coeff");
        const json& ex = term["exps"];
        if (!ex.is_array() || static_cast<int>(ex.size()) != n)
            throw SpecError("exps must list " + std::to_string(n) + " exponents", tw + ".exps");
        std::vector<int> exps(n, 0);
        for (int i = 0; i < n; ++i) {
            if (!ex[i].is_number_integer() || ex[i].get<long long>() < 0)
                throw SpecError("exponents must be non-negative integers", tw + ".exps");
            exps[i] = ex[i].get<int>();
        }
        p = p + MultiPoly::monomial(n, exps, c);
    }
    return p;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(e.what(), "byte " + std::to_string(e.byte));
    }
    if (!root.is_object()) throw SpecError("top level must be an object");
    if (!root.contains("n") || !root["n"].is_number_integer())
        throw SpecError("missing integer dimension", "n");
    SpecFile out;
    out.n = root["n"].get<int>();
    if (out.n <= 0) throw SpecError("dimension must be positive", "n");

    bool has_pot = root.contains("potential");
    bool has_metric = root.contains("metric");
    bool has_euler = root.contains("euler");
    bool has_charge = root.contains("charge");
    if (has_pot != has_metric || has_pot != has_euler || has_pot != has_charge)
        throw SpecError("potential, metric, euler and charge must appear together");
    if (!has_pot && !root.contains("poisson"))
        throw SpecError("spec needs a potential block or a poisson block");

    if (has_pot) {
        out.potential = terms_field(root["potential"], out.n, "potential");
        MatQ metric = matrix_field(root["metric"], out.n, "metric");
        for (int i = 0; i < out.n; ++i)
            for (int j = i + 1; j < out.n; ++j)
                if (metric[i][j] != metric[j][i]) throw SpecError("metric not symmetric", "metric");
        out.metric = std::move(metric);
        const json& euler = root["euler"];
        if (!euler.is_object() || !euler.contains("a") || !euler.contains("b"))
            throw SpecError("euler needs a and b", "euler");
        out.euler_a = matrix_field(euler["a"], out.n, "euler.a");
        const json& b = euler["b"];
        if (!b.is_array() || static_cast<int>(b.size()) != out.n)
            throw SpecError("expected " + std::to_string(out.n) + " entries", "euler.b");
        VecQ bv(out.n, Rational(0));
        for (int i = 0; i < out.n; ++i)
            bv[i] = rational_field(b[i], "euler.b[" + std::to_string(i) + "]");
        out.euler_b = std::move(bv);
        out.charge = rational_field(root["charge"], "charge");
    }

    if (root.contains("chain")) {
        const json& chain = root["chain"];
        if (!chain.is_array()) throw SpecError("chain must be an array of {a, b}", "chain");
        for (size_t i = 0; i < chain.size(); ++i) {
            std::string cw = "chain[" + std::to_string(i) + "]";
            const json& rec = chain[i];
            if (!rec.is_object() || !rec.contains("a") || !rec.contains("b"))
                throw SpecError("chain record needs a and b", cw);
            AffineFieldRecord field;
            field.a = matrix_field(rec["a"], out.n, cw + ".a");
            const json& b = rec["b"];
            if (!b.is_array() || static_cast<int>(b.size()) != out.n)
                throw SpecError("expected " + std::to_string(out.n) + " entries", cw + ".b");
            field.b.assign(out.n, Rational(0));
            for (int k = 0; k < out.n; ++k)
                field.b[k] = rational_field(b[k], cw + ".b[" + std::to_string(k) + "]");
            out.chain.push_back(std::move(field));
        }
    }

    if (root.contains("poisson")) {
        const json& pj = root["poisson"];
        if (!pj.is_array() || static_cast<int>(pj.size()) != out.n)
            throw SpecError("expected " + std::to_string(out.n) + " rows", "poisson");
        MatP comps(out.n, std::vector<MultiPoly>(out.n, MultiPoly(out.n)));
        for (int i = 0; i < out.n; ++i) {
            const json& row = pj[i];
            std::string rw = "poisson[" + std::to_string(i) + "]";
            if (!row.is_array() || static_cast<int>(row.size()) != out.n)
                throw SpecError("expected " + std::to_string(out.n) + " entries", rw);
            for (int j = 0; j < out.n; ++j)
                comps[i][j] = terms_field(row[j], out.n, rw + "[" + std::to_string(j) + "]");
        }
        try {
            out.poisson = PoissonBivector(out.n, std::move(comps));
        } catch (const std::invalid_argument& e) {
            throw SpecError(e.what(), "poisson");
        }
    }
    return out;
}

FrobeniusSpec SpecFile::to_frobenius() const {
    if (!has_frobenius()) throw SpecError("spec has no potential block");
    try {
        return FrobeniusSpec(n, *potential, *metric, *euler_a, *euler_b, *charge);
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
}

std::vector<PolyVectorField> SpecFile::chain_fields() const {
    std::vector<PolyVectorField> out;
    out.reserve(chain.size());
    for (const auto& rec : chain) {
        std::vector<MultiPoly> comps;
        comps.reserve(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly c = MultiPoly::constant(n, rec.b[i]);
            for (int j = 0; j < n; ++j) {
                if (rec.a[i][j] == 0) continue;
                c = c + MultiPoly::variable(n, j + 1).scaled(rec.a[i][j]);
            }
            comps.push_back(std::move(c));
        }
        out.emplace_back(std::move(comps));
    }
    return out;
}

namespace {

json rational_json(const Rational& r) { return to_string(r); }

json matrix_json(const MatQ& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rational_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

json terms_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        json t;
        t["coeff"] = rational_json(coeff);
        t["exps"] = exps;
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

std::string serialize_spec(const SpecFile& spec) {
    // nlohmann::json objects iterate in key order, so output is canonical.
    json root;
    root["n"] = spec.n;
    if (spec.has_frobenius()) {
        root["potential"] = terms_json(*spec.potential);
        root["metric"] = matrix_json(*spec.metric);
        json euler;
        euler["a"] = matrix_json(*spec.euler_a);
        json b = json::array();
        for (const auto& e : *spec.euler_b) b.push_back(rational_json(e));
        euler["b"] = std::move(b);
        root["euler"] = std::move(euler);
        root["charge"] = rational_json(*spec.charge);
    }
    if (!spec.chain.empty()) {
        json chain = json::array();
        for (const auto& rec : spec.chain) {
            json r;
            r["a"] = matrix_json(rec.a);
            json b = json::array();
            for (const auto& e : rec.b) b.push_back(rational_json(e));
            r["b"] = std::move(b);
            chain.push_back(std::move(r));
        }
        root["chain"] = std::move(chain);
    }
    if (spec.poisson) {
        json rows = json::array();
        for (int i = 0; i < spec.n; ++i) {
            json row = json::array();
            for (int j = 0; j < spec.n; ++j) row.push_back(terms_json(spec.poisson->components[i][j]));
            rows.push_back(std::move(row));
        }
        root["poisson"] = std::move(rows);
    }
    return root.dump(2) + "\n";
}

}  // namespace frobkit
