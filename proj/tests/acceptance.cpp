// End-to-end gate for the library: exercises the bundled inputs the way a
// release check would, one line per requirement, nonzero exit on any failure.
#include "frobkit/duality.hpp"
#include "frobkit/runner.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace frobkit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SpecFile load(const char* name) { return parse_spec(slurp(std::string(SPECS_DIR) + "/" + name)); }

MultiPoly mono(int n, std::vector<int> e, Rational c) {
    return MultiPoly::monomial(n, std::move(e), c);
}

// ---- 1: both bundled potentials pass the full verification run, fast -------

bool full_verification(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (const char* name : {"a3.json", "n2.json"}) {
        std::string text = slurp(std::string(SPECS_DIR) + "/" + name);
        RunOptions opts;
        opts.digest = input_digest(text);
        RunReport rep = run_verify(parse_spec(text), opts);
        if (!rep.pass) {
            for (const auto& row : rep.checks)
                if (!row.pass && !row.skipped) {
                    detail = std::string(name) + ": " + row.name + " failed";
                    return false;
                }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
        detail = "verification took " + std::to_string(secs) + " s";
        return false;
    }
    return true;
}

// ---- 2: +1 on any higher-order coefficient breaks wdvv and hertling-manin --

bool perturbation_control(std::string& detail) {
    SpecFile base = load("a3.json");
    FrobeniusSpec good = base.to_frobenius();
    const std::vector<std::vector<int>> bumps = {
        {2, 0, 1}, {1, 2, 0}, {0, 2, 2}, {0, 0, 5}};
    for (const auto& e : bumps) {
        FrobeniusSpec bad(3, good.potential + mono(3, e, Rational(1)), good.metric, good.euler_a,
                          good.euler_b, good.charge);
        CheckReport wdvv = check_wdvv(bad);
        if (wdvv.pass || !wdvv.witness || wdvv.witness->empty()) {
            detail = "wdvv still passes after bumping exps (" + std::to_string(e[0]) + "," +
                     std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
            return false;
        }
        StructureTensor tensor = structure_constants(bad);
        std::vector<PolyVectorField> fields;
        for (int i = 1; i <= 3; ++i) fields.push_back(PolyVectorField::basis(3, i));
        DetRng rng(kDefaultSeed);
        for (int i = 0; i < 2; ++i) fields.emplace_back(rng.components(3, 2));
        CheckReport hm = check_hertling_manin(tensor.mixed, fields);
        if (hm.pass) {
            detail = "hertling-manin still passes after bumping exps (" + std::to_string(e[0]) +
                     "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
            return false;
        }
    }
    // frozen counterexamples for the t2^2 t3^2 bump
    FrobeniusSpec bad(3, good.potential + mono(3, {0, 2, 2}, Rational(1)), good.metric,
                      good.euler_a, good.euler_b, good.charge);
    CheckReport wdvv = check_wdvv(bad);
    if (wdvv.witness != "(i,j,k,l)=(2,2,3,3): difference = -24 t3^2") {
        detail = "unexpected wdvv witness: " + wdvv.witness.value_or("<none>");
        return false;
    }
    std::vector<PolyVectorField> basis;
    for (int i = 1; i <= 3; ++i) basis.push_back(PolyVectorField::basis(3, i));
    CheckReport hm = check_hertling_manin(structure_constants(bad).mixed, basis);
    if (hm.witness != "(2,2,3,3): defect = (-48 t3, 0, 0)") {
        detail = "unexpected hertling-manin witness: " + hm.witness.value_or("<none>");
        return false;
    }
    return true;
}

// ---- 3: duality map clauses off the discriminant; E = e degenerates to id --

bool duality_map_clauses(std::string& detail) {
    for (const char* name : {"a3.json", "n2.json"}) {
        FrobeniusSpec fs = load(name).to_frobenius();
        StructureTensor tensor = structure_constants(fs);
        MultiPoly disc = discriminant_det(tensor, fs);
        DetRng rng(kDefaultSeed);
        std::vector<RationalPoint> pts;
        for (int tries = 0; static_cast<int>(pts.size()) < 100 && tries < 1000; ++tries) {
            RationalPoint pt = rng.point(fs.n);
            if (disc.evaluate(pt) != 0) pts.push_back(pt);
        }
        if (pts.size() < 100) {
            detail = std::string(name) + ": could not sample 100 off-discriminant points";
            return false;
        }
        std::vector<RationalPoint> skipped;
        CheckReport rep = check_theorem1(fs, tensor, pts, 10, kDefaultSeed, &skipped);
        if (!rep.pass || !skipped.empty()) {
            detail = std::string(name) + ": " + rep.witness.value_or("points skipped");
            return false;
        }
    }
    FrobeniusSpec unit = load("e_unit.json").to_frobenius();
    StructureTensor tensor = structure_constants(unit);
    DetRng rng(kDefaultSeed);
    for (int p = 0; p < 100; ++p) {
        RationalPoint pt = rng.point(unit.n);
        if (!mat_equal(duality_map_at(unit, tensor, pt), identity_matrix(unit.n))) {
            detail = "duality map differs from the identity at " + pt.str();
            return false;
        }
    }
    return true;
}

// ---- 4: the dual product as symbolic rational functions --------------------

bool dual_product_identities(std::string& detail) {
    FrobeniusSpec fs = load("n2.json").to_frobenius();
    StructureTensor tensor = structure_constants(fs);
    DualStructure dual = dual_product(fs, tensor);
    const int n = fs.n;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!rf_equal(dual.star[i][j][k], dual.star[j][i][k])) {
                    detail = "commutativity fails on (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")";
                    return false;
                }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RationalFunction lhs = RationalFunction::zero(n);
                    RationalFunction rhs = RationalFunction::zero(n);
                    for (int m = 0; m < n; ++m) {
                        lhs = lhs + dual.star[i][j][m] * dual.star[m][k][l];
                        rhs = rhs + dual.star[j][k][m] * dual.star[i][m][l];
                    }
                    if (!rf_equal(lhs, rhs)) {
                        detail = "associativity fails on basis triple (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
                        return false;
                    }
                }

    PolyVectorField e = fs.euler_field();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RationalFunction acc = RationalFunction::zero(n);
            for (int b = 0; b < n; ++b)
                acc = acc + dual.star[i][b][k] * RationalFunction(e.components[b]);
            RationalFunction want(MultiPoly::constant(n, i == k ? Rational(1) : Rational(0)));
            if (!rf_equal(acc, want)) {
                detail = "E fails as unit on basis field " + std::to_string(i + 1);
                return false;
            }
        }

    auto star_mul = [&](const RfVectorField& x, const RfVectorField& y) {
        std::vector<RationalFunction> out(n, RationalFunction::zero(n));
        for (int a = 0; a < n; ++a) {
            if (x.components[a].is_zero()) continue;
            for (int b = 0; b < n; ++b) {
                if (y.components[b].is_zero()) continue;
                RationalFunction xy = x.components[a] * y.components[b];
                for (int k = 0; k < n; ++k) {
                    if (dual.star[a][b][k].is_zero()) continue;
                    out[k] = out[k] + dual.star[a][b][k] * xy;
                }
            }
        }
        return RfVectorField(std::move(out));
    };
    auto defect = [&](const RfVectorField& x, const RfVectorField& y, const RfVectorField& z) {
        RfVectorField b1 = lie_bracket_rf(x, star_mul(y, z));
        RfVectorField b2 = star_mul(lie_bracket_rf(x, y), z);
        RfVectorField b3 = star_mul(y, lie_bracket_rf(x, z));
        std::vector<RationalFunction> out;
        out.reserve(n);
        for (int k = 0; k < n; ++k)
            out.push_back(b1.components[k] - b2.components[k] - b3.components[k]);
        return RfVectorField(std::move(out));
    };
    auto hm_holds = [&](const RfVectorField& x, const RfVectorField& y, const RfVectorField& z,
                        const RfVectorField& w) {
        RfVectorField lhs = defect(star_mul(x, y), z, w);
        RfVectorField rhs1 = star_mul(x, defect(y, z, w));
        RfVectorField rhs2 = star_mul(y, defect(x, z, w));
        for (int k = 0; k < n; ++k)
            if (!rf_equal(lhs.components[k], rhs1.components[k] + rhs2.components[k]))
                return false;
        return true;
    };

    std::vector<RfVectorField> basis;
    for (int i = 1; i <= n; ++i)
        basis.push_back(RfVectorField::from_poly(PolyVectorField::basis(n, i)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (!hm_holds(basis[a], basis[b], basis[c], basis[d])) {
                        detail = "hertling-manin fails on basis tuple (" + std::to_string(a + 1) +
                                 "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + "," +
                                 std::to_string(d + 1) + ")";
                        return false;
                    }
    DetRng rng(kDefaultSeed);
    for (int trial = 0; trial < 20; ++trial) {
        RfVectorField f[4];
        for (auto& x : f) x = RfVectorField::from_poly(PolyVectorField(rng.components(n, 2)));
        if (!hm_holds(f[0], f[1], f[2], f[3])) {
            detail = "hertling-manin fails on random tuple " + std::to_string(trial + 1);
            return false;
        }
    }
    return true;
}

// ---- 5: chained products ---------------------------------------------------

bool chain_propositions(std::string& detail) {
    SpecFile spec = load("n2_chain.json");
    FrobeniusSpec fs = spec.to_frobenius();
    StructureTensor tensor = structure_constants(fs);
    std::vector<PolyVectorField> ids = spec.chain_fields();
    const int depth = static_cast<int>(ids.size());
    DetRng rng(kDefaultSeed);
    int usable = 0;
    for (int tries = 0; usable < 20 && tries < 200; ++tries) {
        RationalPoint pt = rng.point(fs.n);
        std::vector<FiberAlgebra> algs;
        try {
            algs = chain_products_at(tensor, pt, ids, depth);
        } catch (const NotInvertible&) {
            continue;
        }
        ++usable;
        for (int s = 1; s <= depth; ++s) {
            VecQ want;
            for (const auto& comp : ids[s - 1].components) want.push_back(comp.evaluate(pt));
            if (algs[s].unit != want) {
                detail = "stage " + std::to_string(s) + " unit differs at " + pt.str();
                return false;
            }
        }
        if (!check_prop1_at(tensor, pt, ids[0], ids[1]).pass) {
            detail = "prop1 fails at " + pt.str();
            return false;
        }
        if (!check_prop2_at(tensor, pt, ids).pass) {
            detail = "prop2 fails at " + pt.str();
            return false;
        }
    }
    if (usable < 20) {
        detail = "could not sample 20 usable points";
        return false;
    }
    RationalPoint on_disc({Rational(6), Rational(3) / 2});
    try {
        chain_products_at(tensor, on_disc, ids, depth);
        detail = "no failure reported on the discriminant";
        return false;
    } catch (const NotInvertible& e) {
        if (e.stage != 0) {
            detail = "failure reported at stage " + std::to_string(e.stage) + ", want 0";
            return false;
        }
    }
    return true;
}

// ---- 6: linear Poisson structures -------------------------------------------

bool algebroid_checks(std::string& detail) {
    SpecFile so3 = load("so3_poisson.json");
    const PoissonBivector& pi = *so3.poisson;
    BracketFn bracket = [&pi](const PolyOneForm& a, const PolyOneForm& b) {
        return koszul_bracket(pi, a, b);
    };
    AnchorFn anchor = [&pi](const PolyOneForm& a) { return pi.sharp(a); };
    DetRng rng(kDefaultSeed);
    std::vector<PolyOneForm> sections;
    for (int i = 0; i < 2; ++i) sections.emplace_back(rng.components(3, 2));
    CheckReport good = check_lie_algebroid(3, bracket, anchor, sections, default_test_functions(3));
    if (!good.pass) {
        detail = "so(3) bivector: " + good.witness.value_or("");
        return false;
    }
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly f = rng.poly(3, 2);
        MultiPoly g = rng.poly(3, 2);
        std::vector<MultiPoly> df, dg;
        for (int i = 1; i <= 3; ++i) df.push_back(f.derivative(i));
        for (int i = 1; i <= 3; ++i) dg.push_back(g.derivative(i));
        MultiPoly fg(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) fg = fg + pi.components[i][j] * df[i] * dg[j];
        PolyOneForm lhs = koszul_bracket(pi, PolyOneForm(df), PolyOneForm(dg));
        for (int j = 0; j < 3; ++j)
            if (!(lhs.components[j] - fg.derivative(j + 1)).is_zero()) {
                detail = "[df,dg] != d{f,g} on trial " + std::to_string(trial + 1) +
                         ", f = " + f.str() + ", g = " + g.str();
                return false;
            }
    }
    SpecFile bad = load("nonpoisson.json");
    const PoissonBivector& rho = *bad.poisson;
    BracketFn bbracket = [&rho](const PolyOneForm& a, const PolyOneForm& b) {
        return koszul_bracket(rho, a, b);
    };
    AnchorFn banchor = [&rho](const PolyOneForm& a) { return rho.sharp(a); };
    CheckReport broken =
        check_lie_algebroid(3, bbracket, banchor, sections, default_test_functions(3));
    if (broken.pass) {
        detail = "non-Poisson bivector passes the algebroid check";
        return false;
    }
    std::string w = broken.witness.value_or("");
    if (w.find("jacobi") == std::string::npos || w.find("(-t3, 0, -t1)") == std::string::npos) {
        detail = "unexpected witness for the non-Poisson bivector: " + w;
        return false;
    }
    return true;
}

// ---- 7: kernel soundness -----------------------------------------------------

bool kernel_soundness(std::string& detail) {
    DetRng rng(kDefaultSeed);
    auto nonzero_poly = [&rng](int n, int deg) {
        MultiPoly p(n);
        while (p.is_zero()) p = rng.poly(n, deg);
        return p;
    };
    for (int it = 0; it < 500; ++it) {
        MultiPoly a = rng.poly(2, 3), b = rng.poly(2, 3), c = rng.poly(2, 3);
        bool ok = (a + b) == (b + a) && ((a + b) + c) == (a + (b + c)) && (a * b) == (b * a) &&
                  ((a * b) * c) == (a * (b * c)) && (a * (b + c)) == (a * b + a * c) &&
                  (a - b) == (a + (-b)) && (a - a).is_zero() &&
                  (a * MultiPoly::constant(2, Rational(1))) == a;
        if (!ok) {
            detail = "ring axiom fails on iteration " + std::to_string(it + 1);
            return false;
        }
    }
    for (int it = 0; it < 500; ++it) {
        MultiPoly f = rng.poly(3, 4);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                if (!(f.derivative(i).derivative(j) == f.derivative(j).derivative(i))) {
                    detail = "mixed partials differ on iteration " + std::to_string(it + 1);
                    return false;
                }
    }
    for (int it = 0; it < 500; ++it) {
        MultiPoly a = rng.poly(2, 3), b = rng.poly(2, 3);
        RationalPoint pt = rng.point(2);
        bool ok = (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt) &&
                  (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt);
        if (!ok) {
            detail = "evaluation homomorphism fails on iteration " + std::to_string(it + 1);
            return false;
        }
    }
    for (int it = 0; it < 500; ++it) {
        MultiPoly p = rng.poly(2, 2);
        MultiPoly q = nonzero_poly(2, 2), r = nonzero_poly(2, 1), s = nonzero_poly(2, 1);
        RationalFunction A(p, q), B(p * r, q * r), C(p * s, q * s);
        bool ok = rf_equal(A, A) && rf_equal(A, B) && rf_equal(B, A) && rf_equal(B, C) &&
                  rf_equal(A, C) &&
                  !rf_equal(A, A + RationalFunction(MultiPoly::constant(2, Rational(1))));
        if (!ok) {
            detail = "rf_equal equivalence fails on iteration " + std::to_string(it + 1);
            return false;
        }
    }
    std::string text = slurp(std::string(SPECS_DIR) + "/n2.json");
    SpecFile spec = parse_spec(text);
    RunOptions opts;
    opts.digest = input_digest(text);
    auto machine = [&](RunReport (*run)(const SpecFile&, const RunOptions&)) {
        return emit_report(run(spec, opts), ReportFormat::machine);
    };
    if (machine(run_verify) != machine(run_verify) || machine(run_dualize) != machine(run_dualize)) {
        detail = "repeated runs with one seed differ";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Gate {
        const char* label;
        bool (*fn)(std::string&);
    };
    const std::vector<Gate> gates = {
        {"bundled potentials pass full verification in < 10 s", full_verification},
        {"coefficient bumps break wdvv and hertling-manin with exact witnesses",
         perturbation_control},
        {"duality map clauses hold at 100 points; E = e gives the identity map",
         duality_map_clauses},
        {"dual product is commutative, associative, E-unital, hertling-manin",
         dual_product_identities},
        {"chain products: units, prop1, prop2 at 20 points; stage-0 failure named",
         chain_propositions},
        {"so(3) algebroid passes, [df,dg] = d{f,g}, non-Poisson fails jacobi", algebroid_checks},
        {"kernel soundness: 500-case randomized algebra, byte-identical reports",
         kernel_soundness},
    };
    int failures = 0;
    for (size_t i = 0; i < gates.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = gates[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "[" << i + 1 << "/" << gates.size() << "] " << gates[i].label << " ... "
                  << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) {
            std::cout << "      " << detail << "\n";
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all gates passed" : std::to_string(failures) + " gate(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
