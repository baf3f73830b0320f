#include "leibniz/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/autos.hpp"
#include "leibniz/specfile.hpp"
#include "leibniz/verify.hpp"

namespace leibniz {

namespace {

using nlohmann::json;

// -- small formatting helpers ------------------------------------------------

std::string lincomb(const CoordVec& v, const std::string& prefix) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::string cs = v[k].to_string();
        bool negative = !cs.empty() && cs.front() == '-';
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) cs = cs.substr(1);
        if (cs != "1") out += cs + "*";
        out += prefix + std::to_string(k + 1);
        first = false;
    }
    return first ? "0" : out;
}

std::string matrix_rows(const Matrix& m, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json subspace_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["basis"] = matrix_json(s.basis());
    return j;
}

std::string describe_subspace(const Subspace& s) {
    return "dim " + std::to_string(s.dim()) + ", " + s.to_string();
}

/// The defining polynomial of the type-II module action in display form,
/// with the trailing monomial written as subtracted: "a2 + a3*X - X^(n-1)".
std::string annihilator_display(const CyclicAlgebra& L) {
    std::size_t n = L.n();
    std::vector<Scalar> low;
    for (std::size_t i = 2; i <= n; ++i) low.push_back(L.alpha(i));
    std::string out = Poly::from_coeffs(L.field(), low).to_string("X");
    out += " - X";
    if (n - 1 > 1) out += "^" + std::to_string(n - 1);
    return out;
}

std::string basis_prefix(const LoadedAlgebra& input) { return input.is_cyclic() ? "a" : "b"; }

// -- subcommand implementations ----------------------------------------------

int cmd_classify(const std::string& file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    if (!input.is_cyclic()) {
        throw BadSpec("classification requires a cyclic algebra file");
    }
    const CyclicAlgebra& L = input.cyclic();
    if (as_json) {
        json j;
        j["field"] = L.field().to_string();
        j["n"] = L.n();
        j["type"] = L.tag().variant == TypeTag::Variant::I    ? "I"
                    : L.tag().variant == TypeTag::Variant::II ? "II"
                                                              : "III";
        if (L.tag().variant == TypeTag::Variant::III) j["t"] = L.tag().t;
        if (L.tag().variant == TypeTag::Variant::II) j["a_poly"] = annihilator_display(L);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "field: " << L.field().to_string() << "\n";
    out << "dimension: " << L.n() << "\n";
    out << "type: " << L.tag().to_string() << "\n";
    if (L.tag().variant == TypeTag::Variant::II) {
        out << "a(X) = " << annihilator_display(L) << "\n";
    }
    return 0;
}

int cmd_bracket_table(const std::string& file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    const LeibnizAlgebra& L = input.algebra();
    if (as_json) {
        out << table_to_json(L);
        return 0;
    }
    std::string p = basis_prefix(input);
    out << "field: " << L.field().to_string() << "\n";
    out << "dimension: " << L.dim() << "\n";
    for (const auto& [key, value] : L.tensor()) {
        out << "[" << p << key.first << "," << p << key.second << "] = " << lincomb(value, p) << "\n";
    }
    return 0;
}

int cmd_centers(const std::string& file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    Centers z = centers(input.algebra());
    if (as_json) {
        json j;
        j["left"] = subspace_json(z.left);
        j["right"] = subspace_json(z.right);
        j["two_sided"] = subspace_json(z.two_sided);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "left center: " << describe_subspace(z.left) << "\n";
    out << "right center: " << describe_subspace(z.right) << "\n";
    out << "two-sided center: " << describe_subspace(z.two_sided) << "\n";
    return 0;
}

void print_series(const CentralSeries& s, const std::string& name, const std::string& symbol,
                  std::size_t first_index, std::ostream& out) {
    out << name << " central series (" << (s.stabilized ? "stabilized" : "truncated") << "):\n";
    for (std::size_t k = 0; k < s.terms.size(); ++k) {
        out << "  " << symbol << "_" << (first_index + k) << ": " << describe_subspace(s.terms[k]) << "\n";
    }
}

json series_json(const CentralSeries& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(subspace_json(t));
    json j;
    j["terms"] = std::move(terms);
    j["stabilized"] = s.stabilized;
    return j;
}

int cmd_series(const std::string& file, bool lower_only, bool upper_only, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    const LeibnizAlgebra& L = input.algebra();
    bool want_lower = !upper_only;
    bool want_upper = !lower_only;
    if (as_json) {
        json j;
        if (want_lower) j["lower"] = series_json(lower_central_series(L));
        if (want_upper) j["upper"] = series_json(upper_central_series(L));
        Nilpotency nil = is_nilpotent(L);
        j["nilpotent"] = nil.nilpotent;
        if (nil.nilpotent) j["class"] = *nil.nil_class;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (want_lower) print_series(lower_central_series(L), "lower", "gamma", 1, out);
    if (want_upper) print_series(upper_central_series(L), "upper", "zeta", 0, out);
    Nilpotency nil = is_nilpotent(L);
    if (nil.nilpotent) {
        out << "nilpotent: yes, class " << *nil.nil_class << "\n";
    } else {
        out << "nilpotent: no\n";
    }
    return 0;
}

int cmd_leib(const std::string& file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    const LeibnizAlgebra& L = input.algebra();
    Subspace kern = leib_kernel(L);
    Subspace full = Subspace::full(L.field(), L.dim());
    Subspace der = product_subspace(L, full, full);
    if (as_json) {
        json j;
        j["leibniz_kernel"] = subspace_json(kern);
        j["derived_subalgebra"] = subspace_json(der);
        j["kernel_equals_derived"] = (kern == der);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "Leibniz kernel: " << describe_subspace(kern) << "\n";
    out << "derived subalgebra [L,L]: " << describe_subspace(der) << "\n";
    out << "kernel equals [L,L]: " << (kern == der ? "yes" : "no") << "\n";
    return 0;
}

int cmd_endo_check(const std::string& file, const std::string& map_file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    const LeibnizAlgebra& L = input.algebra();
    Matrix f = load_map_file(map_file, L.field(), L.dim());
    EndoCheck check = is_endomorphism(L, f);
    bool invertible = f.rref().rank == L.dim();
    if (as_json) {
        json j;
        j["endomorphism"] = check.ok;
        if (!check.ok) {
            j["violation"] = {{"left", check.violation->first}, {"right", check.violation->second}};
        }
        j["automorphism"] = check.ok && invertible;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (check.ok) {
        out << "endomorphism: yes\n";
        out << "automorphism: " << (invertible ? "yes" : "no (singular)") << "\n";
    } else {
        out << "endomorphism: no (first violating basis pair: (" << check.violation->first << ", "
            << check.violation->second << "))\n";
        out << "automorphism: no\n";
    }
    return 0;
}

int cmd_aut_enumerate(const std::string& file, bool endos, bool force_guard, bool list, bool as_json,
                      std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    const LeibnizAlgebra& L = input.algebra();
    MapKind kind = endos ? MapKind::endomorphisms : MapKind::automorphisms;
    EndoEnumeration result = enumerate_endomorphisms(L, kind, force_guard);
    if (as_json) {
        json j;
        j["kind"] = endos ? "endomorphisms" : "automorphisms";
        j["count"] = result.maps.size();
        if (list) {
            json maps = json::array();
            for (const auto& m : result.maps) maps.push_back(matrix_json(m));
            j["maps"] = std::move(maps);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "field: " << L.field().to_string() << "\n";
    out << "dimension: " << L.dim() << "\n";
    out << (endos ? "|End| = " : "|Aut| = ") << result.maps.size() << "\n";
    if (list) {
        for (std::size_t k = 0; k < result.maps.size(); ++k) {
            out << "map " << (k + 1) << ":\n" << matrix_rows(result.maps[k], "  ");
        }
    }
    return 0;
}

int cmd_aut_describe(const std::string& file, bool force_guard, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    if (!input.is_cyclic()) throw BadSpec("the structure description requires a cyclic algebra file");
    const CyclicAlgebra& L = input.cyclic();
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();

    json j;
    std::ostringstream text;
    text << "field: " << f.to_string() << "\n";
    text << "dimension: " << n << "\n";
    text << "type: " << L.tag().to_string() << "\n";
    j["field"] = f.to_string();
    j["n"] = n;
    j["type"] = L.tag().to_string();

    switch (L.tag().variant) {
        case TypeTag::Variant::I: {
            text << "Aut(L) splits as U semidirect D:\n";
            text << "  U  = unitriangular maps, isomorphic to the constant-term-1 units of F[X]/X^" << n
                 << "\n";
            text << "  D  = diagonal maps diag(g, g^2, ..., g^" << n
                 << "), isomorphic to the multiplicative group of the field\n";
            j["structure"] = "unitriangular-units semidirect field-units";
            if (f.is_finite()) {
                std::uint64_t q = static_cast<std::uint64_t>(f.order());
                std::uint64_t u = 1;
                for (std::size_t k = 1; k < n; ++k) u *= q;
                text << "predicted |Aut| = (q-1)*q^(n-1) = " << (q - 1) * u << "\n";
                j["predicted_aut_order"] = (q - 1) * u;
                EndoEnumeration autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, force_guard);
                text << "enumerated |Aut| = " << autos.maps.size() << "\n";
                j["enumerated_aut_order"] = autos.maps.size();
            }
            break;
        }
        case TypeTag::Variant::II: {
            text << "a(X) = " << annihilator_display(L) << "\n";
            text << "Aut(L) contains the normal subgroup C of automorphisms fixing c,\n";
            text << "isomorphic to the unit group of F[X]/a(X)F[X];\n";
            text << "Aut(L)/C embeds into the multiplicative group of the field\n";
            j["a_poly"] = annihilator_display(L);
            j["structure"] = "normal unit-group of F[X]/a(X) with field-unit quotient";
            if (f.is_finite()) {
                auto units = enumerate_units(action_ring(L));
                EndoEnumeration autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, force_guard);
                text << "unit count of F[X]/a(X) = " << units.size() << "\n";
                text << "enumerated |Aut| = " << autos.maps.size() << ", index |Aut|/|C| = "
                     << (units.empty() ? 0 : autos.maps.size() / units.size()) << "\n";
                j["unit_count"] = units.size();
                j["enumerated_aut_order"] = autos.maps.size();
            }
            break;
        }
        case TypeTag::Variant::III: {
            std::size_t t = L.tag().t;
            text << "t = " << t << "\n";
            text << "Aut(L) embeds into Aut(L/V) x Aut(L/[U,U]) as a subdirect product:\n";
            text << "  L/V      is a nilpotent cyclic algebra of dimension " << (t - 1) << "\n";
            text << "  L/[U,U]  is a cyclic algebra with invertible action, dimension " << (n - t + 2) << "\n";
            j["t"] = t;
            j["structure"] = "subdirect product of the two quotient automorphism groups";
            if (f.is_finite()) {
                SubdirectReport report = subdirect_check(L, force_guard);
                text << "enumerated |Aut| = " << report.aut_count << "\n";
                text << "image sizes: " << report.image_size_mod_V << " (mod V), " << report.image_size_mod_UU
                     << " (mod [U,U])\n";
                text << "pair map injective: " << (report.pair_map_injective ? "yes" : "NO") << "\n";
                j["enumerated_aut_order"] = report.aut_count;
                j["image_mod_V"] = report.image_size_mod_V;
                j["image_mod_UU"] = report.image_size_mod_UU;
                j["pair_map_injective"] = report.pair_map_injective;
            }
            break;
        }
    }
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return 0;
}

int cmd_units(const std::string& field_text, const std::string& coeffs, bool as_json, std::ostream& out) {
    FieldDescriptor f = FieldDescriptor::parse(field_text);
    Poly modulus = Poly::parse(f, coeffs);
    QuotientRing ring(f, modulus);
    auto units = enumerate_units(ring);
    bool x_power = ring.is_x_power_modulus();
    std::vector<QuotElement> subgroup;
    if (x_power) subgroup = subgroup_I_elements(ring);

    if (as_json) {
        json j;
        j["field"] = f.to_string();
        j["modulus"] = ring.original_modulus().to_string("X");
        j["monic_modulus"] = ring.modulus().to_string("X");
        j["unit_count"] = units.size();
        json list = json::array();
        for (const auto& u : units) list.push_back(u.to_string());
        j["units"] = std::move(list);
        if (x_power) {
            json ilist = json::array();
            for (const auto& u : subgroup) ilist.push_back(u.to_string());
            j["constant_term_1_count"] = subgroup.size();
            j["constant_term_1"] = std::move(ilist);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "field: " << f.to_string() << "\n";
    out << "modulus: " << ring.original_modulus().to_string("X") << " (monic: " << ring.modulus().to_string("X")
        << ")\n";
    out << "units: " << units.size() << "\n";
    for (const auto& u : units) out << "  " << u.to_string() << "\n";
    if (x_power) {
        out << "constant-term-1 subgroup: " << subgroup.size() << "\n";
        for (const auto& u : subgroup) out << "  " << u.to_string() << "\n";
    }
    return 0;
}

int cmd_rebase(const std::string& file, bool as_json, std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);
    if (!input.is_cyclic()) throw BadSpec("rebasing requires a cyclic algebra file");
    const CyclicAlgebra& L = input.cyclic();
    RebaseResult r = rebase_type3(L);
    if (as_json) {
        json j;
        j["t"] = r.t;
        json beta = json::array();
        for (const auto& s : r.beta) beta.push_back(s.to_string());
        j["beta"] = std::move(beta);
        j["T"] = matrix_json(r.T);
        j["U"] = subspace_json(r.U_sub);
        j["UU"] = subspace_json(r.UU_sub);
        j["V"] = subspace_json(r.V_sub);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "type: " << L.tag().to_string() << "\n";
    out << "beta (indices " << r.t << ".." << L.n() << "):";
    for (const auto& s : r.beta) out << " " << s.to_string();
    out << "\n";
    out << "transition matrix T (row i = d_i in the a-basis):\n" << matrix_rows(r.T, "  ");
    out << "U = " << describe_subspace(r.U_sub) << "\n";
    out << "[U,U] = " << describe_subspace(r.UU_sub) << "\n";
    out << "V = " << describe_subspace(r.V_sub) << "\n";
    out << "checks: T nonsingular, V and [U,U] ideals, bracket relations verified\n";
    return 0;
}

int cmd_from_operator(const std::string& field_text, const std::string& map_file, bool as_json,
                      std::ostream& out) {
    FieldDescriptor f = FieldDescriptor::parse(field_text);
    // probe the dimension from the file: rows define it
    std::ifstream probe(map_file);
    if (!probe) throw ParseError("cannot open " + map_file);
    json root;
    try {
        root = json::parse(probe);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("matrix") || !root["matrix"].is_array() || root["matrix"].empty()) {
        throw ParseError("map file needs a nonempty 'matrix' array");
    }
    std::size_t m = root["matrix"].size();
    Matrix op = load_map_file(map_file, f, m);
    LeibnizAlgebra L = from_operator_action(m, op);
    if (as_json) {
        out << table_to_json(L);
        return 0;
    }
    out << "built algebra of dimension " << L.dim() << " on basis (a1..a" << m << ", c = b" << L.dim()
        << ")\n";
    for (const auto& [key, value] : L.tensor()) {
        out << "[b" << key.first << ",b" << key.second << "] = " << lincomb(value, "b") << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& suites_arg, bool force_guard, bool as_json,
               std::ostream& out) {
    LoadedAlgebra input = load_algebra_file(file);

    std::vector<std::string> suites;
    if (suites_arg == "all") {
        suites = all_suite_ids();
    } else {
        std::size_t start = 0;
        while (start <= suites_arg.size()) {
            std::size_t comma = suites_arg.find(',', start);
            std::string item = comma == std::string::npos ? suites_arg.substr(start)
                                                          : suites_arg.substr(start, comma - start);
            if (item.empty()) throw BadSpec("empty suite name in the suite list");
            suites.push_back(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    std::vector<VerifySuiteResult> results;
    results.reserve(suites.size());
    for (const auto& id : suites) results.push_back(run_verify_suite(input, id, force_guard));

    std::size_t failures = 0, skipped = 0;
    for (const auto& r : results) {
        if (r.skipped) ++skipped;
        else if (!r.overall_pass()) ++failures;
    }

    if (as_json) {
        json j;
        json list = json::array();
        for (const auto& r : results) {
            json s;
            s["suite"] = r.suite;
            s["skipped"] = r.skipped;
            if (r.skipped) {
                s["reason"] = r.skip_reason;
            } else {
                json checks = json::array();
                for (const auto& c : r.checks) {
                    json cj;
                    cj["id"] = c.id;
                    cj["pass"] = c.pass;
                    if (!c.pass) cj["witness"] = c.witness;
                    checks.push_back(std::move(cj));
                }
                s["checks"] = std::move(checks);
            }
            list.push_back(std::move(s));
        }
        j["suites"] = std::move(list);
        j["failures"] = failures;
        j["skipped"] = skipped;
        j["overall"] = failures == 0;
        out << j.dump(2) << "\n";
        return failures == 0 ? 0 : 1;
    }

    for (const auto& r : results) {
        if (r.skipped) {
            out << "suite " << r.suite << ": skipped (" << r.skip_reason << ")\n";
            continue;
        }
        out << "suite " << r.suite << ":\n";
        for (const auto& c : r.checks) {
            if (c.pass) {
                out << "  check " << c.id << ": pass\n";
            } else {
                out << "  check " << c.id << ": FAIL (" << c.witness << ")\n";
            }
        }
    }
    out << "overall: " << (failures == 0 ? "pass" : "FAIL") << " (" << results.size() << " suites, "
        << failures << " failures, " << skipped << " skipped)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for finite-dimensional cyclic Leibniz algebras"};
    app.require_subcommand(1);

    std::string spec_file, map_file, field_text, coeffs, suites_arg;
    bool as_json = false, lower_only = false, upper_only = false;
    bool endos = false, force_guard = false, list_maps = false;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("-s,--spec", spec_file, "algebra file (JSON)")->required();
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    auto* c_classify = app.add_subcommand("classify", "classify a cyclic algebra into its type");
    add_spec(c_classify);

    auto* c_table = app.add_subcommand("bracket-table", "print the structure constants");
    add_spec(c_table);

    auto* c_centers = app.add_subcommand("centers", "left, right and two-sided centers");
    add_spec(c_centers);

    auto* c_series = app.add_subcommand("series", "lower/upper central series and nilpotency");
    add_spec(c_series);
    c_series->add_flag("--lower", lower_only, "lower series only");
    c_series->add_flag("--upper", upper_only, "upper series only");

    auto* c_leib = app.add_subcommand("leib", "the span of all squares [x,x]");
    add_spec(c_leib);

    auto* c_endo = app.add_subcommand("endo-check", "test a map for the endomorphism law");
    add_spec(c_endo);
    c_endo->add_option("-m,--map", map_file, "map file (JSON matrix)")->required();

    auto* c_enum = app.add_subcommand("aut-enumerate", "brute-force endomorphism/automorphism census");
    add_spec(c_enum);
    c_enum->add_flag("--endos", endos, "enumerate all endomorphisms instead of automorphisms");
    c_enum->add_flag("--force-guard", force_guard, "raise the enumeration guard to 2^28");
    c_enum->add_flag("--list", list_maps, "print every map");

    auto* c_descr = app.add_subcommand("aut-describe", "structural description of the automorphism group");
    add_spec(c_descr);
    c_descr->add_flag("--force-guard", force_guard, "raise the enumeration guard to 2^28");

    auto* c_units = app.add_subcommand("units", "unit group of F[X]/m(X)F[X]");
    c_units->add_option("-f,--field", field_text, "field: Q or GF:p")->required();
    c_units->add_option("-m,--modulus", coeffs, "ascending modulus coefficients, e.g. 1,1,-1")->required();
    c_units->add_flag("--json", as_json, "machine-readable output");

    auto* c_rebase = app.add_subcommand("rebase", "the d-basis change of a type III algebra");
    add_spec(c_rebase);

    auto* c_fromop = app.add_subcommand("from-operator", "build the algebra attached to an invertible operator");
    c_fromop->add_option("-f,--field", field_text, "field: Q or GF:p")->required();
    c_fromop->add_option("--matrix", map_file, "operator file (JSON matrix)")->required();
    c_fromop->add_flag("--json", as_json, "machine-readable output");

    auto* c_verify = app.add_subcommand("verify", "run structural verification suites");
    add_spec(c_verify);
    c_verify->add_option("--suite", suites_arg, "comma-separated suite names, or 'all'")->required();
    c_verify->add_flag("--force-guard", force_guard, "raise the enumeration guard to 2^28");

    std::vector<const char*> argv;
    argv.push_back("leibtool");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_classify)) return cmd_classify(spec_file, as_json, out);
        if (app.got_subcommand(c_table)) return cmd_bracket_table(spec_file, as_json, out);
        if (app.got_subcommand(c_centers)) return cmd_centers(spec_file, as_json, out);
        if (app.got_subcommand(c_series)) return cmd_series(spec_file, lower_only, upper_only, as_json, out);
        if (app.got_subcommand(c_leib)) return cmd_leib(spec_file, as_json, out);
        if (app.got_subcommand(c_endo)) return cmd_endo_check(spec_file, map_file, as_json, out);
        if (app.got_subcommand(c_enum))
            return cmd_aut_enumerate(spec_file, endos, force_guard, list_maps, as_json, out);
        if (app.got_subcommand(c_descr)) return cmd_aut_describe(spec_file, force_guard, as_json, out);
        if (app.got_subcommand(c_units)) return cmd_units(field_text, coeffs, as_json, out);
        if (app.got_subcommand(c_rebase)) return cmd_rebase(spec_file, as_json, out);
        if (app.got_subcommand(c_fromop)) return cmd_from_operator(field_text, map_file, as_json, out);
        if (app.got_subcommand(c_verify)) return cmd_verify(spec_file, suites_arg, force_guard, as_json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const GuardExceeded& e) {
        err << "guard: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadSpec& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const WrongType& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteField& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace leibniz
