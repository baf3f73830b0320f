#include "leibniz/verify.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/autos.hpp"

namespace leibniz {

namespace {

std::string brief(const Matrix& m) {
    std::string flat = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i + j) flat += ",";
            flat += m.at(i, j).to_string();
        }
    }
    return flat + "]";
}

struct SuiteBuilder {
    VerifySuiteResult result;

    explicit SuiteBuilder(std::string name) { result.suite = std::move(name); }

    void check(const std::string& id, bool pass, const std::string& witness = "") {
        result.checks.push_back(CheckResult{id, pass, pass ? "" : witness});
    }

    VerifySuiteResult skip(const std::string& reason) {
        result.skipped = true;
        result.skip_reason = reason;
        result.checks.clear();
        return result;
    }
};

std::size_t find_map(const std::vector<Matrix>& maps, const Matrix& m) {
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (maps[k] == m) return k;
    }
    return maps.size();
}

std::vector<Matrix> sorted_maps(std::vector<Matrix> maps) {
    std::sort(maps.begin(), maps.end(), [](const Matrix& a, const Matrix& b) { return a.lex_cmp(b) < 0; });
    return maps;
}

Subspace derived(const LeibnizAlgebra& L) {
    Subspace full = Subspace::full(L.field(), L.dim());
    return product_subspace(L, full, full);
}

std::uint64_t int_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// ---------------------------------------------------------------------------

VerifySuiteResult suite_center_preservation(const LeibnizAlgebra& L, bool raise_guard) {
    SuiteBuilder b("center-preservation");
    auto autos = enumerate_endomorphisms(L, MapKind::automorphisms, raise_guard).maps;
    Centers z = centers(L);
    Subspace d = derived(L);

    auto preserved = [&](const Subspace& w, const char* id) {
        for (const auto& f : autos) {
            if (w.image_under(f) != w) {
                b.check(id, false, "moved by " + brief(f));
                return;
            }
        }
        b.check(id, true);
    };
    preserved(z.left, "left-center-fixed");
    preserved(z.right, "right-center-fixed");
    preserved(z.two_sided, "center-fixed");
    preserved(d, "derived-subalgebra-fixed");
    return b.result;
}

VerifySuiteResult suite_series_preservation(const LeibnizAlgebra& L, bool raise_guard) {
    SuiteBuilder b("series-preservation");
    auto endos = enumerate_endomorphisms(L, MapKind::endomorphisms, raise_guard).maps;
    auto lower = lower_central_series(L);
    auto upper = upper_central_series(L);

    bool into = true;
    std::string witness;
    for (const auto& f : endos) {
        for (const auto& term : lower.terms) {
            if (!term.contains(term.image_under(f))) {
                into = false;
                witness = "termwise image escapes under " + brief(f);
                break;
            }
        }
        if (!into) break;
    }
    b.check("endos-map-lower-terms-into-themselves", into, witness);

    bool fixed = true;
    witness.clear();
    for (const auto& f : endos) {
        if (f.rref().rank != L.dim()) continue;  // automorphisms only
        for (const auto& term : lower.terms) {
            if (term.image_under(f) != term) {
                fixed = false;
                witness = "lower term moved by " + brief(f);
                break;
            }
        }
        for (const auto& term : upper.terms) {
            if (term.image_under(f) != term) {
                fixed = false;
                witness = "upper term moved by " + brief(f);
                break;
            }
        }
        if (!fixed) break;
    }
    b.check("autos-fix-both-series-setwise", fixed, witness);
    return b.result;
}

VerifySuiteResult suite_square_zero_ideal(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("square-zero-ideal");
    auto endos = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;
    Subspace d = derived(L.algebra());

    std::vector<Matrix> S;
    bool agree = true;
    std::string witness;
    for (const auto& f : endos) {
        bool square_zero = (f * f).is_zero();
        bool inside = d.contains(Subspace::row_space(f.transposed()));
        if (square_zero != inside) {
            agree = false;
            witness = "characterizations split on " + brief(f);
        }
        if (square_zero) S.push_back(f);
    }
    b.check("square-zero-equals-image-inside-derived", agree, witness);

    bool zero_products = true;
    witness.clear();
    for (const auto& f : S) {
        for (const auto& g : S) {
            if (!(f * g).is_zero()) {
                zero_products = false;
                witness = brief(f) + " o " + brief(g);
                break;
            }
        }
        if (!zero_products) break;
    }
    b.check("pairwise-compositions-vanish", zero_products, witness);

    bool ideal = true;
    witness.clear();
    for (const auto& f : S) {
        for (const auto& g : endos) {
            if (find_map(S, f * g) == S.size() || find_map(S, g * f) == S.size()) {
                ideal = false;
                witness = brief(f) + " with " + brief(g);
                break;
            }
        }
        if (!ideal) break;
    }
    b.check("closed-under-outside-composition", ideal, witness);
    return b.result;
}

VerifySuiteResult suite_endo_closed_form(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("endo-closed-form");
    auto oracle = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;

    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();
    std::int64_t q = f.order();

    auto advance = [&](std::vector<std::int64_t>& d) {
        for (std::size_t i = d.size(); i-- > 0;) {
            if (++d[i] < q) return true;
            d[i] = 0;
        }
        return false;
    };

    std::vector<Matrix> family;
    std::vector<std::int64_t> digits(n, 0);
    bool recurrence_ok = true;
    std::string witness;
    do {
        std::vector<Scalar> gamma;
        gamma.reserve(n);
        for (std::int64_t r : digits) gamma.push_back(Scalar::from_residue(f, r));
        Matrix closed = endo_type1_from_gammas(L, gamma);
        if (recurrence_ok && closed != endo_type1_by_recurrence(L, gamma)) {
            recurrence_ok = false;
            witness = "gamma " + vector_to_string(gamma);
        }
        family.push_back(std::move(closed));
    } while (advance(digits));
    b.check("closed-form-matches-recurrence", recurrence_ok, witness);
    bool equal = sorted_maps(family) == sorted_maps(oracle);
    b.check("closed-form-family-equals-oracle", equal,
            equal ? "" : "family size " + std::to_string(family.size()) + " vs oracle " +
                             std::to_string(oracle.size()));
    return b.result;
}

VerifySuiteResult suite_endo_partition(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("endo-partition");
    auto endos = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;
    auto autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard).maps;

    std::vector<Matrix> S;
    for (const auto& f : endos) {
        if (is_in_S(L, f)) S.push_back(f);
    }

    bool disjoint = true;
    std::string witness;
    for (const auto& f : S) {
        if (find_map(autos, f) != autos.size()) {
            disjoint = false;
            witness = brief(f);
            break;
        }
    }
    b.check("square-zero-and-automorphisms-disjoint", disjoint, witness);
    b.check("counts-add-up", endos.size() == autos.size() + S.size(),
            std::to_string(endos.size()) + " != " + std::to_string(autos.size()) + " + " +
                std::to_string(S.size()));

    std::uint64_t q = static_cast<std::uint64_t>(L.field().order());
    b.check("square-zero-count-is-q^(n-1)", S.size() == int_pow(q, L.n() - 1),
            "got " + std::to_string(S.size()));
    return b.result;
}

VerifySuiteResult suite_scalar_homomorphism(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("scalar-homomorphism");
    auto autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard).maps;

    std::vector<Scalar> theta;
    theta.reserve(autos.size());
    for (const auto& f : autos) theta.push_back(theta_scalar(L, f));

    bool multiplicative = true;
    std::string witness;
    for (std::size_t a = 0; a < autos.size() && multiplicative; ++a) {
        for (std::size_t c = 0; c < autos.size(); ++c) {
            Matrix prod = autos[a] * autos[c];
            std::size_t k = find_map(autos, prod);
            if (k == autos.size() || theta[k] != theta[a] * theta[c]) {
                multiplicative = false;
                witness = brief(autos[a]) + " o " + brief(autos[c]);
                break;
            }
        }
    }
    b.check("scalar-map-multiplicative", multiplicative, witness);

    std::vector<std::size_t> U;
    for (std::size_t a = 0; a < autos.size(); ++a) {
        if (theta[a].is_one()) U.push_back(a);
    }
    // the kernel is the set of maps translating a_1 by a derived-subalgebra
    // element, and it is closed under matrix inversion
    Subspace derived_sub = derived(L.algebra());
    bool kernel_matches = true;
    witness.clear();
    for (std::size_t a = 0; a < autos.size(); ++a) {
        CoordVec shift = subtract(autos[a].column(0), unit_vector(L.field(), L.n(), 0));
        bool translates = derived_sub.contains(shift);
        if (translates != theta[a].is_one() || in_subgroup_U(L, autos[a]) != translates) {
            kernel_matches = false;
            witness = brief(autos[a]);
            break;
        }
        if (translates && find_map(autos, autos[a].inverse()) == autos.size()) {
            kernel_matches = false;
            witness = "inverse of " + brief(autos[a]) + " missing";
            break;
        }
    }
    b.check("kernel-is-the-translation-subgroup", kernel_matches, witness);

    bool normal = true;
    witness.clear();
    for (std::size_t h = 0; h < autos.size() && normal; ++h) {
        Matrix h_inv = autos[h].inverse();
        for (std::size_t a : U) {
            Matrix conj = h_inv * autos[a] * autos[h];
            std::size_t k = find_map(autos, conj);
            if (k == autos.size() || !theta[k].is_one()) {
                normal = false;
                witness = "conjugate of " + brief(autos[a]) + " by " + brief(autos[h]);
                break;
            }
        }
    }
    b.check("kernel-normal", normal, witness);

    std::vector<Scalar> image = theta;
    std::sort(image.begin(), image.end(), [](const Scalar& x, const Scalar& y) { return x.cmp(y) < 0; });
    image.erase(std::unique(image.begin(), image.end()), image.end());
    b.check("order-splits-as-kernel-times-image", autos.size() == U.size() * image.size(),
            std::to_string(autos.size()) + " != " + std::to_string(U.size()) + " * " +
                std::to_string(image.size()));
    return b.result;
}

VerifySuiteResult suite_semidirect_split(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("semidirect-split");
    auto autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard).maps;
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();

    bool factors = true;
    std::string witness;
    for (const auto& m : autos) {
        UDDecomposition ud = decompose_UD(L, m);  // verifies the reassembly internally
        Matrix unit_part = uc_matrix(f, ud.u_params);
        Matrix diag_part = dm_matrix(f, ud.d_scalar, n);
        if (!is_automorphism(L.algebra(), unit_part) || !is_automorphism(L.algebra(), diag_part)) {
            factors = false;
            witness = brief(m);
            break;
        }
    }
    b.check("every-automorphism-factors", factors, witness);

    auto ucs = enumerate_uc_matrices(f, n);
    std::uint64_t q = static_cast<std::uint64_t>(f.order());
    b.check("factor-sizes-multiply-to-group-order",
            autos.size() == ucs.size() * static_cast<std::size_t>(q - 1),
            std::to_string(autos.size()) + " != " + std::to_string(ucs.size()) + " * " +
                std::to_string(q - 1));

    bool trivial_intersection = true;
    witness.clear();
    for (const auto& u : ucs) {
        bool diagonal = true;
        for (std::size_t i = 0; i < n && diagonal; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !u.at(i, j).is_zero()) {
                    diagonal = false;
                    break;
                }
        if (diagonal && u != Matrix::identity(f, n)) {
            trivial_intersection = false;
            witness = brief(u);
            break;
        }
    }
    b.check("factors-intersect-trivially", trivial_intersection, witness);

    bool diag_iso = true;
    witness.clear();
    for (std::int64_t r = 1; r < f.order() && diag_iso; ++r) {
        Scalar gamma = Scalar::from_residue(f, r);
        for (std::int64_t s = 1; s < f.order(); ++s) {
            Scalar sigma = Scalar::from_residue(f, s);
            if (dm_matrix(f, gamma, n) * dm_matrix(f, sigma, n) != dm_matrix(f, gamma * sigma, n)) {
                diag_iso = false;
                witness = gamma.to_string() + ", " + sigma.to_string();
                break;
            }
        }
    }
    b.check("diagonal-part-multiplies-like-field-units", diag_iso, witness);
    return b.result;
}

VerifySuiteResult suite_unitriangular_units(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("unitriangular-units");
    (void)raise_guard;
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();
    auto ucs = enumerate_uc_matrices(f, n);

    bool all_autos = true;
    std::string witness;
    for (const auto& u : ucs) {
        if (!is_automorphism(L.algebra(), u)) {
            all_autos = false;
            witness = brief(u);
            break;
        }
    }
    b.check("unitriangular-maps-are-automorphisms", all_autos, witness);

    auto params_of = [&](const Matrix& u) {
        std::vector<Scalar> p;
        p.reserve(n - 1);
        for (std::size_t i = 2; i <= n; ++i) p.push_back(u.at(i - 1, 0));
        return p;
    };

    bool multiplicative = true;
    witness.clear();
    for (const auto& a : ucs) {
        for (const auto& c : ucs) {
            QuotElement lhs = phi_to_unit(f, params_of(a * c));
            QuotElement rhs = phi_to_unit(f, params_of(a)) * phi_to_unit(f, params_of(c));
            if (lhs != rhs) {
                multiplicative = false;
                witness = brief(a) + " o " + brief(c);
                break;
            }
        }
        if (!multiplicative) break;
    }
    b.check("unit-map-multiplicative", multiplicative, witness);

    auto targets = subgroup_I_elements(QuotientRing::x_power_modulus(f, n));
    bool bijective = ucs.size() == targets.size();
    if (bijective) {
        for (const auto& u : ucs) {
            QuotElement image = phi_to_unit(f, params_of(u));
            if (std::find(targets.begin(), targets.end(), image) == targets.end()) {
                bijective = false;
                witness = brief(u);
                break;
            }
        }
        // distinct inputs give distinct units: the residue determines the
        // first column, so equality of images forces equality of matrices
        for (std::size_t a = 0; a + 1 < ucs.size() && bijective; ++a) {
            for (std::size_t c = a + 1; c < ucs.size(); ++c) {
                if (phi_to_unit(f, params_of(ucs[a])) == phi_to_unit(f, params_of(ucs[c]))) {
                    bijective = false;
                    witness = brief(ucs[a]) + " vs " + brief(ucs[c]);
                    break;
                }
            }
        }
    } else {
        witness = std::to_string(ucs.size()) + " maps vs " + std::to_string(targets.size()) + " units";
    }
    b.check("unit-map-bijective-onto-constant-term-1", bijective, witness);
    return b.result;
}

VerifySuiteResult suite_centralizer_monoid(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("centralizer-monoid");
    auto endos = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;
    auto autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard).maps;

    std::vector<Matrix> D;
    for (const auto& f : endos) {
        if (centralizer_D_membership(L, f)) D.push_back(f);
    }

    std::size_t n = L.n();
    b.check("contains-identity", find_map(D, Matrix::identity(L.field(), n)) != D.size());

    bool closed = true;
    std::string witness;
    for (const auto& f : D) {
        for (const auto& g : D) {
            if (find_map(D, f * g) == D.size()) {
                closed = false;
                witness = brief(f) + " o " + brief(g);
                break;
            }
        }
        if (!closed) break;
    }
    b.check("closed-under-composition", closed, witness);

    std::vector<Matrix> C;
    for (const auto& f : D) {
        if (f.rref().rank == n) C.push_back(f);
    }
    bool normal = true;
    witness.clear();
    for (const auto& g : autos) {
        Matrix g_inv = g.inverse();
        for (const auto& f : C) {
            if (find_map(C, g_inv * f * g) == C.size()) {
                normal = false;
                witness = "conjugate of " + brief(f) + " by " + brief(g);
                break;
            }
        }
        if (!normal) break;
    }
    b.check("invertible-part-normal-in-aut", normal, witness);
    return b.result;
}

VerifySuiteResult suite_centralizer_polynomials(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("centralizer-polynomials");
    auto endos = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;
    std::vector<Matrix> D;
    for (const auto& f : endos) {
        if (centralizer_D_membership(L, f)) D.push_back(f);
    }

    std::uint64_t q = static_cast<std::uint64_t>(L.field().order());
    b.check("size-is-q^(n-1)", D.size() == int_pow(q, L.n() - 1), "got " + std::to_string(D.size()));

    std::vector<QuotElement> images;
    images.reserve(D.size());
    for (const auto& f : D) images.push_back(d_f_polynomial(L, f));

    auto residues = enumerate_residues(action_ring(L));
    bool onto = D.size() == residues.size();
    std::string witness;
    if (onto) {
        for (const auto& r : residues) {
            if (std::find(images.begin(), images.end(), r) == images.end()) {
                onto = false;
                witness = r.to_string();
                break;
            }
        }
    } else {
        witness = std::to_string(D.size()) + " maps vs " + std::to_string(residues.size()) + " residues";
    }
    b.check("bijective-onto-residues", onto, witness);

    bool multiplicative = true;
    witness.clear();
    for (std::size_t a = 0; a < D.size() && multiplicative; ++a) {
        for (std::size_t c = 0; c < D.size(); ++c) {
            if (d_f_polynomial(L, D[a] * D[c]) != images[a] * images[c]) {
                multiplicative = false;
                witness = brief(D[a]) + " o " + brief(D[c]);
                break;
            }
        }
    }
    b.check("composition-becomes-multiplication", multiplicative, witness);

    bool round_trip = true;
    witness.clear();
    for (std::size_t a = 0; a < D.size(); ++a) {
        if (endo_from_polynomial(L, images[a].residue()) != D[a]) {
            round_trip = false;
            witness = images[a].to_string();
            break;
        }
    }
    b.check("polynomial-construction-round-trips", round_trip, witness);
    return b.result;
}

VerifySuiteResult suite_centralizer_units(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("centralizer-units");
    auto endos = enumerate_endomorphisms(L.algebra(), MapKind::endomorphisms, raise_guard).maps;
    auto autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard).maps;
    std::size_t n = L.n();

    std::vector<Matrix> C;
    for (const auto& f : endos) {
        if (centralizer_D_membership(L, f) && f.rref().rank == n) C.push_back(f);
    }

    auto units = enumerate_units(action_ring(L));
    bool match = C.size() == units.size();
    std::string witness;
    if (match) {
        for (const auto& f : C) {
            QuotElement d = d_f_polynomial(L, f);
            if (std::find(units.begin(), units.end(), d) == units.end()) {
                match = false;
                witness = d.to_string();
                break;
            }
        }
    } else {
        witness = std::to_string(C.size()) + " maps vs " + std::to_string(units.size()) + " units";
    }
    b.check("invertible-part-matches-unit-group", match, witness);

    // Every automorphism rescales c; the scale equals the a_1-coefficient
    // and its kernel is exactly the centralizer part.
    CanonicalC c = canonical_c(L);
    bool scales = true;
    witness.clear();
    for (const auto& f : autos) {
        if (f.apply(c.c) != scale(theta_scalar(L, f), c.c)) {
            scales = false;
            witness = brief(f);
            break;
        }
    }
    b.check("autos-rescale-c-by-the-scalar-map", scales, witness);

    bool kernel = true;
    witness.clear();
    for (const auto& f : autos) {
        bool fixes = f.apply(c.c) == c.c;
        if (fixes != (find_map(C, f) != C.size())) {
            kernel = false;
            witness = brief(f);
            break;
        }
    }
    b.check("scalar-kernel-is-invertible-centralizer", kernel, witness);

    std::uint64_t q = static_cast<std::uint64_t>(L.field().order());
    bool divides = !C.empty() && autos.size() % C.size() == 0 && (q - 1) % (autos.size() / C.size()) == 0;
    b.check("quotient-order-divides-field-unit-count", divides,
            std::to_string(autos.size()) + " / " + std::to_string(C.size()) + " vs q-1 = " +
                std::to_string(q - 1));
    return b.result;
}

VerifySuiteResult suite_subdirect_embedding(const CyclicAlgebra& L, bool raise_guard) {
    SuiteBuilder b("subdirect-embedding");
    SubdirectReport r = subdirect_check(L, raise_guard);
    b.check("pair-map-injective", r.pair_map_injective, "|Aut| = " + std::to_string(r.aut_count));
    b.check("projections-homomorphic", r.projections_homomorphic);
    b.check("projections-land-in-quotient-automorphisms", r.components_are_automorphisms);
    b.check("trivial-joint-kernel", r.kernel_intersection == 1,
            "joint kernel size " + std::to_string(r.kernel_intersection));
    return b.result;
}

}  // namespace

std::vector<std::string> all_suite_ids() {
    return {"center-preservation",   "series-preservation", "square-zero-ideal",
            "endo-closed-form",      "endo-partition",      "scalar-homomorphism",
            "semidirect-split",      "unitriangular-units", "centralizer-monoid",
            "centralizer-polynomials", "centralizer-units",   "subdirect-embedding"};
}

VerifySuiteResult run_verify_suite(const LoadedAlgebra& input, const std::string& suite_id, bool raise_guard) {
    auto ids = all_suite_ids();
    if (std::find(ids.begin(), ids.end(), suite_id) == ids.end()) {
        throw BadSpec("unknown suite '" + suite_id + "'");
    }
    SuiteBuilder b(suite_id);
    if (!input.field().is_finite()) {
        return b.skip("infinite field; suites are enumeration-backed");
    }

    if (suite_id == "center-preservation") return suite_center_preservation(input.algebra(), raise_guard);
    if (suite_id == "series-preservation") return suite_series_preservation(input.algebra(), raise_guard);

    if (!input.is_cyclic()) return b.skip("wrong type: needs a cyclic algebra");
    const CyclicAlgebra& L = input.cyclic();
    TypeTag::Variant v = L.tag().variant;

    if (suite_id == "square-zero-ideal") return suite_square_zero_ideal(L, raise_guard);
    if (suite_id == "scalar-homomorphism") return suite_scalar_homomorphism(L, raise_guard);

    if (suite_id == "endo-closed-form" || suite_id == "endo-partition" || suite_id == "semidirect-split" ||
        suite_id == "unitriangular-units") {
        if (v != TypeTag::Variant::I) return b.skip("wrong type: needs type I, got " + L.tag().to_string());
        if (suite_id == "endo-closed-form") return suite_endo_closed_form(L, raise_guard);
        if (suite_id == "endo-partition") return suite_endo_partition(L, raise_guard);
        if (suite_id == "semidirect-split") return suite_semidirect_split(L, raise_guard);
        return suite_unitriangular_units(L, raise_guard);
    }

    if (suite_id == "centralizer-monoid" || suite_id == "centralizer-polynomials" ||
        suite_id == "centralizer-units") {
        if (v != TypeTag::Variant::II) return b.skip("wrong type: needs type II, got " + L.tag().to_string());
        if (suite_id == "centralizer-monoid") return suite_centralizer_monoid(L, raise_guard);
        if (suite_id == "centralizer-polynomials") return suite_centralizer_polynomials(L, raise_guard);
        return suite_centralizer_units(L, raise_guard);
    }

    // subdirect-embedding
    if (v != TypeTag::Variant::III) return b.skip("wrong type: needs type III, got " + L.tag().to_string());
    return suite_subdirect_embedding(L, raise_guard);
}

}  // namespace leibniz
