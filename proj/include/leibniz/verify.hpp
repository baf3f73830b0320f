#ifndef LEIBNIZ_VERIFY_HPP
#define LEIBNIZ_VERIFY_HPP

#include <string>
#include <vector>

#include "leibniz/specfile.hpp"

namespace leibniz {

struct CheckResult {
    std::string id;
    bool pass;
    std::string witness;  // short failure context, empty on pass
};

struct VerifySuiteResult {
    std::string suite;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> checks;

    bool overall_pass() const {
        if (skipped) return true;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The registered suite names, in their canonical run order. Each suite
/// asserts one structural statement about endomorphism monoids or
/// automorphism groups, backed by exhaustive enumeration over finite
/// fields:
///
///   center-preservation      automorphisms fix centers and [L,L] setwise
///   series-preservation      endomorphisms respect the central series
///   square-zero-ideal        maps into [L,L] = square-zero maps, an ideal
///                            with zero multiplication
///   endo-closed-form         type I endomorphisms are exactly the
///                            triangular closed-form family
///   endo-partition           type I endomorphisms split into square-zero
///                            maps and automorphisms
///   scalar-homomorphism      the a_1-coefficient is multiplicative with
///                            kernel the unitriangular subgroup
///   semidirect-split         type I automorphisms factor as unitriangular
///                            times diagonal
///   unitriangular-units      the unitriangular subgroup matches the
///                            constant-term-1 units of F[X]/X^n
///   centralizer-monoid       type II: maps fixing c form a submonoid; its
///                            invertible part is normal
///   centralizer-polynomials  type II: maps fixing c correspond to residues
///                            of F[X]/a(X), composition to multiplication
///   centralizer-units        type II: the invertible part matches the unit
///                            group of F[X]/a(X)
///   subdirect-embedding      type III: Aut embeds into the product of the
///                            two quotient automorphism groups
std::vector<std::string> all_suite_ids();

/// Runs one suite. Suites that do not apply to the input (wrong cyclic
/// type, non-cyclic input, infinite field) come back skipped with a reason,
/// not failed. GuardExceeded propagates.
VerifySuiteResult run_verify_suite(const LoadedAlgebra& input, const std::string& suite_id,
                                   bool raise_guard = false);

}  // namespace leibniz

#endif
