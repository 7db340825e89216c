#ifndef IFORMS_CHECKS_HPP
#define IFORMS_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iforms/form.hpp"
#include "iforms/tensor.hpp"

namespace iforms {

/// Seeded generators for the randomized identity suites. All draws are from a
/// caller-owned engine, so a fixed seed reproduces the exact same cases.
namespace gen {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng);
Poly random_poly(Rng& rng, const Space& space, int max_degree = 3, int max_terms = 3);
VectorField random_vector_field(Rng& rng, const Space& space);
SmoothMap random_map(Rng& rng, const Space& source, const Space& target);
Generator random_generator(Rng& rng, const Space& space, int max_slot);
Form random_form(Rng& rng, const Space& space, int max_slot, int max_factors = 4, int max_terms = 3);
/// Random form all of whose generators use slots <= max_slot and |K| == 1.
Form random_lambda1_form(Rng& rng, const Space& space);
CovariantTensor random_tensor(Rng& rng, const Space& space, std::size_t order);

}  // namespace gen

struct CheckResult {
    std::string suite;
    std::string identity;
    int cases = 0;
    bool passed = true;
    std::string counterexample;  // rendered first failure, empty when passed
};

/// Runs one named suite (or "all"). Deterministic for a fixed seed.
/// Suites: commutation, partition, kappa, homotopy, tensor, pullback.
std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed, int cases);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace iforms

#endif
