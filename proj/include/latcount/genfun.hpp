#pragma once

#include <string>
#include <vector>

#include "latcount/arith.hpp"
#include "latcount/cone.hpp"

namespace latcount {

struct GenericityError : Error {
    using Error::Error;
};

// epsilon * (sum_{a in A} z^a) / prod_j (1 - z^{b_j})
struct GenFunTerm {
    int sign = +1;
    std::vector<IntVec> numerator;
    std::vector<IntVec> denominator;

    bool operator==(const GenFunTerm&) const = default;
};

struct GenFun {
    int dim = 0;
    std::vector<GenFunTerm> terms;

    bool operator==(const GenFun&) const = default;
};

// Direction lambda with <lambda, b> != 0 for every denominator generator.
struct SubstitutionContext {
    IntVec lambda;
    int series_order = 0;
};

GenFunTerm term_from_cone(const SimplicialCone& k, const ParallelepipedPoints& pts);

// Seeded deterministic search for a generic direction.
SubstitutionContext pick_lambda(const GenFun& g, unsigned long seed);

// Exponential substitution z = exp(tau * lambda) via Todd-type series.
Int count_exponential(const GenFun& g, const SubstitutionContext& ctx);

// Polynomial substitution z = ((1+s)^lambda_1, ..., (1+s)^lambda_d).
Int count_polynomial(const GenFun& g, const SubstitutionContext& ctx);

// Line-oriented text: `sign ; a1 a2 ... ; b1 | b2 | ... | bd`,
// vectors as comma-separated integers. Bit-exact round trip.
std::string to_text(const GenFun& g);
GenFun genfun_from_text(const std::string& text);

}  // namespace latcount
