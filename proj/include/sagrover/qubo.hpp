#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sagrover/rng.hpp"

namespace sagrover {

/// One bit per variable; index 0 is the least significant bit whenever an
/// assignment is rendered as an integer. Display strings put x0 leftmost.
using Assignment = std::vector<std::uint8_t>;

std::string assignment_to_string(const Assignment& a);
Assignment assignment_from_string(const std::string& s);
Assignment assignment_from_index(std::uint64_t index, int n);
std::uint64_t assignment_to_index(const Assignment& a);

/// Quadratic pseudo-boolean cost function
///   f(x) = offset + sum_i linear[i]*x_i + sum_{i<j} quadratic[(i,j)]*x_i*x_j
struct QuboModel {
    int n = 0;
    std::map<int, double> linear;
    std::map<std::pair<int, int>, double> quadratic;
    double offset = 0.0;

    /// Number of stored terms including the offset.
    std::size_t term_count() const {
        return linear.size() + quadratic.size() + 1;
    }

    /// Nonzero non-constant terms (the monomials a circuit has to build).
    std::size_t monomial_count() const;

    bool integer_coefficients() const;

    /// Throws if any index is out of range, a quadratic key is not strictly
    /// ordered, or a coefficient is non-finite.
    void validate() const;

    bool operator==(const QuboModel& other) const = default;
};

struct PartialAssignment {
    std::map<int, std::uint8_t> fixed;
    std::vector<int> free;  // ordered list of the q free indices
};

/// Model over the q free variables; index_map[r] is the original index of
/// reduced variable r. folded_offset records the constant absorbed while
/// fixing; it is already included in model.offset.
struct ReducedQubo {
    QuboModel model;
    std::vector<int> index_map;
    double folded_offset = 0.0;
};

struct BruteForceResult {
    Assignment best;
    double cost = 0.0;
    std::uint64_t optimal_count = 0;
};

double evaluate(const QuboModel& model, const Assignment& a);

/// Same as evaluate but accumulates one count per term touched (offset
/// included) into term_ops; this counter backs the quadratic-cost model.
double evaluate_counted(const QuboModel& model, const Assignment& a,
                        std::uint64_t& term_ops);

/// Exhaustive minimum over all 2^n assignments, n <= 24. Ties break toward
/// the lowest unsigned encoding (index 0 = LSB).
BruteForceResult brute_force_min(const QuboModel& model);

/// Substitute the fixed bits of p into the model, folding constants into the
/// offset and renumbering the free variables by index_map order.
ReducedQubo fix_variables(const QuboModel& model, const PartialAssignment& p);

PartialAssignment partial_from_state(const Assignment& state,
                                     const std::vector<int>& free);

/// Fill the free positions of p with bits (reduced order) into a full
/// assignment of n variables.
Assignment merge_assignment(const PartialAssignment& p, const Assignment& free_bits);

/// Random model: each linear/quadratic slot is populated with probability
/// `density`; populated coefficients are uniform nonzero integers in
/// [-coeff_range, coeff_range]. Deterministic per seed.
QuboModel random_instance(int n, double density, int coeff_range,
                          std::uint64_t seed);

QuboModel parse_model(const std::string& text);
std::string serialize_model(const QuboModel& model);

}  // namespace sagrover
