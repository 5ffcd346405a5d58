#include <doctest.h>

#include <cmath>

#include "sagrover/errors.hpp"
#include "sagrover/qubo.hpp"
#include "sagrover/selftest.hpp"

using namespace sagrover;

namespace {

// Independent of fix_variables: substitute and evaluate on the full model.
double eval_with_merge(const QuboModel& model, const PartialAssignment& p,
                       const Assignment& free_bits) {
    return evaluate(model, merge_assignment(p, free_bits));
}

PartialAssignment random_partition(int n, int q, Rng& rng) {
    PartialAssignment p;
    p.free = rng.sample_indices(n, q);
    std::vector<bool> is_free(static_cast<std::size_t>(n), false);
    for (int i : p.free) is_free[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < n; ++i)
        if (!is_free[static_cast<std::size_t>(i)])
            p.fixed[i] = static_cast<std::uint8_t>(rng.uniform_u64(2));
    return p;
}

}  // namespace

TEST_CASE("evaluate on the demo instance matches hand values") {
    const QuboModel m = demo_model();
    CHECK(evaluate(m, assignment_from_string("00010")) == 0.0);
    // 5*x0 - 1
    CHECK(evaluate(m, assignment_from_string("10000")) == 4.0);
    // 1 + 2 + 3 + 2 - 2 + 4 - 4 + 1 - 1
    CHECK(evaluate(m, assignment_from_string("01111")) == 6.0);
    CHECK(evaluate(m, assignment_from_string("00000")) == -1.0);
}

TEST_CASE("evaluate of an empty model is zero") {
    QuboModel m;
    m.n = 4;
    CHECK(evaluate(m, Assignment(4, 1)) == 0.0);
    CHECK(evaluate(m, Assignment(4, 0)) == 0.0);
}

TEST_CASE("evaluate rejects mismatched assignment length") {
    const QuboModel m = demo_model();
    CHECK_THROWS_AS(evaluate(m, Assignment(4, 0)), DimensionError);
}

TEST_CASE("assignment index convention is LSB-first") {
    const Assignment a = assignment_from_index(0b10110, 5);
    // bit 0 of the integer is x0
    CHECK(assignment_to_string(a) == "01101");
    CHECK(assignment_to_index(a) == 0b10110);
}

TEST_CASE("brute force on the demo instance") {
    const BruteForceResult r = brute_force_min(demo_model());
    CHECK(r.cost == -5.0);
    CHECK(evaluate(demo_model(), r.best) == -5.0);
}

TEST_CASE("brute force counts optima and breaks ties low") {
    QuboModel m;
    m.n = 3;
    CHECK(brute_force_min(m).optimal_count == 8);
    CHECK(assignment_to_index(brute_force_min(m).best) == 0);

    const ReducedQubo reduced = demo_reduced();
    const BruteForceResult r = brute_force_min(reduced.model);
    CHECK(r.cost == 0.0);
    CHECK(r.optimal_count == 4);
    CHECK(assignment_to_index(r.best) == 0);
}

TEST_CASE("brute force enforces the enumeration cap") {
    QuboModel m;
    m.n = 25;
    CHECK_THROWS_AS(brute_force_min(m), CapacityError);
}

TEST_CASE("fixing x0=0 and x3=1 reduces the demo model to xy+2yz+3zx") {
    const ReducedQubo r = demo_reduced();
    CHECK(r.model.n == 3);
    CHECK(r.model.offset == 0.0);
    CHECK(r.folded_offset == 1.0);  // +x3 folded in, cancelling the -1 offset
    CHECK(r.model.linear.empty());
    REQUIRE(r.model.quadratic.size() == 3);
    CHECK(r.model.quadratic.at({0, 1}) == 1.0);
    CHECK(r.model.quadratic.at({1, 2}) == 2.0);
    CHECK(r.model.quadratic.at({0, 2}) == 3.0);
    CHECK(r.index_map == std::vector<int>{1, 2, 4});
}

TEST_CASE("fixing everything folds the model into its offset") {
    const QuboModel m = demo_model();
    PartialAssignment p;
    const Assignment a = assignment_from_string("01011");
    for (int i = 0; i < m.n; ++i) p.fixed[i] = a[static_cast<std::size_t>(i)];
    const ReducedQubo r = fix_variables(m, p);
    CHECK(r.model.n == 0);
    CHECK(r.model.offset == evaluate(m, a));
}

TEST_CASE("fixing nothing returns the model unchanged") {
    const QuboModel m = demo_model();
    PartialAssignment p;
    p.free = {0, 1, 2, 3, 4};
    const ReducedQubo r = fix_variables(m, p);
    CHECK(r.model == m);
    CHECK(r.folded_offset == 0.0);
}

TEST_CASE("fix_variables rejects broken partitions") {
    const QuboModel m = demo_model();
    PartialAssignment p;
    p.fixed[0] = 1;
    p.free = {0, 1, 2, 3, 4};  // 0 is fixed and free
    CHECK_THROWS_AS(fix_variables(m, p), PartitionError);

    PartialAssignment q;
    q.free = {1, 2, 3, 4};  // 0 missing
    CHECK_THROWS_AS(fix_variables(m, q), PartitionError);
}

TEST_CASE("reduction consistency over random models and partitions") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_u64(12));
        const QuboModel m = random_instance(n, 0.7, 6, rng.next_u64());
        const int q = static_cast<int>(rng.uniform_u64(
            static_cast<std::uint64_t>(n) + 1));
        const PartialAssignment p = random_partition(n, q, rng);
        const ReducedQubo r = fix_variables(m, p);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << q); ++c) {
            const Assignment free_bits = assignment_from_index(c, q);
            CHECK(evaluate(r.model, free_bits) ==
                  eval_with_merge(m, p, free_bits));
        }
    }
}

TEST_CASE("brute-force cost lower-bounds random evaluations") {
    const QuboModel m = random_instance(10, 0.5, 8, 99);
    const double min_cost = brute_force_min(m).cost;
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Assignment a =
            assignment_from_index(rng.uniform_u64(1u << 10), 10);
        CHECK(evaluate(m, a) >= min_cost);
    }
}

TEST_CASE("random instances are deterministic per seed") {
    const QuboModel a = random_instance(5, 1.0, 5, 7);
    const QuboModel b = random_instance(5, 1.0, 5, 7);
    CHECK(a == b);
    const QuboModel c = random_instance(5, 1.0, 5, 8);
    CHECK(a != c);
}

TEST_CASE("random instance density concentrates around the expectation") {
    const QuboModel m = random_instance(625, 0.05, 5, 12345);
    CHECK(m.n == 625);
    const double pairs = 625.0 * 624.0 / 2.0;
    const double expected = 0.05 * pairs;
    const double sigma = std::sqrt(pairs * 0.05 * 0.95);
    CHECK(std::abs(static_cast<double>(m.quadratic.size()) - expected) <
          3.0 * sigma);
    for (const auto& [ij, c] : m.quadratic) {
        CHECK(c != 0.0);
        CHECK(std::abs(c) <= 5.0);
        CHECK(c == std::floor(c));
    }
}

TEST_CASE("one-variable instances have no quadratic terms") {
    const QuboModel m = random_instance(1, 1.0, 3, 0);
    CHECK(m.quadratic.empty());
}

TEST_CASE("serialize/parse round-trips the demo instance") {
    const QuboModel m = demo_model();
    CHECK(parse_model(serialize_model(m)) == m);
}

TEST_CASE("serialize/parse round-trips random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_u64(30));
        const QuboModel m = random_instance(n, 0.4, 9, rng.next_u64());
        CHECK(parse_model(serialize_model(m)) == m);
    }
}

TEST_CASE("parser reports duplicate and malformed lines by number") {
    CHECK_THROWS_WITH_AS(
        parse_model("qubo 1\nn 5\nq 0 1 1\nq 0 1 2\n"),
        doctest::Contains("line 4"), ParseError);
    CHECK_THROWS_AS(parse_model("qubo 1\nn 5\nq 0 7 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("qubo 1\nn 5\nl 5 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("qubo 1\nn 5\nq 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("qubo 1\nn 5\nz 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("n 5\n"), ParseError);
    CHECK_THROWS_AS(parse_model("qubo 1\nl 0 1\n"), ParseError);
}

TEST_CASE("parser accepts comments and blank lines") {
    const QuboModel m = parse_model(
        "# header comment\nqubo 1\nn 2\n\noffset -1  # trailing\nq 0 1 3\n");
    CHECK(m.n == 2);
    CHECK(m.offset == -1.0);
    CHECK(m.quadratic.at({0, 1}) == 3.0);
}

TEST_CASE("integer coefficients serialize without fractional part") {
    QuboModel m;
    m.n = 2;
    m.linear[0] = -3.0;
    m.quadratic[{0, 1}] = 7.0;
    const std::string text = serialize_model(m);
    CHECK(text.find("l 0 -3\n") != std::string::npos);
    CHECK(text.find("q 0 1 7\n") != std::string::npos);
    CHECK(text.find('.') == std::string::npos);
}

TEST_CASE("real coefficients survive the round trip exactly") {
    QuboModel m;
    m.n = 2;
    m.linear[1] = 0.1;
    m.quadratic[{0, 1}] = -2.5e-7;
    const QuboModel back = parse_model(serialize_model(m));
    CHECK(back.linear.at(1) == 0.1);
    CHECK(back.quadratic.at({0, 1}) == -2.5e-7);
}

TEST_CASE("term-operation counter is the term count") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_u64(20));
        const QuboModel m = random_instance(n, 0.8, 4, rng.next_u64());
        std::uint64_t ops = 0;
        evaluate_counted(m, Assignment(static_cast<std::size_t>(n), 1), ops);
        CHECK(ops == m.term_count());
        CHECK(ops <= static_cast<std::uint64_t>(n) * (n + 1) / 2 + 1);
    }
}
