#include "sagrover/qubo.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sagrover/errors.hpp"

namespace sagrover {

std::string assignment_to_string(const Assignment& a) {
    std::string s;
    s.reserve(a.size());
    for (auto bit : a) s.push_back(bit ? '1' : '0');
    return s;
}

Assignment assignment_from_string(const std::string& s) {
    Assignment a;
    a.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw DimensionError("assignment string must contain only 0/1: " + s);
        a.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return a;
}

Assignment assignment_from_index(std::uint64_t index, int n) {
    Assignment a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((index >> i) & 1u);
    return a;
}

std::uint64_t assignment_to_index(const Assignment& a) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) idx |= (std::uint64_t{1} << i);
    return idx;
}

std::size_t QuboModel::monomial_count() const {
    std::size_t count = 0;
    for (const auto& [i, c] : linear)
        if (c != 0.0) ++count;
    for (const auto& [ij, c] : quadratic)
        if (c != 0.0) ++count;
    return count;
}

bool QuboModel::integer_coefficients() const {
    auto is_int = [](double v) { return std::isfinite(v) && v == std::floor(v); };
    if (!is_int(offset)) return false;
    for (const auto& [i, c] : linear)
        if (!is_int(c)) return false;
    for (const auto& [ij, c] : quadratic)
        if (!is_int(c)) return false;
    return true;
}

void QuboModel::validate() const {
    if (n < 0) throw DimensionError("variable count must be non-negative");
    if (!std::isfinite(offset)) throw DimensionError("offset must be finite");
    for (const auto& [i, c] : linear) {
        if (i < 0 || i >= n)
            throw DimensionError("linear index " + std::to_string(i) +
                                 " out of range [0, " + std::to_string(n) + ")");
        if (!std::isfinite(c))
            throw DimensionError("linear coefficient at index " +
                                 std::to_string(i) + " is not finite");
    }
    for (const auto& [ij, c] : quadratic) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw DimensionError("quadratic index pair (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ") out of range");
        if (i >= j)
            throw DimensionError("quadratic key (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") must satisfy i < j");
        if (!std::isfinite(c))
            throw DimensionError("quadratic coefficient at (" +
                                 std::to_string(i) + ", " + std::to_string(j) +
                                 ") is not finite");
    }
}

double evaluate_counted(const QuboModel& model, const Assignment& a,
                        std::uint64_t& term_ops) {
    if (static_cast<int>(a.size()) != model.n)
        throw DimensionError("assignment length " + std::to_string(a.size()) +
                             " does not match model n=" + std::to_string(model.n));
    double cost = model.offset;
    ++term_ops;
    for (const auto& [i, c] : model.linear) {
        cost += c * a[static_cast<std::size_t>(i)];
        ++term_ops;
    }
    for (const auto& [ij, c] : model.quadratic) {
        cost += c * a[static_cast<std::size_t>(ij.first)] *
                a[static_cast<std::size_t>(ij.second)];
        ++term_ops;
    }
    return cost;
}

double evaluate(const QuboModel& model, const Assignment& a) {
    std::uint64_t ignored = 0;
    return evaluate_counted(model, a, ignored);
}

BruteForceResult brute_force_min(const QuboModel& model) {
    if (model.n > 24)
        throw CapacityError("brute_force_min supports n <= 24, got n=" +
                            std::to_string(model.n));
    const std::uint64_t total = std::uint64_t{1} << model.n;
    BruteForceResult result;
    Assignment a(static_cast<std::size_t>(model.n), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (int i = 0; i < model.n; ++i)
            a[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((idx >> i) & 1u);
        const double cost = evaluate(model, a);
        if (idx == 0 || cost < result.cost) {
            result.best = a;
            result.cost = cost;
            result.optimal_count = 1;
        } else if (cost == result.cost) {
            ++result.optimal_count;
        }
    }
    return result;
}

ReducedQubo fix_variables(const QuboModel& model, const PartialAssignment& p) {
    // The fixed keys and free list must partition [0, n).
    std::vector<int> owner(static_cast<std::size_t>(model.n), -1);
    for (const auto& [i, bit] : p.fixed) {
        if (i < 0 || i >= model.n)
            throw PartitionError("fixed index " + std::to_string(i) +
                                 " out of range");
        if (bit != 0 && bit != 1)
            throw PartitionError("fixed value for index " + std::to_string(i) +
                                 " must be 0 or 1");
        owner[static_cast<std::size_t>(i)] = 0;
    }
    std::map<int, int> reduced_index;
    for (std::size_t r = 0; r < p.free.size(); ++r) {
        int i = p.free[r];
        if (i < 0 || i >= model.n)
            throw PartitionError("free index " + std::to_string(i) +
                                 " out of range");
        if (owner[static_cast<std::size_t>(i)] != -1)
            throw PartitionError("index " + std::to_string(i) +
                                 " is both fixed and free");
        owner[static_cast<std::size_t>(i)] = 1;
        reduced_index[i] = static_cast<int>(r);
    }
    for (int i = 0; i < model.n; ++i)
        if (owner[static_cast<std::size_t>(i)] == -1)
            throw PartitionError("index " + std::to_string(i) +
                                 " is neither fixed nor free");

    ReducedQubo out;
    out.index_map = p.free;
    out.model.n = static_cast<int>(p.free.size());
    out.model.offset = model.offset;

    auto fixed_bit = [&](int i) { return p.fixed.at(i); };
    auto is_fixed = [&](int i) { return owner[static_cast<std::size_t>(i)] == 0; };

    double folded = 0.0;
    for (const auto& [i, c] : model.linear) {
        if (is_fixed(i)) {
            if (fixed_bit(i)) folded += c;
        } else {
            out.model.linear[reduced_index[i]] += c;
        }
    }
    for (const auto& [ij, c] : model.quadratic) {
        auto [i, j] = ij;
        const bool fi = is_fixed(i), fj = is_fixed(j);
        if (fi && fj) {
            if (fixed_bit(i) && fixed_bit(j)) folded += c;
        } else if (fi) {
            if (fixed_bit(i)) out.model.linear[reduced_index[j]] += c;
        } else if (fj) {
            if (fixed_bit(j)) out.model.linear[reduced_index[i]] += c;
        } else {
            int ri = reduced_index[i], rj = reduced_index[j];
            if (ri > rj) std::swap(ri, rj);
            out.model.quadratic[{ri, rj}] += c;
        }
    }
    // Drop terms that cancelled to zero so term counts reflect the
    // simplified polynomial.
    std::erase_if(out.model.linear, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(out.model.quadratic,
                  [](const auto& kv) { return kv.second == 0.0; });

    out.folded_offset = folded;
    out.model.offset += folded;
    return out;
}

PartialAssignment partial_from_state(const Assignment& state,
                                     const std::vector<int>& free) {
    PartialAssignment p;
    p.free = free;
    std::vector<bool> is_free(state.size(), false);
    for (int i : free) {
        if (i < 0 || i >= static_cast<int>(state.size()))
            throw PartitionError("free index " + std::to_string(i) +
                                 " out of range");
        is_free[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t i = 0; i < state.size(); ++i)
        if (!is_free[i]) p.fixed[static_cast<int>(i)] = state[i];
    return p;
}

Assignment merge_assignment(const PartialAssignment& p,
                            const Assignment& free_bits) {
    if (free_bits.size() != p.free.size())
        throw DimensionError("free-bit count does not match the partition");
    Assignment full(p.fixed.size() + p.free.size(), 0);
    for (const auto& [i, bit] : p.fixed) full[static_cast<std::size_t>(i)] = bit;
    for (std::size_t r = 0; r < p.free.size(); ++r)
        full[static_cast<std::size_t>(p.free[r])] = free_bits[r];
    return full;
}

QuboModel random_instance(int n, double density, int coeff_range,
                          std::uint64_t seed) {
    if (n < 1) throw DimensionError("random_instance requires n >= 1");
    if (!(density > 0.0 && density <= 1.0))
        throw DimensionError("density must be in (0, 1]");
    if (coeff_range < 1) throw DimensionError("coeff_range must be >= 1");

    Rng rng(seed);
    auto nonzero_coeff = [&]() {
        // Uniform over [-range, -1] u [1, range].
        auto v = static_cast<std::int64_t>(
            rng.uniform_u64(static_cast<std::uint64_t>(2 * coeff_range)) + 1);
        return static_cast<double>(v <= coeff_range ? v - coeff_range - 1
                                                    : v - coeff_range);
    };

    QuboModel m;
    m.n = n;
    for (int i = 0; i < n; ++i)
        if (rng.bernoulli(density)) m.linear[i] = nonzero_coeff();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(density)) m.quadratic[{i, j}] = nonzero_coeff();
    return m;
}

namespace {

std::string format_coeff(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(int line_no, const std::string& line,
                             const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why + " [" +
                     line + "]");
}

}  // namespace

QuboModel parse_model(const std::string& text) {
    QuboModel m;
    bool saw_version = false;
    bool saw_n = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;  // blank or comment-only line

        auto want_int = [&](const char* what) {
            long long v;
            if (!(fields >> v)) parse_fail(line_no, line, std::string("expected ") + what);
            return v;
        };
        auto want_real = [&](const char* what) {
            double v;
            if (!(fields >> v)) parse_fail(line_no, line, std::string("expected ") + what);
            return v;
        };
        auto expect_end = [&]() {
            std::string extra;
            if (fields >> extra) parse_fail(line_no, line, "trailing field '" + extra + "'");
        };

        if (tag == "qubo") {
            long long version = want_int("format version");
            expect_end();
            if (version != 1)
                parse_fail(line_no, line, "unsupported format version");
            saw_version = true;
        } else if (tag == "n") {
            long long n = want_int("variable count");
            expect_end();
            if (n < 0) parse_fail(line_no, line, "negative variable count");
            m.n = static_cast<int>(n);
            saw_n = true;
        } else if (tag == "offset") {
            m.offset = want_real("offset value");
            expect_end();
        } else if (tag == "l") {
            if (!saw_n) parse_fail(line_no, line, "term before 'n' header");
            long long i = want_int("variable index");
            double c = want_real("coefficient");
            expect_end();
            if (i < 0 || i >= m.n)
                parse_fail(line_no, line, "index out of range");
            if (!m.linear.emplace(static_cast<int>(i), c).second)
                parse_fail(line_no, line, "duplicate linear term");
        } else if (tag == "q") {
            if (!saw_n) parse_fail(line_no, line, "term before 'n' header");
            long long i = want_int("first index");
            long long j = want_int("second index");
            double c = want_real("coefficient");
            expect_end();
            if (i < 0 || j < 0 || i >= m.n || j >= m.n)
                parse_fail(line_no, line, "index out of range");
            if (i >= j) parse_fail(line_no, line, "indices must satisfy i < j");
            if (!m.quadratic.emplace(std::make_pair(static_cast<int>(i),
                                                    static_cast<int>(j)), c)
                     .second)
                parse_fail(line_no, line, "duplicate quadratic term");
        } else {
            parse_fail(line_no, line, "unknown directive '" + tag + "'");
        }
    }
    if (!saw_version) throw ParseError("missing 'qubo <version>' header");
    if (!saw_n) throw ParseError("missing 'n <count>' header");
    m.validate();
    return m;
}

std::string serialize_model(const QuboModel& model) {
    model.validate();
    std::ostringstream out;
    out << "qubo 1\n";
    out << "n " << model.n << "\n";
    if (model.offset != 0.0) out << "offset " << format_coeff(model.offset) << "\n";
    for (const auto& [i, c] : model.linear)
        out << "l " << i << " " << format_coeff(c) << "\n";
    for (const auto& [ij, c] : model.quadratic)
        out << "q " << ij.first << " " << ij.second << " " << format_coeff(c)
            << "\n";
    return out.str();
}

}  // namespace sagrover
