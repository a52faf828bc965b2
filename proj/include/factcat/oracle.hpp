#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factcat/category.hpp"
#include "factcat/codec.hpp"

namespace factcat::oracle {

using json = codec::json;

/// A bounded universe: every tuple over `pool` of length at most `max_len`,
/// and every morphism between two of them.
struct UniverseSpec {
    MonoidHandle monoid;
    std::vector<Element> pool;
    std::size_t max_len = 3;
    std::size_t max_depth = 3;  // longest composition chain in the category laws
    std::uint64_t seed = 1;
    // Families with at most this many cases run exhaustively; larger ones are
    // sampled down to it.
    std::uint64_t max_cases = 1'000'000;

    /// zx: {-1,1,2,3,5,6}; nat: {1,2,3,5,6}; interval: {1,1/2,1/3};
    /// free: the identity, each generator, and the product of the first two.
    static UniverseSpec defaults(MonoidHandle monoid);
    void validate() const;
};

struct Failure {
    std::string check;
    std::string message;
    json payload;  // {"check", "monoid", "morphisms", "tuples"}; feed to replay()
};

struct SuiteReport {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures;  // the first kMaxRecordedFailures
    bool skipped = false;
    std::string note;
    double seconds = 0;

    bool passed() const noexcept { return failure_count == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 20;

struct RunReport {
    std::vector<SuiteReport> suites;
    bool passed() const noexcept;
    std::uint64_t cases() const noexcept;
};

/// Overridable primitives, so the harness can be checked against a broken
/// implementation.
struct Hooks {
    ComposeFn compose = &factcat::compose;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

SuiteReport run_one(const UniverseSpec& u, std::string_view name, const Hooks& hooks = {});
/// Runs the named suites in the given order. Unknown names throw
/// ValidationError before anything runs.
RunReport run_suite(const UniverseSpec& u, const std::vector<std::string>& names,
                    const Hooks& hooks = {});

/// Re-runs the single check recorded in a failure payload. Returns the
/// failure message if it still fails, an empty string otherwise.
std::string replay(const UniverseSpec& u, const json& payload, const Hooks& hooks = {});

std::vector<FactorTuple> enumerate_tuples(const MonoidHandle& monoid, std::span<const Element> pool,
                                          std::size_t max_len);

/// |hom(x, y)| by trying all |x|^|y| functions with no pruning.
std::uint64_t naive_hom_count(const FactorTuple& x, const FactorTuple& y);

json to_json(const SuiteReport& r);
json to_json(const RunReport& r);

}  // namespace factcat::oracle
