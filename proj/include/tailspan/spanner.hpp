#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tailspan/spectrum.hpp"

namespace tailspan {

/// The set of residues reachable as sum_i e_i * lambda_i mod N with
/// coefficients e_i in {-1, 0, 1}. Starts as {0} (the empty combination)
/// and stays symmetric under negation mod N. Backed by a membership
/// table of exactly N booleans.
class ReachSet {
  public:
    explicit ReachSet(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return count_; }
    bool full() const noexcept { return count_ == n_; }
    bool contains(std::size_t residue) const;

    /// Simultaneous closure update: members <- members U (members + v)
    /// U (members - v), all mod N. O(N).
    void add(std::size_t value);

    /// Members in ascending residue order.
    std::vector<std::size_t> members() const;

  private:
    std::size_t n_;
    std::size_t count_;
    std::vector<bool> table_;
};

/// Output of the greedy spanning construction. lambda is in greedy
/// insertion order (a subset of gamma); certificates[i] is a coefficient
/// vector over lambda with sum_j certificates[i][j] * lambda[j] == gamma_i
/// mod N, aligned with the spectrum's magnitude order.
struct SpanResult {
    std::vector<std::size_t> lambda;
    ReachSet reach;
    bool all_spanned = false;
    std::vector<std::vector<std::int8_t>> certificates;
};

/// Greedy construction of a spanning set for the large spectrum: walk
/// gamma in decreasing-magnitude order, skip elements already reachable,
/// otherwise add them to lambda and close the reach set; stop early once
/// every residue of Z_N is reachable. The result always spans gamma.
SpanResult greedy_span(const Spectrum& spec, std::size_t n);

/// Independent check of a SpanResult: recompute reachability from
/// lambda alone with a fresh closure (the greedy run's incremental set
/// is not trusted) and validate every certificate by exact modular
/// arithmetic. Returns true iff every gamma element is reachable and
/// every certificate reproduces its gamma element.
/// Throws std::invalid_argument if result and spec disagree on N.
bool verify_span(const SpanResult& result, const Spectrum& spec);

/// Exhaustive minimal-spanning-set oracle: subsets of gamma by
/// increasing cardinality, lexicographic within a cardinality (over the
/// ascending residue list), first subset whose {-1,0,1}-span covers
/// gamma. Returns the minimum-cardinality spanning subset, or nullopt
/// if none exists within max_size. Throws std::runtime_error
/// ("oracle budget exceeded") if the subset count would exceed budget.
std::optional<std::vector<std::size_t>> minimal_lambda(
    const Spectrum& spec, std::size_t n, std::size_t max_size,
    std::uint64_t budget = 1u << 22);

}  // namespace tailspan
