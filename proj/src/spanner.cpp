#include "tailspan/spanner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tailspan {

namespace {

constexpr std::size_t kNoLambda = std::numeric_limits<std::size_t>::max();

// First-discovery provenance for one residue: reached from `from` by
// adding coef * lambda[lambda_index]. Residue 0 keeps the default entry
// (the empty combination), which is where certificate walks stop.
struct Provenance {
    std::size_t from = 0;
    std::size_t lambda_index = kNoLambda;
    std::int8_t coef = 0;
};

// Closure of `reach` by one new lambda element with witness tracking:
// newly reached residues record which old member they came from. +1 is
// preferred over -1 when both discover the same residue.
void add_with_provenance(ReachSet& reach, std::size_t value,
                         std::size_t lambda_index,
                         std::vector<Provenance>& provenance) {
    const std::size_t n = reach.n();
    const std::size_t v = value % n;
    const std::vector<std::size_t> old_members = reach.members();
    reach.add(v);
    for (std::size_t y : old_members) {
        const std::size_t plus = (y + v) % n;
        const std::size_t minus = (y + n - v) % n;
        if (plus != 0 && provenance[plus].lambda_index == kNoLambda) {
            provenance[plus] = {y, lambda_index, +1};
        }
        if (minus != 0 && provenance[minus].lambda_index == kNoLambda) {
            provenance[minus] = {y, lambda_index, -1};
        }
    }
}

std::vector<std::int8_t> walk_certificate(
    std::size_t residue, std::size_t lambda_size,
    const std::vector<Provenance>& provenance) {
    std::vector<std::int8_t> coeffs(lambda_size, 0);
    std::size_t r = residue;
    while (r != 0) {
        const Provenance& p = provenance[r];
        coeffs[p.lambda_index] = p.coef;
        r = p.from;  // discovered at a strictly earlier level
    }
    return coeffs;
}

bool certificate_matches(const std::vector<std::int8_t>& coeffs,
                         const std::vector<std::size_t>& lambda,
                         std::size_t gamma, std::size_t n) {
    if (coeffs.size() != lambda.size()) return false;
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (coeffs[j] < -1 || coeffs[j] > 1) return false;
        sum += static_cast<std::int64_t>(coeffs[j]) *
               static_cast<std::int64_t>(lambda[j]);
    }
    const auto m = static_cast<std::int64_t>(n);
    return ((sum % m) + m) % m == static_cast<std::int64_t>(gamma % n);
}

// Fresh {-1,0,1}-span of an element list, level by level.
ReachSet span_of(const std::vector<std::size_t>& elements, std::size_t n) {
    ReachSet reach(n);
    for (std::size_t v : elements) {
        if (reach.full()) break;
        reach.add(v);
    }
    return reach;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k,
                              std::uint64_t cap) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return result;
}

// Advance to the next k-combination of [0, total) in lexicographic
// order; false once exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t total) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] != i + total - k) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ReachSet::ReachSet(std::size_t n) : n_(n), count_(1), table_(n, false) {
    if (n == 0) throw std::invalid_argument("ReachSet: n must be positive");
    table_[0] = true;
}

bool ReachSet::contains(std::size_t residue) const {
    return table_[residue % n_];
}

void ReachSet::add(std::size_t value) {
    const std::size_t v = value % n_;
    const std::vector<bool> old = table_;
    for (std::size_t x = 0; x < n_; ++x) {
        if (table_[x]) continue;
        const std::size_t down = (x + n_ - v) % n_;  // x = down + v
        const std::size_t up = (x + v) % n_;         // x = up - v
        if (old[down] || old[up]) {
            table_[x] = true;
            ++count_;
        }
    }
}

std::vector<std::size_t> ReachSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t x = 0; x < n_; ++x) {
        if (table_[x]) out.push_back(x);
    }
    return out;
}

SpanResult greedy_span(const Spectrum& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("greedy_span: n must be positive");
    if (spec.n() != n) {
        throw std::invalid_argument(
            "greedy_span: spectrum was derived from a signal of length " +
            std::to_string(spec.n()) + ", not " + std::to_string(n));
    }

    SpanResult result{{}, ReachSet(n), false, {}};
    std::vector<Provenance> provenance(n);
    for (const SpectrumEntry& entry : spec.gamma()) {
        if (result.reach.full()) break;
        const std::size_t g = entry.index % n;
        if (result.reach.contains(g)) continue;
        result.lambda.push_back(g);
        add_with_provenance(result.reach, g, result.lambda.size() - 1,
                            provenance);
    }

    result.all_spanned = true;
    result.certificates.reserve(spec.size());
    for (const SpectrumEntry& entry : spec.gamma()) {
        const std::size_t g = entry.index % n;
        if (!result.reach.contains(g)) {
            result.all_spanned = false;  // unreachable by construction
            result.certificates.emplace_back();
            continue;
        }
        result.certificates.push_back(
            walk_certificate(g, result.lambda.size(), provenance));
    }
    return result;
}

bool verify_span(const SpanResult& result, const Spectrum& spec) {
    const std::size_t n = result.reach.n();
    if (spec.n() != n) {
        throw std::invalid_argument(
            "verify_span: result is over Z_" + std::to_string(n) +
            " but spectrum is over Z_" + std::to_string(spec.n()));
    }
    if (result.certificates.size() != spec.size()) return false;

    const ReachSet fresh = span_of(result.lambda, n);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const std::size_t g = spec.gamma()[i].index % n;
        if (!fresh.contains(g)) return false;
        if (!certificate_matches(result.certificates[i], result.lambda, g,
                                 n)) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> minimal_lambda(const Spectrum& spec,
                                                       std::size_t n,
                                                       std::size_t max_size,
                                                       std::uint64_t budget) {
    if (n == 0) {
        throw std::invalid_argument("minimal_lambda: n must be positive");
    }
    if (spec.n() != n) {
        throw std::invalid_argument(
            "minimal_lambda: spectrum/modulus mismatch");
    }
    if (max_size == 0) {
        throw std::invalid_argument("minimal_lambda: max_size must be >= 1");
    }

    std::vector<std::size_t> candidates = spec.indices();
    for (std::size_t& c : candidates) c %= n;
    std::sort(candidates.begin(), candidates.end());
    const std::size_t total = candidates.size();
    const std::size_t limit = std::min(max_size, total);

    std::uint64_t subset_count = 0;
    for (std::size_t k = 0; k <= limit; ++k) {
        subset_count += binomial_capped(total, k, budget);
        if (subset_count > budget) {
            throw std::runtime_error(
                "minimal_lambda: oracle budget exceeded (" +
                std::to_string(total) + " candidates need more than " +
                std::to_string(budget) + " subsets)");
        }
    }

    const auto spans_all = [&](const std::vector<std::size_t>& subset) {
        const ReachSet reach = span_of(subset, n);
        for (std::size_t g : candidates) {
            if (!reach.contains(g)) return false;
        }
        return true;
    };

    // Smallest cardinality first, lexicographic over the sorted
    // candidate list within a cardinality: the first hit is a true
    // minimum and the output is deterministic.
    for (std::size_t k = 0; k <= limit; ++k) {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        do {
            std::vector<std::size_t> subset(k);
            for (std::size_t i = 0; i < k; ++i) {
                subset[i] = candidates[pick[i]];
            }
            if (spans_all(subset)) return subset;
        } while (next_combination(pick, total));
    }
    return std::nullopt;
}

}  // namespace tailspan
