#ifndef POWOPS_ADEM_HPP
#define POWOPS_ADEM_HPP

#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "powops/terms.hpp"

namespace powops {
namespace adem {

/// Thrown when a rewrite exceeds its step budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One Adem substitution: expands an inadmissible adjacent pair into a
/// combination of words of length <= 2.  Throws std::invalid_argument if the
/// pair is admissible.
///
/// Side B uses the Dyer-Lashof relations (at odd p the two beta-twisted
/// relations, with beta applied formally on the left and beta beta terms
/// deleted); side A uses the classical Steenrod relations.  Summation ranges
/// are derived from the binomial vanishing rules, not hard-coded tables.
LinComb adem_step(const OpLetter& a, const OpLetter& b, Prime p, Side side);

/// Append-only memo of pair expansions, shared between concurrent readers
/// with exclusive insertion.
class RewriteCache {
public:
    const LinComb& get_or_compute(const OpLetter& a, const OpLetter& b, Prime p, Side side);
    size_t size() const;

private:
    struct Key {
        long long prime;
        Side side;
        OpLetter a;
        OpLetter b;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const;
    };

    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, LinComb, KeyHash> map_;
};

enum class Strategy { Leftmost, Rightmost };

struct ReduceOptions {
    Strategy strategy = Strategy::Leftmost;
    /// Substitution budget per input term; exhaustion throws BudgetError.
    long long step_budget = 1'000'000;
    RewriteCache* cache = nullptr;
    /// Observer invoked as (word before, word after) for every substitution
    /// output; used by the termination-measure tests.
    std::function<void(const OpWord&, const OpWord&)> on_step;
};

/// Rewrites x to its admissible normal form.  Linear; degree and side-B
/// weight of every output word match the word it descends from.
LinComb reduce(const LinComb& x, const ReduceOptions& opts = {});
LinComb reduce_word(const OpWord& w, const ReduceOptions& opts = {});

/// Batch reduction, serial reference.
std::vector<LinComb> reduce_batch_serial(const std::vector<LinComb>& xs,
                                         const ReduceOptions& opts = {});
/// Batch reduction, OpenMP-parallel over inputs with per-thread caches;
/// results are identical to the serial reference.
std::vector<LinComb> reduce_batch(const std::vector<LinComb>& xs,
                                  const ReduceOptions& opts = {});

/// Termination measure: positions count from the argument side (rightmost
/// letter first on side B, leftmost on side A), each weighted by the letter's
/// degree contribution.  Every Adem substitution strictly decreases it.
long long moment(const OpWord& w);

}  // namespace adem
}  // namespace powops

#endif
