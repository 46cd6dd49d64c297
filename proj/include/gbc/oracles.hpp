#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gbc/graph.hpp"
#include "gbc/unitriangular.hpp"
#include "gbc/words.hpp"

namespace gbc {

// Oracles answer definitively or report Exhausted; they never guess past
// their budget. They ship in the library so the CLI can expose them for
// auditing, but nothing depends on them for speed.
struct OracleBudget {
    std::size_t max_word_length = 64;
    std::uint64_t max_exponent = 8;
    std::uint64_t max_group_size = 1000000;
    std::size_t step_ceiling = 2000000;
};

enum class WordAnswer { Trivial, Nontrivial, Exhausted };

// Complete decision by closure: breadth-first exploration of w under free
// cancellation and adjacent commuting-letter swaps. Swaps preserve length
// and cancellations shrink, so the closure is finite.
WordAnswer word_oracle(const SimplicialGraph& graph, const GroupWord& w,
                       const OracleBudget& budget = {});

struct ConjugacySearch {
    enum class Status { Found, NotFound, Exhausted } status;
    GroupWord conjugator;  // only meaningful when Found
};

// Enumerates candidate conjugators c by length then lexicographically,
// returning the first with word_oracle(c^-1 w1 c w2^-1) trivial.
ConjugacySearch conjugacy_oracle(const SimplicialGraph& graph, const GroupWord& w1,
                                 const GroupWord& w2, std::size_t max_conj_len,
                                 const OracleBudget& budget = {});

struct GdlpResult {
    enum class Status { Found, NotFound, Exhausted } status;
    std::vector<std::uint64_t> exponents;
};

// Exhaustive scan of x_1^{a_1} ... x_k^{a_k} = y over 0 <= a_i < orders[i].
GdlpResult gdlp_bruteforce(const std::vector<UnitriangularMatrix>& gens,
                           const std::vector<std::uint64_t>& orders,
                           const UnitriangularMatrix& target,
                           const OracleBudget& budget = {});

struct PowerMatch {
    enum class Status { Found, NotFound, Exhausted } status;
    std::uint64_t k = 0, l = 0;  // x^k = y^l when Found
};

// Bounded realization of the powers question: scan 1 <= k,l <= max_exp.
PowerMatch power_match_oracle(const SimplicialGraph& graph, const GroupWord& x,
                              const GroupWord& y, std::uint64_t max_exp,
                              const OracleBudget& budget = {});

}  // namespace gbc
