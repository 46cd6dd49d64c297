#pragma once

#include <cstdint>
#include <vector>

#include "gbc/graph.hpp"
#include "gbc/words.hpp"

namespace gbc {

// Graph group A(Gamma): one generator per vertex, adjacent generators
// commute, no other relations.
class RaagGroup {
public:
    explicit RaagGroup(SimplicialGraph graph);

    const SimplicialGraph& graph() const { return graph_; }
    int rank() const { return graph_.vertex_count(); }

    // Vertices that do NOT commute with v (excluding v itself).
    const std::vector<int>& non_adjacent(int v) const { return non_adjacent_[v]; }

    void check_word(const GroupWord& w) const;

private:
    SimplicialGraph graph_;
    std::vector<std::vector<int>> non_adjacent_;
};

// Stack-per-generator encoding of a group element. Tokens are the letter's
// sign on its own column and 0 on every non-commuting column; a letter
// cancels the top of its column when the matching blockers are all clear.
// Equal stacks <=> equal group elements; all empty <=> identity.
class Piling {
public:
    explicit Piling(const RaagGroup& g);

    void push(int gen, int sign);
    void push_word(const GroupWord& w);

    bool empty() const;
    // Number of sign tokens = geodesic length of the element.
    int letter_count() const;

    // Lexicographically least geodesic under x_0 < x_0^-1 < x_1 < ...
    GroupWord extract_normal_form() const;

    bool operator==(const Piling& other) const { return stacks_ == other.stacks_; }

    const std::vector<std::vector<std::int8_t>>& stacks() const { return stacks_; }

private:
    const RaagGroup* group_;
    std::vector<std::vector<std::int8_t>> stacks_;  // back = top
};

GroupWord free_reduce(const RaagGroup& g, const GroupWord& w);

// Linear in |w| for a fixed graph.
bool is_trivial(const RaagGroup& g, const GroupWord& w);

GroupWord normal_form(const RaagGroup& g, const GroupWord& w);

int geodesic_length(const RaagGroup& g, const GroupWord& w);

// True iff some c satisfies c^-1 w1 c = w2. Cyclically reduces both, then
// walks the closure of single-letter rotations of normal forms; throws
// SizeLimitError instead of guessing when the closure exceeds `state_cap`.
bool are_conjugate(const RaagGroup& g, const GroupWord& w1, const GroupWord& w2,
                   std::size_t state_cap = 200000);

// Conjugate w1 and w2 only through words whose normal forms stay short; the
// cyclically reduced core of w, minimal length in its conjugacy class.
GroupWord cyclically_reduce(const RaagGroup& g, const GroupWord& w);

bool raag_isomorphic(const RaagGroup& g1, const RaagGroup& g2,
                     const SearchLimits& limits = {});

// Induced subgraphs on the join factors; the direct product of the factor
// groups is the whole group.
std::vector<RaagGroup> direct_product_decomposition(const RaagGroup& g);

// First/second cohomology with the cup product over the two-element field,
// recorded as a pairing table: entry (i,j) is 0 off edges, otherwise
// 1 + index of the edge's W-coordinate.
struct CohomologyTriple {
    int dim_v = 0;  // rank of the group
    int dim_w = 0;  // number of edges
    std::vector<std::vector<int>> pairing;

    SimplicialGraph nonzero_pattern() const;
};

CohomologyTriple cohomology_triple(const RaagGroup& g);

// True iff some cyclic ordering of the standard basis has pairwise nonzero
// consecutive pairings; by construction this is Hamiltonicity of the
// nonzero-pattern graph.
bool is_hamiltonian_triple(const CohomologyTriple& t, const SearchLimits& limits = {});

}  // namespace gbc
