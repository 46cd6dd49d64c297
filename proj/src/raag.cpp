#include "gbc/raag.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace gbc {

RaagGroup::RaagGroup(SimplicialGraph graph) : graph_(std::move(graph)) {
    int n = graph_.vertex_count();
    non_adjacent_.resize(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && !graph_.has_edge(u, v)) non_adjacent_[v].push_back(u);
}

void RaagGroup::check_word(const GroupWord& w) const {
    for (const Letter& l : w)
        if (l.gen < 0 || l.gen >= rank())
            throw GeneratorOutOfRange("letter references generator " +
                                      std::to_string(l.gen) + " in a rank-" +
                                      std::to_string(rank()) + " group");
}

Piling::Piling(const RaagGroup& g) : group_(&g), stacks_(g.rank()) {}

void Piling::push(int gen, int sign) {
    auto& own = stacks_[gen];
    const auto& blockers = group_->non_adjacent(gen);
    bool cancel = !own.empty() && own.back() == -sign;
    if (cancel) {
        for (int u : blockers) {
            const auto& s = stacks_[u];
            if (s.empty() || s.back() != 0) {
                cancel = false;
                break;
            }
        }
    }
    if (cancel) {
        own.pop_back();
        for (int u : blockers) stacks_[u].pop_back();
    } else {
        own.push_back(static_cast<std::int8_t>(sign));
        for (int u : blockers) stacks_[u].push_back(0);
    }
}

void Piling::push_word(const GroupWord& w) {
    group_->check_word(w);
    for (const Letter& l : w) push(l.gen, l.sign);
}

bool Piling::empty() const {
    for (const auto& s : stacks_)
        if (!s.empty()) return false;
    return true;
}

int Piling::letter_count() const {
    int count = 0;
    for (const auto& s : stacks_)
        for (std::int8_t t : s)
            if (t != 0) ++count;
    return count;
}

namespace {

// A letter of generator v is exposed at the bottom iff its own column's
// front token is the sign and every non-commuting column fronts a 0.
bool bottom_ready(const std::vector<std::vector<std::int8_t>>& stacks,
                  const std::vector<std::size_t>& head, const RaagGroup& g, int v) {
    if (head[v] >= stacks[v].size() || stacks[v][head[v]] == 0) return false;
    for (int u : g.non_adjacent(v)) {
        if (head[u] >= stacks[u].size() || stacks[u][head[u]] != 0) return false;
    }
    return true;
}

}  // namespace

GroupWord Piling::extract_normal_form() const {
    const RaagGroup& g = *group_;
    int n = g.rank();
    std::vector<std::size_t> head(n, 0);
    int remaining = letter_count();
    GroupWord out;
    out.reserve(remaining);
    while (remaining > 0) {
        // Generators are scanned ascending, so the least available letter is
        // taken first; distinct ready generators never tie.
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (bottom_ready(stacks_, head, g, v)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("piling extraction stalled");
        out.push_back({pick, stacks_[pick][head[pick]] > 0 ? +1 : -1});
        ++head[pick];
        for (int u : g.non_adjacent(pick)) ++head[u];
        --remaining;
    }
    return out;
}

GroupWord free_reduce(const RaagGroup& g, const GroupWord& w) {
    g.check_word(w);
    return free_reduce_word(w);
}

bool is_trivial(const RaagGroup& g, const GroupWord& w) {
    Piling p(g);
    p.push_word(w);
    return p.empty();
}

GroupWord normal_form(const RaagGroup& g, const GroupWord& w) {
    Piling p(g);
    p.push_word(w);
    return p.extract_normal_form();
}

int geodesic_length(const RaagGroup& g, const GroupWord& w) {
    Piling p(g);
    p.push_word(w);
    return p.letter_count();
}

namespace {

bool top_ready(const Piling& p, const RaagGroup& g, int v, int sign) {
    const auto& stacks = p.stacks();
    if (stacks[v].empty() || stacks[v].back() != sign) return false;
    for (int u : g.non_adjacent(v))
        if (stacks[u].empty() || stacks[u].back() != 0) return false;
    return true;
}

bool front_ready(const Piling& p, const RaagGroup& g, int v, int sign) {
    const auto& stacks = p.stacks();
    if (stacks[v].empty() || stacks[v].front() != sign) return false;
    for (int u : g.non_adjacent(v))
        if (stacks[u].empty() || stacks[u].front() != 0) return false;
    return true;
}

std::string encode_word(const GroupWord& w) {
    std::string out;
    out.reserve(w.size());
    for (const Letter& l : w)
        out.push_back(static_cast<char>(l.gen * 2 + (l.sign < 0 ? 1 : 0)));
    return out;
}

}  // namespace

GroupWord cyclically_reduce(const RaagGroup& g, const GroupWord& w) {
    GroupWord cur = normal_form(g, w);
    bool shrunk = true;
    while (shrunk && cur.size() >= 2) {
        shrunk = false;
        Piling p(g);
        p.push_word(cur);
        for (int v = 0; v < g.rank() && !shrunk; ++v) {
            for (int s : {+1, -1}) {
                // cur = v^s u v^-s up to shuffles; strip both ends.
                if (front_ready(p, g, v, s) && top_ready(p, g, v, -s)) {
                    GroupWord conj{Letter{v, -s}};
                    cur = normal_form(g, concat(concat(conj, cur), inverse(conj)));
                    shrunk = true;
                    break;
                }
            }
        }
    }
    return cur;
}

bool are_conjugate(const RaagGroup& g, const GroupWord& w1, const GroupWord& w2,
                   std::size_t state_cap) {
    GroupWord u = cyclically_reduce(g, w1);
    GroupWord v = cyclically_reduce(g, w2);
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;

    // Conjugation preserves exponent sums.
    std::vector<long> su(g.rank(), 0), sv(g.rank(), 0);
    for (const Letter& l : u) su[l.gen] += l.sign;
    for (const Letter& l : v) sv[l.gen] += l.sign;
    if (su != sv) return false;

    // Closure of the cyclically reduced class under moving any exposed first
    // letter to the end; membership of v's core decides conjugacy.
    const std::string target = encode_word(v);
    std::unordered_set<std::string> seen;
    std::deque<GroupWord> queue;
    seen.insert(encode_word(u));
    if (seen.count(target)) return true;
    queue.push_back(u);
    while (!queue.empty()) {
        GroupWord cur = queue.front();
        queue.pop_front();
        Piling p(g);
        p.push_word(cur);
        for (int gen = 0; gen < g.rank(); ++gen) {
            for (int s : {+1, -1}) {
                if (!front_ready(p, g, gen, s)) continue;
                GroupWord conj{Letter{gen, -s}};
                GroupWord rotated =
                    normal_form(g, concat(concat(conj, cur), inverse(conj)));
                std::string key = encode_word(rotated);
                if (key == target) return true;
                if (seen.insert(std::move(key)).second) {
                    if (seen.size() > state_cap)
                        throw SizeLimitError("conjugacy closure exceeded state cap");
                    queue.push_back(std::move(rotated));
                }
            }
        }
    }
    return false;
}

bool raag_isomorphic(const RaagGroup& g1, const RaagGroup& g2,
                     const SearchLimits& limits) {
    return graphs_isomorphic(g1.graph(), g2.graph(), limits);
}

std::vector<RaagGroup> direct_product_decomposition(const RaagGroup& g) {
    std::vector<RaagGroup> out;
    for (const auto& factor : join_decompose(g.graph()).factors)
        out.emplace_back(induced_subgraph(g.graph(), factor));
    return out;
}

SimplicialGraph CohomologyTriple::nonzero_pattern() const {
    SimplicialGraph g(dim_v);
    for (int i = 0; i < dim_v; ++i)
        for (int j = i + 1; j < dim_v; ++j)
            if (pairing[i][j] != 0) g.add_edge(i, j);
    return g;
}

CohomologyTriple cohomology_triple(const RaagGroup& g) {
    int n = g.rank();
    CohomologyTriple t;
    t.dim_v = n;
    t.dim_w = g.graph().edge_count();
    t.pairing.assign(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.graph().edges()) {
        int coord = 1 + g.graph().edge_index(u, v);
        t.pairing[u][v] = coord;
        t.pairing[v][u] = coord;
    }
    return t;
}

bool is_hamiltonian_triple(const CohomologyTriple& t, const SearchLimits& limits) {
    return hamiltonian_cycle(t.nonzero_pattern(), limits).has_value();
}

}  // namespace gbc
