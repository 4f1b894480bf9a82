#include "relalg/network.hpp"

#include "relalg/error.hpp"

#include <deque>

namespace relalg {

Network::Network(int node_count, Element fill) : nodes_(node_count)
{
    if (node_count <= 0)
        throw UsageError("a network needs at least one node");
    labels_.assign(static_cast<std::size_t>(node_count) * node_count, fill);
}

Network Network::complete(int node_count, Element off_diagonal, Element diagonal)
{
    Network net(node_count, off_diagonal);
    for (int x = 0; x < node_count; ++x)
        net.set(x, x, diagonal);
    return net;
}

std::size_t Network::index(int x, int y) const
{
    if (x < 0 || y < 0 || x >= nodes_ || y >= nodes_)
        throw UsageError("node pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    return static_cast<std::size_t>(x) * nodes_ + y;
}

void Network::set_symmetric(const RelationAlgebra &ra, int x, int y, Element label)
{
    set(x, y, label);
    set(y, x, ra.converse(label));
}

bool Network::refines(const Network &coarser) const
{
    if (nodes_ != coarser.nodes_)
        return false;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!labels_[i].subset_of(coarser.labels_[i]))
            return false;
    return true;
}

Network Network::permuted(const std::vector<int> &perm) const
{
    if (static_cast<int>(perm.size()) != nodes_)
        throw UsageError("permutation size does not match node count");
    Network out(nodes_, Element{});
    for (int x = 0; x < nodes_; ++x)
        for (int y = 0; y < nodes_; ++y)
            out.set(perm[x], perm[y], at(x, y));
    return out;
}

Network from_structure(const RelationAlgebra &ra, const LabeledStructure &structure)
{
    Network net(structure.size, Element{});
    std::vector<char> seen(static_cast<std::size_t>(structure.size) * structure.size, 0);
    for (const auto &fact : structure.facts) {
        if (!ra.in_universe(fact.label))
            throw UsageError("structure fact uses an element outside the algebra");
        net.set(fact.from, fact.to, net.at(fact.from, fact.to) | fact.label);
        seen[static_cast<std::size_t>(fact.from) * structure.size + fact.to] = 1;
    }
    for (int x = 0; x < structure.size; ++x)
        for (int y = 0; y < structure.size; ++y)
            if (!seen[static_cast<std::size_t>(x) * structure.size + y])
                net.set(x, y, ra.one());
    return net;
}

Propagated normalize(const RelationAlgebra &ra, Network net)
{
    const int n = net.node_count();
    for (auto label : net.labels())
        if (!ra.in_universe(label))
            throw UsageError("network label outside the algebra's universe");

    for (int x = 0; x < n; ++x) {
        auto d = net.at(x, x) & ra.identity();
        d &= ra.converse_unchecked(d);
        if (d.empty())
            return Inconsistency{x, -1, x};
        net.set(x, x, d);
        for (int y = x + 1; y < n; ++y) {
            auto l = net.at(x, y) & ra.converse_unchecked(net.at(y, x));
            if (l.empty())
                return Inconsistency{x, -1, y};
            net.set(x, y, l);
            net.set(y, x, ra.converse_unchecked(l));
        }
    }
    return net;
}

namespace {

/// Worklist path consistency over a flat label matrix. Pairs in `queue` are
/// those whose labels changed (or have never been looked at).
class Propagator {
public:
    Propagator(const RelationAlgebra &ra, int n, std::vector<Element> &labels)
        : ra_(ra), n_(n), labels_(labels), queued_(labels.size(), 0)
    {
    }

    void push(int x, int y)
    {
        auto i = idx(x, y);
        if (!queued_[i]) {
            queued_[i] = 1;
            queue_.emplace_back(x, y);
        }
    }

    void push_all()
    {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                push(x, y);
    }

    std::optional<Inconsistency> run()
    {
        while (!queue_.empty()) {
            auto [i, j] = queue_.front();
            queue_.pop_front();
            queued_[idx(i, j)] = 0;
            for (int k = 0; k < n_; ++k) {
                // (i,j);(j,k) bounds (i,k)
                if (!refine(i, k, ra_.compose_unchecked(labels_[idx(i, j)], labels_[idx(j, k)])))
                    return Inconsistency{i, j, k};
                // (k,i);(i,j) bounds (k,j)
                if (!refine(k, j, ra_.compose_unchecked(labels_[idx(k, i)], labels_[idx(i, j)])))
                    return Inconsistency{k, i, j};
            }
        }
        return std::nullopt;
    }

private:
    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

    bool refine(int x, int y, Element bound)
    {
        auto &label = labels_[idx(x, y)];
        auto narrowed = label & bound;
        if (narrowed == label)
            return true;
        if (narrowed.empty()) {
            label = narrowed;
            return false;
        }
        label = narrowed;
        labels_[idx(y, x)] = ra_.converse_unchecked(narrowed);
        push(x, y);
        push(y, x);
        return true;
    }

    const RelationAlgebra &ra_;
    int n_;
    std::vector<Element> &labels_;
    std::vector<char> queued_;
    std::deque<std::pair<int, int>> queue_;
};

struct Search {
    const RelationAlgebra &ra;
    int n;
    bool propagate;
    SolveStats stats;

    /// Fewest atoms (>1), ties broken by the lexicographically smallest pair.
    std::optional<std::pair<int, int>> pick(const std::vector<Element> &labels) const
    {
        std::optional<std::pair<int, int>> best;
        int best_size = max_atoms + 1;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int s = labels[static_cast<std::size_t>(x) * n + y].size();
                if (s > 1 && s < best_size) {
                    best_size = s;
                    best = {x, y};
                }
            }
        return best;
    }

    bool closed_atomic(const std::vector<Element> &labels) const
    {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    auto xy = labels[static_cast<std::size_t>(x) * n + y];
                    auto yz = labels[static_cast<std::size_t>(y) * n + z];
                    auto xz = labels[static_cast<std::size_t>(x) * n + z];
                    if (!xz.subset_of(ra.compose_unchecked(xy, yz)))
                        return false;
                }
        return true;
    }

    std::optional<std::vector<Element>> run(std::vector<Element> labels)
    {
        auto choice = pick(labels);
        if (!choice)
            return propagate || closed_atomic(labels) ? std::optional{std::move(labels)} : std::nullopt;

        auto [x, y] = *choice;
        const auto label = labels[static_cast<std::size_t>(x) * n + y];
        for (auto atom : label.atoms()) {
            ++stats.branches;
            auto next = labels;
            auto e = Element::atom(atom);
            auto mirror = ra.converse_unchecked(e);
            // diagonal and converse constraints are kept by construction
            auto &back = next[static_cast<std::size_t>(y) * n + x];
            if (!mirror.subset_of(back)) {
                ++stats.dead_ends;
                continue;
            }
            next[static_cast<std::size_t>(x) * n + y] = e;
            back = mirror;
            if (propagate) {
                Propagator p(ra, n, next);
                p.push(x, y);
                p.push(y, x);
                if (p.run()) {
                    ++stats.dead_ends;
                    continue;
                }
            }
            if (auto found = run(std::move(next)))
                return found;
        }
        return std::nullopt;
    }
};

}  // namespace

Propagated closure(const RelationAlgebra &ra, Network net)
{
    Propagator p(ra, net.node_count(), net.labels());
    p.push_all();
    if (auto conflict = p.run())
        return *conflict;
    return net;
}

bool is_atomic_closed(const RelationAlgebra &ra, const Network &net)
{
    const int n = net.node_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto l = net.at(x, y);
            if (!l.is_atom() || !ra.in_universe(l))
                return false;
            if (x == y && !l.subset_of(ra.identity()))
                return false;
            if (net.at(y, x) != ra.converse(l))
                return false;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (!ra.allowed_triangle(net.at(x, y).first(), net.at(y, z).first(), net.at(x, z).first()))
                    return false;
    return true;
}

SolveResult solve(const RelationAlgebra &ra, const Network &net, SolveOptions options)
{
    SolveResult result;
    auto normalized = normalize(ra, net);
    if (!consistent(normalized)) {
        result.conflict = std::get<Inconsistency>(normalized);
        return result;
    }
    auto start = std::get<Network>(std::move(normalized));
    if (options.propagate) {
        auto closed = closure(ra, start);
        if (!consistent(closed)) {
            result.conflict = std::get<Inconsistency>(closed);
            return result;
        }
        start = std::get<Network>(std::move(closed));
    }

    Search search{ra, start.node_count(), options.propagate, {}};
    auto found = search.run(start.labels());
    result.stats = search.stats;
    if (found) {
        result.status = SolveStatus::sat;
        Network witness = start;
        witness.labels() = std::move(*found);
        result.witness = std::move(witness);
    }
    return result;
}

}  // namespace relalg
