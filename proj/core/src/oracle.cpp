#include "relalg/oracle.hpp"

#include "relalg/error.hpp"

#include <functional>

namespace relalg {

FiniteStructure::FiniteStructure(int size, std::vector<AtomId> atom_of) : size_(size), atom_of_(std::move(atom_of))
{
    if (size <= 0 || atom_of_.size() != static_cast<std::size_t>(size) * size)
        throw UsageError("finite structure needs size*size atoms");
}

Network FiniteStructure::as_network() const
{
    Network net(size_, Element{});
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            net.set(x, y, Element::atom(at(x, y)));
    return net;
}

bool is_model(const RelationAlgebra &ra, const FiniteStructure &s)
{
    for (auto a : s.atoms())
        if (a.value() >= ra.size())
            return false;
    return is_atomic_closed(ra, s.as_network());
}

namespace {

struct Shape {
    AtomId id, first, second;
};

/// Finds a single identity atom and two symmetric diversity atoms matching
/// `fits(first, second)`.
std::optional<Shape> match_shape(const RelationAlgebra &ra, const std::function<bool(const Shape &)> &fits)
{
    if (ra.size() != 3 || ra.identity().size() != 1)
        return std::nullopt;
    const auto id = ra.identity().first();
    std::vector<AtomId> others;
    for (int i = 0; i < 3; ++i)
        if (AtomId(i) != id)
            others.emplace_back(i);
    for (int swap = 0; swap < 2; ++swap) {
        Shape s{id, others[swap], others[1 - swap]};
        if (ra.converse(s.first) == s.first && ra.converse(s.second) == s.second && fits(s))
            return s;
    }
    return std::nullopt;
}

Element e_of(AtomId a) { return Element::atom(a); }

}  // namespace

FiniteStructure build_two_classes(const RelationAlgebra &ra, int n1, int n2)
{
    auto shape = match_shape(ra, [&](const Shape &s) {
        auto i = e_of(s.id), w = e_of(s.first), x = e_of(s.second);
        return ra.compose(s.first, s.first) == (i | w) && ra.compose(s.first, s.second) == x &&
               ra.compose(s.second, s.first) == x && ra.compose(s.second, s.second) == (i | w);
    });
    if (!shape)
        throw UsageError("algebra '" + ra.name() + "' does not have the two-class shape");
    if (n1 < 0 || n2 < 0 || n1 + n2 == 0)
        throw UsageError("class sizes must be non-negative with at least one point");

    const int n = n1 + n2;
    std::vector<AtomId> atoms(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const bool same = (x < n1) == (y < n1);
            atoms[static_cast<std::size_t>(x) * n + y] = x == y ? shape->id : same ? shape->first : shape->second;
        }
    return {n, std::move(atoms)};
}

std::vector<FiniteStructure> enumerate_triangle_free(const RelationAlgebra &ra, int n)
{
    auto shape = match_shape(ra, [&](const Shape &s) {
        auto i = e_of(s.id), e = e_of(s.first), f = e_of(s.second);
        return ra.compose(s.first, s.first) == (i | f) && ra.compose(s.first, s.second) == (e | f) &&
               ra.compose(s.second, s.first) == (e | f) && ra.compose(s.second, s.second) == ra.one();
    });
    if (!shape)
        throw UsageError("algebra '" + ra.name() + "' does not have the triangle-free shape");
    if (n < 1 || n > 6)
        throw UsageError("triangle-free enumeration supports 1 to 6 vertices");

    std::vector<std::pair<int, int>> pairs;
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x)
            pairs.emplace_back(x, y);

    std::vector<FiniteStructure> out;
    const std::uint32_t graphs = 1U << pairs.size();
    for (std::uint32_t g = 0; g < graphs; ++g) {
        std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((g >> p) & 1U) {
                adj[pairs[p].first * n + pairs[p].second] = 1;
                adj[pairs[p].second * n + pairs[p].first] = 1;
            }
        bool triangle = false;
        for (int x = 0; x < n && !triangle; ++x)
            for (int y = x + 1; y < n && !triangle; ++y)
                for (int z = y + 1; z < n && !triangle; ++z)
                    triangle = adj[x * n + y] && adj[y * n + z] && adj[x * n + z];
        if (triangle)
            continue;
        std::vector<AtomId> atoms(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                atoms[x * n + y] = x == y ? shape->id : adj[x * n + y] ? shape->first : shape->second;
        out.emplace_back(n, std::move(atoms));
    }
    return out;
}

std::vector<FiniteStructure> enumerate_models(const RelationAlgebra &ra, int n, int max_points)
{
    if (n < 1 || n > max_points)
        throw UsageError("model enumeration supports 1 to " + std::to_string(max_points) + " points");

    const auto ids = ra.identity().atoms();
    const auto diversity = ra.complement(ra.identity()).atoms();
    std::vector<AtomId> atoms(static_cast<std::size_t>(n) * n);
    std::vector<FiniteStructure> out;
    auto at = [&](int x, int y) -> AtomId & { return atoms[static_cast<std::size_t>(x) * n + y]; };

    // all triangles among points <= top that involve top
    auto closed_up_to = [&](int top) {
        for (int x = 0; x <= top; ++x)
            for (int y = 0; y <= top; ++y)
                for (int z = 0; z <= top; ++z) {
                    if (x != top && y != top && z != top)
                        continue;
                    if (!ra.allowed_triangle(at(x, y), at(y, z), at(x, z)))
                        return false;
                }
        return true;
    };

    // fill point `top`: its diagonal, then its pairs with earlier points
    std::function<void(int, int)> fill = [&](int top, int partner) {
        if (top == n) {
            out.emplace_back(n, atoms);
            return;
        }
        if (partner == -1) {
            for (auto i : ids) {
                at(top, top) = i;
                fill(top, 0);
            }
            return;
        }
        if (partner == top) {
            if (closed_up_to(top))
                fill(top + 1, -1);
            return;
        }
        for (auto a : diversity) {
            at(partner, top) = a;
            at(top, partner) = ra.converse(a);
            fill(top, partner + 1);
        }
    };
    fill(0, -1);
    return out;
}

std::optional<std::vector<int>> brute_force_satisfiable(const Network &net, const FiniteStructure &s)
{
    const int n = net.node_count();
    std::vector<int> assignment(n, -1);
    std::function<bool(int)> place = [&](int node) {
        if (node == n)
            return true;
        for (int p = 0; p < s.size(); ++p) {
            assignment[node] = p;
            bool ok = true;
            for (int other = 0; other <= node && ok; ++other)
                ok = net.at(node, other).contains(s.at(p, assignment[other])) &&
                     net.at(other, node).contains(s.at(assignment[other], p));
            if (ok && place(node + 1))
                return true;
        }
        assignment[node] = -1;
        return false;
    };
    if (place(0))
        return assignment;
    return std::nullopt;
}

OracleResult oracle_solve(const RelationAlgebra &ra, const Network &net, int max_nodes)
{
    if (net.node_count() > max_nodes)
        throw UsageError("oracle refuses networks with more than " + std::to_string(max_nodes) + " nodes");
    for (auto l : net.labels())
        if (!ra.in_universe(l))
            throw UsageError("network label outside the algebra's universe");

    OracleResult result;
    for (int m = 1; m <= net.node_count(); ++m)
        for (auto &model : enumerate_models(ra, m, std::max(m, 5))) {
            if (auto assignment = brute_force_satisfiable(net, model)) {
                result.sat = true;
                result.model = std::move(model);
                result.assignment = std::move(assignment);
                return result;
            }
        }
    return result;
}

}  // namespace relalg
