#include "relalg/probe.hpp"

#include "disjoint_set.hpp"
#include "relalg/detectors.hpp"
#include "relalg/error.hpp"

#include <array>
#include <functional>
#include <set>
#include <tuple>

namespace relalg {

namespace {

/// Tuples of length k over q symbols, coordinate 0 least significant, and
/// their orbits under rotation (x1..xk) -> (xk, x1..xk-1).
class TupleSpace {
public:
    TupleSpace(int q, int k) : q_(q), k_(k)
    {
        total_ = 1;
        for (int i = 0; i < k; ++i)
            total_ *= q;
        class_of_.assign(total_, -1);
        for (int t = 0; t < total_; ++t) {
            if (class_of_[t] != -1)
                continue;
            const int c = static_cast<int>(members_.size());
            members_.emplace_back();
            for (int r = t; class_of_[r] == -1; r = rotate(r)) {
                class_of_[r] = c;
                members_.back().push_back(r);
            }
        }
    }

    int total() const { return total_; }
    int classes() const { return static_cast<int>(members_.size()); }
    int class_of(int t) const { return class_of_[t]; }
    const std::vector<int> &members(int c) const { return members_[c]; }

    int digit(int t, int i) const
    {
        for (int j = 0; j < i; ++j)
            t /= q_;
        return t % q_;
    }

    std::vector<int> digits(int t) const
    {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i, t /= q_)
            d[i] = t % q_;
        return d;
    }

    int encode(const std::vector<int> &d) const
    {
        int t = 0;
        for (int i = k_ - 1; i >= 0; --i)
            t = t * q_ + d[i];
        return t;
    }

    int rotate(int t) const
    {
        auto d = digits(t);
        std::vector<int> r(k_);
        r[0] = d[k_ - 1];
        for (int i = 1; i < k_; ++i)
            r[i] = d[i - 1];
        return encode(r);
    }

private:
    int q_, k_, total_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> members_;
};

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent)
{
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && out > UINT64_MAX / base)
            return std::nullopt;
        out *= base;
    }
    return out;
}

/// Assigns one value per variable, variables in index order; `check(v, values)`
/// validates every constraint whose highest variable is v.
template <typename Check, typename Emit>
void backtrack(const std::vector<std::vector<int>> &domains, Check check, Emit emit)
{
    std::vector<int> values(domains.size(), -1);
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == domains.size())
            return emit(values);
        for (int value : domains[v]) {
            values[v] = value;
            if (check(v, values) && !go(v + 1))
                return false;
        }
        values[v] = -1;
        return true;
    };
    go(0);
}

constexpr std::uint64_t probe_work_budget = 50'000'000;

}  // namespace

BehaviourMap::BehaviourMap(Element domain, int arity, std::vector<AtomId> image)
    : domain_(domain), arity_(arity), domain_atoms_(domain.atoms()), image_(std::move(image))
{
}

bool BehaviourMap::covers(const Configuration &c) const
{
    if (static_cast<int>(c.size()) != arity_)
        return false;
    for (auto a : c)
        if (!domain_.contains(a))
            return false;
    return true;
}

AtomId BehaviourMap::operator()(const Configuration &c) const
{
    if (!covers(c))
        throw UsageError("configuration outside the behaviour map's domain");
    std::size_t index = 0;
    for (int i = arity_ - 1; i >= 0; --i) {
        std::size_t digit = 0;
        while (domain_atoms_[digit] != c[i])
            ++digit;
        index = index * domain_atoms_.size() + digit;
    }
    return image_[index];
}

BehaviourSearch enumerate_cyclic_behaviours(const RelationAlgebra &ra, Element domain, int arity,
                                            std::size_t survivor_limit)
{
    if (domain.empty() || !ra.in_universe(domain))
        throw UsageError("behaviour domain must be a non-empty set of atoms of the algebra");
    if (domain.size() > max_probe_domain)
        throw UsageError("behaviour domain is limited to " + std::to_string(max_probe_domain) + " atoms");
    if (arity < 1 || arity > max_probe_arity)
        throw UsageError("behaviour arity must be between 1 and " + std::to_string(max_probe_arity));

    const auto xs = domain.atoms();
    const int q = static_cast<int>(xs.size());
    TupleSpace space(q, arity);
    const int classes = space.classes();

    BehaviourSearch result;
    result.arity = arity;
    result.domain_size = q;
    result.rotation_classes = classes;
    result.candidates = checked_power(q, classes);

    // conservativity: a configuration goes to one of its own atoms
    std::vector<std::vector<int>> domains(classes);
    std::optional<std::uint64_t> conservative = 1;
    for (int c = 0; c < classes; ++c) {
        const auto t = space.members(c).front();
        for (int s = 0; s < q; ++s)
            for (int i = 0; i < arity; ++i)
                if (space.digit(t, i) == s) {
                    domains[c].push_back(s);
                    break;
                }
        if (conservative && *conservative > UINT64_MAX / domains[c].size())
            conservative.reset();
        else if (conservative)
            *conservative *= domains[c].size();
    }
    result.conservative = conservative;

    // triangle constraints, deduplicated and bucketed by their last class
    std::set<std::array<int, 3>> closed;
    std::set<std::tuple<int, int, std::uint64_t>> open;
    std::uint64_t work = 0;
    for (int t12 = 0; t12 < space.total(); ++t12)
        for (int t23 = 0; t23 < space.total(); ++t23) {
            std::vector<Element> sides(arity);
            bool possible = true;
            for (int i = 0; i < arity && possible; ++i) {
                sides[i] = ra.compose(xs[space.digit(t12, i)], xs[space.digit(t23, i)]);
                possible = !sides[i].empty();
            }
            if (!possible)
                continue;
            const int c12 = space.class_of(t12), c23 = space.class_of(t23);

            // third sides inside X
            std::vector<std::vector<int>> choices(arity);
            std::uint64_t product = 1;
            for (int i = 0; i < arity; ++i) {
                for (int s = 0; s < q; ++s)
                    if (sides[i].contains(xs[s]))
                        choices[i].push_back(s);
                product *= choices[i].size();
            }
            work += product;
            if (work > probe_work_budget)
                throw UsageError("behaviour constraint system exceeds the probe work budget");
            if (product > 0) {
                std::vector<std::size_t> pos(arity, 0);
                std::vector<int> digits(arity);
                for (;;) {
                    for (int i = 0; i < arity; ++i)
                        digits[i] = choices[i][pos[i]];
                    closed.insert({c12, c23, space.class_of(space.encode(digits))});
                    int i = 0;
                    while (i < arity && ++pos[i] == choices[i].size())
                        pos[i++] = 0;
                    if (i == arity)
                        break;
                }
            }

            // third sides leaving X: only the union of their atoms matters
            std::set<std::pair<std::uint64_t, bool>> unions{{0, false}};
            for (int i = 0; i < arity; ++i) {
                std::set<std::pair<std::uint64_t, bool>> next;
                for (auto [mask, left] : unions)
                    for (auto z : sides[i].atoms())
                        next.emplace(mask | Element::atom(z).bits(), left || !domain.contains(z));
                unions = std::move(next);
            }
            for (auto [mask, left] : unions)
                if (left)
                    open.emplace(c12, c23, mask);
        }

    std::vector<std::vector<std::array<int, 3>>> closed_at(classes);
    for (const auto &c : closed)
        closed_at[std::max({c[0], c[1], c[2]})].push_back(c);
    std::vector<std::vector<std::tuple<int, int, std::uint64_t>>> open_at(classes);
    for (const auto &o : open)
        open_at[std::max(std::get<0>(o), std::get<1>(o))].push_back(o);

    auto atom_of = [&](int digit) { return xs[digit]; };
    auto check = [&](std::size_t v, const std::vector<int> &f) {
        for (const auto &c : closed_at[v])
            if (!ra.allowed_triangle(atom_of(f[c[0]]), atom_of(f[c[1]]), atom_of(f[c[2]])))
                return false;
        for (const auto &[a, b, mask] : open_at[v])
            if (!ra.compose(atom_of(f[a]), atom_of(f[b])).meets(Element::from_bits(mask)))
                return false;
        return true;
    };
    auto emit = [&](const std::vector<int> &f) {
        if (result.survivors.size() >= survivor_limit) {
            result.truncated = true;
            return false;
        }
        std::vector<AtomId> image(space.total());
        for (int t = 0; t < space.total(); ++t)
            image[t] = atom_of(f[space.class_of(t)]);
        result.survivors.emplace_back(domain, arity, std::move(image));
        return true;
    };
    backtrack(domains, check, emit);
    return result;
}

Theorem6Probe probe_theorem6(const RelationAlgebra &ra, AtomId a)
{
    if (a.value() >= ra.size())
        throw UsageError("atom out of range");
    if (ra.identity().size() != 1)
        throw UsageError("the probe needs a single identity atom");
    if (ra.converse(a) != a)
        throw UsageError("atom " + ra.atom_name(a) + " is not symmetric");
    if (ra.is_identity_atom(a))
        throw UsageError("atom " + ra.atom_name(a) + " lies below the identity");

    Theorem6Probe probe;
    probe.identity = ra.identity().first();
    probe.atom = a;
    for (int i = 0; i < ra.size(); ++i) {
        AtomId b(i);
        if (!ra.is_identity_atom(b) && b != a && ra.allowed_triangle(a, a, b))
            probe.auxiliary.push_back(b);
    }
    probe.search = enumerate_cyclic_behaviours(ra, ra.identity() | Element::atom(a), 3);
    probe.reproduced = probe.search.survivors.empty() && !probe.search.truncated;
    return probe;
}

Case1Probe probe_theorem5_case1(const RelationAlgebra &ra, Element e, Case1Options options)
{
    if (!is_equivalence_element(ra, e))
        throw UsageError(ra.format(e) + " is not an equivalence element");
    if (e == ra.one())
        throw UsageError("e = 1 has a single class");
    const auto within = e - ra.identity();
    if (within.empty())
        throw UsageError("every class of " + ra.format(e) + " is a singleton: no second point c1' exists");
    auto classes = class_count(ra, e);
    if (!classes.finite() || classes.count != 2)
        throw UsageError(ra.format(e) + " does not have exactly two classes");

    const auto apart = ra.complement(e);
    std::vector<FiniteStructure> placements;
    for (auto d0 : ra.identity().atoms())
        for (auto d1 : ra.identity().atoms())
            for (auto d2 : ra.identity().atoms())
                for (auto w : within.atoms())
                    for (auto x : apart.atoms())
                        for (auto y : apart.atoms()) {
                            // points: 0 = c1, 1 = c1', 2 = c2
                            FiniteStructure s(3, {d0, w, x, ra.converse(w), d1, y, ra.converse(x), ra.converse(y), d2});
                            if (is_model(ra, s))
                                placements.push_back(std::move(s));
                        }
    if (placements.empty())
        throw UsageError("no placement of two equivalent points and an inequivalent one is consistent");

    constexpr std::array<int, 3> class_of_point{0, 0, 1};
    TupleSpace points(3, 3);
    TupleSpace class_tuples(2, 3);
    const int class_fns = 1 << class_tuples.classes();

    Case1Probe probe;
    probe.placements = static_cast<int>(placements.size());
    probe.candidates = class_fns;

    auto class_tuple = [&](int t) {
        std::vector<int> d(3);
        for (int i = 0; i < 3; ++i)
            d[i] = class_of_point[points.digit(t, i)];
        return class_tuples.encode(d);
    };

    for (int fn = 0; fn < class_fns; ++fn) {
        auto image_class = [&](int t) { return (fn >> class_tuples.class_of(class_tuple(t))) & 1; };
        bool dead = false;
        for (const auto &s : placements) {
            detail::DisjointSet equal(points.total());
            std::vector<std::pair<int, int>> distinct;
            for (int t = 0; t < points.total(); ++t)
                for (int u = t + 1; u < points.total(); ++u) {
                    Element config;
                    for (int i = 0; i < 3; ++i)
                        config |= Element::atom(s.at(points.digit(t, i), points.digit(u, i)));
                    // same class and conservative with no room inside e besides id
                    if (image_class(t) == image_class(u) && (config & e).subset_of(ra.identity()))
                        equal.unite(t, u);
                    if (options.disequalities && !config.meets(ra.identity()))
                        distinct.emplace_back(t, u);
                }
            for (auto [t, u] : distinct)
                if (equal.same(t, u)) {
                    dead = true;
                    break;
                }
            if (dead)
                break;
        }
        probe.eliminated += dead;
    }
    probe.reproduced = probe.eliminated == probe.candidates;
    return probe;
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Case2Probe probe_theorem5_case2(int m, int p)
{
    if (m < 3)
        throw UsageError("case 2 needs at least three classes");
    if (!is_prime(p) || p <= m)
        throw UsageError("arity must be a prime larger than the number of classes");
    if (p > 97)
        throw UsageError("arity is limited to 97");

    Case2Probe probe;
    probe.classes = m;
    probe.arity = p;

    // (c1,c2,c1,c2,...,c1,c2,c3) against its rotation (c3,c1,c2,...,c1,c2)
    probe.pattern.resize(p);
    for (int i = 0; i + 1 < p; ++i)
        probe.pattern[i] = i % 2;
    probe.pattern[p - 1] = 2;
    probe.rotation.resize(p);
    probe.rotation[0] = probe.pattern[p - 1];
    for (int i = 1; i < p; ++i)
        probe.rotation[i] = probe.pattern[i - 1];
    probe.pattern_holds = true;
    for (int i = 0; i < p; ++i)
        probe.pattern_holds &= probe.pattern[i] != probe.rotation[i];

    // any tuple differing from its rotation everywhere: a proper m-colouring
    // of the p-cycle
    std::vector<int> colouring(p, -1);
    std::function<bool(int)> colour = [&](int i) {
        if (i == p)
            return colouring[p - 1] != colouring[0];
        for (int c = 0; c < m; ++c) {
            if (i > 0 && colouring[i - 1] == c)
                continue;
            colouring[i] = c;
            if (colour(i + 1))
                return true;
        }
        return false;
    };
    if (colour(0))
        probe.searched = colouring;

    if (m <= 3 && p <= 5) {
        // f(t) != f(u) whenever t and u disagree in every coordinate, and f
        // is constant on rotation classes
        TupleSpace space(m, p);
        auto apart = [&](int t, int u) {
            for (int i = 0; i < p; ++i)
                if (space.digit(t, i) == space.digit(u, i))
                    return false;
            return true;
        };
        std::vector<std::vector<int>> domains(space.classes());
        for (int c = 0; c < space.classes(); ++c) {
            bool self_apart = false;
            for (int t : space.members(c))
                for (int u : space.members(c))
                    self_apart |= apart(t, u);
            if (!self_apart)
                for (int v = 0; v < m; ++v)
                    domains[c].push_back(v);
        }
        std::uint64_t survivors = 0;
        bool any_empty = false;
        for (const auto &d : domains)
            any_empty |= d.empty();
        if (!any_empty) {
            std::vector<std::vector<std::pair<int, int>>> binary(space.classes());
            for (int t = 0; t < space.total(); ++t)
                for (int u = 0; u < space.total(); ++u)
                    if (apart(t, u)) {
                        int ct = space.class_of(t), cu = space.class_of(u);
                        binary[std::max(ct, cu)].emplace_back(ct, cu);
                    }
            backtrack(
                domains,
                [&](std::size_t v, const std::vector<int> &f) {
                    for (auto [a, b] : binary[v])
                        if (f[a] == f[b])
                            return false;
                    return true;
                },
                [&](const std::vector<int> &) {
                    ++survivors;
                    return true;
                });
        }
        probe.enumerated_survivors = survivors;
    }

    probe.reproduced = probe.pattern_holds && probe.searched.has_value() &&
                       (!probe.enumerated_survivors || *probe.enumerated_survivors == 0);
    return probe;
}

Template template_of(const RelationAlgebra &ra, const FiniteStructure &s)
{
    Template t;
    t.size = s.size();
    t.relations.resize(ra.size());
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            t.relations.at(s.at(x, y).value()).emplace_back(x, y);
    return t;
}

std::vector<CyclicOperation> cyclic_polymorphism_search(const Template &tpl, int arity)
{
    if (tpl.size < 1 || tpl.size > 3)
        throw UsageError("cyclic polymorphism search supports domains of 1 to 3 points");
    if (arity < 1 || arity > 3)
        throw UsageError("cyclic polymorphism search supports arity 1 to 3");
    for (const auto &r : tpl.relations)
        for (auto [x, y] : r)
            if (x < 0 || y < 0 || x >= tpl.size || y >= tpl.size)
                throw UsageError("relation refers to a point outside the domain");

    const int d = tpl.size;
    TupleSpace space(d, arity);

    // (t,u,relation): whenever t and u are related coordinatewise, so are f(t), f(u)
    struct Requirement {
        int t, u;
        std::size_t relation;
    };
    std::vector<std::vector<char>> member(tpl.relations.size(), std::vector<char>(d * d, 0));
    for (std::size_t r = 0; r < tpl.relations.size(); ++r)
        for (auto [x, y] : tpl.relations[r])
            member[r][x * d + y] = 1;

    std::vector<std::vector<Requirement>> at(space.classes());
    for (std::size_t r = 0; r < tpl.relations.size(); ++r)
        for (int t = 0; t < space.total(); ++t)
            for (int u = 0; u < space.total(); ++u) {
                bool related = true;
                for (int i = 0; i < arity && related; ++i)
                    related = member[r][space.digit(t, i) * d + space.digit(u, i)];
                if (related)
                    at[std::max(space.class_of(t), space.class_of(u))].push_back({t, u, r});
            }

    std::vector<std::vector<int>> domains(space.classes());
    for (auto &dom : domains)
        for (int v = 0; v < d; ++v)
            dom.push_back(v);

    std::vector<CyclicOperation> out;
    backtrack(
        domains,
        [&](std::size_t v, const std::vector<int> &f) {
            for (const auto &req : at[v])
                if (!member[req.relation][f[space.class_of(req.t)] * d + f[space.class_of(req.u)]])
                    return false;
            return true;
        },
        [&](const std::vector<int> &f) {
            std::vector<int> table(space.total());
            for (int t = 0; t < space.total(); ++t)
                table[t] = f[space.class_of(t)];
            out.push_back({arity, d, std::move(table)});
            return true;
        });
    return out;
}

}  // namespace relalg
