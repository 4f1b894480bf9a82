#include "relalg/detectors.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <set>

namespace relalg {

bool is_equivalence_element(const RelationAlgebra &ra, Element e)
{
    return ra.leq(ra.identity(), e) && ra.converse(e) == e && ra.leq(ra.compose(e, e), e);
}

Element equivalence_closure(const RelationAlgebra &ra, Element x)
{
    auto e = ra.join(ra.identity(), x);
    for (;;) {
        auto next = e | ra.converse(e) | ra.compose(e, e);
        if (next == e)
            return e;
        e = next;
    }
}

std::vector<Element> nontrivial_equivalence_elements(const RelationAlgebra &ra)
{
    std::set<Element> found;
    for (int i = 0; i < ra.size(); ++i) {
        AtomId a(i);
        if (!ra.is_identity_atom(a))
            found.insert(equivalence_closure(ra, Element::atom(a)));
    }
    // joins of equivalence elements, closed again
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Element> current(found.begin(), found.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                grew |= found.insert(equivalence_closure(ra, current[i] | current[j])).second;
    }
    found.erase(ra.identity());
    found.erase(ra.one());
    return {found.begin(), found.end()};
}

std::vector<Element> nontrivial_equivalence_elements_exhaustive(const RelationAlgebra &ra)
{
    if (ra.size() > 16)
        throw UsageError("exhaustive equivalence sweep is limited to 16 atoms");
    std::vector<Element> out;
    const auto rest = ra.complement(ra.identity()).bits();
    // every subset of the non-identity atoms, added to the identity
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
        auto e = ra.identity() | Element::from_bits(s);
        if (e != ra.identity() && e != ra.one() && is_equivalence_element(ra, e))
            out.push_back(e);
        if (s == 0)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_primitive(const RelationAlgebra &ra)
{
    return nontrivial_equivalence_elements(ra).empty();
}

ClassCount class_count(const RelationAlgebra &ra, Element e, int bound)
{
    if (!is_equivalence_element(ra, e))
        throw UsageError("class_count needs an equivalence element, got " + ra.format(e));
    if (e == ra.one())
        throw UsageError("class_count is undefined for e = 1: the inequivalence relation 1-e is empty");
    if (bound < 2)
        throw UsageError("clique bound must be at least 2");

    const auto apart = ra.complement(e);
    ClassCount result;
    result.kind = ClassCount::Kind::finite;
    result.count = 1;
    result.certificate = Network::complete(1, apart, ra.identity());
    if (auto one = solve(ra, *result.certificate); one.witness)
        result.certificate = *one.witness;

    for (int m = 2; m <= bound; ++m) {
        auto r = solve(ra, Network::complete(m, apart, ra.identity()));
        if (!r.sat())
            return result;
        result.count = m;
        result.certificate = *r.witness;
    }
    result.kind = ClassCount::Kind::at_least;
    return result;
}

std::optional<Theorem5Evidence> detect_theorem5(const RelationAlgebra &ra, int bound, std::vector<std::string> *notes)
{
    for (auto e : nontrivial_equivalence_elements(ra)) {
        auto classes = class_count(ra, e, bound);
        if (!classes.finite()) {
            if (notes)
                notes->push_back("equivalence " + ra.format(e) + " has at least " + std::to_string(classes.count) +
                                 " classes (clique bound reached); inconclusive");
            continue;
        }
        if (classes.count >= 2)
            return Theorem5Evidence{e, std::move(classes)};
        if (notes)
            notes->push_back("equivalence " + ra.format(e) + " has a single class");
    }
    return std::nullopt;
}

bool domain_at_least_3(const RelationAlgebra &ra)
{
    auto distinct = ra.complement(ra.identity());
    if (distinct.empty())
        return false;
    return solve(ra, Network::complete(3, distinct, ra.identity())).sat();
}

namespace {

bool symmetric_diversity_atom(const RelationAlgebra &ra, AtomId a)
{
    return ra.converse(a) == a && !ra.is_identity_atom(a);
}

}  // namespace

std::optional<AtomId> detect_theorem6(const RelationAlgebra &ra)
{
    std::optional<AtomId> candidate;
    for (int i = 0; i < ra.size() && !candidate; ++i) {
        AtomId a(i);
        if (symmetric_diversity_atom(ra, a) && !ra.allowed_triangle(a, a, a))
            candidate = a;
    }
    if (!candidate || !is_primitive(ra) || !domain_at_least_3(ra))
        return std::nullopt;
    return candidate;
}

EvenWalk even_walk_closure(const RelationAlgebra &ra, AtomId a)
{
    if (a.value() >= ra.size())
        throw UsageError("atom out of range");
    if (!symmetric_diversity_atom(ra, a))
        throw UsageError("even_walk_closure needs a symmetric atom disjoint from the identity, got " +
                         ra.atom_name(a));
    const auto step = ra.compose(a, a);
    EvenWalk walk{ra.identity() | step, 0};
    for (;;) {
        ++walk.iterations;
        auto next = walk.reach | ra.compose(step, walk.reach);
        if (next == walk.reach)
            return walk;
        walk.reach = next;
    }
}

HardnessReport classify(const RelationAlgebra &ra, int bound)
{
    HardnessReport report;
    report.algebra = ra.name();
    report.equivalence_elements = nontrivial_equivalence_elements(ra);
    report.primitive = report.equivalence_elements.empty();
    report.domain_at_least_3 = domain_at_least_3(ra);

    if (ra.size() <= 16) {
        if (nontrivial_equivalence_elements_exhaustive(ra) != report.equivalence_elements)
            throw std::logic_error("equivalence element generation disagrees with the exhaustive sweep");
        report.notes.push_back("equivalence elements cross-checked by exhaustive sweep");
    } else {
        report.notes.push_back("more than 16 atoms: equivalence elements from closure generation only");
    }

    report.theorem5 = detect_theorem5(ra, bound, &report.notes);
    report.theorem6 = detect_theorem6(ra);

    if (report.theorem5) {
        report.notes.push_back("theorem 5: " + ra.format(report.theorem5->equivalence) + " is an equivalence with " +
                               std::to_string(report.theorem5->classes.count) + " classes; a " +
                               std::to_string(report.theorem5->classes.count + 1) +
                               "-clique of inequivalent points is refuted");
    }
    if (report.theorem6) {
        report.notes.push_back("theorem 6: symmetric atom " + ra.atom_name(*report.theorem6) +
                               " with forbidden triangle, primitive, at least three points");
    }

    const bool by5 = report.theorem5 && report.theorem5->classes.finite() && report.theorem5->classes.count >= 2;
    const bool by6 = report.theorem6 && report.primitive && report.domain_at_least_3;
    report.verdict = by5 || by6 ? Verdict::np_hard : Verdict::unresolved;
    if (report.verdict == Verdict::np_hard)
        report.notes.push_back("hardness transfers through a minor-preserving map to projections");
    return report;
}

}  // namespace relalg
