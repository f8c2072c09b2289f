/*
* Copyright 2026 The camina authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include "camina/structure.hpp"

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace camina {

namespace {

void require_prime(std::uint64_t p)
{
	if (!is_prime(p))
		throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

void require_parent(const Group& g, const Subgroup& s)
{
	if (&s.parent() != &g)
		throw Error(ErrorKind::InvalidArgument, "subgroup belongs to a different group");
}

bool coprime_to(std::size_t order, std::uint64_t p)
{
	return order % p != 0;
}

} // namespace

std::optional<std::uint64_t> p_group_prime(std::size_t order)
{
	return prime_of_power(order);
}

ConjugacyClasses conjugacy_classes(const Group& g)
{
	ConjugacyClasses cc;
	const auto unset = static_cast<std::uint32_t>(-1);
	cc.class_of.assign(g.order(), unset);
	for (ElementId x = 0; x < g.order(); ++x) {
		if (cc.class_of[x] != unset)
			continue;
		const auto idx = static_cast<std::uint32_t>(cc.classes.size());
		std::vector<ElementId> orbit{x};
		cc.class_of[x] = idx;
		for (std::size_t i = 0; i < orbit.size(); ++i)
			for (ElementId s : g.generators()) {
				const ElementId y = g.conj(orbit[i], s);
				if (cc.class_of[y] == unset) {
					cc.class_of[y] = idx;
					orbit.push_back(y);
				}
			}
		std::sort(orbit.begin(), orbit.end());
		cc.representatives.push_back(x);
		cc.classes.push_back(std::move(orbit));
	}
	return cc;
}

Subgroup centralizer(const Group& g, ElementId x)
{
	std::vector<ElementId> members;
	for (ElementId y = 0; y < g.order(); ++y)
		if (g.mul(x, y) == g.mul(y, x))
			members.push_back(y);
	Subgroup c = Subgroup::generated(g, members);

	// orbit-stabilizer against the conjugation orbit of x
	std::vector<char> seen(g.order(), 0);
	std::vector<ElementId> orbit{x};
	seen[x] = 1;
	for (std::size_t i = 0; i < orbit.size(); ++i)
		for (ElementId s : g.generators()) {
			const ElementId y = g.conj(orbit[i], s);
			if (!seen[y]) {
				seen[y] = 1;
				orbit.push_back(y);
			}
		}
	if (orbit.size() * c.order() != g.order() || c.order() != members.size())
		throw std::logic_error("centralizer violates orbit-stabilizer");
	return c;
}

std::optional<std::size_t> NormalLattice::index_of(const Subgroup& s) const
{
	for (std::size_t i = 0; i < subgroups.size(); ++i)
		if (subgroups[i] == s)
			return i;
	return std::nullopt;
}

NormalLattice normal_subgroups(const Group& g, std::size_t cap)
{
	return normal_subgroups(g, conjugacy_classes(g), cap);
}

NormalLattice normal_subgroups(const Group& g, const ConjugacyClasses& classes, std::size_t cap)
{
	std::set<std::vector<ElementId>> seen;
	std::vector<Subgroup> found;
	auto add = [&](Subgroup s) {
		if (!seen.insert(s.members()).second)
			return false;
		if (found.size() + 1 > cap)
			throw Error(ErrorKind::CapExceeded, "normal lattice exceeds " + std::to_string(cap) + " subgroups");
		found.push_back(std::move(s));
		return true;
	};

	// every normal subgroup is the join of the class closures it contains
	std::vector<Subgroup> closures;
	std::set<std::vector<ElementId>> closure_seen;
	for (std::size_t c = 1; c < classes.size(); ++c) {
		Subgroup s = normal_closure(g, classes.classes[c]);
		if (closure_seen.insert(s.members()).second)
			closures.push_back(std::move(s));
	}
	std::vector<std::vector<ElementId>> closure_gens;
	for (const auto& s : closures)
		closure_gens.push_back(s.generators());

	add(Subgroup::trivial(g));
	for (std::size_t i = 0; i < found.size(); ++i) {
		const auto base = found[i].generators();
		for (std::size_t c = 0; c < closures.size(); ++c) {
			if (closures[c].is_subset_of(found[i]))
				continue;
			std::vector<ElementId> gens = base;
			gens.insert(gens.end(), closure_gens[c].begin(), closure_gens[c].end());
			add(Subgroup::generated(g, gens));
		}
	}

	std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
		if (a.order() != b.order())
			return a.order() < b.order();
		return a.members() < b.members();
	});
	return NormalLattice{std::move(found)};
}

Subgroup sylow(const Group& g, std::uint64_t p)
{
	require_prime(p);
	const std::uint64_t target = p_part(g.order(), p);
	Subgroup P = Subgroup::trivial(g);
	while (P.order() < target) {
		const Subgroup norm = normalizer(P);
		bool grown = false;
		for (ElementId x : norm.members()) {
			if (P.contains(x))
				continue;
			// order of x modulo P
			std::uint64_t k = 1;
			for (ElementId y = x; !P.contains(y); y = g.mul(y, x))
				++k;
			if (prime_of_power(k) != p)
				continue;
			std::vector<ElementId> gens = P.generators();
			gens.push_back(g.pow(x, k / p));
			P = Subgroup::generated(g, gens);
			grown = true;
			break;
		}
		if (!grown)
			throw std::logic_error("Sylow ascent stalled below the p-part");
	}
	return P;
}

Subgroup o_p(const Group& g, std::uint64_t p)
{
	const Subgroup P = sylow(g, p);
	std::vector<char> core = P.mask();
	for (ElementId h = 0; h < g.order(); ++h) {
		const ElementId hinv = g.inv(h);
		// x survives when x lies in h^-1 P h, i.e. h x h^-1 in P
		for (ElementId x : P.members())
			if (core[x] && !P.contains(g.conj(x, hinv)))
				core[x] = 0;
	}
	std::vector<ElementId> members;
	for (ElementId x : P.members())
		if (core[x])
			members.push_back(x);
	return Subgroup::generated(g, members);
}

Subgroup o_p_prime(const Group& g, std::uint64_t p, const NormalLattice& lattice)
{
	require_prime(p);
	Subgroup result = Subgroup::trivial(g);
	for (const auto& s : lattice.subgroups) {
		require_parent(g, s);
		if (coprime_to(s.order(), p) && !s.is_subset_of(result))
			result = join(result, s);
	}
	return result;
}

Subgroup o_p_prime(const Group& g, std::uint64_t p)
{
	return o_p_prime(g, p, normal_subgroups(g));
}

bool is_nilpotent(const Group& g)
{
	const Subgroup whole = Subgroup::whole(g);
	Subgroup term = whole;
	while (!term.is_trivial()) {
		Subgroup next = commutator_subgroup(term, whole);
		if (next.order() == term.order())
			return false;
		term = std::move(next);
	}
	return true;
}

Subgroup fitting(const Group& g)
{
	Subgroup f = Subgroup::trivial(g);
	if (g.order() > 1)
		for (std::uint64_t p : prime_divisors(g.order()))
			f = join(f, o_p(g, p));
	if (!is_normal(f) || !is_nilpotent(as_group(f).group))
		throw std::logic_error("Fitting subgroup is not a nilpotent normal subgroup");
	return f;
}

SolvabilityProfile solvability_profile(const Group& g)
{
	std::vector<Subgroup> series{Subgroup::whole(g)};
	while (true) {
		Subgroup next = commutator_subgroup(series.back(), series.back());
		if (next.order() == series.back().order())
			break;
		series.push_back(std::move(next));
	}
	Subgroup residual = series.back();
	const bool solvable = residual.is_trivial();
	const bool nilpotent = fitting(g).is_whole();
	return SolvabilityProfile{std::move(series), std::move(residual), solvable, nilpotent};
}

namespace {

// Depth-first subgroup search: grow H one candidate element at a time,
// visiting each intermediate subgroup once.
class SubgroupSearcher
{
public:
	SubgroupSearcher(const Group& g, std::size_t target, std::vector<ElementId> candidates,
					 std::function<bool(const Subgroup&)> admissible, std::size_t budget)
		: _g(g), _target(target), _candidates(std::move(candidates)), _admissible(std::move(admissible)),
		  _budget(budget)
	{}

	SubgroupSearch run()
	{
		SubgroupSearch result;
		const Subgroup start = Subgroup::trivial(_g);
		if (_target == 1) {
			result.outcome = SearchOutcome::Found;
			result.subgroup = start;
			return result;
		}
		_visited.insert(start.members());
		explore(start);
		result.nodes = _nodes;
		if (_found) {
			result.outcome = SearchOutcome::Found;
			result.subgroup = std::move(_found);
		} else {
			result.outcome = _out_of_budget ? SearchOutcome::BudgetExhausted : SearchOutcome::ProvedAbsent;
		}
		return result;
	}

private:
	void explore(const Subgroup& h)
	{
		const auto base = h.generators();
		for (ElementId x : _candidates) {
			if (_found || _out_of_budget)
				return;
			if (h.contains(x))
				continue;
			if (++_nodes > _budget) {
				_out_of_budget = true;
				return;
			}
			std::vector<ElementId> gens = base;
			gens.push_back(x);
			Subgroup next = Subgroup::generated(_g, gens);
			if (_target % next.order() != 0 || !_visited.insert(next.members()).second)
				continue;
			if (!_admissible(next))
				continue;
			if (next.order() == _target) {
				_found = std::move(next);
				return;
			}
			explore(next);
		}
	}

	const Group& _g;
	std::size_t _target;
	std::vector<ElementId> _candidates;
	std::function<bool(const Subgroup&)> _admissible;
	std::size_t _budget;
	std::size_t _nodes = 0;
	bool _out_of_budget = false;
	std::optional<Subgroup> _found;
	std::set<std::vector<ElementId>> _visited;
};

} // namespace

SubgroupSearch hall_p_complement(const Group& g, std::uint64_t p, std::size_t budget)
{
	require_prime(p);
	const std::size_t target = g.order() / p_part(g.order(), p);

	std::vector<ElementId> p_prime_elements;
	for (ElementId x = 1; x < g.order(); ++x)
		if (coprime_to(g.element_order(x), p))
			p_prime_elements.push_back(x);

	// a normal p-complement, when present, is exactly the set of p'-elements
	if (p_prime_elements.size() + 1 == target) {
		std::vector<ElementId> all{0};
		all.insert(all.end(), p_prime_elements.begin(), p_prime_elements.end());
		Subgroup k = Subgroup::generated(g, all);
		if (k.order() == target)
			return SubgroupSearch{SearchOutcome::Found, std::move(k), 0};
	}

	SubgroupSearcher search(g, target, std::move(p_prime_elements), [](const Subgroup&) { return true; }, budget);
	return search.run();
}

SubgroupSearch find_complement(const Subgroup& n, std::size_t budget)
{
	const Group& g = n.parent();
	const std::size_t target = g.order() / n.order();
	std::vector<ElementId> outside;
	for (ElementId x = 1; x < g.order(); ++x)
		if (!n.contains(x) && target % g.element_order(x) == 0)
			outside.push_back(x);
	auto meets_trivially = [&n](const Subgroup& h) {
		for (ElementId x : h.members())
			if (x != 0 && n.contains(x))
				return false;
		return true;
	};
	SubgroupSearcher search(g, target, std::move(outside), meets_trivially, budget);
	return search.run();
}

bool has_normal_p_complement(const Group& g, std::uint64_t p, const NormalLattice& lattice)
{
	const Subgroup k = o_p_prime(g, p, lattice);
	const std::size_t index = g.order() / k.order();
	return index == 1 || prime_of_power(index) == p;
}

bool has_normal_p_complement(const Group& g, std::uint64_t p)
{
	return has_normal_p_complement(g, p, normal_subgroups(g));
}

void require_proper_normal(const Group& g, const Subgroup& n)
{
	require_parent(g, n);
	if (!is_normal(n))
		throw Error(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.order()) + " is not normal");
	if (n.is_trivial() || n.is_whole())
		throw Error(ErrorKind::NotProper, "subgroup must be proper and nontrivial");
}

bool is_frobenius_with_kernel(const Group& g, const Subgroup& n)
{
	require_proper_normal(g, n);
	for (ElementId y = 0; y < g.order(); ++y) {
		if (n.contains(y))
			continue;
		for (ElementId x : n.members())
			if (x != 0 && g.mul(x, y) == g.mul(y, x))
				return false;
	}
	if (std::gcd(n.order(), g.order() / n.order()) != 1)
		throw std::logic_error("Frobenius kernel order is not coprime to its index");
	return true;
}

} // namespace camina
