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

#include "camina/subgroup.hpp"

#include "camina/error.hpp"

#include <algorithm>
#include <string>

namespace camina {

namespace {

// Closure state for incremental subgroup generation.
struct Closure
{
	const Group& g;
	std::vector<char> mask;
	std::vector<ElementId> members;
	std::vector<ElementId> gens;

	explicit Closure(const Group& group) : g(group), mask(group.order(), 0), members{0} { mask[0] = 1; }

	// Adds s as a generator unless it is already a member. Returns whether the
	// subgroup grew.
	bool add(ElementId s)
	{
		if (mask[s])
			return false;
		gens.push_back(s);
		for (std::size_t i = 0; i < members.size(); ++i) {
			for (ElementId t : gens) {
				const ElementId x = g.mul(members[i], t);
				if (!mask[x]) {
					mask[x] = 1;
					members.push_back(x);
				}
			}
		}
		return true;
	}
};

} // namespace

Subgroup::Subgroup(const Group* parent, std::vector<char> mask) : _parent(parent), _mask(std::move(mask))
{
	for (ElementId i = 0; i < _mask.size(); ++i)
		if (_mask[i])
			_members.push_back(i);
}

Subgroup Subgroup::trivial(const Group& g)
{
	std::vector<char> mask(g.order(), 0);
	mask[0] = 1;
	return Subgroup(&g, std::move(mask));
}

Subgroup Subgroup::whole(const Group& g)
{
	return Subgroup(&g, std::vector<char>(g.order(), 1));
}

Subgroup Subgroup::generated(const Group& g, std::span<const ElementId> gens)
{
	Closure c(g);
	for (ElementId s : gens) {
		if (s >= g.order())
			throw Error(ErrorKind::InvalidArgument, "element id " + std::to_string(s) + " out of range");
		c.add(s);
	}
	return Subgroup(&g, std::move(c.mask));
}

Subgroup Subgroup::from_members(const Group& g, std::vector<ElementId> members)
{
	std::vector<char> mask(g.order(), 0);
	for (ElementId x : members) {
		if (x >= g.order())
			throw Error(ErrorKind::InvalidArgument, "element id " + std::to_string(x) + " out of range");
		mask[x] = 1;
	}
	if (!mask[0])
		throw Error(ErrorKind::InvalidArgument, "subgroup must contain the identity");
	for (ElementId a = 0; a < g.order(); ++a) {
		if (!mask[a])
			continue;
		if (!mask[g.inv(a)])
			throw Error(ErrorKind::InvalidArgument, "not closed under inverses");
		for (ElementId b = 0; b < g.order(); ++b)
			if (mask[b] && !mask[g.mul(a, b)])
				throw Error(ErrorKind::InvalidArgument, "not closed under products");
	}
	return Subgroup(&g, std::move(mask));
}

std::vector<ElementId> Subgroup::generators() const
{
	Closure c(*_parent);
	for (ElementId x : _members)
		c.add(x);
	return c.gens;
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept
{
	if (_members.size() > other._members.size())
		return false;
	for (ElementId x : _members)
		if (!other.contains(x))
			return false;
	return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b)
{
	std::vector<ElementId> common;
	for (ElementId x : a.members())
		if (b.contains(x))
			common.push_back(x);
	return Subgroup::generated(a.parent(), common);
}

Subgroup join(const Subgroup& a, const Subgroup& b)
{
	std::vector<ElementId> gens = a.generators();
	for (ElementId x : b.generators())
		gens.push_back(x);
	return Subgroup::generated(a.parent(), gens);
}

Subgroup conjugate(const Subgroup& h, ElementId g)
{
	const Group& G = h.parent();
	std::vector<ElementId> gens;
	for (ElementId s : h.generators())
		gens.push_back(G.conj(s, g));
	return Subgroup::generated(G, gens);
}

bool is_normal(const Subgroup& h)
{
	const Group& G = h.parent();
	const auto hgens = h.generators();
	for (ElementId g : G.generators())
		for (ElementId s : hgens)
			if (!h.contains(G.conj(s, g)))
				return false;
	return true;
}

Subgroup normalizer(const Subgroup& h)
{
	const Group& G = h.parent();
	const auto hgens = h.generators();
	std::vector<ElementId> members;
	for (ElementId g = 0; g < G.order(); ++g) {
		bool ok = true;
		for (ElementId s : hgens)
			if (!h.contains(G.conj(s, g))) {
				ok = false;
				break;
			}
		if (ok)
			members.push_back(g);
	}
	return Subgroup::generated(G, members);
}

Subgroup centralizer_of(const Subgroup& h)
{
	const Group& G = h.parent();
	const auto hgens = h.generators();
	std::vector<ElementId> members;
	for (ElementId g = 0; g < G.order(); ++g) {
		bool ok = true;
		for (ElementId s : hgens)
			if (G.mul(s, g) != G.mul(g, s)) {
				ok = false;
				break;
			}
		if (ok)
			members.push_back(g);
	}
	return Subgroup::generated(G, members);
}

namespace {

// Closure of ids under the group operation and conjugation by conjugators.
Subgroup closure_under_conjugation(const Group& G, std::span<const ElementId> ids,
								   const std::vector<ElementId>& conjugators)
{
	Closure c(G);
	for (ElementId s : ids)
		c.add(s);
	for (std::size_t i = 0; i < c.gens.size(); ++i)
		for (ElementId g : conjugators)
			c.add(G.conj(c.gens[i], g));
	return Subgroup::generated(G, c.gens);
}

} // namespace

Subgroup normal_closure(const Group& g, std::span<const ElementId> ids)
{
	return closure_under_conjugation(g, ids, g.generators());
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b)
{
	// [A, B] is the normal closure in <A, B> of the commutators of generators.
	const Group& G = a.parent();
	const auto agens = a.generators();
	const auto bgens = b.generators();
	std::vector<ElementId> comms;
	for (ElementId x : agens)
		for (ElementId y : bgens)
			comms.push_back(G.commutator(x, y));
	std::vector<ElementId> conjugators = agens;
	conjugators.insert(conjugators.end(), bgens.begin(), bgens.end());
	return closure_under_conjugation(G, comms, conjugators);
}

Embedding as_group(const Subgroup& h)
{
	const Group& G = h.parent();
	const auto& members = h.members();
	const std::size_t n = members.size();
	std::vector<ElementId> to_local(G.order(), static_cast<ElementId>(n));
	for (ElementId i = 0; i < n; ++i)
		to_local[members[i]] = i;

	std::vector<std::uint16_t> table(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			table[i * n + j] = static_cast<std::uint16_t>(to_local[G.mul(members[i], members[j])]);

	std::vector<Permutation> elements;
	elements.reserve(n);
	for (ElementId x : members)
		elements.push_back(G.element(x));

	std::vector<ElementId> gens;
	for (ElementId x : h.generators())
		gens.push_back(to_local[x]);

	return Embedding{Group::from_trusted_parts(G.degree(), std::move(elements), std::move(table), std::move(gens)),
					 members, std::move(to_local)};
}

Subgroup restrict_to(const Embedding& e, const Subgroup& inside)
{
	std::vector<ElementId> local;
	for (ElementId x : inside.members()) {
		const ElementId y = e.to_local[x];
		if (y >= e.group.order())
			throw Error(ErrorKind::InvalidArgument, "subgroup is not contained in the embedded group");
		local.push_back(y);
	}
	return Subgroup::generated(e.group, local);
}

Quotient quotient(const Subgroup& n)
{
	if (!is_normal(n))
		throw Error(ErrorKind::NotNormal, "quotient by a subgroup that is not normal");
	const Group& G = n.parent();
	const ElementId unset = static_cast<ElementId>(G.order());
	std::vector<ElementId> coset(G.order(), unset);
	std::vector<ElementId> reps;
	for (ElementId x = 0; x < G.order(); ++x) {
		if (coset[x] != unset)
			continue;
		const auto c = static_cast<ElementId>(reps.size());
		reps.push_back(x);
		for (ElementId m : n.members())
			coset[G.mul(x, m)] = c;
	}

	const std::size_t q = reps.size();
	std::vector<ElementId> table(q * q);
	for (std::size_t a = 0; a < q; ++a)
		for (std::size_t b = 0; b < q; ++b)
			table[a * q + b] = coset[G.mul(reps[a], reps[b])];
	Group Q = from_cayley_table(q, table);

	for (ElementId x = 0; x < G.order(); ++x)
		for (ElementId s : G.generators())
			if (coset[G.mul(x, s)] != Q.mul(coset[x], coset[s]))
				throw Error(ErrorKind::InvalidTable, "coset projection is not a homomorphism");
	for (ElementId x = 0; x < G.order(); ++x)
		if ((coset[x] == 0) != n.contains(x))
			throw Error(ErrorKind::InvalidTable, "projection kernel differs from the normal subgroup");

	return Quotient{std::move(Q), std::move(coset), std::move(reps)};
}

} // namespace camina
