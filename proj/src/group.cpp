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

#include "camina/group.hpp"

#include "camina/error.hpp"

#include <numeric>
#include <string>

namespace camina {

namespace {

void check_cap(std::size_t size, std::size_t cap)
{
	if (size > cap)
		throw Error(ErrorKind::CapExceeded, "closure exceeds element cap " + std::to_string(cap));
	if (size > kMaxTableOrder)
		throw Error(ErrorKind::CapExceeded, "closure exceeds product table limit " + std::to_string(kMaxTableOrder));
}

// Greedy generating set over ids 0..n-1 using the table product directly.
std::vector<ElementId> greedy_generators(std::size_t n, const std::vector<ElementId>& table)
{
	std::vector<ElementId> gens;
	std::vector<char> in(n, 0);
	std::vector<ElementId> members{0};
	in[0] = 1;
	for (ElementId a = 1; a < n; ++a) {
		if (in[a])
			continue;
		gens.push_back(a);
		// re-close under right multiplication by every generator so far
		for (std::size_t i = 0; i < members.size(); ++i) {
			for (ElementId s : gens) {
				ElementId x = table[std::size_t(members[i]) * n + s];
				if (!in[x]) {
					in[x] = 1;
					members.push_back(x);
				}
			}
		}
	}
	return gens;
}

} // namespace

Group Group::from_trusted_parts(std::size_t degree, std::vector<Permutation> elements,
								std::vector<std::uint16_t> table, std::vector<ElementId> generators)
{
	Group g;
	g._degree = degree;
	g._elements = std::move(elements);
	g._table = std::move(table);
	g._generators = std::move(generators);
	g.finish();
	return g;
}

void Group::finish()
{
	const std::size_t n = _elements.size();
	_index.reserve(n);
	for (ElementId i = 0; i < n; ++i)
		_index.emplace(_elements[i], i);

	_inverse.assign(n, 0);
	for (ElementId i = 0; i < n; ++i) {
		if (_inverse[i] != 0 || i == 0)
			continue;
		ElementId j = _index.at(_elements[i].inverse());
		_inverse[i] = j;
		_inverse[j] = i;
	}

	_orders.assign(n, 1);
	_exponent = 1;
	for (ElementId a = 1; a < n; ++a) {
		std::size_t k = 1;
		for (ElementId x = a; x != 0; x = mul(x, a))
			++k;
		_orders[a] = k;
		_exponent = std::lcm(_exponent, _orders[a]);
	}
}

ElementId Group::pow(ElementId a, std::uint64_t k) const noexcept
{
	k %= _orders[a];
	ElementId result = identity();
	ElementId base = a;
	while (k) {
		if (k & 1)
			result = mul(result, base);
		base = mul(base, base);
		k >>= 1;
	}
	return result;
}

bool Group::is_abelian() const noexcept
{
	for (ElementId a : _generators)
		for (ElementId b : _generators)
			if (mul(a, b) != mul(b, a))
				return false;
	return true;
}

std::optional<ElementId> Group::find(const Permutation& p) const
{
	auto it = _index.find(p);
	if (it == _index.end())
		return std::nullopt;
	return it->second;
}

Group generate(const std::vector<Permutation>& generators, std::size_t cap)
{
	if (cap == 0)
		throw Error(ErrorKind::InvalidArgument, "element cap must be positive");
	const std::size_t degree = generators.empty() ? 1 : generators.front().degree();
	for (const auto& g : generators)
		if (g.degree() != degree)
			throw Error(ErrorKind::DegreeMismatch, "generators act on " + std::to_string(degree) + " and "
														+ std::to_string(g.degree()) + " points");

	std::vector<Permutation> elements{Permutation::identity(degree)};
	std::unordered_map<Permutation, ElementId, PermutationHash> index{{elements.front(), 0}};
	// breadth-first tree: elements[j] = elements[parent[j]] * generators[via[j]]
	std::vector<ElementId> parent{0};
	std::vector<std::uint32_t> via{0};
	std::vector<std::vector<ElementId>> right(generators.size());

	for (std::size_t i = 0; i < elements.size(); ++i) {
		for (std::size_t s = 0; s < generators.size(); ++s) {
			Permutation p = elements[i] * generators[s];
			auto [it, inserted] = index.try_emplace(std::move(p), static_cast<ElementId>(elements.size()));
			if (inserted) {
				check_cap(elements.size() + 1, cap);
				elements.push_back(it->first);
				parent.push_back(static_cast<ElementId>(i));
				via.push_back(static_cast<std::uint32_t>(s));
			}
			right[s].push_back(it->second);
		}
	}

	const std::size_t n = elements.size();
	std::vector<std::uint16_t> table(n * n);
	for (std::size_t i = 0; i < n; ++i)
		table[i * n] = static_cast<std::uint16_t>(i);
	for (std::size_t j = 1; j < n; ++j) {
		const auto& r = right[via[j]];
		const std::size_t par = parent[j];
		for (std::size_t i = 0; i < n; ++i)
			table[i * n + j] = static_cast<std::uint16_t>(r[table[i * n + par]]);
	}

	std::vector<ElementId> gen_ids;
	for (std::size_t s = 0; s < generators.size(); ++s)
		gen_ids.push_back(right[s][0]);
	return Group::from_trusted_parts(degree, std::move(elements), std::move(table), std::move(gen_ids));
}

Group from_cayley_table(std::size_t n, const std::vector<ElementId>& table)
{
	if (n == 0)
		throw Error(ErrorKind::InvalidTable, "empty table");
	if (n > kMaxTableOrder)
		throw Error(ErrorKind::CapExceeded, "table larger than " + std::to_string(kMaxTableOrder));
	if (table.size() != n * n)
		throw Error(ErrorKind::InvalidTable, "table is not n x n");
	for (ElementId x : table)
		if (x >= n)
			throw Error(ErrorKind::InvalidTable, "entry " + std::to_string(x) + " out of range");
	auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

	for (std::size_t i = 0; i < n; ++i)
		if (at(0, i) != i || at(i, 0) != i)
			throw Error(ErrorKind::InvalidTable, "id 0 is not a two-sided identity");
	for (std::size_t i = 0; i < n; ++i) {
		std::vector<char> row(n, 0), col(n, 0);
		for (std::size_t j = 0; j < n; ++j) {
			if (row[at(i, j)]++ || col[at(j, i)]++)
				throw Error(ErrorKind::InvalidTable, "not a Latin square at id " + std::to_string(i));
		}
	}

	// Light's test: associativity against a generating set suffices.
	const std::vector<ElementId> gens = greedy_generators(n, table);
	for (ElementId s : gens)
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				if (at(at(x, y), s) != at(x, at(y, s)))
					throw Error(ErrorKind::InvalidTable, "not associative at (" + std::to_string(x) + ", "
															 + std::to_string(y) + ", " + std::to_string(s) + ")");

	std::vector<Permutation> elements;
	elements.reserve(n);
	for (std::size_t a = 0; a < n; ++a) {
		std::vector<Point> images(n);
		for (std::size_t x = 0; x < n; ++x)
			images[x] = at(x, a);
		elements.emplace_back(std::move(images));
	}
	std::vector<std::uint16_t> t16(table.begin(), table.end());
	return Group::from_trusted_parts(n, std::move(elements), std::move(t16), gens);
}

Group direct_product(const Group& g, const Group& h, std::size_t cap)
{
	const std::size_t degree = g.degree() + h.degree();
	std::vector<Permutation> gens;
	for (ElementId s : g.generators())
		gens.push_back(g.element(s).extended(degree));
	for (ElementId s : h.generators())
		gens.push_back(h.element(s).shifted(g.degree()));
	if (gens.empty())
		gens.push_back(Permutation::identity(degree));
	return generate(gens, cap);
}

Group semidirect_product(const Group& k, const Group& h, const ActionTable& action, std::size_t cap)
{
	const std::size_t nk = k.order();
	const std::size_t nh = h.order();
	if (action.size() != nh)
		throw Error(ErrorKind::InvalidArgument, "action table needs one row per complement element");
	for (std::size_t x = 0; x < nh; ++x) {
		const auto& phi = action[x];
		if (phi.size() != nk)
			throw Error(ErrorKind::NotAnAutomorphism, "action row " + std::to_string(x) + " has wrong length");
		std::vector<char> seen(nk, 0);
		for (ElementId v : phi) {
			if (v >= nk || seen[v])
				throw Error(ErrorKind::NotAnAutomorphism, "action row " + std::to_string(x) + " is not a bijection");
			seen[v] = 1;
		}
		for (ElementId a = 0; a < nk; ++a)
			for (ElementId b = 0; b < nk; ++b)
				if (phi[k.mul(a, b)] != k.mul(phi[a], phi[b]))
					throw Error(ErrorKind::NotAnAutomorphism, "action row " + std::to_string(x)
																  + " does not preserve products");
	}
	for (ElementId x = 0; x < nh; ++x)
		for (ElementId y = 0; y < nh; ++y)
			for (ElementId a = 0; a < nk; ++a)
				if (action[h.mul(x, y)][a] != action[x][action[y][a]])
					throw Error(ErrorKind::NotAHomomorphism, "action of " + std::to_string(x) + " * "
																 + std::to_string(y) + " is not the composite");

	// regular action on pairs (a, x) indexed a + nk * x, by right multiplication
	const std::size_t degree = nk * nh;
	std::vector<Permutation> gens;
	for (ElementId s : k.generators()) {
		std::vector<Point> images(degree);
		for (std::size_t x = 0; x < nh; ++x)
			for (std::size_t a = 0; a < nk; ++a)
				images[a + nk * x] = static_cast<Point>(k.mul(ElementId(a), action[x][s]) + nk * x);
		gens.emplace_back(std::move(images));
	}
	for (ElementId t : h.generators()) {
		std::vector<Point> images(degree);
		for (std::size_t x = 0; x < nh; ++x)
			for (std::size_t a = 0; a < nk; ++a)
				images[a + nk * x] = static_cast<Point>(a + nk * h.mul(ElementId(x), t));
		gens.emplace_back(std::move(images));
	}
	if (gens.empty())
		gens.push_back(Permutation::identity(degree));
	return generate(gens, cap);
}

std::vector<ElementId> extend_generator_images(const Group& k, const std::vector<ElementId>& images)
{
	const auto& gens = k.generators();
	if (images.size() != gens.size())
		throw Error(ErrorKind::InvalidArgument, "need one image per generator");
	std::vector<ElementId> map(k.order(), 0);
	std::vector<char> seen(k.order(), 0);
	std::vector<ElementId> queue{0};
	seen[0] = 1;
	for (std::size_t i = 0; i < queue.size(); ++i) {
		const ElementId x = queue[i];
		for (std::size_t s = 0; s < gens.size(); ++s) {
			const ElementId y = k.mul(x, gens[s]);
			if (!seen[y]) {
				seen[y] = 1;
				map[y] = k.mul(map[x], images[s]);
				queue.push_back(y);
			}
		}
	}
	return map;
}

} // namespace camina
