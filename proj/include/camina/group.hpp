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

#pragma once

#include "camina/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace camina {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 10000;
/// Product tables store 16-bit entries; no cap can exceed this.
inline constexpr std::size_t kMaxTableOrder = 65535;

/// A fully enumerated finite group of permutations.
///
/// Element 0 is the identity. The product table is complete, so every
/// predicate downstream is a finite lookup. Immutable once built.
class Group
{
public:
	/// Assembles a group from already validated parts. The table is row-major,
	/// table[i * order + j] = id of elements[i] * elements[j].
	static Group from_trusted_parts(std::size_t degree, std::vector<Permutation> elements,
									std::vector<std::uint16_t> table, std::vector<ElementId> generators);

	std::size_t order() const noexcept { return _elements.size(); }
	std::size_t degree() const noexcept { return _degree; }

	const Permutation& element(ElementId id) const { return _elements[id]; }
	const std::vector<Permutation>& elements() const noexcept { return _elements; }
	const std::vector<ElementId>& generators() const noexcept { return _generators; }

	static constexpr ElementId identity() noexcept { return 0; }
	ElementId mul(ElementId a, ElementId b) const noexcept { return _table[std::size_t(a) * _elements.size() + b]; }
	ElementId inv(ElementId a) const noexcept { return _inverse[a]; }
	ElementId pow(ElementId a, std::uint64_t k) const noexcept;
	/// g^-1 x g
	ElementId conj(ElementId x, ElementId g) const noexcept { return mul(mul(inv(g), x), g); }
	/// a^-1 b^-1 a b
	ElementId commutator(ElementId a, ElementId b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }

	std::size_t element_order(ElementId a) const noexcept { return _orders[a]; }
	std::size_t exponent() const noexcept { return _exponent; }
	bool is_abelian() const noexcept;

	std::optional<ElementId> find(const Permutation& p) const;

private:
	Group() = default;
	void finish();

	std::size_t _degree = 1;
	std::vector<Permutation> _elements;
	std::vector<std::uint16_t> _table;
	std::vector<ElementId> _inverse;
	std::vector<std::size_t> _orders;
	std::vector<ElementId> _generators;
	std::size_t _exponent = 1;
	std::unordered_map<Permutation, ElementId, PermutationHash> _index;
};

/// Closure of the generators under composition, elements numbered breadth
/// first from the identity with generators tried in the given order.
/// An empty generator list yields the trivial group of degree 1.
Group generate(const std::vector<Permutation>& generators, std::size_t cap = kDefaultElementCap);

/// Adopts a Cayley table (0-based ids, identity must be id 0). Elements are
/// realized by the right regular action on the ids.
Group from_cayley_table(std::size_t n, const std::vector<ElementId>& table);

Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultElementCap);

/// action[h] is the automorphism of k (as a permutation of k's ids) by which
/// element h of the complement acts. Multiplication is
/// (k1, h1)(k2, h2) = (k1 * action[h1][k2], h1 h2), so action must satisfy
/// action[h1 h2] = action[h1] o action[h2].
using ActionTable = std::vector<std::vector<ElementId>>;
Group semidirect_product(const Group& k, const Group& h, const ActionTable& action,
						 std::size_t cap = kDefaultElementCap);

/// Extends images of k's generators to an element-wise map along the
/// breadth-first words of k. The result is not checked; semidirect_product
/// validates it.
std::vector<ElementId> extend_generator_images(const Group& k, const std::vector<ElementId>& images);

} // namespace camina
