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

#include "camina/group.hpp"

#include <span>
#include <vector>

namespace camina {

/// A subgroup of an enumerated group, stored as a sorted id list plus a
/// membership mask. Holds a non-owning pointer: the parent must outlive it.
class Subgroup
{
public:
	static Subgroup trivial(const Group& g);
	static Subgroup whole(const Group& g);
	/// Smallest subgroup containing the given ids.
	static Subgroup generated(const Group& g, std::span<const ElementId> gens);
	/// Adopts a member list; throws InvalidArgument unless it is a subgroup.
	static Subgroup from_members(const Group& g, std::vector<ElementId> members);

	const Group& parent() const noexcept { return *_parent; }
	std::size_t order() const noexcept { return _members.size(); }
	bool contains(ElementId x) const noexcept { return _mask[x] != 0; }
	const std::vector<ElementId>& members() const noexcept { return _members; }
	const std::vector<char>& mask() const noexcept { return _mask; }

	/// A small generating set, chosen greedily by ascending id.
	std::vector<ElementId> generators() const;

	bool is_trivial() const noexcept { return _members.size() == 1; }
	bool is_whole() const noexcept { return _members.size() == _parent->order(); }
	bool is_subset_of(const Subgroup& other) const noexcept;

	friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept
	{
		return a._parent == b._parent && a._members == b._members;
	}

private:
	Subgroup(const Group* parent, std::vector<char> mask);

	const Group* _parent;
	std::vector<char> _mask;
	std::vector<ElementId> _members;
};

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
/// g^-1 H g
Subgroup conjugate(const Subgroup& h, ElementId g);
bool is_normal(const Subgroup& h);
/// Normalizer of h in its parent.
Subgroup normalizer(const Subgroup& h);
/// Centralizer of h in its parent, C_G(H).
Subgroup centralizer_of(const Subgroup& h);
/// Smallest normal subgroup of g containing the ids.
Subgroup normal_closure(const Group& g, std::span<const ElementId> ids);
/// [A, B], generated by all commutators a^-1 b^-1 a b.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

/// A subgroup re-enumerated as a group in its own right; local id i stands
/// for parent id to_parent[i].
struct Embedding
{
	Group group;
	std::vector<ElementId> to_parent;
	std::vector<ElementId> to_local; // parent id -> local id, or order() when outside
};

Embedding as_group(const Subgroup& h);
/// The image in e.group of a parent subgroup contained in the embedded one.
Subgroup restrict_to(const Embedding& e, const Subgroup& inside);

struct Quotient
{
	Group group;
	/// element id of the parent -> coset id (the quotient's element id)
	std::vector<ElementId> projection;
	/// smallest parent id in each coset
	std::vector<ElementId> representatives;
};

/// Throws NotNormal unless n is normal in its parent.
Quotient quotient(const Subgroup& n);

} // namespace camina
