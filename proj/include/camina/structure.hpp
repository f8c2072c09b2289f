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
#include "camina/subgroup.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace camina {

struct ConjugacyClasses
{
	/// Each class sorted ascending; classes ordered by representative.
	std::vector<std::vector<ElementId>> classes;
	std::vector<std::uint32_t> class_of;
	/// Smallest id in each class.
	std::vector<ElementId> representatives;

	std::size_t size() const noexcept { return classes.size(); }
};

ConjugacyClasses conjugacy_classes(const Group& g);

/// C_G(x).
Subgroup centralizer(const Group& g, ElementId x);

inline constexpr std::size_t kDefaultLatticeCap = 512;

/// All normal subgroups, sorted by order and then by member list.
/// The first entry is the trivial subgroup and the last is the whole group.
struct NormalLattice
{
	std::vector<Subgroup> subgroups;

	std::size_t size() const noexcept { return subgroups.size(); }
	/// Index of s in the lattice, if present.
	std::optional<std::size_t> index_of(const Subgroup& s) const;
};

/// Join-closure of the normal closures of the conjugacy classes.
/// Throws CapExceeded when more than cap subgroups turn up.
NormalLattice normal_subgroups(const Group& g, std::size_t cap = kDefaultLatticeCap);
NormalLattice normal_subgroups(const Group& g, const ConjugacyClasses& classes,
							   std::size_t cap = kDefaultLatticeCap);

/// Sylow p-subgroup grown by normalizer ascent; ties go to the smallest id.
Subgroup sylow(const Group& g, std::uint64_t p);
/// Largest normal p-subgroup: the core of a Sylow p-subgroup.
Subgroup o_p(const Group& g, std::uint64_t p);
/// Largest normal p'-subgroup, read off the normal lattice.
Subgroup o_p_prime(const Group& g, std::uint64_t p, const NormalLattice& lattice);
Subgroup o_p_prime(const Group& g, std::uint64_t p);

/// Join of the O_p(G). Checked to be normal and nilpotent.
Subgroup fitting(const Group& g);

/// By the lower central series.
bool is_nilpotent(const Group& g);

struct SolvabilityProfile
{
	std::vector<Subgroup> derived_series; // G = D0 > D1 > ... until stable
	Subgroup solvable_residual;
	bool is_solvable = false;
	bool is_nilpotent = false;
};

SolvabilityProfile solvability_profile(const Group& g);

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

enum class SearchOutcome
{
	Found,
	/// the search space was exhausted: no such subgroup exists
	ProvedAbsent,
	/// gave up after the node budget; existence is unknown
	BudgetExhausted,
};

struct SubgroupSearch
{
	SearchOutcome outcome = SearchOutcome::ProvedAbsent;
	std::optional<Subgroup> subgroup;
	std::size_t nodes = 0;
};

/// A subgroup of order equal to the p'-part of |G|.
SubgroupSearch hall_p_complement(const Group& g, std::uint64_t p, std::size_t budget = kDefaultSearchBudget);
/// A subgroup H with |H| = |G:N| and H meeting N trivially.
SubgroupSearch find_complement(const Subgroup& n, std::size_t budget = kDefaultSearchBudget);

/// |G : O_p'(G)| is a power of p.
bool has_normal_p_complement(const Group& g, std::uint64_t p);
bool has_normal_p_complement(const Group& g, std::uint64_t p, const NormalLattice& lattice);

/// C_G(x) lies in N for every nonidentity x of N. Requires N normal, 1 < N < G.
bool is_frobenius_with_kernel(const Group& g, const Subgroup& n);

/// Throws NotNormal / NotProper unless 1 < N < G with N normal in g.
void require_proper_normal(const Group& g, const Subgroup& n);

/// The prime p when |s| is a power of p.
std::optional<std::uint64_t> p_group_prime(std::size_t order);

} // namespace camina
