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

#include "camina/characters.hpp"
#include "camina/group.hpp"
#include "camina/structure.hpp"
#include "camina/subgroup.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace camina {

/// An element x outside N and an n in N with xn not conjugate to x.
struct CosetWitness
{
	ElementId x = 0;
	ElementId n = 0;
};

struct CaminaCheck
{
	bool holds = false;
	/// lexicographically smallest failing (x, n) when !holds
	std::optional<CosetWitness> witness;
};

/// Every x outside N is conjugate to all of xN.
CaminaCheck is_camina_conjugacy(const Group& g, const Subgroup& n);
CaminaCheck is_camina_conjugacy(const Group& g, const ConjugacyClasses& classes, const Subgroup& n);

/// |C_G(x)| = |C_{G/N}(xN)| for every x outside N; both sides counted directly.
bool is_camina_centralizer(const Group& g, const Subgroup& n);

/// Every character in Irr(G|N) vanishes outside N. Throws InvalidTable when
/// the table fails its orthogonality checks at this tolerance.
bool is_camina_character(const Group& g, const Subgroup& n, const CharacterTable& table,
						 double tolerance = kDefaultTolerance);

struct EqualOrderWitness
{
	ElementId coset_representative = 0;
	ElementId first = 0;
	ElementId second = 0;
	std::size_t first_order = 0;
	std::size_t second_order = 0;
};

struct EqualOrderCheck
{
	bool holds = false;
	std::optional<EqualOrderWitness> witness;
};

/// Every coset xN != N consists of elements of a single order.
EqualOrderCheck is_equal_order_pair(const Group& g, const Subgroup& n);

/// Every normal subgroup is comparable with m. Throws NotNormal.
bool is_waist(const Group& g, const Subgroup& m);
bool is_waist(const Group& g, const Subgroup& m, const NormalLattice& lattice);

enum class CaminaType
{
	NotCamina,
	Type1, // Frobenius with kernel N
	Type2, // G a p-group
	Type3, // N a p-group, p | |G:N|, G/N not a p-group
	Type4, // G/N a p-group, p | |N|, N not a p-group
};

std::string_view to_string(CaminaType t);

struct CaminaClassification
{
	CaminaType type = CaminaType::NotCamina;
	/// the prime of Types 2-4, 0 otherwise
	std::uint64_t prime = 0;
	/// Type 3 only: the Sylow p-subgroup is normal
	bool p_closed = false;
	/// Type 3 only: order of the Sylow p-subgroup examined
	std::size_t sylow_order = 0;
	/// NotCamina only
	std::optional<CosetWitness> failing;
};

/// Refines the Camina verdict into the four disjoint types. Throws
/// std::logic_error if a Camina pair fits none of the coarse categories.
CaminaClassification classify_camina_type(const Group& g, const Subgroup& n);
CaminaClassification classify_camina_type(const Group& g, const ConjugacyClasses& classes, const Subgroup& n);

/// (G, H, H*) with H* normal in H < G and H meeting each conjugate H^g,
/// g outside H, inside H*. H = G is never a triple (returns false).
/// Throws NotNormalInH / NotProper when H* is not a proper normal subgroup of H.
bool is_fw_triple(const Group& g, const Subgroup& h, const Subgroup& hstar);

/// Every element of G outside N is conjugate to an element of P outside
/// P n N. Throws FactorizationFails unless G = NP.
bool fw_conjugacy_coverage(const Group& g, const Subgroup& p, const Subgroup& n);
bool fw_conjugacy_coverage(const Group& g, const ConjugacyClasses& classes, const Subgroup& p, const Subgroup& n);

enum class ZsigmondyException
{
	None,
	MersenneN2, // n = 2 with a + 1 a power of 2
	Pair2_6,	// (a, n) = (2, 6)
	N1Trivial,	// n = 1 with a - 1 = 1
};

std::string_view to_string(ZsigmondyException e);

struct ZsigmondyResult
{
	std::uint64_t a = 0;
	std::uint64_t n = 0;
	/// smallest primitive prime divisor of a^n - 1
	std::optional<std::uint64_t> prime;
	ZsigmondyException exception_kind = ZsigmondyException::None;
};

/// Requires a >= 2, n >= 1 and a^n < 2^63 (Overflow otherwise).
ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t n);

} // namespace camina
