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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace camina {

/// Named group families, each realized as a permutation group.
///
///   cyclic(n)                 degree n, order n
///   dihedral(n)               degree n, order 2n, n >= 3
///   symmetric(n), alternating(n)  natural action on n points
///   dicyclic(n)               order 4n, regular action, n >= 2 (dicyclic(2) = Q8)
///   heisenberg(p)             extraspecial p^3 of exponent p, regular action, p odd prime
///   frobenius_metacyclic(q,d) C_q x| C_d acting affinely on q points, q prime, d | q-1
///   sl2(q)                    SL(2,q) on the q^2 vectors of GF(q)^2 (fixes 0), q in {2,4,8}
///   affine_sl2(q)             GF(q)^2 x| SL(2,q) on the same q^2 points
enum class Family
{
	Cyclic,
	Dihedral,
	Symmetric,
	Alternating,
	Dicyclic,
	Heisenberg,
	FrobeniusMetacyclic,
	SL2,
	AffineSL2,
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Throws UnsupportedParams when the parameters do not fit the family.
Group construct(Family family, const std::vector<std::uint64_t>& params, std::size_t cap = kDefaultElementCap);

/// Arithmetic in GF(2^n), n in {1, 2, 3}, with elements as bit patterns of
/// polynomials over GF(2) reduced by x^2+x+1 (n = 2) or x^3+x+1 (n = 3).
class GF2n
{
public:
	explicit GF2n(unsigned n);

	unsigned size() const noexcept { return 1u << _n; }
	static unsigned add(unsigned a, unsigned b) noexcept { return a ^ b; }
	unsigned mul(unsigned a, unsigned b) const noexcept;

private:
	unsigned _n;
	unsigned _modulus;
};

/// The translations v -> v + t inside affine_sl2(q), as element ids.
std::vector<ElementId> affine_translations(const Group& affine_sl2);

/// Heisenberg(3) extended by the order-2 automorphism (a, b, c) -> (-a, b, -c),
/// which inverts the center. Order 54 with trivial center.
Group g54(std::size_t cap = kDefaultElementCap);

/// K x| C2 with the generator acting by inversion; K must be abelian.
Group semidirect_inversion(const Group& k, std::size_t cap = kDefaultElementCap);

} // namespace camina
