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
#include "camina/structure.hpp"
#include "camina/subgroup.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace camina {

inline constexpr std::size_t kDefaultClassCap = 64;
inline constexpr double kDefaultTolerance = 1e-6;

/// Complex irreducible characters of a group.
///
/// Columns follow the class order of `classes` (by representative id).
/// Rows are sorted by degree, then by value vector in descending order so
/// the trivial character comes first.
struct CharacterTable
{
	ConjugacyClasses classes;
	std::size_t group_order = 0;
	std::vector<std::uint64_t> degrees;
	std::vector<std::vector<std::complex<double>>> values; // [irreducible][class]
	/// ids x with chi(x) = chi(1), per irreducible
	std::vector<std::vector<ElementId>> kernels;
	/// the finite field prime the table was computed over
	std::uint64_t prime = 0;

	std::size_t size() const noexcept { return degrees.size(); }
	std::size_t class_size(std::size_t c) const { return classes.classes[c].size(); }
};

/// Dixon's method: simultaneous eigenvectors of the class-sum matrices over
/// GF(p), p the smallest prime = 1 mod exp(G) above 2 sqrt|G|, lifted to
/// complex values through the eigenvalue multiplicities of each element.
///
/// Throws CapExceeded beyond class_cap classes and LiftFailure if no usable
/// prime or consistent lift is found.
CharacterTable character_table(const Group& g, std::size_t class_cap = kDefaultClassCap,
							   double tolerance = kDefaultTolerance);

struct OrthogonalityResiduals
{
	double row = 0;
	double column = 0;
	double identity_column = 0;
};

/// Largest deviations of the weighted row inner products, the normalized
/// column inner products, and sum_i chi_i(1) chi_i(c) (c != 1) from the
/// values orthogonality predicts.
OrthogonalityResiduals orthogonality_residuals(const CharacterTable& t);

/// Throws InvalidTable unless sum of squared degrees is |G| exactly and all
/// residuals are below tolerance.
void validate_table(const CharacterTable& t, double tolerance = kDefaultTolerance);

/// Irreducibles whose kernel does not contain n, i.e. Irr(G|N).
std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& n);

/// |chi(x)| < tolerance for every x outside n.
bool vanishes_outside(const CharacterTable& t, std::size_t chi, const Subgroup& n,
					  double tolerance = kDefaultTolerance);

/// Header "degree,<rep>:<size>,..." then one row per irreducible, the degree
/// followed by values as "re+imi" with 9 significant digits.
std::string to_csv(const CharacterTable& t);

} // namespace camina
