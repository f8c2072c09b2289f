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

#include "oracles.hpp"
#include "test_util.hpp"

#include "camina/characters.hpp"
#include "camina/corpus.hpp"
#include "camina/families.hpp"
#include "camina/number_theory.hpp"
#include "camina/structure.hpp"

#include <doctest.h>

#include <cmath>

using namespace camina;

namespace {

constexpr double kTol = 1e-6;

bool near(std::complex<double> a, std::complex<double> b)
{
	return std::abs(a - b) < kTol;
}

} // namespace

TEST_CASE("C3")
{
	const CharacterTable t = character_table(construct(Family::Cyclic, {3}));
	CHECK(t.degrees == std::vector<std::uint64_t>{1, 1, 1});
	const std::complex<double> w = std::polar(1.0, 2 * M_PI / 3);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t c = 0; c < 3; ++c) {
			const std::complex<double> v = t.values[i][c];
			CHECK(std::abs(std::abs(v) - 1) < kTol);
			// a cube root of unity
			CHECK(near(v * v * v, 1.0));
		}
	CHECK(near(t.values[1][1], w) != near(t.values[1][1], std::conj(w)));
	CHECK(to_csv(t) == "degree,0:1,1:1,2:1\n"
					   "1,1+0i,1+0i,1+0i\n"
					   "1,1+0i,-0.5+0.866025404i,-0.5-0.866025404i\n"
					   "1,1+0i,-0.5-0.866025404i,-0.5+0.866025404i\n");
}

TEST_CASE("S3")
{
	const Group s3 = construct(Family::Symmetric, {3});
	const CharacterTable t = character_table(s3);
	CHECK(t.degrees == std::vector<std::uint64_t>{1, 1, 2});
	// the trivial character is listed first
	for (auto v : t.values[0])
		CHECK(near(v, 1.0));
	for (std::size_t c = 0; c < t.classes.size(); ++c)
		if (s3.element_order(t.classes.representatives[c]) == 2)
			CHECK(near(t.values[2][c], 0.0));
	const Subgroup a3 = sylow(s3, 3);
	CHECK(irr_over(t, a3) == std::vector<std::size_t>{2});
	CHECK(vanishes_outside(t, 2, a3));
	CHECK_FALSE(vanishes_outside(t, 0, a3));
	CHECK(irr_over(t, Subgroup::trivial(s3)).empty());
	const std::vector<ElementId> tr{2};
	CHECK(kind_of([&] { irr_over(t, Subgroup::generated(s3, tr)); }) == ErrorKind::NotNormal);
}

TEST_CASE("D8")
{
	const Group d8 = construct(Family::Dihedral, {4});
	const CharacterTable t = character_table(d8);
	CHECK(t.degrees == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
	const Subgroup z = Subgroup::from_members(d8, oracle::center(d8));
	CHECK(irr_over(t, z) == std::vector<std::size_t>{4});
	CHECK(vanishes_outside(t, 4, z));
}

TEST_CASE("prime choice")
{
	for (const char* e : {"symmetric(4)", "alternating(5)", "g54", "affine_sl2(4)"}) {
		const Group g = build_group(e);
		const CharacterTable t = character_table(g);
		std::uint64_t p = g.exponent() + 1;
		while (!(p * p > 4 * g.order() && is_prime(p)))
			p += g.exponent();
		CHECK(t.prime == p);
	}
}

TEST_CASE("table invariants and quotient tables")
{
	for (const char* e : {"symmetric(4)", "alternating(5)", "dicyclic(3)", "g54", "heisenberg(3)",
						  "frobenius_metacyclic(7,6)", "direct(alternating(4),cyclic(2))", "affine_sl2(4)",
						  "direct(cyclic(3),cyclic(3),cyclic(3))"}) {
		CAPTURE(e);
		const Group g = build_group(e);
		const CharacterTable t = character_table(g);
		CHECK(t.size() == oracle::classes(g).size());
		std::uint64_t squares = 0;
		for (auto d : t.degrees)
			squares += d * d;
		CHECK(squares == g.order());
		const OrthogonalityResiduals r = orthogonality_residuals(t);
		CHECK(r.row < kTol);
		CHECK(r.column < kTol);
		CHECK(r.identity_column < kTol);
		// degrees ascend and each kernel is normal
		for (std::size_t i = 0; i < t.size(); ++i) {
			if (i)
				CHECK(t.degrees[i - 1] <= t.degrees[i]);
			CHECK(near(t.values[i][0], double(t.degrees[i])));
			CHECK(oracle::is_subgroup(g, t.kernels[i]));
			CHECK(oracle::is_normal(g, t.kernels[i]));
		}

		for (const auto& n : normal_subgroups(g).subgroups) {
			if (n.is_trivial())
				continue;
			const Quotient q = quotient(n);
			const CharacterTable qt = character_table(q.group);
			std::vector<char> used(qt.size(), 0);
			std::size_t lifted = 0;
			for (std::size_t i = 0; i < t.size(); ++i) {
				if (!std::includes(t.kernels[i].begin(), t.kernels[i].end(), n.members().begin(), n.members().end()))
					continue;
				++lifted;
				bool found = false;
				for (std::size_t k = 0; k < qt.size() && !found; ++k) {
					if (used[k])
						continue;
					bool same = true;
					for (std::size_t c = 0; c < qt.classes.size(); ++c) {
						const ElementId rep = q.representatives[qt.classes.representatives[c]];
						same &= near(t.values[i][t.classes.class_of[rep]], qt.values[k][c]);
					}
					if (same)
						used[k] = found = true;
				}
				CHECK(found);
			}
			CHECK(lifted == qt.size());
		}
	}
}

TEST_CASE("caps and validation")
{
	const Group c12 = construct(Family::Cyclic, {12});
	CHECK(kind_of([&] { character_table(c12, 11); }) == ErrorKind::CapExceeded);
	CharacterTable t = character_table(c12);
	validate_table(t);
	t.degrees[1] = 2;
	CHECK(kind_of([&] { validate_table(t); }) == ErrorKind::InvalidTable);
}
