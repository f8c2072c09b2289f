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

#include "camina/camina.hpp"
#include "camina/corpus.hpp"
#include "camina/group_io.hpp"
#include "camina/families.hpp"
#include "camina/structure.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace camina;

namespace {

Subgroup center_of(const Group& g)
{
	return Subgroup::from_members(g, oracle::center(g));
}

/// The cyclic subgroup generated by the first element of order n.
Subgroup rotations(const Group& d, std::size_t n)
{
	for (ElementId x = 0; x < d.order(); ++x)
		if (d.element_order(x) == n) {
			const std::vector<ElementId> gens{x};
			return Subgroup::generated(d, gens);
		}
	throw std::logic_error("no rotation");
}

/// Z(P) for P = sylow(g, p), as a subgroup of g.
Subgroup sylow_center(const Group& g, std::uint64_t p)
{
	const Embedding e = as_group(sylow(g, p));
	std::vector<ElementId> ids;
	for (ElementId x : oracle::center(e.group))
		ids.push_back(e.to_parent[x]);
	std::sort(ids.begin(), ids.end());
	return Subgroup::from_members(g, ids);
}

Subgroup translations(const Group& g)
{
	return Subgroup::generated(g, affine_translations(g));
}

} // namespace

TEST_CASE("Camina by conjugacy")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(is_camina_conjugacy(s3, sylow(s3, 3)).holds);

	const Group d8 = construct(Family::Dihedral, {4});
	CHECK(is_camina_conjugacy(d8, center_of(d8)).holds);
	const CaminaCheck r = is_camina_conjugacy(d8, rotations(d8, 4));
	CHECK_FALSE(r.holds);
	REQUIRE(r.witness);
	CHECK_FALSE(rotations(d8, 4).contains(r.witness->x));
	// the witness is the smallest failing pair
	const auto cls = conjugacy_classes(d8);
	const Subgroup c4 = rotations(d8, 4);
	for (ElementId x = 0; x < r.witness->x; ++x)
		if (!c4.contains(x))
			for (ElementId n : c4.members())
				CHECK(cls.class_of[d8.mul(x, n)] == cls.class_of[x]);

	CHECK(kind_of([&] { is_camina_conjugacy(d8, Subgroup::whole(d8)); }) == ErrorKind::NotProper);
	CHECK(kind_of([&] { is_camina_conjugacy(d8, Subgroup::trivial(d8)); }) == ErrorKind::NotProper);
	const std::vector<ElementId> t{2};
	CHECK(kind_of([&] { is_camina_conjugacy(s3, Subgroup::generated(s3, t)); }) == ErrorKind::NotNormal);
}

TEST_CASE("Camina by centralizer orders")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(is_camina_centralizer(s3, sylow(s3, 3)));
	const Group d8 = construct(Family::Dihedral, {4});
	CHECK_FALSE(is_camina_centralizer(d8, rotations(d8, 4)));
	const Group q8 = construct(Family::Dicyclic, {2});
	CHECK(is_camina_centralizer(q8, center_of(q8)));
}

TEST_CASE("Camina by characters")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(is_camina_character(s3, sylow(s3, 3), character_table(s3)));
	const Group d8 = construct(Family::Dihedral, {4});
	const CharacterTable t = character_table(d8);
	CHECK(is_camina_character(d8, center_of(d8), t));
	CHECK_FALSE(is_camina_character(d8, rotations(d8, 4), t));

	CharacterTable broken = t;
	broken.values[1][1] = 5;
	CHECK(kind_of([&] { is_camina_character(d8, center_of(d8), broken); }) == ErrorKind::InvalidTable);
}

TEST_CASE("the three criteria agree with a conjugator search")
{
	for (const char* e : {"symmetric(4)", "dihedral(6)", "dicyclic(3)", "heisenberg(3)", "g54", "alternating(4)",
						  "frobenius_metacyclic(7,6)", "direct(symmetric(3),cyclic(3))", "direct(dicyclic(2),cyclic(2))"}) {
		CAPTURE(e);
		const Group g = build_group(e);
		const CharacterTable t = character_table(g);
		for (const auto& n : normal_subgroups(g).subgroups) {
			if (n.is_trivial() || n.is_whole())
				continue;
			const bool brute = oracle::is_camina(g, n.members());
			CHECK(is_camina_conjugacy(g, n).holds == brute);
			CHECK(is_camina_centralizer(g, n) == brute);
			CHECK(is_camina_character(g, n, t) == brute);
		}
	}
}

TEST_CASE("equal order pairs")
{
	const Group c4 = construct(Family::Cyclic, {4});
	const std::vector<ElementId> sq{c4.pow(1, 2)};
	CHECK(is_equal_order_pair(c4, Subgroup::generated(c4, sq)).holds);

	const Group asl = construct(Family::AffineSL2, {4});
	const EqualOrderCheck r = is_equal_order_pair(asl, translations(asl));
	CHECK_FALSE(r.holds);
	REQUIRE(r.witness);
	CHECK(r.witness->first_order != r.witness->second_order);
	CHECK(asl.element_order(r.witness->first) == r.witness->first_order);
	CHECK(asl.element_order(r.witness->second) == r.witness->second_order);
	// both lie in the same coset
	const ElementId quotient_of = asl.mul(asl.inv(r.witness->first), r.witness->second);
	CHECK(translations(asl).contains(quotient_of));
}

TEST_CASE("waists")
{
	const Group s4 = construct(Family::Symmetric, {4});
	CHECK(is_waist(s4, o_p(s4, 2)));
	CHECK(is_waist(s4, Subgroup::trivial(s4)));
	CHECK(is_waist(s4, Subgroup::whole(s4)));
	const Group klein = build_group("direct(cyclic(2),cyclic(2))");
	const std::vector<ElementId> one{1};
	CHECK_FALSE(is_waist(klein, Subgroup::generated(klein, one)));
	const std::vector<ElementId> t{2};
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(kind_of([&] { is_waist(s3, Subgroup::generated(s3, t)); }) == ErrorKind::NotNormal);
}

TEST_CASE("classification")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(classify_camina_type(s3, sylow(s3, 3)).type == CaminaType::Type1);

	const Group h = construct(Family::Heisenberg, {3});
	const CaminaClassification t2 = classify_camina_type(h, center_of(h));
	CHECK(t2.type == CaminaType::Type2);
	CHECK(t2.prime == 3);

	const Group g = build_group("g54");
	const Subgroup n = sylow_center(g, 3);
	REQUIRE(n.order() == 3);
	const CaminaClassification t3 = classify_camina_type(g, n);
	CHECK(t3.type == CaminaType::Type3);
	CHECK(t3.prime == 3);
	CHECK(t3.p_closed);
	CHECK(t3.sylow_order == 27);

	const Group d8 = construct(Family::Dihedral, {4});
	const CaminaClassification nc = classify_camina_type(d8, rotations(d8, 4));
	CHECK(nc.type == CaminaType::NotCamina);
	CHECK(nc.failing.has_value());

	const Group f72 = load_group_file(std::string(CAMINA_TEST_DATA_DIR) + "/type4/frobenius72.grp");
	std::size_t type4 = 0;
	for (const auto& m : normal_subgroups(f72).subgroups) {
		if (m.is_trivial() || m.is_whole())
			continue;
		const CaminaClassification c = classify_camina_type(f72, m);
		if (c.type == CaminaType::Type4) {
			++type4;
			CHECK(m.order() == 18);
			CHECK(c.prime == 2);
		}
	}
	CHECK(type4 == 1);
}

TEST_CASE("classification invariants over a sample")
{
	for (const char* e : {"symmetric(4)", "dihedral(8)", "dicyclic(4)", "g54", "alternating(4)", "heisenberg(3)",
						  "frobenius_metacyclic(5,4)", "semidirect_inversion(direct(cyclic(3),cyclic(3)))"}) {
		CAPTURE(e);
		const Group g = build_group(e);
		for (const auto& n : normal_subgroups(g).subgroups) {
			if (n.is_trivial() || n.is_whole())
				continue;
			const CaminaClassification c = classify_camina_type(g, n);
			const std::size_t index = g.order() / n.order();
			switch (c.type) {
			case CaminaType::NotCamina: CHECK_FALSE(oracle::is_camina(g, n.members())); break;
			case CaminaType::Type1: CHECK(is_frobenius_with_kernel(g, n)); break;
			case CaminaType::Type2: CHECK(oracle::is_prime_power_of(g.order(), c.prime)); break;
			case CaminaType::Type3:
				CHECK(oracle::is_prime_power_of(n.order(), c.prime));
				CHECK(index % c.prime == 0);
				CHECK_FALSE(oracle::is_prime_power_of(index, c.prime));
				break;
			case CaminaType::Type4:
				CHECK(oracle::is_prime_power_of(index, c.prime));
				CHECK(n.order() % c.prime == 0);
				CHECK_FALSE(oracle::is_prime_power_of(n.order(), c.prime));
				break;
			}
			if (is_frobenius_with_kernel(g, n))
				CHECK(c.type == CaminaType::Type1);
		}
	}
}

TEST_CASE("Frobenius-Wielandt triples")
{
	const Group s3 = construct(Family::Symmetric, {3});
	const Subgroup s3_2 = sylow(s3, 2);
	CHECK(is_fw_triple(s3, s3_2, Subgroup::trivial(s3)));

	const Group s4 = construct(Family::Symmetric, {4});
	CHECK_FALSE(is_fw_triple(s4, sylow(s4, 2), Subgroup::trivial(s4)));

	const Group a4 = construct(Family::Alternating, {4});
	CHECK(is_fw_triple(a4, sylow(a4, 3), Subgroup::trivial(a4)));

	// H = G is excluded
	const Group d8 = construct(Family::Dihedral, {4});
	CHECK_FALSE(is_fw_triple(d8, Subgroup::whole(d8), center_of(d8)));

	CHECK(kind_of([&] { is_fw_triple(s3, s3_2, s3_2); }) == ErrorKind::NotProper);
	const std::vector<ElementId> t{2};
	CHECK(kind_of([&] { is_fw_triple(s4, sylow(s4, 2), Subgroup::generated(s4, t)); }) == ErrorKind::NotNormalInH);

	// against the definition read literally
	const Group f72 = load_group_file(std::string(CAMINA_TEST_DATA_DIR) + "/type4/frobenius72.grp");
	const Subgroup P = sylow(f72, 2);
	const Subgroup z = Subgroup::from_members(f72, [&] {
		std::vector<ElementId> ids;
		for (ElementId x : P.members())
			if (f72.element_order(x) <= 2)
				ids.push_back(x);
		return ids;
	}());
	REQUIRE(z.order() == 2);
	bool literal = true;
	for (ElementId g = 0; g < f72.order(); ++g)
		if (!P.contains(g))
			literal &= intersection(P, conjugate(P, g)).is_subset_of(z);
	CHECK(is_fw_triple(f72, P, z) == literal);
	CHECK(literal);
}

TEST_CASE("Frobenius-Wielandt coverage")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(fw_conjugacy_coverage(s3, sylow(s3, 2), sylow(s3, 3)));

	const Group klein = build_group("direct(cyclic(2),cyclic(2))");
	const std::vector<ElementId> a{1}, b{2};
	CHECK_FALSE(fw_conjugacy_coverage(klein, Subgroup::generated(klein, b), Subgroup::generated(klein, a)));
	CHECK(kind_of([&] {
			  fw_conjugacy_coverage(klein, Subgroup::generated(klein, a), Subgroup::generated(klein, a));
		  }) == ErrorKind::FactorizationFails);
}

TEST_CASE("Zsigmondy")
{
	const ZsigmondyResult r26 = zsigmondy(2, 6);
	CHECK_FALSE(r26.prime);
	CHECK(r26.exception_kind == ZsigmondyException::Pair2_6);
	const ZsigmondyResult r32 = zsigmondy(3, 2);
	CHECK_FALSE(r32.prime);
	CHECK(r32.exception_kind == ZsigmondyException::MersenneN2);
	CHECK(zsigmondy(2, 4).prime == 5u);
	CHECK(zsigmondy(2, 1).exception_kind == ZsigmondyException::N1Trivial);
	CHECK(zsigmondy(3, 1).prime == 2u);
	CHECK(kind_of([] { zsigmondy(2, 63); }) == ErrorKind::Overflow);
	CHECK(zsigmondy(2, 62).prime.has_value());
	CHECK(kind_of([] { zsigmondy(1, 3); }) == ErrorKind::InvalidArgument);

	for (std::uint64_t a = 2; a <= 10; ++a)
		for (std::uint64_t n = 1; n <= 12; ++n) {
			CAPTURE(a);
			CAPTURE(n);
			const ZsigmondyResult z = zsigmondy(a, n);
			const std::uint64_t brute = oracle::primitive_prime(a, n);
			CHECK(z.prime.value_or(0) == brute);
			CHECK((z.exception_kind == ZsigmondyException::None) == (brute != 0));
		}
}
