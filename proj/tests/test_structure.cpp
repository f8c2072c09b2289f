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

#include "camina/corpus.hpp"
#include "camina/error.hpp"
#include "camina/families.hpp"
#include "camina/structure.hpp"

#include <doctest.h>

#include <set>

using namespace camina;

namespace {

const char* const kSample[] = {
	"cyclic(6)",	 "cyclic(12)",		"dihedral(4)",	  "dihedral(6)",
	"symmetric(3)",	 "symmetric(4)",	"alternating(4)", "alternating(5)",
	"dicyclic(2)",	 "dicyclic(3)",		"heisenberg(3)",  "g54",
	"direct(symmetric(3),cyclic(3))", "frobenius_metacyclic(7,6)", "direct(cyclic(2),cyclic(2),cyclic(2))",
	"frobenius_metacyclic(5,4)",
};

std::multiset<std::size_t> orders(const NormalLattice& l)
{
	std::multiset<std::size_t> out;
	for (const auto& s : l.subgroups)
		out.insert(s.order());
	return out;
}

} // namespace

TEST_CASE("conjugacy classes")
{
	auto sizes = [](const char* e) {
		const Group g = build_group(e);
		std::multiset<std::size_t> out;
		for (const auto& c : conjugacy_classes(g).classes)
			out.insert(c.size());
		return out;
	};
	CHECK(sizes("symmetric(3)") == std::multiset<std::size_t>{1, 2, 3});
	CHECK(sizes("dihedral(4)") == std::multiset<std::size_t>{1, 1, 2, 2, 2});
	CHECK(sizes("cyclic(7)") == std::multiset<std::size_t>{1, 1, 1, 1, 1, 1, 1});

	for (const char* e : kSample) {
		CAPTURE(e);
		const Group g = build_group(e);
		const ConjugacyClasses cc = conjugacy_classes(g);
		const auto brute = oracle::classes(g);
		CHECK(cc.size() == brute.size());
		std::size_t total = 0;
		for (std::size_t c = 0; c < cc.size(); ++c) {
			total += cc.classes[c].size();
			CHECK(g.order() % cc.classes[c].size() == 0);
			CHECK(cc.representatives[c] == cc.classes[c].front());
			CHECK(std::find(brute.begin(), brute.end(), cc.classes[c]) != brute.end());
		}
		CHECK(total == g.order());
		CHECK(cc.classes[cc.class_of[0]].size() == 1);
	}
}

TEST_CASE("centralizers")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(centralizer(s3, 0).order() == 6);
	for (ElementId x = 0; x < s3.order(); ++x)
		if (s3.element_order(x) == 2)
			CHECK(centralizer(s3, x).order() == 2);
	const Group d8 = construct(Family::Dihedral, {4});
	const ElementId z = oracle::center(d8).at(1);
	CHECK(centralizer(d8, z).order() == 8);

	for (const char* e : kSample) {
		const Group g = build_group(e);
		const ConjugacyClasses cc = conjugacy_classes(g);
		for (ElementId x = 0; x < g.order(); ++x) {
			const Subgroup c = centralizer(g, x);
			CHECK(c.order() == oracle::centralizer_order(g, x));
			CHECK(c.order() * cc.classes[cc.class_of[x]].size() == g.order());
		}
	}
}

TEST_CASE("normal subgroup lattice against class-union enumeration")
{
	CHECK(orders(normal_subgroups(construct(Family::Symmetric, {4}))) == std::multiset<std::size_t>{1, 4, 12, 24});
	CHECK(orders(normal_subgroups(construct(Family::Alternating, {5}))) == std::multiset<std::size_t>{1, 60});
	CHECK(orders(normal_subgroups(construct(Family::Cyclic, {6}))) == std::multiset<std::size_t>{1, 2, 3, 6});

	for (const char* e : kSample) {
		CAPTURE(e);
		const Group g = build_group(e);
		const NormalLattice l = normal_subgroups(g);
		const auto brute = oracle::normal_subgroups(g);
		REQUIRE(l.size() == brute.size());
		for (std::size_t i = 0; i < l.size(); ++i)
			CHECK(l.subgroups[i].members() == brute[i]);
		CHECK(l.subgroups.front().is_trivial());
		CHECK(l.subgroups.back().is_whole());
		// closed under join
		for (const auto& a : l.subgroups)
			for (const auto& b : l.subgroups)
				CHECK(l.index_of(join(a, b)).has_value());
	}
	const Group c2_4 = build_group("direct(cyclic(2),cyclic(2),cyclic(2),cyclic(2))");
	CHECK(normal_subgroups(c2_4).size() == 67);
	CHECK(kind_of([&] { normal_subgroups(c2_4, 10); }) == ErrorKind::CapExceeded);
}

TEST_CASE("Sylow subgroups")
{
	const Group s4 = construct(Family::Symmetric, {4});
	const Subgroup p2 = sylow(s4, 2);
	CHECK(p2.order() == 8);
	CHECK_FALSE(as_group(p2).group.is_abelian());
	CHECK(as_group(p2).group.exponent() == 4);
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(sylow(s3, 3).order() == 3);
	CHECK(sylow(s3, 3) == o_p(s3, 3));
	CHECK(sylow(construct(Family::Cyclic, {6}), 5).is_trivial());
	CHECK(kind_of([&] { sylow(s3, 4); }) == ErrorKind::NotPrime);

	for (const char* e : kSample) {
		CAPTURE(e);
		const Group g = build_group(e);
		for (std::uint64_t p : oracle::primes_of(g.order())) {
			const Subgroup P = sylow(g, p);
			CHECK(P.order() == oracle::p_part(g.order(), p));
			CHECK(oracle::is_subgroup(g, P.members()));
			// every element of p-power order lies in some conjugate of P
			std::vector<char> covered(g.order(), 0);
			for (ElementId y = 0; y < g.order(); ++y) {
				const Subgroup c = conjugate(P, y);
				for (ElementId x : c.members())
					covered[x] = 1;
			}
			for (ElementId x = 0; x < g.order(); ++x)
				if (oracle::is_prime_power_of(g.element_order(x), p))
					CHECK(covered[x]);
		}
	}
}

TEST_CASE("p-cores and the Fitting subgroup")
{
	const Group s4 = construct(Family::Symmetric, {4});
	CHECK(o_p(s4, 2).order() == 4);
	CHECK(fitting(s4).order() == 4);
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(fitting(s3).order() == 3);
	CHECK(o_p_prime(s3, 2).order() == 3);
	CHECK(o_p_prime(construct(Family::Cyclic, {6}), 7).order() == 6);
	CHECK(o_p_prime(construct(Family::Dihedral, {4}), 2).is_trivial());
	CHECK(o_p(construct(Family::Alternating, {5}), 2).is_trivial());
	CHECK(fitting(build_group("g54")).order() == 27);

	for (const char* e : kSample) {
		CAPTURE(e);
		const Group g = build_group(e);
		const NormalLattice l = normal_subgroups(g);
		CHECK(fitting(g).members() == oracle::fitting(g));
		CHECK(is_nilpotent(g) == oracle::is_nilpotent(g, Subgroup::whole(g).members()));
		for (std::uint64_t p : oracle::primes_of(g.order())) {
			CHECK(o_p(g, p).members() == oracle::o_p(g, p));
			// a normal p'-subgroup of p-power index
			bool brute = false;
			for (const auto& s : l.subgroups)
				brute |= s.order() % p != 0 && oracle::is_prime_power_of(g.order() / s.order(), p);
			CHECK(has_normal_p_complement(g, p) == brute);
		}
	}
	CHECK(has_normal_p_complement(s3, 2));
	CHECK_FALSE(has_normal_p_complement(s3, 3));
	CHECK(has_normal_p_complement(construct(Family::Dihedral, {4}), 2));
}

TEST_CASE("solvability profile")
{
	const SolvabilityProfile s4 = solvability_profile(construct(Family::Symmetric, {4}));
	std::vector<std::size_t> series;
	for (const auto& d : s4.derived_series)
		series.push_back(d.order());
	CHECK(series == std::vector<std::size_t>{24, 12, 4, 1});
	CHECK(s4.is_solvable);
	CHECK_FALSE(s4.is_nilpotent);

	const SolvabilityProfile a5 = solvability_profile(construct(Family::Alternating, {5}));
	CHECK(a5.solvable_residual.order() == 60);
	CHECK_FALSE(a5.is_solvable);

	const SolvabilityProfile c6 = solvability_profile(construct(Family::Cyclic, {6}));
	CHECK(c6.is_solvable);
	CHECK(c6.is_nilpotent);

	const SolvabilityProfile asl = solvability_profile(construct(Family::AffineSL2, {4}));
	CHECK(asl.solvable_residual.order() == 960);
}

TEST_CASE("Hall p-complements")
{
	const Group s3 = construct(Family::Symmetric, {3});
	const SubgroupSearch h = hall_p_complement(s3, 3);
	REQUIRE(h.outcome == SearchOutcome::Found);
	CHECK(h.subgroup->order() == 2);

	const Group g = build_group("g54");
	const SubgroupSearch h54 = hall_p_complement(g, 3);
	REQUIRE(h54.outcome == SearchOutcome::Found);
	CHECK(h54.subgroup->order() == 2);

	const SubgroupSearch trivial = hall_p_complement(construct(Family::Dihedral, {4}), 2);
	REQUIRE(trivial.outcome == SearchOutcome::Found);
	CHECK(trivial.subgroup->is_trivial());

	// A5 has no subgroup of order 15
	const SubgroupSearch a5 = hall_p_complement(construct(Family::Alternating, {5}), 2);
	CHECK(a5.outcome == SearchOutcome::ProvedAbsent);
	// but does have A4 as a Hall 5-complement
	const SubgroupSearch a4 = hall_p_complement(construct(Family::Alternating, {5}), 5);
	REQUIRE(a4.outcome == SearchOutcome::Found);
	CHECK(a4.subgroup->order() == 12);

	const SubgroupSearch tiny = hall_p_complement(construct(Family::Alternating, {5}), 2, 1);
	CHECK(tiny.outcome == SearchOutcome::BudgetExhausted);
}

TEST_CASE("complements")
{
	const Group s3 = construct(Family::Symmetric, {3});
	const Subgroup a3 = sylow(s3, 3);
	const SubgroupSearch c = find_complement(a3);
	REQUIRE(c.outcome == SearchOutcome::Found);
	CHECK(c.subgroup->order() == 2);
	CHECK(intersection(*c.subgroup, a3).is_trivial());

	const Group q8 = construct(Family::Dicyclic, {2});
	const Subgroup z = Subgroup::from_members(q8, oracle::center(q8));
	CHECK(find_complement(z).outcome == SearchOutcome::ProvedAbsent);
}

TEST_CASE("Frobenius kernels")
{
	const Group s3 = construct(Family::Symmetric, {3});
	CHECK(is_frobenius_with_kernel(s3, sylow(s3, 3)));
	const Group d8 = construct(Family::Dihedral, {4});
	CHECK_FALSE(is_frobenius_with_kernel(d8, Subgroup::from_members(d8, oracle::center(d8))));
	const Group a4 = construct(Family::Alternating, {4});
	CHECK(is_frobenius_with_kernel(a4, o_p(a4, 2)));
	CHECK(kind_of([&] { is_frobenius_with_kernel(s3, Subgroup::whole(s3)); }) == ErrorKind::NotProper);
	const std::vector<ElementId> t{2};
	CHECK(kind_of([&] { is_frobenius_with_kernel(s3, Subgroup::generated(s3, t)); }) == ErrorKind::NotNormal);
}
