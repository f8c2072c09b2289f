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
#include "camina/group_io.hpp"
#include "camina/families.hpp"
#include "camina/report.hpp"
#include "camina/verify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace camina;

namespace {

struct Fixture
{
	Group group;
	std::unique_ptr<GroupAnalysis> analysis;

	explicit Fixture(Group g, const std::string& label) : group(std::move(g))
	{
		analysis = std::make_unique<GroupAnalysis>(group, label);
	}

	/// The unique proper nontrivial normal subgroup of the given order.
	const Subgroup& normal(std::size_t order) const
	{
		const Subgroup* found = nullptr;
		for (const Subgroup* s : analysis->proper_normal())
			if (s->order() == order) {
				REQUIRE(found == nullptr);
				found = s;
			}
		REQUIRE(found != nullptr);
		return *found;
	}

	const Subgroup& center() const
	{
		const auto z = oracle::center(group);
		for (const Subgroup& s : analysis->lattice().subgroups)
			if (s.members() == z)
				return s;
		FAIL("center not in the lattice");
		return analysis->lattice().subgroups.front();
	}
};

Fixture fixture(const char* expr)
{
	return Fixture(build_group(expr), expr);
}

Fixture witness72()
{
	return Fixture(load_group_file(std::string(CAMINA_TEST_DATA_DIR) + "/type4/frobenius72.grp"), "frobenius72");
}

} // namespace

TEST_CASE("N against the Fitting subgroup")
{
	const Fixture s3 = fixture("symmetric(3)");
	CHECK(verify_theorem_1_1(*s3.analysis, s3.normal(3)).status == Status::Holds);
	const Fixture h = fixture("heisenberg(3)");
	CHECK(verify_theorem_1_1(*h.analysis, h.center()).status == Status::Holds);
	const Fixture g = fixture("g54");
	const TheoremReport r = verify_theorem_1_1(*g.analysis, g.normal(3));
	CHECK(r.status == Status::Holds);
	CHECK(r.details["fitting"]["order"] == 27);
	const Fixture s4 = fixture("symmetric(4)");
	const TheoremReport na = verify_theorem_1_1(*s4.analysis, s4.normal(4));
	CHECK(na.status == Status::NotApplicable);
	CHECK_FALSE(na.reason.empty());
}

TEST_CASE("trichotomy reports")
{
	const Fixture d8 = fixture("dihedral(4)");
	const TheoremReport r = verify_trichotomies(*d8.analysis, d8.center());
	CHECK(r.status == Status::Holds);
	CHECK(r.details["coarse"] == nlohmann::json({false, true, true}));
	CHECK(r.details["refined"] == nlohmann::json({false, true, false, false}));
	const Fixture s3 = fixture("symmetric(3)");
	const TheoremReport t1 = verify_trichotomies(*s3.analysis, s3.normal(3));
	CHECK(t1.status == Status::Holds);
	CHECK(t1.details["refined"] == nlohmann::json({true, false, false, false}));
	const Fixture s4 = fixture("symmetric(4)");
	CHECK(verify_trichotomies(*s4.analysis, s4.normal(4)).status == Status::NotApplicable);
}

TEST_CASE("Type 3 p-closed structure")
{
	const Fixture g = fixture("g54");
	const TheoremReport r = verify_lemma_2_2(*g.analysis, g.normal(3), 3);
	CHECK(r.status == Status::Holds);
	CHECK(r.details["left"] == true);
	CHECK(r.details["sylow_proper_normal"] == true);
	CHECK(r.details["sylow_camina"] == true);
	CHECK(r.details["nh_frobenius"] == true);

	const Fixture h = fixture("heisenberg(3)");
	const TheoremReport rh = verify_lemma_2_2(*h.analysis, h.center(), 3);
	CHECK(rh.status == Status::Holds);
	CHECK(rh.details["left"] == false);
	CHECK(rh.details["sylow_proper_normal"] == false);

	const Fixture s3 = fixture("symmetric(3)");
	const TheoremReport rs = verify_lemma_2_2(*s3.analysis, s3.normal(3), 3);
	CHECK(rs.status == Status::Holds);
	CHECK(rs.details["left"] == false);

	CHECK(verify_lemma_2_2(*s3.analysis, s3.normal(3), 2).status == Status::NotApplicable);
}

TEST_CASE("Type 4 and Frobenius-Wielandt triples")
{
	const Fixture s3 = fixture("symmetric(3)");
	const TheoremReport r = verify_theorem_2_3(*s3.analysis, s3.normal(3), 2);
	CHECK(r.status == Status::Holds);
	CHECK(r.details["left"] == false);
	CHECK(r.details["normal_p_complement_inside_n"] == false);

	const Fixture d8 = fixture("dihedral(4)");
	const TheoremReport rd = verify_theorem_2_3(*d8.analysis, d8.center(), 2);
	CHECK(rd.status == Status::Holds);
	CHECK(rd.details["left"] == false);
	CHECK(rd.details["fw_triple"] == false);

	const Fixture w = witness72();
	const TheoremReport rw = verify_theorem_2_3(*w.analysis, w.normal(18), 2);
	CHECK(rw.status == Status::Holds);
	CHECK(rw.details["left"] == true);
	CHECK(rw.details["fw_triple"] == true);
	CHECK(rw.details["p_meet_camina"] == true);
	CHECK(rw.details["normal_p_complement_inside_n"] == true);
	CHECK(rw.details["fw_coverage"] == true);
	CHECK(rw.details["fw_disagreement"] == false);
}

TEST_CASE("p-cores and the Fitting subgroup of Camina pairs")
{
	const Fixture w = witness72();
	const TheoremReport r = verify_lemma_3_3(*w.analysis, w.normal(18));
	CHECK(r.status == Status::Holds);
	CHECK(r.details["o_p"]["order"] == 1);
	CHECK(r.details["p_meet_n"]["order"] == 2);
	CHECK(verify_section_3(*w.analysis, w.normal(18)).status == Status::Holds);

	const Fixture s3 = fixture("symmetric(3)");
	CHECK(verify_lemma_3_3(*s3.analysis, s3.normal(3)).status == Status::NotApplicable);
	CHECK(verify_section_3(*s3.analysis, s3.normal(3)).status == Status::NotApplicable);
	const Fixture h = fixture("heisenberg(3)");
	CHECK(verify_lemma_3_3(*h.analysis, h.center()).status == Status::NotApplicable);

	const Fixture g = fixture("g54");
	const TheoremReport s = verify_section_3(*g.analysis, g.normal(3));
	CHECK(s.status == Status::Holds);
	CHECK(s.details["o_p"]["order"] == 27);
}

TEST_CASE("cross-property reports")
{
	const Fixture s3 = fixture("symmetric(3)");
	const TheoremReport r = verify_cross_properties(*s3.analysis, s3.normal(3));
	CHECK(r.status == Status::Holds);
	CHECK(r.details["conjugacy"] == true);
	CHECK(r.details["character"] == true);
	CHECK(r.details["waist"] == true);
	CHECK(r.details["equal_order"] == true);
	CHECK(r.details["complement"]["order"] == 2);

	const Fixture d8 = fixture("dihedral(4)");
	for (const Subgroup* n : d8.analysis->proper_normal()) {
		const TheoremReport rd = verify_cross_properties(*d8.analysis, *n);
		CHECK(rd.status == Status::Holds);
		if (n->order() == 4)
			CHECK(rd.details["conjugacy"] == false);
	}

	const Fixture g = fixture("g54");
	const TheoremReport rg = verify_cross_properties(*g.analysis, g.normal(3));
	CHECK(rg.status == Status::Holds);
	CHECK(rg.details["complement"] == "none");
}

TEST_CASE("the affine SL(2,4) instance")
{
	const TheoremReport r = verify_lemma_3_1_instance();
	CHECK(r.status == Status::Holds);
	CHECK(r.details["centralizer_order"] == 16);
	CHECK(r.details["quotient_order"] == 60);
	for (const auto& [order, count] : r.details["coset_orders"].items())
		CHECK((order == "2" || order == "4"));
}

TEST_CASE("corpus scans")
{
	SUBCASE("empty")
	{
		const CorpusScan scan = scan_corpus({});
		CHECK(scan.groups.empty());
		CHECK(scan.pairs_examined == 0);
		CHECK(scan.theorem_reports.empty());
	}
	SUBCASE("A5 contributes no pairs")
	{
		const CorpusScan scan = scan_corpus(corpus_from_manifest("alternating(5)\n"));
		CHECK(scan.pairs_examined == 0);
		CHECK(scan.camina_pairs.empty());
		CHECK(scan.count(Status::Fails) == 0);
	}
	SUBCASE("errors are captured per group")
	{
		const CorpusScan scan = scan_corpus(corpus_from_manifest("symmetric(8)\ncyclic(4)\nnonsense(1)\n"));
		REQUIRE(scan.groups.size() == 3);
		CHECK(scan.groups[0].error_kind == ErrorKind::CapExceeded);
		CHECK(scan.groups[1].error.empty());
		CHECK(scan.groups[2].error_kind == ErrorKind::ParseError);
		CHECK(scan.cap_exceeded());
		CHECK(scan.pairs_examined == 1);
	}
	SUBCASE("lattice cap")
	{
		VerifyConfig config;
		config.lattice_cap = 4;
		const CorpusScan scan = scan_corpus(corpus_from_manifest("direct(cyclic(2),cyclic(2),cyclic(2))\n"), config);
		CHECK(scan.groups[0].error_kind == ErrorKind::CapExceeded);
	}
	SUBCASE("pair count")
	{
		const auto corpus = corpus_from_manifest("symmetric(4)\ndihedral(4)\ng54\nheisenberg(3)\n");
		const CorpusScan scan = scan_corpus(corpus);
		std::size_t expected = 0;
		for (const auto& e : corpus)
			expected += oracle::normal_subgroups(*e.group).size() - 2;
		CHECK(scan.pairs_examined == expected);
		CHECK(scan.count(Status::Fails) == 0);
	}
}

TEST_CASE("corpus sources")
{
	const auto builtin = builtin_corpus();
	CHECK(builtin.size() == parse_manifest(builtin_manifest()).size());
	for (const auto& e : builtin)
		CHECK(e.group.has_value());

	const auto dir = std::filesystem::temp_directory_path() / "camina_corpus_test";
	std::filesystem::remove_all(dir);
	std::filesystem::create_directories(dir);
	std::ofstream(dir / "b.manifest") << "cyclic(3)\n";
	std::ofstream(dir / "a.grp") << "degree 3\ngen (1 2 3)\ngen (1 2)\n";
	std::ofstream(dir / "c.tbl") << "cayley 2\n0 1\n1 0\n";
	std::ofstream(dir / "notes.txt") << "ignored\n";
	const auto entries = load_corpus_directory(dir);
	REQUIRE(entries.size() == 3);
	CHECK(entries[0].label == "a.grp");
	CHECK(entries[0].group->order() == 6);
	CHECK(entries[1].label == "cyclic(3)");
	CHECK(entries[2].label == "c.tbl");
	std::filesystem::remove_all(dir);

	CHECK(load_corpus_source("dihedral(5)").at(0).group->order() == 10);
}

TEST_CASE("reports serialize deterministically")
{
	const auto corpus = corpus_from_manifest("symmetric(3)\ndicyclic(2)\ng54\n");
	VerifyConfig one;
	one.threads = 1;
	VerifyConfig many;
	many.threads = 3;
	nlohmann::json a = to_json(scan_corpus(corpus, one));
	nlohmann::json b = to_json(scan_corpus(corpus, many));
	CHECK(a["schema"] == "camina-report/1");
	zero_timings(a);
	zero_timings(b);
	CHECK(a.dump() == b.dump());
	CHECK(a["summary"]["fails"] == 0);
	CHECK(a["pairs_examined"] == 1 + 4 + 5);

	const std::string csv = reports_to_csv(scan_corpus(corpus).theorem_reports);
	CHECK(csv.rfind("theorem,group,subgroup,primes,status,reason\n", 0) == 0);
}
