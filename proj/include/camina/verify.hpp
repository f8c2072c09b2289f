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

#include "camina/camina.hpp"
#include "camina/characters.hpp"
#include "camina/error.hpp"
#include "camina/group.hpp"
#include "camina/structure.hpp"
#include "camina/subgroup.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace camina {

struct VerifyConfig
{
	std::size_t lattice_cap = kDefaultLatticeCap;
	std::size_t class_cap = kDefaultClassCap;
	std::size_t search_budget = kDefaultSearchBudget;
	double tolerance = kDefaultTolerance;
	/// worker threads for corpus scans; 0 picks the hardware concurrency
	unsigned threads = 0;
};

enum class Status
{
	Holds,
	Fails,
	NotApplicable,
};

std::string_view to_string(Status s);

struct TheoremReport
{
	std::string theorem_id;
	std::string group;
	std::string subgroup; // empty for group-level checks
	std::vector<std::uint64_t> primes;
	Status status = Status::NotApplicable;
	/// element and subgroup ids backing a failure
	nlohmann::json witness;
	/// the violated hypothesis for not_applicable, the failed clause for fails
	std::string reason;
	/// computed quantities, for inspection
	nlohmann::json details;
	double elapsed_seconds = 0;
};

/// Everything the checks reuse about one group: classes, normal lattice,
/// Fitting subgroup and (when within the class cap) the character table.
class GroupAnalysis
{
public:
	/// Throws CapExceeded when the lattice outgrows the cap. A character table
	/// beyond the class cap is skipped and noted in table_error().
	GroupAnalysis(const Group& g, std::string label, const VerifyConfig& config = {});

	GroupAnalysis(const GroupAnalysis&) = delete;
	GroupAnalysis& operator=(const GroupAnalysis&) = delete;

	const Group& group() const noexcept { return *_group; }
	const std::string& label() const noexcept { return _label; }
	const VerifyConfig& config() const noexcept { return _config; }
	const ConjugacyClasses& classes() const noexcept { return _classes; }
	const NormalLattice& lattice() const noexcept { return _lattice; }
	const Subgroup& fitting() const noexcept { return *_fitting; }
	const CharacterTable* table() const noexcept { return _table ? &*_table : nullptr; }
	const std::string& table_error() const noexcept { return _table_error; }

	/// Proper nontrivial normal subgroups, in lattice order.
	std::vector<const Subgroup*> proper_normal() const;

	/// "L<k>" for the k-th lattice member, otherwise "S" followed by the
	/// generator ids.
	std::string subgroup_label(const Subgroup& s) const;

private:
	const Group* _group;
	std::string _label;
	VerifyConfig _config;
	ConjugacyClasses _classes;
	NormalLattice _lattice;
	std::optional<Subgroup> _fitting;
	std::optional<CharacterTable> _table;
	std::string _table_error;
};

/// Camina pairs: N = F(G), N < F(G) and F(G) < N each against its
/// structural description.
TheoremReport verify_theorem_1_1(const GroupAnalysis& a, const Subgroup& n);

/// At least one coarse category and exactly one refined category.
TheoremReport verify_trichotomies(const GroupAnalysis& a, const Subgroup& n);

/// Type 3 with a normal Sylow p-subgroup against the Sylow, Camina and
/// Frobenius conditions, for N a normal p-subgroup.
TheoremReport verify_lemma_2_2(const GroupAnalysis& a, const Subgroup& n, std::uint64_t p);

/// Type 4 with G/N a p-group against the FW triple (G, P, P n N), the Camina
/// pair (P, P n N) and a normal p-complement inside N. Sets
/// details["fw_disagreement"] when the coverage condition and the triple
/// differ on an instance where either side holds.
TheoremReport verify_theorem_2_3(const GroupAnalysis& a, const Subgroup& n, std::uint64_t p);

/// Type 4: O_p(G) = C_P(O_p'(G)) and O_p(G) < P n N.
TheoremReport verify_lemma_3_3(const GroupAnalysis& a, const Subgroup& n);

/// Type 3: N < F(G) = O_p(G). Type 4: F(G) < N.
TheoremReport verify_section_3(const GroupAnalysis& a, const Subgroup& n);

/// The three Camina criteria agree; a Camina pair is a waist, an equal order
/// pair, and of Type 1 whenever N has a complement.
TheoremReport verify_cross_properties(const GroupAnalysis& a, const Subgroup& n);

/// Character table checks: sum of squared degrees, orthogonality, one
/// irreducible per class, and quotient tables recovered from the
/// characters whose kernel contains each normal subgroup.
TheoremReport verify_character_table(const GroupAnalysis& a);

/// affine_sl2(4) with its translation subgroup N: C_G(N) = N, G/N of order
/// 60 and perfect with simple derived group, and a coset xN of an involution
/// x fixing the origin holding elements of orders 2 and 4.
TheoremReport verify_lemma_3_1_instance(const VerifyConfig& config = {});

/// Every check that takes a pair, for one pair: 1.1, trichotomy, 3.3,
/// section3 for Camina pairs; cross for all pairs; 2.2 for each prime of N
/// when N is a p-group; 2.3 for each prime dividing |G|.
std::vector<TheoremReport> verify_pair(const GroupAnalysis& a, const Subgroup& n);

/// Runs one check by id ("1.1", "trichotomy", "2.2", "2.3", "3.3",
/// "section3", "cross") on a pair; primed checks run once per relevant prime.
/// Returns nothing for an unknown id.
std::optional<std::vector<TheoremReport>> verify_by_id(std::string_view id, const GroupAnalysis& a,
														const Subgroup& n);

/// Ids accepted by the CLI, "3.1" included.
const std::vector<std::string>& theorem_ids();

struct CorpusEntry
{
	std::string label;
	std::optional<Group> group;
	/// set when the group could not be built
	std::string error;
	std::optional<ErrorKind> error_kind;
};

struct CaminaPairRecord
{
	std::string group;
	std::string subgroup;
	std::size_t subgroup_order = 0;
	CaminaClassification classification;
};

struct GroupRecord
{
	std::string label;
	std::size_t order = 0;
	std::size_t degree = 0;
	std::size_t normal_subgroups = 0;
	std::string error;
	std::optional<ErrorKind> error_kind;
	std::vector<std::string> notes;
};

struct Anomaly
{
	std::string kind;
	std::string group;
	std::string subgroup;
	nlohmann::json detail;
};

struct CorpusScan
{
	std::vector<GroupRecord> groups;
	std::size_t pairs_examined = 0;
	std::vector<CaminaPairRecord> camina_pairs;
	std::vector<TheoremReport> theorem_reports;
	std::vector<Anomaly> anomalies;

	std::size_t count(Status s) const;
	/// Some group failed with CapExceeded, at load time or during analysis.
	bool cap_exceeded() const;
};

/// Analyses every group, in parallel across groups, and assembles the
/// results in corpus order. Per-group errors land in the group records.
/// A non-empty corpus also gets the affine_sl2(4) instance report.
CorpusScan scan_corpus(const std::vector<CorpusEntry>& corpus, const VerifyConfig& config = {});

} // namespace camina
