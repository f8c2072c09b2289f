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

#include "camina/verify.hpp"

#include "camina/error.hpp"
#include "camina/families.hpp"
#include "camina/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace camina {

using json = nlohmann::json;

std::string_view to_string(Status s)
{
	switch (s) {
	case Status::Holds: return "holds";
	case Status::Fails: return "fails";
	case Status::NotApplicable: return "not_applicable";
	}
	return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch
{
public:
	double seconds() const { return std::chrono::duration<double>(Clock::now() - _start).count(); }

private:
	Clock::time_point _start = Clock::now();
};

TheoremReport open_report(std::string id, const GroupAnalysis& a, const Subgroup* n)
{
	TheoremReport r;
	r.theorem_id = std::move(id);
	r.group = a.label();
	if (n)
		r.subgroup = a.subgroup_label(*n);
	r.details = json::object();
	return r;
}

TheoremReport& not_applicable(TheoremReport& r, std::string reason)
{
	r.status = Status::NotApplicable;
	r.reason = std::move(reason);
	return r;
}

bool proper_subset(const Subgroup& a, const Subgroup& b)
{
	return a.order() < b.order() && a.is_subset_of(b);
}

bool divides(std::uint64_t p, std::size_t n)
{
	return n % p == 0;
}

bool is_p_group_for(std::size_t order, std::uint64_t p)
{
	auto q = p_group_prime(order);
	return q && *q == p;
}

json subgroup_json(const Subgroup& s)
{
	return json{{"order", s.order()}, {"generators", s.generators()}};
}

bool camina_pair(const GroupAnalysis& a, const Subgroup& n)
{
	return is_camina_conjugacy(a.group(), a.classes(), n).holds;
}

/// (host, inner) is a Camina pair, with host re-enumerated as a group.
bool camina_inside(const Subgroup& host, const Subgroup& inner)
{
	if (!inner.is_subset_of(host) || inner.is_trivial() || inner.order() == host.order())
		return false;
	const Embedding e = as_group(host);
	const Subgroup local = restrict_to(e, inner);
	return is_camina_conjugacy(e.group, local).holds;
}

/// host is a Frobenius group with kernel inner.
bool frobenius_inside(const Subgroup& host, const Subgroup& inner)
{
	if (!inner.is_subset_of(host) || inner.is_trivial() || inner.order() == host.order())
		return false;
	const Embedding e = as_group(host);
	const Subgroup local = restrict_to(e, inner);
	if (!is_normal(local))
		return false;
	return is_frobenius_with_kernel(e.group, local);
}

/// Normal p-complement: O_p'(G) when its index is a power of p.
std::optional<Subgroup> normal_p_complement(const GroupAnalysis& a, std::uint64_t p)
{
	Subgroup k = o_p_prime(a.group(), p, a.lattice());
	const std::size_t index = a.group().order() / k.order();
	if (index == 1 || is_p_group_for(index, p))
		return k;
	return std::nullopt;
}

struct RefinedCategories
{
	bool frobenius = false;
	bool type2 = false;
	bool type3 = false;
	bool type4 = false;
	std::optional<std::uint64_t> n_prime;
	std::optional<std::uint64_t> quotient_prime;
	std::optional<std::uint64_t> group_prime;
};

RefinedCategories refine(const GroupAnalysis& a, const Subgroup& n)
{
	const Group& g = a.group();
	RefinedCategories c;
	const std::size_t index = g.order() / n.order();
	c.frobenius = is_frobenius_with_kernel(g, n);
	c.n_prime = p_group_prime(n.order());
	c.quotient_prime = p_group_prime(index);
	c.group_prime = p_group_prime(g.order());
	c.type2 = c.group_prime.has_value();
	c.type3 = c.n_prime && divides(*c.n_prime, index) && !is_p_group_for(index, *c.n_prime);
	c.type4 = c.quotient_prime && divides(*c.quotient_prime, n.order()) && !is_p_group_for(n.order(), *c.quotient_prime);
	return c;
}

} // namespace

GroupAnalysis::GroupAnalysis(const Group& g, std::string label, const VerifyConfig& config)
	: _group(&g), _label(std::move(label)), _config(config), _classes(conjugacy_classes(g)),
	  _lattice(normal_subgroups(g, _classes, config.lattice_cap))
{
	_fitting = camina::fitting(g);
	try {
		_table = character_table(g, config.class_cap, config.tolerance);
	} catch (const Error& e) {
		if (e.kind() != ErrorKind::CapExceeded && e.kind() != ErrorKind::LiftFailure)
			throw;
		_table_error = e.what();
	}
}

std::vector<const Subgroup*> GroupAnalysis::proper_normal() const
{
	std::vector<const Subgroup*> out;
	for (const auto& s : _lattice.subgroups)
		if (!s.is_trivial() && !s.is_whole())
			out.push_back(&s);
	return out;
}

std::string GroupAnalysis::subgroup_label(const Subgroup& s) const
{
	if (auto k = _lattice.index_of(s))
		return "L" + std::to_string(*k);
	std::string out = "S";
	for (ElementId x : s.generators())
		out += "." + std::to_string(x);
	return out;
}

TheoremReport verify_theorem_1_1(const GroupAnalysis& a, const Subgroup& n)
{
	Stopwatch clock;
	TheoremReport r = open_report("1.1", a, &n);
	const Group& g = a.group();
	if (!camina_pair(a, n)) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "(G, N) is not a Camina pair");
	}
	const Subgroup& f = a.fitting();
	const std::size_t index = g.order() / n.order();
	const RefinedCategories c = refine(a, n);

	struct Clause
	{
		const char* name;
		bool left;
		bool right;
	};
	const Clause clauses[] = {
		{"N = F(G) iff Frobenius with kernel N", f == n, c.frobenius},
		{"N < F(G) iff N is a p-group with p | |G:N|", proper_subset(n, f),
		 c.n_prime && divides(*c.n_prime, index)},
		{"F(G) < N iff G/N is a p-group with p | |N|, G not a p-group", proper_subset(f, n),
		 c.quotient_prime && divides(*c.quotient_prime, n.order()) && !c.group_prime},
	};
	if (c.n_prime)
		r.primes.push_back(*c.n_prime);
	else if (c.quotient_prime)
		r.primes.push_back(*c.quotient_prime);

	r.details["fitting"] = subgroup_json(f);
	r.details["clauses"] = json::array();
	r.status = Status::Holds;
	for (const Clause& cl : clauses) {
		r.details["clauses"].push_back({{"clause", cl.name}, {"left", cl.left}, {"right", cl.right}});
		if (cl.left != cl.right && r.status == Status::Holds) {
			r.status = Status::Fails;
			r.reason = cl.name;
			r.witness = {{"clause", cl.name},	{"left", cl.left},	 {"right", cl.right},
						 {"fitting", subgroup_json(f)}, {"n", subgroup_json(n)}};
		}
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_trichotomies(const GroupAnalysis& a, const Subgroup& n)
{
	Stopwatch clock;
	TheoremReport r = open_report("trichotomy", a, &n);
	if (!camina_pair(a, n)) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "(G, N) is not a Camina pair");
	}
	const RefinedCategories c = refine(a, n);
	const bool coarse[] = {c.frobenius, c.n_prime.has_value(), c.quotient_prime.has_value()};
	const bool refined[] = {c.frobenius, c.type2, c.type3, c.type4};
	const int coarse_count = int(coarse[0]) + coarse[1] + coarse[2];
	const int refined_count = int(refined[0]) + refined[1] + refined[2] + refined[3];

	std::string verdict;
	try {
		verdict = std::string(to_string(classify_camina_type(a.group(), a.classes(), n).type));
	} catch (const std::logic_error& e) {
		verdict = std::string("error: ") + e.what();
	}
	std::string expected = "none";
	for (int k = 0; k < 4; ++k)
		if (refined[k] && refined_count == 1)
			expected = std::string(to_string(CaminaType(k + 1)));

	r.details = {{"coarse", {coarse[0], coarse[1], coarse[2]}},
				 {"refined", {refined[0], refined[1], refined[2], refined[3]}},
				 {"classification", verdict}};
	if (c.n_prime)
		r.primes.push_back(*c.n_prime);
	if (c.quotient_prime && (!c.n_prime || *c.quotient_prime != *c.n_prime))
		r.primes.push_back(*c.quotient_prime);

	if (coarse_count == 0) {
		r.status = Status::Fails;
		r.reason = "no coarse category holds";
	} else if (refined_count != 1) {
		r.status = Status::Fails;
		r.reason = "refined categories hold " + std::to_string(refined_count) + " times";
	} else if (verdict != expected) {
		r.status = Status::Fails;
		r.reason = "classification " + verdict + " differs from the refined category " + expected;
	} else {
		r.status = Status::Holds;
	}
	if (r.status == Status::Fails)
		r.witness = {{"n", subgroup_json(n)}, {"details", r.details}};
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_lemma_2_2(const GroupAnalysis& a, const Subgroup& n, std::uint64_t p)
{
	Stopwatch clock;
	TheoremReport r = open_report("2.2", a, &n);
	r.primes = {p};
	const Group& g = a.group();
	if (!is_normal(n) || n.is_trivial() || !is_p_group_for(n.order(), p)) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "N is not a nontrivial normal " + std::to_string(p) + "-subgroup");
	}

	const CaminaClassification cls = classify_camina_type(g, a.classes(), n);
	const bool left = cls.type == CaminaType::Type3 && cls.prime == p && cls.p_closed;

	const Subgroup P = sylow(g, p);
	const bool p_proper_normal = !P.is_whole() && is_normal(P);
	bool p_camina = false;
	bool frobenius = false;
	std::optional<SearchOutcome> hall_outcome;
	if (p_proper_normal) {
		p_camina = camina_inside(P, n);
		if (p_camina) {
			const SubgroupSearch hall = hall_p_complement(g, p, a.config().search_budget);
			hall_outcome = hall.outcome;
			if (hall.subgroup)
				frobenius = frobenius_inside(join(n, *hall.subgroup), n);
		}
	}
	const bool right = p_proper_normal && p_camina && frobenius;

	r.details = {{"left", left},
				 {"classification", to_string(cls.type)},
				 {"sylow", subgroup_json(P)},
				 {"sylow_proper_normal", p_proper_normal},
				 {"sylow_camina", p_camina},
				 {"nh_frobenius", frobenius}};
	if (hall_outcome)
		r.details["hall_search"] = *hall_outcome == SearchOutcome::Found		   ? "found"
								   : *hall_outcome == SearchOutcome::ProvedAbsent ? "absent"
																				   : "budget_exhausted";
	if (left == right) {
		r.status = Status::Holds;
	} else if (hall_outcome == SearchOutcome::BudgetExhausted) {
		not_applicable(r, "Hall p-complement search exhausted its budget");
	} else {
		r.status = Status::Fails;
		r.reason = left ? "Type 3 p-closed pair without the Sylow/Frobenius structure"
						: "Sylow/Frobenius structure without a Type 3 p-closed pair";
		r.witness = {{"n", subgroup_json(n)}, {"sylow", subgroup_json(P)}, {"left", left}, {"right", right}};
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_theorem_2_3(const GroupAnalysis& a, const Subgroup& n, std::uint64_t p)
{
	Stopwatch clock;
	TheoremReport r = open_report("2.3", a, &n);
	r.primes = {p};
	const Group& g = a.group();
	if (!is_normal(n) || n.is_trivial() || n.is_whole() || !divides(p, g.order())) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "needs 1 < N < G normal and p dividing |G|");
	}

	const CaminaClassification cls = classify_camina_type(g, a.classes(), n);
	const bool left = cls.type == CaminaType::Type4 && cls.prime == p;

	const Subgroup P = sylow(g, p);
	const Subgroup meet = intersection(P, n);
	const bool meet_proper = meet.order() < P.order();
	const bool triple = meet_proper && is_fw_triple(g, P, meet);
	const bool p_camina = camina_inside(P, meet);
	const std::optional<Subgroup> k = normal_p_complement(a, p);
	const bool k_inside = k && proper_subset(*k, n);
	const bool right = triple && p_camina && k_inside;

	r.details = {{"left", left},
				 {"classification", to_string(cls.type)},
				 {"sylow", subgroup_json(P)},
				 {"p_meet_n", subgroup_json(meet)},
				 {"fw_triple", triple},
				 {"p_meet_camina", p_camina},
				 {"normal_p_complement_inside_n", k_inside},
				 {"fw_disagreement", false}};
	if (k)
		r.details["normal_p_complement"] = subgroup_json(*k);

	// the coverage condition needs G = NP
	if ((left || right) && n.order() * P.order() / meet.order() == g.order()) {
		const bool coverage = fw_conjugacy_coverage(g, a.classes(), P, n);
		r.details["fw_coverage"] = coverage;
		if (coverage != triple)
			r.details["fw_disagreement"] = true;
	}

	if (left == right) {
		r.status = Status::Holds;
	} else {
		r.status = Status::Fails;
		r.reason = left ? "Type 4 pair without the FW / Camina / p-complement structure"
						: "FW / Camina / p-complement structure without a Type 4 pair";
		r.witness = {{"n", subgroup_json(n)}, {"sylow", subgroup_json(P)}, {"left", left}, {"right", right}};
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_lemma_3_3(const GroupAnalysis& a, const Subgroup& n)
{
	Stopwatch clock;
	TheoremReport r = open_report("3.3", a, &n);
	const Group& g = a.group();
	const CaminaClassification cls = classify_camina_type(g, a.classes(), n);
	if (cls.type != CaminaType::Type4) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "not a Type 4 Camina pair (" + std::string(to_string(cls.type)) + ")");
	}
	const std::uint64_t p = cls.prime;
	r.primes = {p};
	const Subgroup P = sylow(g, p);
	const Subgroup op = o_p(g, p);
	const Subgroup opp = o_p_prime(g, p, a.lattice());

	// C_P(O_p'(G)) as the intersection of the C_P(v)
	std::vector<char> mask(P.mask());
	for (ElementId v : opp.members())
		for (ElementId x : P.members())
			if (mask[x] && g.mul(x, v) != g.mul(v, x))
				mask[x] = 0;
	std::vector<ElementId> cp;
	for (ElementId x : P.members())
		if (mask[x])
			cp.push_back(x);
	const Subgroup centralizer = Subgroup::from_members(g, cp);
	const Subgroup meet = intersection(P, n);

	const bool equal = centralizer == op;
	const bool below = proper_subset(op, meet);
	r.details = {{"o_p", subgroup_json(op)},
				 {"o_p_prime", subgroup_json(opp)},
				 {"c_p_of_o_p_prime", subgroup_json(centralizer)},
				 {"p_meet_n", subgroup_json(meet)}};
	if (equal && below) {
		r.status = Status::Holds;
	} else {
		r.status = Status::Fails;
		r.reason = equal ? "O_p(G) is not properly inside P n N" : "O_p(G) differs from C_P(O_p'(G))";
		r.witness = r.details;
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_section_3(const GroupAnalysis& a, const Subgroup& n)
{
	Stopwatch clock;
	TheoremReport r = open_report("section3", a, &n);
	const Group& g = a.group();
	const CaminaClassification cls = classify_camina_type(g, a.classes(), n);
	const Subgroup& f = a.fitting();
	r.details = {{"classification", to_string(cls.type)}, {"fitting", subgroup_json(f)}};
	if (cls.type == CaminaType::Type3) {
		r.primes = {cls.prime};
		const Subgroup op = o_p(g, cls.prime);
		r.details["o_p"] = subgroup_json(op);
		const bool below = proper_subset(n, f);
		const bool equal = f == op;
		r.status = below && equal ? Status::Holds : Status::Fails;
		if (r.status == Status::Fails) {
			r.reason = below ? "F(G) differs from O_p(G)" : "N is not properly inside F(G)";
			r.witness = {{"n", subgroup_json(n)}, {"fitting", subgroup_json(f)}, {"o_p", subgroup_json(op)}};
		}
	} else if (cls.type == CaminaType::Type4) {
		r.primes = {cls.prime};
		r.status = proper_subset(f, n) ? Status::Holds : Status::Fails;
		if (r.status == Status::Fails) {
			r.reason = "F(G) is not properly inside N";
			r.witness = {{"n", subgroup_json(n)}, {"fitting", subgroup_json(f)}};
		}
	} else {
		not_applicable(r, "not a Type 3 or Type 4 Camina pair (" + std::string(to_string(cls.type)) + ")");
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_cross_properties(const GroupAnalysis& a, const Subgroup& n)
{
	Stopwatch clock;
	TheoremReport r = open_report("cross", a, &n);
	const Group& g = a.group();
	if (!is_normal(n) || n.is_trivial() || n.is_whole()) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "N is not a proper nontrivial normal subgroup");
	}
	const CaminaCheck conj = is_camina_conjugacy(g, a.classes(), n);
	const bool cent = is_camina_centralizer(g, n);
	std::optional<bool> chars;
	if (a.table())
		chars = is_camina_character(g, n, *a.table(), a.config().tolerance);

	r.details = {{"conjugacy", conj.holds}, {"centralizer", cent}};
	if (chars)
		r.details["character"] = *chars;
	else
		r.details["character"] = "skipped: " + a.table_error();

	std::vector<std::string> failures;
	json witness = json::object();
	if (conj.holds != cent || (chars && *chars != conj.holds)) {
		failures.push_back("Camina criteria disagree");
		if (conj.witness)
			witness["coset"] = {{"x", conj.witness->x}, {"n", conj.witness->n}};
	}
	if (conj.holds) {
		const bool waist = is_waist(g, n, a.lattice());
		const EqualOrderCheck eq = is_equal_order_pair(g, n);
		r.details["waist"] = waist;
		r.details["equal_order"] = eq.holds;
		if (!waist)
			failures.push_back("Camina pair that is not a waist");
		if (!eq.holds) {
			failures.push_back("Camina pair that is not an equal order pair");
			witness["coset"] = {{"x", eq.witness->first}, {"y", eq.witness->second}};
		}
		const SubgroupSearch comp = find_complement(n, a.config().search_budget);
		const CaminaClassification cls = classify_camina_type(g, a.classes(), n);
		switch (comp.outcome) {
		case SearchOutcome::Found:
			r.details["complement"] = subgroup_json(*comp.subgroup);
			if (cls.type != CaminaType::Type1) {
				failures.push_back("complemented Camina pair that is not of Type 1");
				witness["complement"] = subgroup_json(*comp.subgroup);
			}
			break;
		case SearchOutcome::ProvedAbsent: r.details["complement"] = "none"; break;
		case SearchOutcome::BudgetExhausted: r.details["complement"] = "unknown"; break;
		}
	}
	if (failures.empty()) {
		r.status = Status::Holds;
	} else {
		r.status = Status::Fails;
		r.reason = failures.front();
		witness["n"] = subgroup_json(n);
		witness["failures"] = failures;
		r.witness = witness;
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_character_table(const GroupAnalysis& a)
{
	Stopwatch clock;
	TheoremReport r = open_report("characters", a, nullptr);
	const CharacterTable* t = a.table();
	if (!t) {
		r.elapsed_seconds = clock.seconds();
		return not_applicable(r, "character table skipped: " + a.table_error());
	}
	const double tol = a.config().tolerance;
	std::vector<std::string> failures;

	std::uint64_t squares = 0;
	for (std::uint64_t d : t->degrees)
		squares += d * d;
	if (squares != a.group().order())
		failures.push_back("sum of squared degrees differs from |G|");
	if (t->size() != a.classes().size())
		failures.push_back("number of irreducibles differs from the number of classes");
	const OrthogonalityResiduals res = orthogonality_residuals(*t);
	if (!(res.row < tol && res.column < tol && res.identity_column < tol))
		failures.push_back("orthogonality residual above tolerance");
	r.details = {{"classes", t->size()},
				 {"degrees", t->degrees},
				 {"prime", t->prime},
				 {"residuals", {{"row", res.row}, {"column", res.column}, {"identity_column", res.identity_column}}}};

	json quotients = json::array();
	for (const Subgroup* n : a.proper_normal()) {
		const Quotient q = quotient(*n);
		CharacterTable qt;
		try {
			qt = character_table(q.group, a.config().class_cap, tol);
		} catch (const Error& e) {
			if (e.kind() != ErrorKind::CapExceeded)
				throw;
			continue;
		}
		// the characters of G with N in the kernel, read on the quotient's classes
		std::vector<std::vector<std::complex<double>>> lifted;
		for (std::size_t chi = 0; chi < t->size(); ++chi) {
			const auto& kernel = t->kernels[chi];
			if (!std::includes(kernel.begin(), kernel.end(), n->members().begin(), n->members().end()))
				continue;
			std::vector<std::complex<double>> row;
			for (ElementId rep : qt.classes.representatives)
				row.push_back(t->values[chi][t->classes.class_of[q.representatives[rep]]]);
			lifted.push_back(std::move(row));
		}
		bool matched = lifted.size() == qt.size();
		std::vector<char> used(qt.size(), 0);
		for (const auto& row : lifted) {
			if (!matched)
				break;
			bool found = false;
			for (std::size_t k = 0; k < qt.size() && !found; ++k) {
				if (used[k])
					continue;
				double worst = 0;
				for (std::size_t c = 0; c < row.size(); ++c)
					worst = std::max(worst, std::abs(row[c] - qt.values[k][c]));
				if (worst < tol) {
					used[k] = 1;
					found = true;
				}
			}
			matched = found;
		}
		quotients.push_back({{"subgroup", a.subgroup_label(*n)}, {"quotient_order", q.group.order()},
							 {"reproduced", matched}});
		if (!matched)
			failures.push_back("characters over " + a.subgroup_label(*n) + " miss the quotient's table");
	}
	r.details["quotients"] = quotients;

	if (failures.empty()) {
		r.status = Status::Holds;
	} else {
		r.status = Status::Fails;
		r.reason = failures.front();
		r.witness = {{"failures", failures}};
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

TheoremReport verify_lemma_3_1_instance(const VerifyConfig& config)
{
	Stopwatch clock;
	TheoremReport r;
	r.theorem_id = "3.1";
	r.group = "affine_sl2(4)";
	r.subgroup = "translations";
	r.primes = {2};

	const Group g = construct(Family::AffineSL2, {4});
	const std::vector<ElementId> translations = affine_translations(g);
	const Subgroup n = Subgroup::generated(g, translations);
	const Subgroup cgn = centralizer_of(n);
	const Quotient q = quotient(n);
	const Subgroup qwhole = Subgroup::whole(q.group);
	const Subgroup derived = commutator_subgroup(qwhole, qwhole);
	const Embedding de = as_group(derived);
	const NormalLattice dl = normal_subgroups(de.group, config.lattice_cap);
	const bool simple = dl.size() == 2;
	const EqualOrderCheck eq = is_equal_order_pair(g, n);

	// an involution of the stabilizer of the origin, smallest id first
	std::optional<ElementId> involution;
	for (ElementId x = 1; x < g.order() && !involution; ++x)
		if (g.element(x)[0] == 0 && g.element_order(x) == 2)
			involution = x;

	std::map<std::size_t, std::size_t> orders;
	if (involution)
		for (ElementId m : n.members())
			++orders[g.element_order(g.mul(*involution, m))];
	const bool only_2_and_4 = !orders.empty() && std::all_of(orders.begin(), orders.end(), [](const auto& kv) {
		return kv.first == 2 || kv.first == 4;
	});
	const bool mixed = orders.count(2) && orders.count(4);

	json order_counts = json::object();
	for (const auto& [o, k] : orders)
		order_counts[std::to_string(o)] = k;
	r.details = {{"order", g.order()},
				 {"degree", g.degree()},
				 {"n_order", n.order()},
				 {"centralizer_order", cgn.order()},
				 {"quotient_order", q.group.order()},
				 {"derived_quotient_order", derived.order()},
				 {"derived_quotient_simple", simple},
				 {"equal_order_pair", eq.holds},
				 {"coset_orders", order_counts}};
	if (involution)
		r.details["involution"] = *involution;

	std::vector<std::string> failures;
	if (g.order() != 960 || g.degree() != 16)
		failures.push_back("affine_sl2(4) does not have order 960 on 16 points");
	if (n.order() != 16 || !(cgn == n))
		failures.push_back("C_G(N) differs from N");
	if (q.group.order() != 60 || derived.order() != 60 || !simple)
		failures.push_back("G/N is not a perfect group of order 60 with simple derived group");
	if (eq.holds)
		failures.push_back("(G, N) is an equal order pair");
	if (!involution || !mixed || !only_2_and_4)
		failures.push_back("the involution coset does not mix orders 2 and 4");
	if (failures.empty()) {
		r.status = Status::Holds;
	} else {
		r.status = Status::Fails;
		r.reason = failures.front();
		r.witness = {{"failures", failures}, {"details", r.details}};
	}
	r.elapsed_seconds = clock.seconds();
	return r;
}

std::vector<TheoremReport> verify_pair(const GroupAnalysis& a, const Subgroup& n)
{
	std::vector<TheoremReport> out;
	const bool camina = camina_pair(a, n);
	if (camina) {
		out.push_back(verify_theorem_1_1(a, n));
		out.push_back(verify_trichotomies(a, n));
		out.push_back(verify_lemma_3_3(a, n));
		out.push_back(verify_section_3(a, n));
	}
	out.push_back(verify_cross_properties(a, n));
	if (auto p = p_group_prime(n.order()))
		out.push_back(verify_lemma_2_2(a, n, *p));
	for (std::uint64_t p : prime_divisors(a.group().order()))
		out.push_back(verify_theorem_2_3(a, n, p));
	return out;
}

const std::vector<std::string>& theorem_ids()
{
	static const std::vector<std::string> ids{"1.1", "trichotomy", "2.2", "2.3", "3.1", "3.3", "section3", "cross"};
	return ids;
}

std::optional<std::vector<TheoremReport>> verify_by_id(std::string_view id, const GroupAnalysis& a,
														const Subgroup& n)
{
	std::vector<TheoremReport> out;
	if (id == "1.1")
		out.push_back(verify_theorem_1_1(a, n));
	else if (id == "trichotomy")
		out.push_back(verify_trichotomies(a, n));
	else if (id == "3.3")
		out.push_back(verify_lemma_3_3(a, n));
	else if (id == "section3")
		out.push_back(verify_section_3(a, n));
	else if (id == "cross")
		out.push_back(verify_cross_properties(a, n));
	else if (id == "2.2") {
		if (auto p = p_group_prime(n.order()))
			out.push_back(verify_lemma_2_2(a, n, *p));
		else
			for (std::uint64_t p : prime_divisors(n.order()))
				out.push_back(verify_lemma_2_2(a, n, p));
	} else if (id == "2.3") {
		for (std::uint64_t p : prime_divisors(a.group().order()))
			out.push_back(verify_theorem_2_3(a, n, p));
	} else {
		return std::nullopt;
	}
	return out;
}

std::size_t CorpusScan::count(Status s) const
{
	return std::size_t(std::count_if(theorem_reports.begin(), theorem_reports.end(),
									 [s](const TheoremReport& r) { return r.status == s; }));
}

bool CorpusScan::cap_exceeded() const
{
	return std::any_of(groups.begin(), groups.end(),
					   [](const GroupRecord& g) { return g.error_kind == ErrorKind::CapExceeded; });
}

namespace {

struct GroupScan
{
	GroupRecord record;
	std::size_t pairs = 0;
	std::vector<CaminaPairRecord> camina_pairs;
	std::vector<TheoremReport> reports;
	std::vector<Anomaly> anomalies;
};

GroupScan scan_group(const CorpusEntry& entry, const VerifyConfig& config)
{
	GroupScan out;
	out.record.label = entry.label;
	if (!entry.group) {
		out.record.error = entry.error;
		out.record.error_kind = entry.error_kind;
		return out;
	}
	const Group& g = *entry.group;
	out.record.order = g.order();
	out.record.degree = g.degree();
	try {
		const GroupAnalysis a(g, entry.label, config);
		out.record.normal_subgroups = a.lattice().size();
		if (!a.table())
			out.record.notes.push_back("character table skipped: " + a.table_error());
		out.reports.push_back(verify_character_table(a));

		for (const Subgroup* n : a.proper_normal()) {
			++out.pairs;
			const std::string label = a.subgroup_label(*n);
			const CaminaClassification cls = classify_camina_type(g, a.classes(), *n);
			if (cls.type != CaminaType::NotCamina) {
				out.camina_pairs.push_back({entry.label, label, n->order(), cls});
				if (cls.type == CaminaType::Type3 && !cls.p_closed) {
					const Subgroup P = sylow(g, cls.prime);
					out.anomalies.push_back({"type3_not_p_closed", entry.label, label,
											 {{"prime", cls.prime}, {"sylow_camina", camina_inside(P, *n)}}});
				}
			}
			for (TheoremReport& r : verify_pair(a, *n)) {
				if (r.details.is_object() && r.details.value("fw_disagreement", false))
					out.anomalies.push_back({"fw_definition_disagreement", entry.label, label,
											 {{"prime", r.primes}, {"details", r.details}}});
				if (r.theorem_id == "cross" && r.details.value("complement", json()) == "unknown")
					out.anomalies.push_back({"complement_search_inconclusive", entry.label, label, json::object()});
				out.reports.push_back(std::move(r));
			}
		}
	} catch (const Error& e) {
		out.record.error = e.what();
		out.record.error_kind = e.kind();
	} catch (const std::exception& e) {
		out.record.error = e.what();
	}
	return out;
}

} // namespace

CorpusScan scan_corpus(const std::vector<CorpusEntry>& corpus, const VerifyConfig& config)
{
	CorpusScan scan;
	if (corpus.empty())
		return scan;

	std::vector<GroupScan> results(corpus.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i = next++; i < corpus.size(); i = next++)
			results[i] = scan_group(corpus[i], config);
	};
	unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
	threads = unsigned(std::min<std::size_t>(threads, corpus.size()));
	if (threads <= 1) {
		worker();
	} else {
		std::vector<std::thread> pool;
		for (unsigned t = 0; t < threads; ++t)
			pool.emplace_back(worker);
		for (auto& t : pool)
			t.join();
	}

	for (GroupScan& r : results) {
		scan.groups.push_back(std::move(r.record));
		scan.pairs_examined += r.pairs;
		std::move(r.camina_pairs.begin(), r.camina_pairs.end(), std::back_inserter(scan.camina_pairs));
		std::move(r.reports.begin(), r.reports.end(), std::back_inserter(scan.theorem_reports));
		std::move(r.anomalies.begin(), r.anomalies.end(), std::back_inserter(scan.anomalies));
	}
	scan.theorem_reports.push_back(verify_lemma_3_1_instance(config));
	return scan;
}

} // namespace camina
