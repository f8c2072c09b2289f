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

#include "camina/report.hpp"

#include <cstdio>
#include <sstream>

namespace camina {

using json = nlohmann::json;

namespace {

std::string complex_string(std::complex<double> z)
{
	auto snap = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
	char buf[80];
	std::snprintf(buf, sizeof buf, "%.9g%+.9gi", snap(z.real()), snap(z.imag()));
	return buf;
}

std::string csv_field(const std::string& s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

std::string join_primes(const std::vector<std::uint64_t>& primes, char sep)
{
	std::string out;
	for (std::size_t i = 0; i < primes.size(); ++i) {
		if (i)
			out += sep;
		out += std::to_string(primes[i]);
	}
	return out;
}

} // namespace

json to_json(const CaminaClassification& c)
{
	json j = {{"type", to_string(c.type)}};
	if (c.type == CaminaType::NotCamina) {
		if (c.failing)
			j["witness"] = {{"x", c.failing->x}, {"n", c.failing->n}};
		return j;
	}
	if (c.prime)
		j["prime"] = c.prime;
	if (c.type == CaminaType::Type3) {
		j["p_closed"] = c.p_closed;
		j["sylow_order"] = c.sylow_order;
	}
	return j;
}

json to_json(const TheoremReport& r)
{
	json j = {{"theorem", r.theorem_id},
			  {"group", r.group},
			  {"subgroup", r.subgroup},
			  {"primes", r.primes},
			  {"status", to_string(r.status)},
			  {"elapsed_seconds", r.elapsed_seconds},
			  {"details", r.details.is_null() ? json::object() : r.details}};
	if (!r.reason.empty())
		j["reason"] = r.reason;
	if (r.status == Status::Fails)
		j["witness"] = r.witness;
	return j;
}

json to_json(const CorpusScan& scan)
{
	json groups = json::array();
	for (const GroupRecord& g : scan.groups) {
		json j = {{"label", g.label}, {"order", g.order}, {"degree", g.degree}, {"normal_subgroups", g.normal_subgroups}};
		if (!g.error.empty()) {
			j["error"] = g.error;
			if (g.error_kind)
				j["error_kind"] = to_string(*g.error_kind);
		}
		if (!g.notes.empty())
			j["notes"] = g.notes;
		groups.push_back(std::move(j));
	}
	json pairs = json::array();
	for (const CaminaPairRecord& p : scan.camina_pairs)
		pairs.push_back({{"group", p.group},
						 {"subgroup", p.subgroup},
						 {"subgroup_order", p.subgroup_order},
						 {"classification", to_json(p.classification)}});
	json reports = json::array();
	for (const TheoremReport& r : scan.theorem_reports)
		reports.push_back(to_json(r));
	json anomalies = json::array();
	for (const Anomaly& a : scan.anomalies)
		anomalies.push_back({{"kind", a.kind}, {"group", a.group}, {"subgroup", a.subgroup}, {"detail", a.detail}});

	return {{"schema", kReportSchema},
			{"groups", groups},
			{"pairs_examined", scan.pairs_examined},
			{"camina_pairs", pairs},
			{"theorem_reports", reports},
			{"anomalies", anomalies},
			{"summary",
			 {{"holds", scan.count(Status::Holds)},
			  {"fails", scan.count(Status::Fails)},
			  {"not_applicable", scan.count(Status::NotApplicable)}}}};
}

json reports_to_json(const std::vector<TheoremReport>& reports)
{
	json list = json::array();
	std::size_t fails = 0;
	for (const TheoremReport& r : reports) {
		list.push_back(to_json(r));
		fails += r.status == Status::Fails;
	}
	return {{"schema", kReportSchema}, {"theorem_reports", list}, {"fails", fails}};
}

json to_json(const CharacterTable& t)
{
	json classes = json::array();
	for (std::size_t c = 0; c < t.classes.size(); ++c)
		classes.push_back({{"representative", t.classes.representatives[c]}, {"size", t.class_size(c)}});
	json values = json::array();
	for (const auto& row : t.values) {
		json r = json::array();
		for (auto z : row)
			r.push_back(complex_string(z));
		values.push_back(std::move(r));
	}
	return {{"schema", kReportSchema},
			{"group_order", t.group_order},
			{"prime", t.prime},
			{"classes", classes},
			{"degrees", t.degrees},
			{"values", values}};
}

void zero_timings(json& doc)
{
	if (doc.is_object()) {
		for (auto it = doc.begin(); it != doc.end(); ++it) {
			if (it.key() == "elapsed_seconds")
				it.value() = 0;
			else
				zero_timings(it.value());
		}
	} else if (doc.is_array()) {
		for (auto& item : doc)
			zero_timings(item);
	}
}

std::string reports_to_csv(const std::vector<TheoremReport>& reports)
{
	std::string out = "theorem,group,subgroup,primes,status,reason\n";
	for (const TheoremReport& r : reports)
		out += csv_field(r.theorem_id) + "," + csv_field(r.group) + "," + csv_field(r.subgroup) + "," +
			   join_primes(r.primes, ' ') + "," + std::string(to_string(r.status)) + "," + csv_field(r.reason) + "\n";
	return out;
}

std::string reports_to_text(const std::vector<TheoremReport>& reports)
{
	std::ostringstream out;
	for (const TheoremReport& r : reports) {
		out << r.theorem_id << "  " << r.group;
		if (!r.subgroup.empty())
			out << " / " << r.subgroup;
		if (!r.primes.empty())
			out << "  p=" << join_primes(r.primes, ',');
		out << "  " << to_string(r.status);
		if (!r.reason.empty())
			out << "  (" << r.reason << ")";
		out << "\n";
		if (r.status == Status::Fails)
			out << "    witness: " << r.witness.dump() << "\n";
	}
	return out.str();
}

std::string to_text(const CorpusScan& scan)
{
	std::ostringstream out;
	out << "groups: " << scan.groups.size() << "\n";
	for (const GroupRecord& g : scan.groups) {
		out << "  " << g.label << "  order " << g.order;
		if (!g.error.empty())
			out << "  error: " << g.error;
		out << "\n";
	}
	out << "pairs examined: " << scan.pairs_examined << "\n";
	out << "camina pairs: " << scan.camina_pairs.size() << "\n";
	for (const CaminaPairRecord& p : scan.camina_pairs) {
		out << "  " << p.group << " / " << p.subgroup << " (order " << p.subgroup_order << ")  "
			<< to_string(p.classification.type);
		if (p.classification.prime)
			out << " p=" << p.classification.prime;
		out << "\n";
	}
	out << "reports: " << scan.count(Status::Holds) << " holds, " << scan.count(Status::Fails) << " fails, "
		<< scan.count(Status::NotApplicable) << " not applicable\n";
	for (const TheoremReport& r : scan.theorem_reports)
		if (r.status == Status::Fails)
			out << "  FAIL " << reports_to_text({r});
	out << "anomalies: " << scan.anomalies.size() << "\n";
	for (const Anomaly& a : scan.anomalies)
		out << "  " << a.kind << "  " << a.group << " / " << a.subgroup << "\n";
	return out.str();
}

} // namespace camina
