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

#include "camina/camina.hpp"
#include "camina/characters.hpp"
#include "camina/corpus.hpp"
#include "camina/error.hpp"
#include "camina/group_io.hpp"
#include "camina/report.hpp"
#include "camina/structure.hpp"
#include "camina/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace camina;
using json = nlohmann::json;

namespace {

enum Exit
{
	kOk = 0,
	kFailures = 1,
	kInputError = 2,
	kCapExceeded = 3,
};

struct Options
{
	std::size_t cap = kDefaultElementCap;
	std::size_t class_cap = kDefaultClassCap;
	std::size_t lattice_cap = kDefaultLatticeCap;
	std::size_t budget = kDefaultSearchBudget;
	double tolerance = kDefaultTolerance;
	std::string format;
	bool strict = false;
	bool zero_timings = false;
	unsigned threads = 0;
	std::string out;

	VerifyConfig verify() const
	{
		VerifyConfig c;
		c.lattice_cap = lattice_cap;
		c.class_cap = class_cap;
		c.search_budget = budget;
		c.tolerance = tolerance;
		c.threads = threads;
		return c;
	}

	std::string format_or(const char* fallback) const { return format.empty() ? fallback : format; }
};

int exit_for(const Error& e)
{
	std::cerr << "camina: " << e.what() << "\n";
	return e.kind() == ErrorKind::CapExceeded ? kCapExceeded : kInputError;
}

void emit(const Options& opt, const std::string& text)
{
	if (opt.out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream file(opt.out, std::ios::binary);
	if (!file)
		throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.out);
	file << text;
}

std::string dump(const Options& opt, json doc)
{
	if (opt.zero_timings)
		zero_timings(doc);
	return doc.dump(2) + "\n";
}

/// "all" or a ';'-separated generator list in the group's cycle notation.
std::vector<Subgroup> select_subgroups(const GroupAnalysis& a, const std::string& selector)
{
	std::vector<Subgroup> out;
	if (selector == "all") {
		for (const Subgroup* s : a.proper_normal())
			out.push_back(*s);
		return out;
	}
	const Group& g = a.group();
	std::vector<ElementId> ids;
	for (const Permutation& p : parse_generator_list(selector, g.degree())) {
		auto id = g.find(p);
		if (!id)
			throw Error(ErrorKind::InvalidArgument, "selector generator " + p.to_cycle_string(true) + " is not in the group");
		ids.push_back(*id);
	}
	Subgroup s = Subgroup::generated(g, ids);
	require_proper_normal(g, s);
	out.push_back(std::move(s));
	return out;
}

int cmd_classify(const Options& opt, const std::string& source, const std::string& selector)
{
	const Group g = load_group_source(source, opt.cap);
	const GroupAnalysis a(g, source, opt.verify());
	const std::vector<Subgroup> subgroups = select_subgroups(a, selector);

	const std::string format = opt.format_or("json");
	json pairs = json::array();
	std::string csv = "group,subgroup,order,type,prime,p_closed\n";
	std::string text;
	for (const Subgroup& n : subgroups) {
		const CaminaClassification c = classify_camina_type(g, a.classes(), n);
		const std::string label = a.subgroup_label(n);
		pairs.push_back({{"subgroup", label},
						 {"order", n.order()},
						 {"generators", n.generators()},
						 {"classification", to_json(c)}});
		csv += source + "," + label + "," + std::to_string(n.order()) + "," + std::string(to_string(c.type)) + "," +
			   std::to_string(c.prime) + "," + (c.type == CaminaType::Type3 ? (c.p_closed ? "true" : "false") : "") +
			   "\n";
		text += label + " (order " + std::to_string(n.order()) + "): " + std::string(to_string(c.type));
		if (c.prime)
			text += " p=" + std::to_string(c.prime);
		if (c.type == CaminaType::Type3)
			text += c.p_closed ? " p-closed" : " not p-closed";
		text += "\n";
	}
	if (format == "csv")
		emit(opt, csv);
	else if (format == "text")
		emit(opt, text);
	else
		emit(opt, dump(opt, {{"schema", kReportSchema}, {"group", source}, {"order", g.order()}, {"pairs", pairs}}));
	return kOk;
}

std::vector<CorpusEntry> load_sources(const Options& opt, std::vector<std::string> sources)
{
	if (sources.empty()) {
		const char* env = std::getenv("CAMINA_CORPUS");
		sources.push_back(env && *env ? env : "builtin");
	}
	std::vector<CorpusEntry> corpus;
	for (const std::string& s : sources) {
		auto part = load_corpus_source(s, opt.cap);
		std::move(part.begin(), part.end(), std::back_inserter(corpus));
	}
	return corpus;
}

int cmd_scan(const Options& opt, const std::vector<std::string>& sources)
{
	const std::vector<CorpusEntry> corpus = load_sources(opt, sources);
	const CorpusScan scan = scan_corpus(corpus, opt.verify());

	const std::string format = opt.format_or("json");
	if (format == "csv")
		emit(opt, reports_to_csv(scan.theorem_reports));
	else if (format == "text")
		emit(opt, to_text(scan));
	else
		emit(opt, dump(opt, to_json(scan)));

	bool input_error = false;
	for (const GroupRecord& g : scan.groups) {
		if (g.error.empty())
			continue;
		std::cerr << "camina: " << g.label << ": " << g.error << "\n";
		input_error |= g.error_kind != ErrorKind::CapExceeded;
	}
	if (opt.strict && scan.cap_exceeded())
		return kCapExceeded;
	if (scan.count(Status::Fails))
		return kFailures;
	return input_error ? kInputError : kOk;
}

int cmd_verify(const Options& opt, const std::string& id, const std::vector<std::string>& sources,
			   const std::string& selector)
{
	const auto& ids = theorem_ids();
	if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
		std::cerr << "camina: unknown theorem id '" << id << "'\n";
		return kInputError;
	}

	std::vector<TheoremReport> reports;
	bool cap_hit = false;
	if (id == "3.1") {
		reports.push_back(verify_lemma_3_1_instance(opt.verify()));
	} else {
		for (const CorpusEntry& e : load_sources(opt, sources)) {
			if (!e.group) {
				std::cerr << "camina: " << e.label << ": " << e.error << "\n";
				if (e.error_kind != ErrorKind::CapExceeded)
					return kInputError;
				cap_hit = true;
				continue;
			}
			try {
				const GroupAnalysis a(*e.group, e.label, opt.verify());
				for (const Subgroup& n : select_subgroups(a, selector)) {
					auto part = verify_by_id(id, a, n);
					std::move(part->begin(), part->end(), std::back_inserter(reports));
				}
			} catch (const Error& err) {
				if (err.kind() != ErrorKind::CapExceeded)
					throw;
				std::cerr << "camina: " << e.label << ": " << err.what() << "\n";
				cap_hit = true;
			}
		}
	}

	const std::string format = opt.format_or("json");
	if (format == "csv")
		emit(opt, reports_to_csv(reports));
	else if (format == "text")
		emit(opt, reports_to_text(reports));
	else
		emit(opt, dump(opt, reports_to_json(reports)));

	if (opt.strict && cap_hit)
		return kCapExceeded;
	for (const TheoremReport& r : reports)
		if (r.status == Status::Fails)
			return kFailures;
	return kOk;
}

int cmd_chartab(const Options& opt, const std::string& source)
{
	const Group g = load_group_source(source, opt.cap);
	const CharacterTable t = character_table(g, opt.class_cap, opt.tolerance);
	if (opt.format_or("csv") == "json")
		emit(opt, dump(opt, to_json(t)));
	else
		emit(opt, to_csv(t));
	return kOk;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Camina pairs: classification and theorem checks over finite groups"};
	app.require_subcommand(1);
	Options opt;
	app.add_option("--cap", opt.cap, "element cap for group enumeration")
		->check(CLI::Range(std::size_t(1), kMaxTableOrder));
	app.add_option("--class-cap", opt.class_cap, "conjugacy class cap for character tables")->check(CLI::PositiveNumber);
	app.add_option("--lattice-cap", opt.lattice_cap, "normal subgroup cap")->check(CLI::PositiveNumber);
	app.add_option("--budget", opt.budget, "node budget for subgroup searches")->check(CLI::PositiveNumber);
	app.add_option("--tol", opt.tolerance, "numeric tolerance, in (0, 1e-2)");
	app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
	app.add_flag("--strict", opt.strict, "exit 3 when any group exceeds a cap");
	app.add_flag("--zero-timings", opt.zero_timings, "write zero for every elapsed time");
	app.add_option("--threads", opt.threads, "scan worker threads (0 = all cores)");
	app.add_option("--out", opt.out, "write output to a file");

	std::string group;
	std::string selector = "all";
	auto* classify = app.add_subcommand("classify", "classify normal subgroups of a group");
	classify->add_option("group", group, "group file or expression")->required();
	classify->add_option("selector", selector, "\"all\" or generators \"(1 2 3);(1 2)\"");

	std::vector<std::string> sources;
	auto* scan = app.add_subcommand("scan", "run every check over a corpus");
	scan->add_option("sources", sources, "\"builtin\", directories, manifests, group files or expressions");

	std::string theorem;
	auto* verify = app.add_subcommand("verify", "run one check");
	verify->add_option("theorem", theorem, "1.1, trichotomy, 2.2, 2.3, 3.1, 3.3, section3 or cross")->required();
	std::string verify_source;
	verify->add_option("source", verify_source, "corpus source or group (default: builtin)");
	verify->add_option("selector", selector, "\"all\" or generators");

	auto* chartab = app.add_subcommand("chartab", "character table as CSV");
	chartab->add_option("group", group, "group file or expression")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? kOk : kInputError;
	}
	if (!(opt.tolerance > 0 && opt.tolerance < 1e-2)) {
		std::cerr << "camina: --tol must lie in (0, 1e-2)\n";
		return kInputError;
	}

	try {
		if (*classify)
			return cmd_classify(opt, group, selector);
		if (*scan)
			return cmd_scan(opt, sources);
		if (*verify) {
			std::vector<std::string> v;
			if (!verify_source.empty())
				v.push_back(verify_source);
			return cmd_verify(opt, theorem, v, selector);
		}
		if (*chartab)
			return cmd_chartab(opt, group);
	} catch (const Error& e) {
		return exit_for(e);
	} catch (const std::exception& e) {
		std::cerr << "camina: internal error: " << e.what() << "\n";
		return kFailures;
	}
	return kOk;
}
