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

#include "camina/group_io.hpp"

#include "camina/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace camina {

namespace {

[[noreturn]] void parse_error(const std::string& what)
{
	throw Error(ErrorKind::ParseError, what);
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

std::string_view strip_comment(std::string_view line)
{
	const auto hash = line.find('#');
	return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::uint64_t parse_number(std::string_view token, const std::string& context)
{
	std::uint64_t v = 0;
	auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
	if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
		parse_error("expected a number in " + context + ", got '" + std::string(token) + "'");
	return v;
}

// Meaningful lines with comments removed.
std::vector<std::string_view> content_lines(std::string_view text)
{
	std::vector<std::string_view> out;
	while (!text.empty()) {
		const auto nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		line = strip_comment(line);
		if (!line.empty())
			out.push_back(line);
	}
	return out;
}

std::pair<std::string_view, std::string_view> split_keyword(std::string_view line)
{
	std::size_t i = 0;
	while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
		++i;
	return {line.substr(0, i), trim(line.substr(i))};
}

Group load_cayley(const std::vector<std::string_view>& lines, std::size_t cap)
{
	const auto [kw, rest] = split_keyword(lines.front());
	const std::uint64_t n = parse_number(rest, "cayley header");
	if (n == 0)
		parse_error("cayley table of size 0");
	if (n > cap)
		throw Error(ErrorKind::CapExceeded, "table of order " + std::to_string(n) + " exceeds cap");
	if (lines.size() != n + 1)
		parse_error("expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 1));
	std::vector<ElementId> table;
	table.reserve(n * n);
	for (std::size_t r = 1; r <= n; ++r) {
		std::istringstream row{std::string(lines[r])};
		std::string tok;
		std::size_t count = 0;
		while (row >> tok) {
			table.push_back(static_cast<ElementId>(parse_number(tok, "row " + std::to_string(r - 1))));
			++count;
		}
		if (count != n)
			parse_error("row " + std::to_string(r - 1) + " has " + std::to_string(count) + " entries");
	}
	return from_cayley_table(n, table);
}

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
	std::vector<std::vector<Point>> cycles;
	std::size_t i = 0;
	auto skip_space = [&] {
		while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
			++i;
	};
	skip_space();
	if (i == text.size())
		parse_error("empty cycle string");
	while (i < text.size()) {
		if (text[i] != '(')
			parse_error("expected '(' in '" + std::string(text) + "'");
		++i;
		std::vector<Point> cycle;
		while (true) {
			skip_space();
			if (i == text.size())
				parse_error("unterminated cycle in '" + std::string(text) + "'");
			if (text[i] == ')') {
				++i;
				break;
			}
			std::size_t j = i;
			while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
				++j;
			const std::uint64_t pt = parse_number(text.substr(i, j - i), "cycle '" + std::string(text) + "'");
			if (pt < 1 || pt > degree)
				parse_error("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
			cycle.push_back(static_cast<Point>(pt - 1));
			i = j;
		}
		if (!cycle.empty())
			cycles.push_back(std::move(cycle));
		skip_space();
	}
	try {
		return Permutation::from_cycles(degree, cycles);
	} catch (const Error& e) {
		parse_error(std::string(e.what()) + " in '" + std::string(text) + "'");
	}
}

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree)
{
	std::vector<Permutation> out;
	while (true) {
		const auto semi = text.find(';');
		const auto piece = trim(text.substr(0, semi));
		if (!piece.empty())
			out.push_back(parse_cycles(piece, degree));
		if (semi == std::string_view::npos)
			break;
		text = text.substr(semi + 1);
	}
	if (out.empty())
		parse_error("empty generator list");
	return out;
}

GroupFileSpec parse_generator_file(std::string_view text)
{
	const auto lines = content_lines(text);
	if (lines.empty())
		parse_error("empty group file");
	GroupFileSpec spec;
	const auto [kw, rest] = split_keyword(lines.front());
	if (kw != "degree")
		parse_error("first line must be 'degree <d>'");
	spec.degree = parse_number(rest, "degree line");
	if (spec.degree == 0)
		parse_error("degree must be at least 1");
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const auto [k, body] = split_keyword(lines[i]);
		if (k != "gen")
			parse_error("unexpected line '" + std::string(lines[i]) + "'");
		if (body.empty())
			parse_error("gen line without cycles");
		spec.generator_cycles.emplace_back(body);
	}
	return spec;
}

Group load_group(std::string_view text, std::size_t cap)
{
	const auto lines = content_lines(text);
	if (lines.empty())
		parse_error("empty group file");
	if (split_keyword(lines.front()).first == "cayley")
		return load_cayley(lines, cap);

	const GroupFileSpec spec = parse_generator_file(text);
	std::vector<Permutation> gens;
	for (const auto& c : spec.generator_cycles)
		gens.push_back(parse_cycles(c, spec.degree));
	if (gens.empty())
		gens.push_back(Permutation::identity(spec.degree));
	return generate(gens, cap);
}

Group load_group_file(const std::filesystem::path& path, std::size_t cap)
{
	std::ifstream in(path);
	if (!in)
		parse_error("cannot read " + path.string());
	std::ostringstream ss;
	ss << in.rdbuf();
	return load_group(ss.str(), cap);
}

std::string to_generator_file(const Group& g)
{
	std::ostringstream os;
	os << "degree " << g.degree() << '\n';
	for (ElementId s : g.generators())
		os << "gen " << g.element(s).to_cycle_string() << '\n';
	return os.str();
}

} // namespace camina
