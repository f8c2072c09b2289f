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

#include "camina/corpus.hpp"

#include "camina/error.hpp"
#include "camina/families.hpp"
#include "camina/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <fstream>
#include <regex>
#include <sstream>

namespace camina {

namespace {

#include "builtin_manifest.inc"

class ExpressionParser
{
public:
	ExpressionParser(std::string_view text, std::size_t cap) : _text(text), _cap(cap) {}

	Group parse()
	{
		Group g = expression();
		skip_space();
		if (_pos != _text.size())
			fail("trailing text");
		return g;
	}

private:
	[[noreturn]] void fail(const std::string& what) const
	{
		throw Error(ErrorKind::ParseError,
					"group expression '" + std::string(_text) + "': " + what + " at offset " + std::to_string(_pos));
	}

	void skip_space()
	{
		while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
			++_pos;
	}

	bool accept(char c)
	{
		skip_space();
		if (_pos < _text.size() && _text[_pos] == c) {
			++_pos;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c))
			fail(std::string("expected '") + c + "'");
	}

	std::string identifier()
	{
		skip_space();
		std::size_t start = _pos;
		while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
			++_pos;
		if (start == _pos)
			fail("expected a name");
		return std::string(_text.substr(start, _pos - start));
	}

	std::uint64_t number()
	{
		skip_space();
		std::size_t start = _pos;
		std::uint64_t value = 0;
		while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
			if (value > (UINT64_MAX - 9) / 10)
				fail("number too large");
			value = value * 10 + std::uint64_t(_text[_pos++] - '0');
		}
		if (start == _pos)
			fail("expected a number");
		return value;
	}

	Group expression()
	{
		const std::string name = identifier();
		if (name == "g54") {
			if (accept('('))
				expect(')');
			return g54(_cap);
		}
		if (name == "direct") {
			expect('(');
			Group g = expression();
			while (accept(','))
				g = direct_product(g, expression(), _cap);
			expect(')');
			return g;
		}
		if (name == "semidirect_inversion") {
			expect('(');
			Group k = expression();
			expect(')');
			return semidirect_inversion(k, _cap);
		}
		auto family = family_from_name(name);
		if (!family)
			fail("unknown group '" + name + "'");
		std::vector<std::uint64_t> params;
		expect('(');
		if (!accept(')')) {
			do
				params.push_back(number());
			while (accept(','));
			expect(')');
		}
		return construct(*family, params, _cap);
	}

	std::string_view _text;
	std::size_t _cap;
	std::size_t _pos = 0;
};

std::string strip_spaces(std::string_view s)
{
	std::string out;
	for (char c : s)
		if (!std::isspace(static_cast<unsigned char>(c)))
			out += c;
	return out;
}

CorpusEntry build_entry(std::string label, const std::function<Group()>& build)
{
	CorpusEntry e;
	e.label = std::move(label);
	try {
		e.group.emplace(build());
	} catch (const Error& err) {
		e.error = err.what();
		e.error_kind = err.kind();
	}
	return e;
}

std::string read_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorKind::ParseError, "cannot read " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

} // namespace

Group build_group(std::string_view expression, std::size_t cap)
{
	return ExpressionParser(expression, cap).parse();
}

std::vector<std::string> parse_manifest(std::string_view text)
{
	static const std::regex range(R"((\d+)\.\.(\d+))");
	std::vector<std::string> out;
	std::istringstream in{std::string(text)};
	std::string line;
	while (std::getline(in, line)) {
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		line = strip_spaces(line);
		if (line.empty())
			continue;
		std::smatch m;
		if (!std::regex_search(line, m, range)) {
			out.push_back(line);
			continue;
		}
		const std::uint64_t lo = std::stoull(m[1].str());
		const std::uint64_t hi = std::stoull(m[2].str());
		if (lo > hi || hi - lo > 10000)
			throw Error(ErrorKind::ParseError, "bad range in manifest line '" + line + "'");
		for (std::uint64_t v = lo; v <= hi; ++v)
			out.push_back(m.prefix().str() + std::to_string(v) + m.suffix().str());
	}
	return out;
}

std::vector<CorpusEntry> corpus_from_manifest(std::string_view text, std::size_t cap)
{
	std::vector<CorpusEntry> out;
	for (const std::string& expr : parse_manifest(text))
		out.push_back(build_entry(expr, [&] { return build_group(expr, cap); }));
	return out;
}

std::string_view builtin_manifest()
{
	return kBuiltinManifest;
}

std::vector<CorpusEntry> builtin_corpus(std::size_t cap)
{
	return corpus_from_manifest(builtin_manifest(), cap);
}

std::vector<CorpusEntry> load_corpus_directory(const std::filesystem::path& dir, std::size_t cap)
{
	if (!std::filesystem::is_directory(dir))
		throw Error(ErrorKind::ParseError, "not a directory: " + dir.string());
	std::vector<std::filesystem::path> files;
	for (const auto& item : std::filesystem::directory_iterator(dir))
		if (item.is_regular_file())
			files.push_back(item.path());
	std::sort(files.begin(), files.end());

	std::vector<CorpusEntry> out;
	for (const auto& path : files) {
		const std::string ext = path.extension().string();
		if (ext == ".grp" || ext == ".tbl") {
			out.push_back(build_entry(path.filename().string(), [&] { return load_group_file(path, cap); }));
		} else if (ext == ".manifest") {
			auto part = corpus_from_manifest(read_file(path), cap);
			std::move(part.begin(), part.end(), std::back_inserter(out));
		}
	}
	return out;
}

std::vector<CorpusEntry> load_corpus_source(std::string_view source, std::size_t cap)
{
	if (source == "builtin")
		return builtin_corpus(cap);
	const std::filesystem::path path{std::string(source)};
	if (std::filesystem::is_directory(path))
		return load_corpus_directory(path, cap);
	if (std::filesystem::is_regular_file(path)) {
		if (path.extension() == ".manifest")
			return corpus_from_manifest(read_file(path), cap);
		std::vector<CorpusEntry> out;
		out.push_back(build_entry(path.filename().string(), [&] { return load_group_file(path, cap); }));
		return out;
	}
	std::vector<CorpusEntry> out;
	const std::string label = strip_spaces(source);
	out.push_back(build_entry(label, [&] { return build_group(label, cap); }));
	return out;
}

Group load_group_source(std::string_view source, std::size_t cap)
{
	const std::filesystem::path path{std::string(source)};
	if (std::filesystem::is_regular_file(path))
		return load_group_file(path, cap);
	return build_group(source, cap);
}

} // namespace camina
