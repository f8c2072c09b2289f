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

#include "camina/group.hpp"
#include "camina/verify.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace camina {

/// Builds a group from an expression:
///
///   family(args)          any named family, e.g. dihedral(4), affine_sl2(4)
///   direct(e, e, ...)     direct product, left to right
///   semidirect_inversion(e)
///   g54
///
/// Throws ParseError on malformed text or unknown names.
Group build_group(std::string_view expression, std::size_t cap = kDefaultElementCap);

/// Expressions listed one per line; '#' starts a comment and the first
/// "a..b" on a line expands to one expression per value.
std::vector<std::string> parse_manifest(std::string_view text);

/// One entry per manifest expression; build failures are kept in the entry.
std::vector<CorpusEntry> corpus_from_manifest(std::string_view text, std::size_t cap = kDefaultElementCap);

/// The manifest shipped as corpus/builtin.manifest.
std::string_view builtin_manifest();
std::vector<CorpusEntry> builtin_corpus(std::size_t cap = kDefaultElementCap);

/// *.grp and *.tbl files (one group each, labelled by file name) and
/// *.manifest files, in file-name order. Other files are ignored.
std::vector<CorpusEntry> load_corpus_directory(const std::filesystem::path& dir,
											   std::size_t cap = kDefaultElementCap);

/// "builtin", a directory, a manifest file, a group file, or an expression.
std::vector<CorpusEntry> load_corpus_source(std::string_view source, std::size_t cap = kDefaultElementCap);

/// A group file when the path exists, an expression otherwise.
Group load_group_source(std::string_view source, std::size_t cap = kDefaultElementCap);

} // namespace camina
