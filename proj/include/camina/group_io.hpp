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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace camina {

/// Parsed form of a generator file:
///
///   # comment
///   degree 4
///   gen (1 2 3 4)
///   gen (1 3)
///
/// Points are 1-based; cycles within one generator must be disjoint.
struct GroupFileSpec
{
	std::size_t degree = 0;
	std::vector<std::string> generator_cycles;
};

/// One permutation from 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)".
/// Commas may stand in for spaces; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Generators separated by ';', e.g. "(1 2)(3 4); (1 3)(2 4)".
std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree);

GroupFileSpec parse_generator_file(std::string_view text);

/// Either a generator file or a Cayley file ("cayley <n>" followed by n rows
/// of n 0-based ids, row i column j holding the product i*j).
Group load_group(std::string_view text, std::size_t cap = kDefaultElementCap);
Group load_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultElementCap);

/// Writes g in generator-file form.
std::string to_generator_file(const Group& g);

} // namespace camina
