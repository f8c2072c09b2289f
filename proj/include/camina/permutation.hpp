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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace camina {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), i.e. the left factor
/// is applied first. Cycle strings use this same convention, so "(1 2 3)"
/// sends 1 to 2.
class Permutation
{
public:
	Permutation() : _images{0} {}
	explicit Permutation(std::vector<Point> images);

	static Permutation identity(std::size_t degree);
	/// Cycles are 0-based here; the text formats are 1-based.
	static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

	std::size_t degree() const noexcept { return _images.size(); }
	Point operator[](Point i) const { return _images[i]; }
	std::span<const Point> images() const noexcept { return _images; }

	Permutation operator*(const Permutation& rhs) const;
	Permutation inverse() const;
	bool is_identity() const noexcept;

	/// Same action on a larger point set; new points are fixed.
	Permutation extended(std::size_t degree) const;
	/// Relabels point i as i + offset, fixing the first offset points.
	Permutation shifted(std::size_t offset) const;

	/// Disjoint cycle notation, "()" for the identity.
	std::string to_cycle_string(bool one_based = true) const;

	friend bool operator==(const Permutation&, const Permutation&) = default;
	friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
	std::vector<Point> _images;
};

struct PermutationHash
{
	std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace camina
