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

#include "camina/permutation.hpp"

#include "camina/error.hpp"

#include <sstream>

namespace camina {

std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::CapExceeded: return "CapExceeded";
	case ErrorKind::DegreeMismatch: return "DegreeMismatch";
	case ErrorKind::UnsupportedParams: return "UnsupportedParams";
	case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
	case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
	case ErrorKind::NotNormal: return "NotNormal";
	case ErrorKind::NotProper: return "NotProper";
	case ErrorKind::NotNormalInH: return "NotNormalInH";
	case ErrorKind::NotPrime: return "NotPrime";
	case ErrorKind::FactorizationFails: return "FactorizationFails";
	case ErrorKind::ParseError: return "ParseError";
	case ErrorKind::InvalidTable: return "InvalidTable";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::Overflow: return "Overflow";
	case ErrorKind::LiftFailure: return "LiftFailure";
	}
	return "Unknown";
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images))
{
	if (_images.empty())
		throw Error(ErrorKind::InvalidArgument, "permutation of degree 0");
	std::vector<char> seen(_images.size(), 0);
	for (Point p : _images) {
		if (p >= _images.size() || seen[p])
			throw Error(ErrorKind::InvalidArgument, "images do not form a bijection");
		seen[p] = 1;
	}
}

Permutation Permutation::identity(std::size_t degree)
{
	if (degree == 0)
		throw Error(ErrorKind::InvalidArgument, "permutation of degree 0");
	std::vector<Point> images(degree);
	for (std::size_t i = 0; i < degree; ++i)
		images[i] = static_cast<Point>(i);
	Permutation p;
	p._images = std::move(images);
	return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles)
{
	Permutation p = identity(degree);
	std::vector<char> used(degree, 0);
	for (const auto& cycle : cycles) {
		for (Point q : cycle) {
			if (q >= degree)
				throw Error(ErrorKind::InvalidArgument, "cycle point " + std::to_string(q) + " out of range");
			if (used[q])
				throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint at point " + std::to_string(q));
			used[q] = 1;
		}
		for (std::size_t i = 0; i < cycle.size(); ++i)
			p._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
	}
	return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
	if (rhs.degree() != degree())
		throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
	Permutation r;
	r._images.resize(_images.size());
	for (std::size_t i = 0; i < _images.size(); ++i)
		r._images[i] = rhs._images[_images[i]];
	return r;
}

Permutation Permutation::inverse() const
{
	Permutation r;
	r._images.resize(_images.size());
	for (std::size_t i = 0; i < _images.size(); ++i)
		r._images[_images[i]] = static_cast<Point>(i);
	return r;
}

bool Permutation::is_identity() const noexcept
{
	for (std::size_t i = 0; i < _images.size(); ++i)
		if (_images[i] != i)
			return false;
	return true;
}

Permutation Permutation::extended(std::size_t degree) const
{
	if (degree < _images.size())
		throw Error(ErrorKind::DegreeMismatch, "cannot shrink a permutation");
	Permutation r = identity(degree);
	std::copy(_images.begin(), _images.end(), r._images.begin());
	return r;
}

Permutation Permutation::shifted(std::size_t offset) const
{
	Permutation r = identity(degree() + offset);
	for (std::size_t i = 0; i < _images.size(); ++i)
		r._images[i + offset] = static_cast<Point>(_images[i] + offset);
	return r;
}

std::string Permutation::to_cycle_string(bool one_based) const
{
	std::ostringstream os;
	std::vector<char> done(_images.size(), 0);
	const Point base = one_based ? 1 : 0;
	bool any = false;
	for (Point i = 0; i < _images.size(); ++i) {
		if (done[i] || _images[i] == i)
			continue;
		any = true;
		os << '(';
		Point j = i;
		bool first = true;
		while (!done[j]) {
			done[j] = 1;
			if (!first)
				os << ' ';
			os << j + base;
			first = false;
			j = _images[j];
		}
		os << ')';
	}
	if (!any)
		os << "()";
	return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
	// FNV-1a over the image words
	std::uint64_t h = 1469598103934665603ull;
	for (Point x : p.images()) {
		h ^= x;
		h *= 1099511628211ull;
	}
	return static_cast<std::size_t>(h);
}

} // namespace camina
