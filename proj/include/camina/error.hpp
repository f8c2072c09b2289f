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

#include <stdexcept>
#include <string>
#include <string_view>

namespace camina {

enum class ErrorKind {
	CapExceeded,
	DegreeMismatch,
	UnsupportedParams,
	NotAnAutomorphism,
	NotAHomomorphism,
	NotNormal,
	NotProper,
	NotNormalInH,
	NotPrime,
	FactorizationFails,
	ParseError,
	InvalidTable,
	InvalidArgument,
	Overflow,
	LiftFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// kind() is the machine-readable part, what() carries the detail.
class Error : public std::runtime_error
{
public:
	Error(ErrorKind kind, const std::string& detail)
		: std::runtime_error(std::string(to_string(kind)) + ": " + detail), _kind(kind)
	{}

	ErrorKind kind() const noexcept { return _kind; }

private:
	ErrorKind _kind;
};

} // namespace camina
