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

#include "camina/error.hpp"

#include <doctest.h>

#include <functional>

/// The kind of the camina::Error thrown by f; fails the test if none is.
inline camina::ErrorKind kind_of(const std::function<void()>& f)
{
	try {
		f();
	} catch (const camina::Error& e) {
		return e.kind();
	}
	FAIL("no camina::Error thrown");
	return camina::ErrorKind::InvalidArgument;
}
