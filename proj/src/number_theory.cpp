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

#include "camina/number_theory.hpp"

#include "camina/error.hpp"

#include <algorithm>
#include <numeric>

namespace camina {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
	std::uint64_t r = 1 % m;
	base %= m;
	while (exp) {
		if (exp & 1)
			r = mul_mod(r, base, m);
		base = mul_mod(base, base, m);
		exp >>= 1;
	}
	return r;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		if (n % p == 0)
			return n == p;
	}
	std::uint64_t d = n - 1;
	unsigned s = 0;
	while ((d & 1) == 0) {
		d >>= 1;
		++s;
	}
	for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		std::uint64_t x = pow_mod(a, d, n);
		if (x == 1 || x == n - 1)
			continue;
		bool composite = true;
		for (unsigned r = 1; r < s; ++r) {
			x = mul_mod(x, x, n);
			if (x == n - 1) {
				composite = false;
				break;
			}
		}
		if (composite)
			return false;
	}
	return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n)
{
	if (n % 2 == 0)
		return 2;
	for (std::uint64_t c = 1;; ++c) {
		auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
		std::uint64_t x = 2, y = 2, d = 1;
		while (d == 1) {
			x = f(x);
			y = f(f(y));
			d = std::gcd(x > y ? x - y : y - x, n);
		}
		if (d != n)
			return d;
	}
}

void collect(std::uint64_t n, std::vector<std::uint64_t>& out)
{
	if (n == 1)
		return;
	if (is_prime(n)) {
		out.push_back(n);
		return;
	}
	for (std::uint64_t p = 2; p < 1000; ++p) {
		if (n % p == 0) {
			out.push_back(p);
			collect(n / p, out);
			return;
		}
	}
	const std::uint64_t d = pollard_rho(n);
	collect(d, out);
	collect(n / d, out);
}

} // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
	if (n == 0)
		throw Error(ErrorKind::InvalidArgument, "cannot factor 0");
	std::vector<std::uint64_t> primes;
	collect(n, primes);
	std::sort(primes.begin(), primes.end());
	std::vector<std::pair<std::uint64_t, unsigned>> out;
	for (std::uint64_t p : primes) {
		if (!out.empty() && out.back().first == p)
			++out.back().second;
		else
			out.emplace_back(p, 1);
	}
	return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (auto [p, e] : factorize(n))
		out.push_back(p);
	return out;
}

std::optional<std::uint64_t> prime_of_power(std::uint64_t n)
{
	if (n < 2)
		return std::nullopt;
	const auto f = factorize(n);
	if (f.size() != 1)
		return std::nullopt;
	return f.front().first;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
	std::uint64_t r = 1;
	while (n % p == 0) {
		n /= p;
		r *= p;
	}
	return r;
}

std::uint64_t primitive_root(std::uint64_t p)
{
	if (!is_prime(p))
		throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
	if (p == 2)
		return 1;
	const auto divisors = prime_divisors(p - 1);
	for (std::uint64_t g = 2;; ++g) {
		bool ok = true;
		for (std::uint64_t q : divisors)
			if (pow_mod(g, (p - 1) / q, p) == 1) {
				ok = false;
				break;
			}
		if (ok)
			return g;
	}
}

} // namespace camina
