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

#include "camina/families.hpp"

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

#include <array>
#include <functional>

namespace camina {

namespace {

std::string param_text(Family f, const std::vector<std::uint64_t>& params)
{
	std::string s(family_name(f));
	s += '(';
	for (std::size_t i = 0; i < params.size(); ++i)
		s += (i ? "," : "") + std::to_string(params[i]);
	return s + ')';
}

[[noreturn]] void unsupported(Family f, const std::vector<std::uint64_t>& params, const std::string& why)
{
	throw Error(ErrorKind::UnsupportedParams, param_text(f, params) + ": " + why);
}

Permutation cycle_of_length(std::size_t degree, std::size_t first, std::size_t length)
{
	std::vector<Point> cyc;
	for (std::size_t i = 0; i < length; ++i)
		cyc.push_back(static_cast<Point>(first + i));
	return Permutation::from_cycles(degree, {cyc});
}

// Regular action of an abstract group on its ids 0..n-1 by right multiplication.
Group regular_group(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
					const std::vector<std::size_t>& gens, std::size_t cap)
{
	if (n > cap)
		throw Error(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
	std::vector<Permutation> perms;
	for (std::size_t s : gens) {
		std::vector<Point> images(n);
		for (std::size_t x = 0; x < n; ++x)
			images[x] = static_cast<Point>(mul(x, s));
		perms.emplace_back(std::move(images));
	}
	return generate(perms, cap);
}

unsigned field_degree(std::uint64_t q)
{
	switch (q) {
	case 2: return 1;
	case 4: return 2;
	case 8: return 3;
	default: return 0;
	}
}

// SL(2,q) generated by the elementary transvections with entries in a basis
// of GF(q) over GF(2), acting on column vectors (u, v) at point u + q v.
std::vector<Permutation> sl2_generators(const GF2n& f)
{
	const unsigned q = f.size();
	std::vector<Permutation> gens;
	for (unsigned t = 1; t < q; t <<= 1) {
		std::vector<Point> upper(q * q), lower(q * q);
		for (unsigned v = 0; v < q; ++v)
			for (unsigned u = 0; u < q; ++u) {
				upper[u + q * v] = (u ^ f.mul(t, v)) + q * v;
				lower[u + q * v] = u + q * (f.mul(t, u) ^ v);
			}
		gens.emplace_back(std::move(upper));
		gens.emplace_back(std::move(lower));
	}
	return gens;
}

} // namespace

std::optional<Family> family_from_name(std::string_view name)
{
	static constexpr std::array<Family, 9> all{Family::Cyclic,	  Family::Dihedral,	  Family::Symmetric,
											   Family::Alternating, Family::Dicyclic,	  Family::Heisenberg,
											   Family::FrobeniusMetacyclic, Family::SL2, Family::AffineSL2};
	for (Family f : all)
		if (family_name(f) == name)
			return f;
	return std::nullopt;
}

std::string_view family_name(Family f)
{
	switch (f) {
	case Family::Cyclic: return "cyclic";
	case Family::Dihedral: return "dihedral";
	case Family::Symmetric: return "symmetric";
	case Family::Alternating: return "alternating";
	case Family::Dicyclic: return "dicyclic";
	case Family::Heisenberg: return "heisenberg";
	case Family::FrobeniusMetacyclic: return "frobenius_metacyclic";
	case Family::SL2: return "sl2";
	case Family::AffineSL2: return "affine_sl2";
	}
	return "?";
}

GF2n::GF2n(unsigned n) : _n(n)
{
	switch (n) {
	case 1: _modulus = 0b11; break;
	case 2: _modulus = 0b111; break;
	case 3: _modulus = 0b1011; break;
	default: throw Error(ErrorKind::UnsupportedParams, "GF(2^" + std::to_string(n) + ") is not supported");
	}
}

unsigned GF2n::mul(unsigned a, unsigned b) const noexcept
{
	unsigned r = 0;
	for (unsigned i = 0; i < _n; ++i)
		if (b & (1u << i))
			r ^= a << i;
	for (int bit = 2 * int(_n) - 2; bit >= int(_n); --bit)
		if (r & (1u << bit))
			r ^= _modulus << (bit - _n);
	return r;
}

Group construct(Family family, const std::vector<std::uint64_t>& params, std::size_t cap)
{
	const std::size_t want = family == Family::FrobeniusMetacyclic ? 2 : 1;
	if (params.size() != want)
		unsupported(family, params, "expected " + std::to_string(want) + " parameter(s)");
	const std::uint64_t n = params[0];
	if (n == 0 || n > kMaxTableOrder)
		unsupported(family, params, "parameter out of range");

	switch (family) {
	case Family::Cyclic:
		if (n == 1)
			return generate({Permutation::identity(1)}, cap);
		return generate({cycle_of_length(n, 0, n)}, cap);

	case Family::Dihedral: {
		if (n < 3)
			unsupported(family, params, "needs n >= 3");
		std::vector<Point> reflection(n);
		for (std::size_t i = 0; i < n; ++i)
			reflection[i] = static_cast<Point>((n - i) % n);
		return generate({cycle_of_length(n, 0, n), Permutation(reflection)}, cap);
	}

	case Family::Symmetric:
		if (n == 1)
			return generate({Permutation::identity(1)}, cap);
		return generate({cycle_of_length(n, 0, n), cycle_of_length(n, 0, 2)}, cap);

	case Family::Alternating: {
		if (n < 3)
			return generate({Permutation::identity(n)}, cap);
		std::vector<Permutation> gens;
		for (Point i = 2; i < n; ++i)
			gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
		return generate(gens, cap);
	}

	case Family::Dicyclic: {
		if (n < 2)
			unsupported(family, params, "needs n >= 2");
		// a^k x^e at index k + 2n e; x a = a^-1 x, x^2 = a^n
		const std::size_t m = 2 * n;
		auto mul = [m, n](std::size_t p, std::size_t q) -> std::size_t {
			const std::size_t k1 = p % m, e1 = p / m, k2 = q % m, e2 = q / m;
			if (e1 == 0)
				return (k1 + k2) % m + m * e2;
			const std::size_t k = (k1 + m - k2) % m;
			if (e2 == 0)
				return k + m;
			return (k + n) % m;
		};
		return regular_group(2 * m, mul, {1, m}, cap);
	}

	case Family::Heisenberg: {
		if (n == 2 || !is_prime(n))
			unsupported(family, params, "needs an odd prime");
		const std::size_t p = n;
		// (a, b, c) at index a + p b + p^2 c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
		auto mul = [p](std::size_t x, std::size_t y) -> std::size_t {
			const std::size_t a1 = x % p, b1 = x / p % p, c1 = x / (p * p);
			const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
			return (a1 + a2) % p + p * ((b1 + b2) % p) + p * p * ((c1 + c2 + a1 * b2) % p);
		};
		return regular_group(p * p * p, mul, {1, p}, cap);
	}

	case Family::FrobeniusMetacyclic: {
		const std::uint64_t q = params[0], d = params[1];
		if (!is_prime(q))
			unsupported(family, params, "q must be prime");
		if (d == 0 || (q - 1) % d != 0)
			unsupported(family, params, "d must divide q-1");
		std::vector<Point> shift(q), scale(q);
		const std::uint64_t w = pow_mod(primitive_root(q), (q - 1) / d, q);
		for (std::uint64_t x = 0; x < q; ++x) {
			shift[x] = static_cast<Point>((x + 1) % q);
			scale[x] = static_cast<Point>(x * w % q);
		}
		std::vector<Permutation> gens{Permutation(shift)};
		if (d > 1)
			gens.emplace_back(scale);
		return generate(gens, cap);
	}

	case Family::SL2:
	case Family::AffineSL2: {
		const unsigned deg = field_degree(n);
		if (deg == 0)
			unsupported(family, params, "q must be 2, 4 or 8");
		GF2n f(deg);
		auto gens = sl2_generators(f);
		if (family == Family::AffineSL2) {
			std::vector<Point> t(n * n);
			for (Point i = 0; i < n * n; ++i)
				t[i] = i ^ 1u;
			gens.emplace_back(std::move(t));
		}
		return generate(gens, cap);
	}
	}
	unsupported(family, params, "unknown family");
}

std::vector<ElementId> affine_translations(const Group& g)
{
	std::vector<ElementId> out;
	for (ElementId x = 0; x < g.order(); ++x) {
		const auto im = g.element(x).images();
		const Point t = im[0];
		bool translation = true;
		for (Point i = 0; i < im.size(); ++i)
			if ((im[i] ^ i) != t) {
				translation = false;
				break;
			}
		if (translation)
			out.push_back(x);
	}
	return out;
}

Group g54(std::size_t cap)
{
	const Group k = construct(Family::Heisenberg, {3}, cap);
	const auto& gens = k.generators(); // x = (1,0,0), y = (0,1,0)
	const auto alpha = extend_generator_images(k, {k.inv(gens[0]), gens[1]});
	std::vector<ElementId> id(k.order());
	for (ElementId i = 0; i < k.order(); ++i)
		id[i] = i;
	const Group c2 = construct(Family::Cyclic, {2}, cap);
	return semidirect_product(k, c2, {id, alpha}, cap);
}

Group semidirect_inversion(const Group& k, std::size_t cap)
{
	std::vector<ElementId> id(k.order()), inv(k.order());
	for (ElementId i = 0; i < k.order(); ++i) {
		id[i] = i;
		inv[i] = k.inv(i);
	}
	const Group c2 = construct(Family::Cyclic, {2}, cap);
	return semidirect_product(k, c2, {id, inv}, cap);
}

} // namespace camina
