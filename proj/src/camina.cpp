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

#include "camina/camina.hpp"

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace camina {

std::string_view to_string(CaminaType t)
{
	switch (t) {
	case CaminaType::NotCamina: return "NotCamina";
	case CaminaType::Type1: return "Type1";
	case CaminaType::Type2: return "Type2";
	case CaminaType::Type3: return "Type3";
	case CaminaType::Type4: return "Type4";
	}
	return "?";
}

std::string_view to_string(ZsigmondyException e)
{
	switch (e) {
	case ZsigmondyException::None: return "none";
	case ZsigmondyException::MersenneN2: return "mersenne_n2";
	case ZsigmondyException::Pair2_6: return "pair_2_6";
	case ZsigmondyException::N1Trivial: return "n1_trivial";
	}
	return "?";
}

CaminaCheck is_camina_conjugacy(const Group& g, const Subgroup& n)
{
	return is_camina_conjugacy(g, conjugacy_classes(g), n);
}

CaminaCheck is_camina_conjugacy(const Group& g, const ConjugacyClasses& classes, const Subgroup& n)
{
	require_proper_normal(g, n);
	for (ElementId x = 0; x < g.order(); ++x) {
		if (n.contains(x))
			continue;
		for (ElementId m : n.members())
			if (classes.class_of[g.mul(x, m)] != classes.class_of[x])
				return CaminaCheck{false, CosetWitness{x, m}};
	}
	return CaminaCheck{true, std::nullopt};
}

bool is_camina_centralizer(const Group& g, const Subgroup& n)
{
	require_proper_normal(g, n);
	const Quotient q = quotient(n);
	const Group& Q = q.group;
	std::vector<std::size_t> quotient_centralizer(Q.order(), 0);
	for (ElementId c = 0; c < Q.order(); ++c)
		for (ElementId d = 0; d < Q.order(); ++d)
			if (Q.mul(c, d) == Q.mul(d, c))
				++quotient_centralizer[c];
	for (ElementId x = 0; x < g.order(); ++x) {
		if (n.contains(x))
			continue;
		std::size_t count = 0;
		for (ElementId y = 0; y < g.order(); ++y)
			if (g.mul(x, y) == g.mul(y, x))
				++count;
		if (count != quotient_centralizer[q.projection[x]])
			return false;
	}
	return true;
}

bool is_camina_character(const Group& g, const Subgroup& n, const CharacterTable& table, double tolerance)
{
	require_proper_normal(g, n);
	if (table.group_order != g.order() || table.classes.class_of.size() != g.order())
		throw Error(ErrorKind::InvalidTable, "table belongs to a different group");
	validate_table(table, tolerance);
	for (std::size_t chi : irr_over(table, n))
		if (!vanishes_outside(table, chi, n, tolerance))
			return false;
	return true;
}

EqualOrderCheck is_equal_order_pair(const Group& g, const Subgroup& n)
{
	require_proper_normal(g, n);
	std::vector<char> done(g.order(), 0);
	for (ElementId x = 0; x < g.order(); ++x) {
		if (n.contains(x) || done[x])
			continue;
		const std::size_t order = g.element_order(x);
		std::optional<EqualOrderWitness> witness;
		for (ElementId m : n.members()) {
			const ElementId y = g.mul(x, m);
			done[y] = 1;
			if (!witness && g.element_order(y) != order)
				witness = EqualOrderWitness{x, x, y, order, g.element_order(y)};
		}
		if (witness)
			return EqualOrderCheck{false, witness};
	}
	return EqualOrderCheck{true, std::nullopt};
}

bool is_waist(const Group& g, const Subgroup& m)
{
	if (&m.parent() == &g && !is_normal(m))
		throw Error(ErrorKind::NotNormal, "a waist must be normal");
	return is_waist(g, m, normal_subgroups(g));
}

bool is_waist(const Group& g, const Subgroup& m, const NormalLattice& lattice)
{
	if (&m.parent() != &g)
		throw Error(ErrorKind::InvalidArgument, "subgroup belongs to a different group");
	if (!is_normal(m))
		throw Error(ErrorKind::NotNormal, "a waist must be normal");
	for (const auto& k : lattice.subgroups)
		if (!k.is_subset_of(m) && !m.is_subset_of(k))
			return false;
	return true;
}

CaminaClassification classify_camina_type(const Group& g, const Subgroup& n)
{
	return classify_camina_type(g, conjugacy_classes(g), n);
}

CaminaClassification classify_camina_type(const Group& g, const ConjugacyClasses& classes, const Subgroup& n)
{
	CaminaClassification out;
	const CaminaCheck check = is_camina_conjugacy(g, classes, n);
	if (!check.holds) {
		out.failing = check.witness;
		return out;
	}

	const std::size_t index = g.order() / n.order();
	const bool frobenius = is_frobenius_with_kernel(g, n);
	const auto n_prime = p_group_prime(n.order());
	const auto quotient_prime = p_group_prime(index);
	if (!frobenius && !n_prime && !quotient_prime)
		throw std::logic_error("Camina pair outside the coarse trichotomy");

	if (frobenius) {
		out.type = CaminaType::Type1;
	} else if (auto p = p_group_prime(g.order())) {
		out.type = CaminaType::Type2;
		out.prime = *p;
	} else if (n_prime) {
		out.type = CaminaType::Type3;
		out.prime = *n_prime;
		const Subgroup P = sylow(g, *n_prime);
		out.sylow_order = P.order();
		out.p_closed = is_normal(P);
	} else {
		out.type = CaminaType::Type4;
		out.prime = *quotient_prime;
	}
	return out;
}

bool is_fw_triple(const Group& g, const Subgroup& h, const Subgroup& hstar)
{
	if (&h.parent() != &g || &hstar.parent() != &g)
		throw Error(ErrorKind::InvalidArgument, "subgroups belong to a different group");
	if (!hstar.is_subset_of(h))
		throw Error(ErrorKind::NotNormalInH, "H* is not contained in H");
	for (ElementId s : h.generators())
		for (ElementId x : hstar.generators())
			if (!hstar.contains(g.conj(x, s)))
				throw Error(ErrorKind::NotNormalInH, "H* is not normal in H");
	if (hstar.order() == h.order())
		throw Error(ErrorKind::NotProper, "H* must be a proper subgroup of H");
	if (h.is_whole())
		return false;

	for (ElementId y = 0; y < g.order(); ++y) {
		if (h.contains(y))
			continue;
		const ElementId yinv = g.inv(y);
		// x lies in y^-1 H y exactly when y x y^-1 lies in H
		for (ElementId x : h.members())
			if (!hstar.contains(x) && h.contains(g.conj(x, yinv)))
				return false;
	}
	return true;
}

bool fw_conjugacy_coverage(const Group& g, const Subgroup& p, const Subgroup& n)
{
	return fw_conjugacy_coverage(g, conjugacy_classes(g), p, n);
}

bool fw_conjugacy_coverage(const Group& g, const ConjugacyClasses& classes, const Subgroup& p, const Subgroup& n)
{
	if (&p.parent() != &g || &n.parent() != &g)
		throw Error(ErrorKind::InvalidArgument, "subgroups belong to a different group");
	if (!is_normal(n))
		throw Error(ErrorKind::NotNormal, "N must be normal");
	const std::size_t meet = intersection(p, n).order();
	if (n.order() * p.order() / meet != g.order())
		throw Error(ErrorKind::FactorizationFails, "G is not NP");
	std::vector<char> reached(classes.size(), 0);
	for (ElementId x : p.members())
		if (!n.contains(x))
			reached[classes.class_of[x]] = 1;
	for (ElementId x = 0; x < g.order(); ++x)
		if (!n.contains(x) && !reached[classes.class_of[x]])
			return false;
	return true;
}

ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t n)
{
	if (a < 2 || n < 1)
		throw Error(ErrorKind::InvalidArgument, "zsigmondy needs a >= 2 and n >= 1");
	constexpr std::uint64_t limit = 1ull << 63;
	std::vector<std::uint64_t> powers{1}; // powers[k] = a^k
	for (std::uint64_t k = 1; k <= n; ++k) {
		if (powers.back() > (limit - 1) / a)
			throw Error(ErrorKind::Overflow, std::to_string(a) + "^" + std::to_string(n) + " does not fit below 2^63");
		powers.push_back(powers.back() * a);
	}

	ZsigmondyResult r{a, n, std::nullopt, ZsigmondyException::None};
	std::uint64_t m = powers[n] - 1;
	// strip every prime that already divides some a^k - 1, k < n
	for (std::uint64_t k = 1; k < n; ++k) {
		std::uint64_t g = std::gcd(m, powers[k] - 1);
		while (g > 1) {
			m /= g;
			g = std::gcd(m, g);
		}
	}
	if (m > 1) {
		r.prime = prime_divisors(m).front();
		return r;
	}

	if (n == 1 && a == 2)
		r.exception_kind = ZsigmondyException::N1Trivial;
	else if (n == 2 && ((a + 1) & a) == 0)
		r.exception_kind = ZsigmondyException::MersenneN2;
	else if (a == 2 && n == 6)
		r.exception_kind = ZsigmondyException::Pair2_6;
	else
		throw std::logic_error("no primitive prime outside the Zsigmondy exceptions");
	return r;
}

} // namespace camina
