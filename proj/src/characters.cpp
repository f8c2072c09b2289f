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

#include "camina/characters.hpp"

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace camina {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

class ModP
{
public:
	explicit ModP(std::uint64_t p) : _p(p) {}

	std::uint64_t p() const { return _p; }
	std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % _p; }
	std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + _p - b) % _p; }
	std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, _p); }
	std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, _p - 2, _p); }
	std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, _p); }

private:
	std::uint64_t _p;
};

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const ModP& f)
{
	std::vector<std::size_t> pivots;
	if (m.empty())
		return pivots;
	const std::size_t cols = m.front().size();
	std::size_t row = 0;
	for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
		std::size_t r = row;
		while (r < m.size() && m[r][c] == 0)
			++r;
		if (r == m.size())
			continue;
		std::swap(m[r], m[row]);
		const std::uint64_t s = f.inv(m[row][c]);
		for (auto& x : m[row])
			x = f.mul(x, s);
		for (std::size_t i = 0; i < m.size(); ++i) {
			if (i == row || m[i][c] == 0)
				continue;
			const std::uint64_t factor = m[i][c];
			for (std::size_t j = 0; j < cols; ++j)
				m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
		}
		pivots.push_back(c);
		++row;
	}
	m.resize(row);
	return pivots;
}

// Basis of the right null space of m (square, d x d).
Mat nullspace(Mat m, const ModP& f)
{
	const std::size_t d = m.size();
	const auto pivots = rref(m, f);
	std::vector<char> is_pivot(d, 0);
	for (auto c : pivots)
		is_pivot[c] = 1;
	Mat basis;
	for (std::size_t free = 0; free < d; ++free) {
		if (is_pivot[free])
			continue;
		Vec v(d, 0);
		v[free] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = f.sub(0, m[r][free]);
		basis.push_back(std::move(v));
	}
	return basis;
}

// Characteristic polynomial, coefficients low to high, via Hessenberg form.
Vec charpoly(Mat h, const ModP& f)
{
	const std::size_t n = h.size();
	for (std::size_t m = 1; m + 1 < n; ++m) {
		std::size_t i = m;
		while (i < n && h[i][m - 1] == 0)
			++i;
		if (i == n)
			continue;
		if (i != m) {
			std::swap(h[i], h[m]);
			for (auto& row : h)
				std::swap(row[i], row[m]);
		}
		const std::uint64_t tinv = f.inv(h[m][m - 1]);
		for (i = m + 1; i < n; ++i) {
			const std::uint64_t u = f.mul(h[i][m - 1], tinv);
			if (u == 0)
				continue;
			for (std::size_t j = 0; j < n; ++j)
				h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
			for (std::size_t j = 0; j < n; ++j)
				h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
		}
	}

	std::vector<Vec> polys{Vec{1}};
	for (std::size_t m = 1; m <= n; ++m) {
		Vec pm(m + 1, 0);
		const Vec& prev = polys[m - 1];
		// (x - h[m-1][m-1]) * prev
		for (std::size_t k = 0; k < prev.size(); ++k) {
			pm[k + 1] = f.add(pm[k + 1], prev[k]);
			pm[k] = f.sub(pm[k], f.mul(h[m - 1][m - 1], prev[k]));
		}
		std::uint64_t t = 1;
		for (std::size_t i = 1; i < m; ++i) {
			t = f.mul(t, h[m - i][m - i - 1]);
			const std::uint64_t c = f.mul(t, h[m - i - 1][m - 1]);
			const Vec& q = polys[m - i - 1];
			for (std::size_t k = 0; k < q.size(); ++k)
				pm[k] = f.sub(pm[k], f.mul(c, q[k]));
		}
		polys.push_back(std::move(pm));
	}
	return polys.back();
}

std::uint64_t eval(const Vec& poly, std::uint64_t x, const ModP& f)
{
	std::uint64_t r = 0;
	for (std::size_t i = poly.size(); i-- > 0;)
		r = f.add(f.mul(r, x), poly[i]);
	return r;
}

std::uint64_t choose_prime(std::size_t order, std::size_t exponent)
{
	constexpr std::uint64_t bound = 1ull << 31;
	for (std::uint64_t p = exponent + 1; p < bound; p += exponent)
		if (p * p > 4 * order && is_prime(p))
			return p;
	throw Error(ErrorKind::LiftFailure, "no prime = 1 mod " + std::to_string(exponent) + " below 2^31");
}

// Simultaneous eigenvectors of the class matrices; each returned vector is
// a central character normalized to 1 at the identity class.
std::vector<Vec> central_characters(const std::vector<Mat>& class_matrices, const ModP& f)
{
	const std::size_t k = class_matrices.size();
	Mat identity(k, Vec(k, 0));
	for (std::size_t i = 0; i < k; ++i)
		identity[i][i] = 1;
	std::vector<Mat> spaces{identity};

	for (std::size_t r = 1; r < k; ++r) {
		if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; }))
			break;
		const Mat& a = class_matrices[r];
		std::vector<Mat> next;
		for (Mat& w : spaces) {
			const std::size_t d = w.size();
			if (d == 1) {
				next.push_back(std::move(w));
				continue;
			}
			const auto pivots = rref(w, f);
			// restricted action: (A w_i) = sum_j bt[j][i] w_j
			Mat bt(d, Vec(d, 0));
			for (std::size_t i = 0; i < d; ++i) {
				Vec v(k, 0);
				for (std::size_t s = 0; s < k; ++s) {
					std::uint64_t acc = 0;
					for (std::size_t t = 0; t < k; ++t)
						if (a[s][t] && w[i][t])
							acc = f.add(acc, f.mul(a[s][t], w[i][t]));
					v[s] = acc;
				}
				for (std::size_t j = 0; j < d; ++j)
					bt[j][i] = v[pivots[j]];
			}
			const Vec poly = charpoly(bt, f);
			std::size_t covered = 0;
			for (std::uint64_t lambda = 0; lambda < f.p(); ++lambda) {
				if (eval(poly, lambda, f) != 0)
					continue;
				Mat shifted = bt;
				for (std::size_t i = 0; i < d; ++i)
					shifted[i][i] = f.sub(shifted[i][i], lambda);
				Mat coords = nullspace(shifted, f);
				Mat sub;
				for (const Vec& u : coords) {
					Vec v(k, 0);
					for (std::size_t i = 0; i < d; ++i)
						for (std::size_t t = 0; t < k; ++t)
							v[t] = f.add(v[t], f.mul(u[i], w[i][t]));
					sub.push_back(std::move(v));
				}
				covered += sub.size();
				if (!sub.empty())
					next.push_back(std::move(sub));
				if (covered == d)
					break;
			}
			if (covered != d)
				throw Error(ErrorKind::LiftFailure, "class matrix is not diagonalizable mod " + std::to_string(f.p()));
		}
		spaces = std::move(next);
	}

	std::vector<Vec> out;
	for (const Mat& s : spaces) {
		if (s.size() != 1)
			throw Error(ErrorKind::LiftFailure, "common eigenspace of dimension " + std::to_string(s.size()));
		Vec v = s.front();
		if (v[0] == 0)
			throw Error(ErrorKind::LiftFailure, "eigenvector vanishes at the identity class");
		const std::uint64_t s0 = f.inv(v[0]);
		for (auto& x : v)
			x = f.mul(x, s0);
		out.push_back(std::move(v));
	}
	return out;
}

std::int64_t quantize(double x)
{
	return static_cast<std::int64_t>(std::llround(x * 1e6));
}

} // namespace

CharacterTable character_table(const Group& g, std::size_t class_cap, double tolerance)
{
	CharacterTable t;
	t.classes = conjugacy_classes(g);
	t.group_order = g.order();
	const auto& cc = t.classes;
	const std::size_t k = cc.size();
	if (k > class_cap)
		throw Error(ErrorKind::CapExceeded,
					std::to_string(k) + " conjugacy classes exceed class cap " + std::to_string(class_cap));

	const std::size_t n = g.order();
	const std::size_t e = g.exponent();
	t.prime = choose_prime(n, e);
	const ModP f(t.prime);
	const std::uint64_t z = f.pow(primitive_root(t.prime), (t.prime - 1) / e);

	// class_matrices[r][s][t]: number of x in C_r with x^-1 z_t in C_s
	std::vector<Mat> class_matrices(k, Mat(k, Vec(k, 0)));
	for (std::size_t r = 0; r < k; ++r)
		for (std::size_t c = 0; c < k; ++c) {
			const ElementId target = cc.representatives[c];
			for (ElementId x : cc.classes[r])
				++class_matrices[r][cc.class_of[g.mul(g.inv(x), target)]][c];
		}
	for (auto& m : class_matrices)
		for (auto& row : m)
			for (auto& x : row)
				x %= t.prime;

	std::vector<std::size_t> inverse_class(k);
	for (std::size_t c = 0; c < k; ++c)
		inverse_class[c] = cc.class_of[g.inv(cc.representatives[c])];

	struct Row
	{
		std::uint64_t degree;
		std::vector<std::complex<double>> values;
	};
	std::vector<Row> rows;

	for (const Vec& omega : central_characters(class_matrices, f)) {
		// sum_r omega_r omega_r* / |C_r| = |G| / chi(1)^2
		std::uint64_t s = 0;
		for (std::size_t r = 0; r < k; ++r)
			s = f.add(s, f.mul(f.mul(omega[r], omega[inverse_class[r]]), f.inv(cc.classes[r].size() % t.prime)));
		if (s == 0)
			throw Error(ErrorKind::LiftFailure, "degenerate central character");
		const std::uint64_t square = f.mul(n % t.prime, f.inv(s));
		std::uint64_t degree = 0;
		for (std::uint64_t d = 1; d * d <= n; ++d)
			if (d * d % t.prime == square) {
				degree = d;
				break;
			}
		if (degree == 0)
			throw Error(ErrorKind::LiftFailure, "no integer degree matches mod " + std::to_string(t.prime));

		Vec chi(k);
		for (std::size_t r = 0; r < k; ++r)
			chi[r] = f.mul(f.mul(omega[r], degree), f.inv(cc.classes[r].size() % t.prime));

		Row row{degree, std::vector<std::complex<double>>(k)};
		for (std::size_t r = 0; r < k; ++r) {
			const ElementId x = cc.representatives[r];
			const std::size_t o = g.element_order(x);
			const std::uint64_t zo = f.pow(z, e / o);
			const std::uint64_t zo_inv = f.inv(zo);
			std::vector<std::size_t> power_class(o);
			for (std::size_t l = 0; l < o; ++l)
				power_class[l] = cc.class_of[g.pow(x, l)];
			std::uint64_t total = 0;
			std::complex<double> value = 0;
			const std::uint64_t o_inv = f.inv(o % t.prime);
			for (std::size_t j = 0; j < o; ++j) {
				std::uint64_t acc = 0;
				const std::uint64_t step = f.pow(zo_inv, j);
				std::uint64_t w = 1;
				for (std::size_t l = 0; l < o; ++l) {
					acc = f.add(acc, f.mul(chi[power_class[l]], w));
					w = f.mul(w, step);
				}
				const std::uint64_t mult = f.mul(acc, o_inv);
				if (mult > degree)
					throw Error(ErrorKind::LiftFailure, "eigenvalue multiplicity out of range");
				total += mult;
				const double angle = 2 * std::numbers::pi * double(j) / double(o);
				value += double(mult) * std::complex<double>(std::cos(angle), std::sin(angle));
			}
			if (total != degree)
				throw Error(ErrorKind::LiftFailure, "eigenvalue multiplicities do not sum to the degree");
			row.values[r] = value;
		}
		rows.push_back(std::move(row));
	}

	std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
		if (a.degree != b.degree)
			return a.degree < b.degree;
		for (std::size_t c = 0; c < a.values.size(); ++c) {
			const auto ar = quantize(a.values[c].real()), br = quantize(b.values[c].real());
			if (ar != br)
				return ar > br;
			const auto ai = quantize(a.values[c].imag()), bi = quantize(b.values[c].imag());
			if (ai != bi)
				return ai > bi;
		}
		return false;
	});

	for (auto& row : rows) {
		std::vector<ElementId> kernel;
		for (std::size_t c = 0; c < k; ++c)
			if (std::abs(row.values[c] - double(row.degree)) < tolerance)
				kernel.insert(kernel.end(), cc.classes[c].begin(), cc.classes[c].end());
		std::sort(kernel.begin(), kernel.end());
		t.kernels.push_back(std::move(kernel));
		t.degrees.push_back(row.degree);
		t.values.push_back(std::move(row.values));
	}

	try {
		validate_table(t, tolerance);
	} catch (const Error& err) {
		throw Error(ErrorKind::LiftFailure, err.what());
	}
	return t;
}

OrthogonalityResiduals orthogonality_residuals(const CharacterTable& t)
{
	OrthogonalityResiduals res;
	const std::size_t k = t.classes.size();
	const std::size_t h = t.size();
	const double n = double(t.group_order);
	for (std::size_t i = 0; i < h; ++i)
		for (std::size_t j = 0; j < h; ++j) {
			std::complex<double> s = 0;
			for (std::size_t c = 0; c < k; ++c)
				s += double(t.class_size(c)) * t.values[i][c] * std::conj(t.values[j][c]);
			s /= n;
			res.row = std::max(res.row, std::abs(s - (i == j ? 1.0 : 0.0)));
		}
	for (std::size_t c = 0; c < k; ++c)
		for (std::size_t d = 0; d < k; ++d) {
			std::complex<double> s = 0;
			for (std::size_t i = 0; i < h; ++i)
				s += t.values[i][c] * std::conj(t.values[i][d]);
			s *= double(t.class_size(c)) / n;
			res.column = std::max(res.column, std::abs(s - (c == d ? 1.0 : 0.0)));
		}
	for (std::size_t c = 1; c < k; ++c) {
		std::complex<double> s = 0;
		for (std::size_t i = 0; i < h; ++i)
			s += double(t.degrees[i]) * t.values[i][c];
		res.identity_column = std::max(res.identity_column, std::abs(s));
	}
	return res;
}

void validate_table(const CharacterTable& t, double tolerance)
{
	if (t.size() != t.classes.size())
		throw Error(ErrorKind::InvalidTable, "number of irreducibles differs from number of classes");
	std::uint64_t sum = 0;
	for (auto d : t.degrees)
		sum += d * d;
	if (sum != t.group_order)
		throw Error(ErrorKind::InvalidTable, "sum of squared degrees is " + std::to_string(sum) + ", not |G| = "
												 + std::to_string(t.group_order));
	const auto res = orthogonality_residuals(t);
	if (res.row >= tolerance || res.column >= tolerance || res.identity_column >= tolerance)
		throw Error(ErrorKind::InvalidTable, "orthogonality residual exceeds tolerance");
}

std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& n)
{
	if (!is_normal(n))
		throw Error(ErrorKind::NotNormal, "Irr(G|N) needs N normal");
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < t.size(); ++i) {
		const auto& ker = t.kernels[i];
		const bool contains_n = std::all_of(n.members().begin(), n.members().end(), [&ker](ElementId x) {
			return std::binary_search(ker.begin(), ker.end(), x);
		});
		if (!contains_n)
			out.push_back(i);
	}
	const std::size_t quotient_classes = conjugacy_classes(quotient(n).group).size();
	if (t.size() - out.size() != quotient_classes)
		throw std::logic_error("characters over G/N do not match the classes of G/N");
	return out;
}

bool vanishes_outside(const CharacterTable& t, std::size_t chi, const Subgroup& n, double tolerance)
{
	if (chi >= t.size())
		throw Error(ErrorKind::InvalidArgument, "character index out of range");
	for (std::size_t c = 0; c < t.classes.size(); ++c)
		if (!n.contains(t.classes.representatives[c]) && std::abs(t.values[chi][c]) >= tolerance)
			return false;
	return true;
}

std::string to_csv(const CharacterTable& t)
{
	auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
	std::ostringstream os;
	os << "degree";
	for (std::size_t c = 0; c < t.classes.size(); ++c)
		os << ',' << t.classes.representatives[c] << ':' << t.class_size(c);
	os << '\n';
	char buf[64];
	for (std::size_t i = 0; i < t.size(); ++i) {
		os << t.degrees[i];
		for (const auto& v : t.values[i]) {
			std::snprintf(buf, sizeof buf, "%.9g%+.9gi", clean(v.real()), clean(v.imag()));
			os << ',' << buf;
		}
		os << '\n';
	}
	return os.str();
}

} // namespace camina
