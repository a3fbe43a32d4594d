#include <cmath>
#include <cstdint>
#include <vector>

#include "biko/hermite.hpp"
#include "biko/spectral.hpp"
#include "biko/util.hpp"
#include "doctest.h"

using namespace biko;

namespace {

// Independent oracle: He_n as an explicit monomial expansion with integer
// coefficients built from the recurrence on coefficient arrays.
std::vector<std::int64_t> hermite_monomial_coeffs(int n) {
  std::vector<std::vector<std::int64_t>> he(n + 1);
  he[0] = {1};
  if (n >= 1) he[1] = {0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<std::int64_t> next(k + 2, 0);
    for (int p = 0; p <= k; ++p) next[p + 1] += he[k][p];
    for (int p = 0; p <= k - 1; ++p) next[p] -= static_cast<std::int64_t>(k) * he[k - 1][p];
    he[k + 1] = std::move(next);
  }
  return he[n];
}

double hermite_monomial_eval(int n, double x) {
  const auto c = hermite_monomial_coeffs(n);
  double acc = 0.0;
  for (int p = n; p >= 0; --p) acc = acc * x + static_cast<double>(c[p]);
  return acc;
}

}  // namespace

TEST_SUITE("hermite") {

TEST_CASE("hermite_eval basic values") {
  CHECK(hermite_eval(0, 1.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hermite_eval(2, 2.0) == doctest::Approx(3.0).epsilon(1e-15));
  // He_5 = x^5 - 10x^3 + 15x at x = 0.5
  CHECK(hermite_eval(5, 0.5) == doctest::Approx(6.28125).epsilon(1e-12));
  CHECK(hermite_eval(5, 0.5) ==
        doctest::Approx(hermite_monomial_eval(5, 0.5)).epsilon(1e-14));
}

TEST_CASE("recurrence agrees with explicit monomial expansion") {
  for (int n = 0; n <= 15; ++n) {
    for (double x = -5.0; x <= 5.0; x += 0.5) {
      const double a = hermite_eval(n, x);
      const double b = hermite_monomial_eval(n, x);
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }
}

TEST_CASE("orthonormal values match He_n / sqrt(n!)") {
  double fact = 1.0;
  for (int n = 0; n <= 12; ++n) {
    if (n > 0) fact *= n;
    const double x = 1.3;
    CHECK(hermite_orthonormal(n, x) ==
          doctest::Approx(hermite_eval(n, x) / std::sqrt(fact)).epsilon(1e-12));
  }
}

TEST_CASE("quadrature_rule small rules") {
  const auto r1 = quadrature_rule(1, 1);
  CHECK(r1.axis_nodes()[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r1.axis_weights()[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto r2 = quadrature_rule(1, 2);
  CHECK(r2.axis_nodes()[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(r2.axis_nodes()[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r2.axis_weights()[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(r2.axis_weights()[1] == doctest::Approx(0.5).epsilon(1e-13));

  // E[x^4] = 3 with the three-point rule.
  const auto r3 = quadrature_rule(1, 3);
  double m4 = 0.0;
  r3.for_each_point([&](std::span<const double> x, double w) { m4 += w * std::pow(x[0], 4); });
  CHECK(m4 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("quadrature weights normalized and moments exact") {
  for (int m : {1, 2, 3, 5, 9, 16}) {
    const auto rule = quadrature_rule(1, m);
    double wsum = 0.0;
    for (double w : rule.axis_weights()) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    // Gaussian moments E[x^k]: 0 for odd k, (k-1)!! for even k, exact for
    // k <= 2m-1.
    double dfact = 1.0;  // (k-1)!! running value for even k
    for (int k = 0; k <= 2 * m - 1; ++k) {
      double mk = 0.0;
      for (std::size_t q = 0; q < rule.axis_nodes().size(); ++q)
        mk += rule.axis_weights()[q] * std::pow(rule.axis_nodes()[q], k);
      if (k % 2 == 1) {
        CHECK(std::abs(mk) < 1e-10);
      } else {
        if (k >= 2) dfact *= (k - 1);
        CHECK(mk == doctest::Approx(dfact).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("node symmetry cap and errors") {
  CHECK_THROWS(quadrature_rule(5, 3));
  CHECK_THROWS(quadrature_rule(4, 100));  // 1e84 points
  const auto r = quadrature_rule(1, 21);
  for (int i = 0; i < 10; ++i)
    CHECK(r.axis_nodes()[i] == doctest::Approx(-r.axis_nodes()[20 - i]).epsilon(1e-13));
}

TEST_CASE("project monomial and constant") {
  const auto rule = quadrature_rule(1, 8);
  auto s = project([](std::span<const double> x) { return x[0] * x[0]; }, 1, 6, rule);
  CHECK(s.coefficient(MultiIndex{0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.coefficient(MultiIndex{2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (int n : {1, 3, 4, 5, 6})
    CHECK(std::abs(s.coefficient(MultiIndex{n})) < 1e-10);

  auto one = project([](std::span<const double>) { return 1.0; }, 1, 6, rule);
  CHECK(one.coefficient(MultiIndex{0}) == doctest::Approx(1.0).epsilon(1e-13));
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(one.coefficient(MultiIndex{n})) < 1e-12);
}

TEST_CASE("project He_3 lands on a single mode") {
  const auto rule = quadrature_rule(1, 12);
  auto s = project([](std::span<const double> x) { return hermite_eval(3, x[0]); }, 1, 5, rule);
  CHECK(s.coefficient(MultiIndex{3}) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));
  for (int n : {0, 1, 2, 4, 5})
    CHECK(std::abs(s.coefficient(MultiIndex{n})) < 1e-10);
}

TEST_CASE("project precondition") {
  const auto rule = quadrature_rule(1, 4);
  CHECK_THROWS_AS(project([](std::span<const double>) { return 1.0; }, 1, 6, rule),
                  std::invalid_argument);
}

TEST_CASE("synthesize examples") {
  auto c = SpectralFunction::constant(1, 1.0);
  const double x17 = 1.7;
  CHECK(synthesize_at(c, std::span<const double>(&x17, 1)) == doctest::Approx(1.0));

  const auto rule = quadrature_rule(1, 8);
  auto s = project([](std::span<const double> x) { return x[0] * x[0]; }, 1, 6, rule);
  const double x2 = 2.0;
  CHECK(synthesize_at(s, std::span<const double>(&x2, 1)) == doctest::Approx(4.0).epsilon(1e-11));

  auto h2 = SpectralFunction::basis(1, MultiIndex{2});
  const double x0 = 0.0;
  CHECK(synthesize_at(h2, std::span<const double>(&x0, 1)) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("inner products") {
  auto one = SpectralFunction::constant(1, 1.0);
  CHECK(inner_product_mu(one, one) == doctest::Approx(1.0));
  auto h2 = SpectralFunction::basis(1, MultiIndex{2}, 3);
  auto h3 = SpectralFunction::basis(1, MultiIndex{3}, 3);
  CHECK(inner_product_mu(h2, h3) == doctest::Approx(0.0));
  const auto rule = quadrature_rule(1, 8);
  auto x2 = project([](std::span<const double> x) { return x[0] * x[0]; }, 1, 6, rule);
  CHECK(inner_product_mu(x2, x2) == doctest::Approx(3.0).epsilon(1e-11));

  SpectralFunction a(1, 2), b(2, 2);
  CHECK_THROWS_AS(inner_product_mu(a, b), std::invalid_argument);
}

TEST_CASE("orthonormality of the tensor basis") {
  for (int dim : {1, 2, 3}) {
    const int degree = 8;
    const int m = degree + 1;
    const auto rule = quadrature_rule(dim, m);
    const auto& set = MultiIndexSet::get(dim, degree);
    const std::size_t nb = set.size();
    // Gram matrix via the tensor rule.
    std::vector<double> gram(nb * nb, 0.0);
    std::vector<double> basis(nb);
    std::vector<double> table(static_cast<std::size_t>(dim) * (degree + 1));
    rule.for_each_point([&](std::span<const double> x, double w) {
      for (int axis = 0; axis < dim; ++axis)
        hermite_orthonormal_all(degree, x[axis],
                                std::span<double>(table.data() + axis * (degree + 1), degree + 1));
      for (std::size_t r = 0; r < nb; ++r) {
        double v = 1.0;
        for (int axis = 0; axis < dim; ++axis) v *= table[axis * (degree + 1) + set[r][axis]];
        basis[r] = v;
      }
      for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i; j < nb; ++j) gram[i * nb + j] += w * basis[i] * basis[j];
    });
    double worst = 0.0;
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = i; j < nb; ++j) {
        const double target = i == j ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(gram[i * nb + j] - target));
      }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("Parseval against quadrature") {
  Rng rng(7);
  for (int dim : {1, 2}) {
    const int degree = 6;
    SpectralFunction s(dim, degree);
    for (std::size_t r = 0; r < s.size(); ++r) s[r] = rng.uniform(-1.0, 1.0);
    const auto rule = quadrature_rule(dim, degree + 1);
    double quad_norm2 = 0.0;
    rule.for_each_point([&](std::span<const double> x, double w) {
      const double v = synthesize_at(s, x);
      quad_norm2 += w * v * v;
    });
    CHECK(std::sqrt(quad_norm2) == doctest::Approx(s.norm()).epsilon(1e-9));
  }
}

TEST_CASE("graded-lex enumeration order") {
  const auto& set = MultiIndexSet::get(2, 2);
  REQUIRE(set.size() == 6);
  CHECK(set[0].entries() == std::vector<int>{0, 0});
  CHECK(set[1].entries() == std::vector<int>{0, 1});
  CHECK(set[2].entries() == std::vector<int>{1, 0});
  CHECK(set[3].entries() == std::vector<int>{0, 2});
  CHECK(set[4].entries() == std::vector<int>{1, 1});
  CHECK(set[5].entries() == std::vector<int>{2, 0});
}

TEST_CASE("derivative and coordinate multiplication") {
  // d/dx Hh_n = sqrt(n) Hh_{n-1}
  auto h3 = SpectralFunction::basis(1, MultiIndex{3});
  auto d = h3.derivative(0);
  CHECK(d.coefficient(MultiIndex{2}) == doctest::Approx(std::sqrt(3.0)));
  // x * Hh_2 = sqrt(3) Hh_3 + sqrt(2) Hh_1
  auto h2 = SpectralFunction::basis(1, MultiIndex{2});
  auto xh2 = h2.multiply_by_coordinate(0);
  CHECK(xh2.coefficient(MultiIndex{3}) == doctest::Approx(std::sqrt(3.0)));
  CHECK(xh2.coefficient(MultiIndex{1}) == doctest::Approx(std::sqrt(2.0)));
}

}  // TEST_SUITE
