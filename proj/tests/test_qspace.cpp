#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qns/errors.hpp"
#include "qns/exec.hpp"
#include "qns/snapshot.hpp"
#include "qns/symbol.hpp"

using namespace qns;
using std::numbers::pi;

namespace {

const double kTwoPi = 2.0 * pi;

QElement mode_at(const FrequencyGrid& g, const ThetaMatrix& th, std::vector<int> k, Complex v) {
  return QElement::mode(g, th, k, v);
}

SymbolField gaussian_symbol(const FrequencyGrid& g) {
  const double L = g.box_length();
  return SymbolField::sample(g, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (double t : x) {
      const double o = periodic_offset(t, L);
      r2 += o * o;
    }
    return Complex(std::exp(-0.5 * r2));
  });
}

}  // namespace

TEST_CASE("theta matrix validation and norm") {
  CHECK_THROWS_AS(ThetaMatrix(2, {0.0, 1.0, 1.0, 0.0}), PreconditionError);
  CHECK_THROWS_AS(ThetaMatrix(2, {0.1, 1.0, -1.0, 0.0}), PreconditionError);
  CHECK_THROWS_AS(ThetaMatrix(2, {0.0, 1.0, -1.0}), PreconditionError);
  const ThetaMatrix t = ThetaMatrix::planar(0.7);
  CHECK(t(0, 1) == 0.7);
  CHECK(t(1, 0) == -0.7);
  CHECK(t.norm() == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(ThetaMatrix(3).is_zero());
  const ThetaMatrix t3(3, {0, 1, 2, -1, 0, 3, -2, -3, 0});
  CHECK(t3.norm() == doctest::Approx(std::sqrt(14.0)).epsilon(1e-12));
}

TEST_CASE("grid indexing is a symmetric bijection") {
  const FrequencyGrid g(2, 3, 5.0);
  CHECK(g.nodes_per_axis() == 7);
  CHECK(g.size() == 49u);
  CHECK(g.spacing() == doctest::Approx(kTwoPi / 5.0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.lattice(i);
    CHECK(g.flat(k) == i);
    CHECK(k == oracle::coords(g, i));
    auto neg = k;
    for (auto& v : neg) v = -v;
    CHECK(g.flat(neg) == g.negated(i));
  }
  CHECK(g.lattice(0) == std::vector<int>{-3, -3});
  CHECK(g.lattice(1) == std::vector<int>{-3, -2});
  CHECK(g.lattice(g.origin()) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(FrequencyGrid(0, 3, 1.0), PreconditionError);
  CHECK_THROWS_AS(FrequencyGrid(2, 0, 1.0), PreconditionError);
  CHECK_THROWS_AS(FrequencyGrid(2, 3, -1.0), PreconditionError);
}

TEST_CASE("twisted product of two modes carries the half phase") {
  const FrequencyGrid g(2, 4, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(1.0);
  const double w = g.cell_volume();
  const QElement a = mode_at(g, th, {1, 0}, 1.0 / w);
  const QElement b = mode_at(g, th, {0, 1}, 1.0 / w);
  const QElement ab = a * b;
  const QElement ba = b * a;
  const Complex v = ab.at(std::vector<int>{1, 1});
  CHECK(v.real() * w == doctest::Approx(std::cos(0.5)).epsilon(1e-14));
  CHECK(v.imag() * w == doctest::Approx(std::sin(0.5)).epsilon(1e-14));
  CHECK(std::arg(ba.at(std::vector<int>{1, 1})) == doctest::Approx(-0.5).epsilon(1e-14));
  const Complex ratio = ab.at(std::vector<int>{1, 1}) / ba.at(std::vector<int>{1, 1});
  CHECK(std::abs(ratio - std::polar(1.0, 1.0)) < 1e-14);
  double rest = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != g.flat(std::vector<int>{1, 1})) rest = std::max(rest, std::abs(ab[i]));
  }
  CHECK(rest == 0.0);
}

TEST_CASE("Weyl relation holds for random mode pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> k(-3, 3);
  for (double s : {0.3, 1.0}) {
    const FrequencyGrid g(2, 6, kTwoPi);
    const ThetaMatrix th = ThetaMatrix::planar(s);
    for (int t = 0; t < 50; ++t) {
      const std::vector<int> a{k(rng), k(rng)}, b{k(rng), k(rng)};
      const QElement x = mode_at(g, th, a, 1.0), y = mode_at(g, th, b, 1.0);
      const std::vector<int> c{a[0] + b[0], a[1] + b[1]};
      const Complex r = (x * y).at(c) / (y * x).at(c);
      const double dxi = g.spacing();
      const double expected = (a[0] * dxi) * s * (b[1] * dxi) - (a[1] * dxi) * s * (b[0] * dxi);
      CHECK(std::abs(r - std::polar(1.0, expected)) < 1e-13);
    }
  }
}

TEST_CASE("identity element and theta = 0 reduction") {
  const FrequencyGrid g(2, 6, kTwoPi);
  std::mt19937_64 rng(3);
  const QElement x = oracle::random_element(g, ThetaMatrix::planar(0.4), 6, rng);
  const QElement id = QElement::identity(g, x.theta());
  CHECK(oracle::rel_l2(x * id, x) == 0.0);
  CHECK(oracle::rel_l2(id * x, x) < 1e-15);

  const QElement a = oracle::random_element(g, ThetaMatrix(2), 3, rng);
  const QElement b = oracle::random_element(g, ThetaMatrix(2), 3, rng);
  CHECK(oracle::rel_l2(a * b, b * a) < 1e-14);
  const auto prod = to_symbol(a * b);
  const auto pointwise = Complex(std::pow(kTwoPi, 2)) * (to_symbol(a) * to_symbol(b));
  CHECK(max_abs_difference(prod, pointwise) < 1e-10 * std::max(1.0, l2_norm(pointwise)));
}

TEST_CASE("twisted convolution matches the brute-force oracle") {
  const FrequencyGrid g(2, 8, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.7);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 3; ++t) {
    const QElement x = oracle::random_element(g, th, 2, rng);
    const QElement y = oracle::random_element(g, th, 2, rng);
    CHECK(oracle::rel_l2(x * y, oracle::twisted(x, y)) < 1e-12);
    // full-support inputs exercise the truncation bounds
    const QElement u = oracle::random_element(g, th, 8, rng);
    const QElement v = oracle::random_element(g, th, 8, rng);
    CHECK(oracle::rel_l2(u * v, oracle::twisted(u, v)) < 1e-12);
  }
  const FrequencyGrid g3(3, 2, 3.0);
  const ThetaMatrix th3(3, {0, 0.4, -0.2, -0.4, 0, 0.9, 0.2, -0.9, 0});
  const QElement x3 = oracle::random_element(g3, th3, 2, rng);
  const QElement y3 = oracle::random_element(g3, th3, 2, rng);
  CHECK(oracle::rel_l2(x3 * y3, oracle::twisted(x3, y3)) < 1e-12);
}

TEST_CASE("compatibility is enforced") {
  const FrequencyGrid g(2, 4, kTwoPi);
  const QElement x(g, ThetaMatrix::planar(0.1));
  const QElement y(g, ThetaMatrix::planar(0.2));
  const QElement z(FrequencyGrid(2, 5, kTwoPi), ThetaMatrix::planar(0.1));
  CHECK_THROWS_AS(x * y, PreconditionError);
  CHECK_THROWS_AS(x + z, PreconditionError);
  CHECK_THROWS_AS(trace_product(x, z), PreconditionError);
}

TEST_CASE("parallel and deterministic summation agree bit for bit") {
  const FrequencyGrid g(2, 8, kTwoPi);
  std::mt19937_64 rng(5);
  const QElement x = oracle::random_element(g, ThetaMatrix::planar(0.6), 8, rng);
  const QElement y = oracle::random_element(g, ThetaMatrix::planar(0.6), 8, rng);
  set_summation(Summation::Deterministic);
  const QElement a = x * y;
  set_summation(Summation::Parallel);
  const unsigned prev = worker_count();
  set_worker_count(4);
  const QElement b = x * y;
  set_worker_count(prev);
  set_summation(Summation::Deterministic);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("adjoint") {
  const FrequencyGrid g(2, 5, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.9);
  const QElement m = mode_at(g, th, {2, -1}, Complex(1.5, 2.0));
  const QElement ma = adjoint(m);
  CHECK(ma.at(std::vector<int>{-2, 1}) == Complex(1.5, -2.0));
  std::mt19937_64 rng(8);
  const QElement x = oracle::random_element(g, th, 2, rng);
  const QElement y = oracle::random_element(g, th, 2, rng);
  const QElement aa = adjoint(adjoint(x));
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(aa[i] == x[i]);
  CHECK(oracle::rel_l2(adjoint(x * y), adjoint(y) * adjoint(x)) < 1e-12);
  CHECK(oracle::rel_l2(adjoint(x), oracle::brute_adjoint(x)) == 0.0);
  CHECK(self_adjoint_defect(self_adjoint_part(x)) < 1e-15);

  const FrequencyGrid gs(2, 12, 16.0);
  const QElement gauss = from_symbol(gaussian_symbol(gs), th);
  CHECK(self_adjoint_defect(gauss) < 1e-14);
  CHECK(imaginary_fraction(to_symbol(gauss)) < 1e-14);
}

TEST_CASE("trace") {
  const FrequencyGrid g(2, 24, 16.0);
  const QElement x = from_symbol(gaussian_symbol(g), ThetaMatrix::planar(0.5));
  CHECK(std::abs(trace(x) - Complex(kTwoPi)) < 1e-8);

  const FrequencyGrid h(2, 6, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.8);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const QElement a = oracle::random_element(h, th, 6, rng);
    const QElement b = oracle::random_element(h, th, 6, rng);
    const double scale = schatten_norm(a, 2) * schatten_norm(b, 2);
    CHECK(std::abs(trace(a * b) - trace(b * a)) <= 1e-13 * scale);
    CHECK(std::abs(trace_product(a, b) - trace(a * b)) <= 1e-13 * scale);
    const Complex pos = trace(adjoint(a) * a);
    CHECK(pos.real() >= 0.0);
    CHECK(std::abs(pos - Complex(std::pow(schatten_norm(a, 2), 2))) <= 1e-12 * pos.real());
    for (int j = 0; j < 2; ++j) CHECK(trace(partial_derivative(j, a)) == Complex(0.0));
  }
}

TEST_CASE("fourier multipliers and derivatives") {
  const FrequencyGrid g(2, 4, kTwoPi);
  const ThetaMatrix th(2);
  const QElement m11 = mode_at(g, th, {1, 1}, 1.0);
  const QElement h = fourier_multiplier(
      [](std::span<const double> xi) { return Complex(std::exp(-0.5 * (xi[0] * xi[0] + xi[1] * xi[1]))); }, m11);
  CHECK(h.at(std::vector<int>{1, 1}).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(h.at(std::vector<int>{1, 1}).real() == doctest::Approx(0.36788).epsilon(1e-5));

  const QElement m20 = mode_at(g, th, {2, 0}, 1.0);
  const QElement bessel = fourier_multiplier(
      [](std::span<const double> xi) { return Complex(1.0 + xi[0] * xi[0] + xi[1] * xi[1]); }, m20);
  CHECK(bessel.at(std::vector<int>{2, 0}) == Complex(5.0));
  const QElement one = fourier_multiplier([](std::span<const double>) { return Complex(1.0); }, m20);
  CHECK(one.at(std::vector<int>{2, 0}) == Complex(1.0));

  CHECK(partial_derivative(0, m20).at(std::vector<int>{2, 0}) == Complex(0.0, 2.0));
  CHECK(partial_derivative(1, m20).at(std::vector<int>{2, 0}) == Complex(0.0));
  const QElement id = QElement::identity(g, th);
  CHECK(schatten_norm(partial_derivative(0, id), 2) == 0.0);
  CHECK_THROWS_AS(partial_derivative(2, m20), PreconditionError);
  CHECK_THROWS_AS(partial_derivative(-1, m20), PreconditionError);
  CHECK(laplacian(m20).at(std::vector<int>{2, 0}) == Complex(-4.0));

  try {
    fourier_multiplier([](std::span<const double> xi) { return Complex(1.0 / (xi[0] * xi[0] + xi[1] * xi[1])); }, m20);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("k=(0,0)") != std::string::npos);
  }
}

TEST_CASE("Leibniz rule is exact on the lattice") {
  const FrequencyGrid g(2, 8, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.6);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    const QElement x = oracle::random_element(g, th, 8, rng);
    const QElement y = oracle::random_element(g, th, 8, rng);
    for (int j = 0; j < 2; ++j) {
      const QElement lhs = partial_derivative(j, x * y);
      const QElement rhs = partial_derivative(j, x) * y + x * partial_derivative(j, y);
      CHECK(oracle::rel_l2(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("associativity on in-band triples") {
  const FrequencyGrid g(2, 8, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(1.3);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 5; ++t) {
    const QElement x = oracle::random_element(g, th, 2, rng);
    const QElement y = oracle::random_element(g, th, 2, rng);
    const QElement z = oracle::random_element(g, th, 2, rng);
    CHECK(oracle::rel_l2((x * y) * z, x * (y * z)) < 1e-12);
  }
}

TEST_CASE("Schatten norms") {
  const FrequencyGrid g(2, 48, 32.0);
  const ThetaMatrix th = ThetaMatrix::planar(0.3);
  const QElement gc = QElement::from_coefficients(g, th, [](std::span<const double> xi) {
    return Complex(std::exp(-0.5 * (xi[0] * xi[0] + xi[1] * xi[1])));
  });
  CHECK(schatten_norm(gc, 2) == doctest::Approx(std::sqrt(pi)).epsilon(1e-8));
  CHECK(coeff_lp_norm(gc, 1.0) == doctest::Approx(kTwoPi).epsilon(1e-8));
  CHECK(schatten_norm(gc, 2) == coeff_lp_norm(gc, 2.0));

  // from_symbol carries (2 pi)^{d(1 - 1/p)}: 2 pi (pi/2)^{1/4} at p = 4, d = 2
  const FrequencyGrid gs(2, 24, 16.0);
  const QElement sym = from_symbol(gaussian_symbol(gs), ThetaMatrix(2));
  CHECK(schatten_norm(sym, 2) == doctest::Approx(kTwoPi * std::sqrt(pi)).epsilon(1e-6));
  CHECK(schatten_norm(sym, 2) == doctest::Approx(11.1366).epsilon(1e-5));
  CHECK(schatten_norm(sym, 4) == doctest::Approx(std::pow(kTwoPi, 1.5) * std::pow(pi / 2.0, 0.25)).epsilon(1e-6));

  const FrequencyGrid h(2, 6, kTwoPi);
  const ThetaMatrix th9 = ThetaMatrix::planar(0.9);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 3; ++t) {
    const QElement x = oracle::random_element(h, th9, 3, rng);
    CHECK(schatten_norm(x, 4) == doctest::Approx(oracle::schatten4(x)).epsilon(1e-10));
    const double s2 = schatten_norm(x, 2), s4 = schatten_norm(x, 4), s6 = schatten_norm(x, 6), s8 = schatten_norm(x, 8);
    CHECK(std::isfinite(s6));
    CHECK(s8 > 0.0);
    CHECK(s4 <= coeff_lp_norm(x, 4.0 / 3.0));
    CHECK(s2 > 0.0);
  }
  const QElement x = oracle::random_element(h, th9, 3, rng);
  CHECK_THROWS_AS(schatten_norm(x, 3), UnsupportedExponent);
  CHECK_THROWS_AS(schatten_norm(x, 0), UnsupportedExponent);
  CHECK_THROWS_AS(schatten_norm(x, -2), UnsupportedExponent);
}

TEST_CASE("Schatten norms of a single unitary mode") {
  // c lambda(a) is c times a unitary: every p-norm of U(c/w delta_a) over the
  // lattice volume behaves like |c| (w-normalised) and p = 2m uses m products
  const FrequencyGrid g(2, 6, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.5);
  const QElement x = mode_at(g, th, {1, 2}, 3.0);
  const double w = g.cell_volume();
  CHECK(schatten_norm(x, 2) == doctest::Approx(3.0 * std::sqrt(w)).epsilon(1e-14));
  for (int p : {4, 6, 8}) CHECK(schatten_norm(x, p) == doctest::Approx(3.0 * std::pow(w, 1.0 - 1.0 / p)).epsilon(1e-12));
}

TEST_CASE("operator norm estimate") {
  const FrequencyGrid g(2, 16, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.4);
  const QElement id = QElement::identity(g, th);
  CHECK(opnorm_estimate(id, 5) == doctest::Approx(1.0).epsilon(1e-10));
  const QElement u = mode_at(g, th, {1, -1}, Complex(0.0, 2.5) / g.cell_volume());
  CHECK(opnorm_estimate(u, 50) == doctest::Approx(2.5).epsilon(0.02));
  std::mt19937_64 rng(4);
  const QElement x = self_adjoint_part(oracle::random_element(FrequencyGrid(2, 6, kTwoPi), th, 3, rng));
  double prev = 0.0;
  for (int it : {1, 2, 4, 8, 16}) {
    const double e = opnorm_estimate(x, it);
    CHECK(e >= prev * (1.0 - 1e-12));
    prev = e;
  }
  MESSAGE("opnorm estimate ", prev, " vs Schatten-8 ", schatten_norm(x, 8));
}

TEST_CASE("coefficient Lp norms") {
  const FrequencyGrid g(2, 5, kTwoPi);
  const ThetaMatrix th(2);
  const QElement d = mode_at(g, th, {0, 0}, 1.0 / g.cell_volume());
  CHECK(coeff_lp_norm(d, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  std::mt19937_64 rng(6);
  const QElement x = oracle::random_element(g, th, 5, rng);
  CHECK(coeff_lp_norm(x, 4.0 / 3.0) == doctest::Approx(oracle::lp(x, 4.0 / 3.0)).epsilon(1e-13));
  double mx = 0.0;
  for (const auto& v : x.coeffs()) mx = std::max(mx, std::abs(v));
  CHECK(coeff_lp_norm(x, std::numeric_limits<double>::infinity()) == mx);
  CHECK_THROWS_AS(coeff_lp_norm(x, 0.5), PreconditionError);
}

TEST_CASE("edge mass") {
  const FrequencyGrid g(2, 4, kTwoPi);
  const ThetaMatrix th(2);
  CHECK(edge_mass(mode_at(g, th, {0, 0}, 1.0)) == 0.0);
  CHECK(edge_mass(mode_at(g, th, {4, 1}, 1.0)) == 1.0);
  CHECK(edge_mass(QElement(g, th)) == 0.0);
}

TEST_CASE("dilation scales Schatten norms by eps^{-d/p}") {
  const FrequencyGrid g(2, 8, kTwoPi);
  const ThetaMatrix th = ThetaMatrix::planar(0.6);
  std::mt19937_64 rng(31);
  const QElement x = oracle::random_element(g, th, 4, rng);
  CHECK(dilation(x, 1.0).grid() == g);
  CHECK(dilation(x, 1.0).theta() == th);
  for (double eps : {2.0, 0.5}) {
    const QElement y = dilation(x, eps);
    CHECK(y.grid().half_width() == g.half_width());
    CHECK(y.grid().spacing() == doctest::Approx(eps * g.spacing()).epsilon(1e-15));
    CHECK(y.theta()(0, 1) == doctest::Approx(0.6 / (eps * eps)).epsilon(1e-15));
    CHECK(schatten_norm(y, 2) / schatten_norm(x, 2) == doctest::Approx(1.0 / eps).epsilon(1e-14));
    CHECK(oracle::schatten4(y) / oracle::schatten4(x) == doctest::Approx(std::pow(eps, -0.5)).epsilon(1e-10));
    // dilation is multiplicative
    const QElement z = oracle::random_element(g, th, 4, rng);
    CHECK(oracle::rel_l2(dilation(x * z, eps), dilation(x, eps) * dilation(z, eps)) < 1e-12);
  }
  CHECK_THROWS_AS(dilation(x, 0.0), PreconditionError);
}

TEST_CASE("symbol transforms") {
  const FrequencyGrid g(2, 4, 3.0);
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> s(g.size());
  for (auto& v : s) {
    const double re = n(rng);
    const double im = n(rng);
    v = Complex(re, im);
  }
  const SymbolField phi(g, s);
  const QElement x = from_symbol(phi, ThetaMatrix::planar(0.2));
  CHECK(max_abs_difference(to_symbol(x), phi) < 1e-12);
  const auto direct = oracle::direct_transform(phi);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(direct[i] - x[i]));
  CHECK(err < 1e-12);
  CHECK_THROWS_AS(SymbolField(g, std::vector<Complex>(3)), PreconditionError);
  CHECK_THROWS_AS(from_symbol(phi, ThetaMatrix(3)), PreconditionError);
  CHECK(periodic_offset(2.9, 3.0) == doctest::Approx(-0.1));
  CHECK(periodic_offset(-1.6, 3.0) == doctest::Approx(1.4));
}

TEST_CASE("QNSF snapshots round trip and reject damaged input") {
  const FrequencyGrid g(2, 3, 4.5);
  const ThetaMatrix th = ThetaMatrix::planar(-0.25);
  std::mt19937_64 rng(51);
  std::vector<QElement> fields{oracle::random_element(g, th, 3, rng), oracle::random_element(g, th, 3, rng)};
  const auto bytes = encode_snapshot(fields);
  CHECK(bytes.size() == 4 + 4 * 3 + 8 + 8 * 4 + 4 + 2 * 49 * 16);
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  const auto back = decode_snapshot(bytes);
  REQUIRE(back.size() == 2);
  for (std::size_t f = 0; f < 2; ++f) {
    CHECK(back[f].grid() == g);
    CHECK(back[f].theta() == th);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(back[f][i] == fields[f][i]);
  }
  CHECK(encode_snapshot(back) == bytes);

  auto truncated = bytes;
  truncated.resize(bytes.size() - 5);
  CHECK_THROWS_AS(decode_snapshot(truncated), FormatError);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(decode_snapshot(bad_magic), FormatError);
  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(decode_snapshot(trailing), FormatError);
  // the same header written big-endian: version reads as 0x01000000
  auto swapped = bytes;
  std::reverse(swapped.begin() + 4, swapped.begin() + 8);
  CHECK_THROWS_AS(decode_snapshot(swapped), FormatError);
  CHECK_THROWS_AS(decode_snapshot(std::vector<std::uint8_t>{}), FormatError);

  const auto path = std::filesystem::temp_directory_path() / "qns_test_roundtrip.qnsf";
  save_snapshot(path, fields);
  const auto loaded = load_snapshot(path);
  CHECK(encode_snapshot(loaded) == bytes);
  std::filesystem::remove(path);
}
