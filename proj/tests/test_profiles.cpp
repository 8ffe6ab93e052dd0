#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "afc/comb.hpp"
#include "afc/errors.hpp"
#include "afc/grid.hpp"
#include "afc/line_shape.hpp"
#include "afc/special.hpp"

using namespace afc;

namespace {

// Quadrature oracle for tooth transforms, independent of the closed forms.
std::complex<double> transform_by_quadrature(const LineShape& s, double t, double span,
                                             int n = 200001) {
  const double h = 2.0 * span / (n - 1);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = -span + i * h;
    const double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += wgt * eval_shape(s, d) * std::exp(std::complex<double>(0.0, -d * t));
  }
  return acc * h;
}

}  // namespace

TEST_CASE("grid basics and symmetry") {
  auto g = DetuningGrid::symmetric(2.0, 401);
  CHECK(g.size() == 401);
  CHECK(g.at(200) == 0.0);  // odd symmetric grid contains zero exactly
  for (int i = 0; i < g.size(); ++i) CHECK(g.at(i) == -g.at(g.size() - 1 - i));
  CHECK(g.spacing() == doctest::Approx(0.01));
  CHECK_THROWS_AS(DetuningGrid(0.0, 0.0, 8), InputError);
  CHECK_THROWS_AS(DetuningGrid(0.0, 1.0, 1), InputError);
}

TEST_CASE("eval_shape values") {
  // gaussian(fwhm=1) at 0: sqrt(4 ln 2 / pi)
  CHECK(eval_shape(LineShape::gaussian(1.0), 0.0) == doctest::Approx(0.9394372787).epsilon(1e-9));
  // half maximum at half width
  CHECK(eval_shape(LineShape::gaussian(1.0), 0.5) ==
        doctest::Approx(0.5 * 0.9394372787).epsilon(1e-12));
  // rectangular outside support
  CHECK(eval_shape(LineShape::rectangular(1.0), 0.6) == 0.0);
  CHECK(eval_shape(LineShape::rectangular(1.0), 0.4) == 1.0);
  CHECK(eval_shape(LineShape::rectangular(1.0), 0.5) == 0.5);  // edge midpoint
  // lorentzian peak 1/(pi hwhm)
  for (double om : {0.01, 0.3, 2.0})
    CHECK(eval_shape(LineShape::lorentzian(om), 0.0) == doctest::Approx(1.0 / (M_PI * om)));
  CHECK_THROWS_AS(eval_shape(LineShape::gaussian(1.0), NAN), InputError);
  CHECK_THROWS_AS(LineShape::gaussian(0.0), InputError);
}

TEST_CASE("every line shape has unit area over 8x its width") {
  for (auto s : {LineShape::gaussian(0.7), LineShape::rectangular(1.3),
                 LineShape::lorentzian(0.002)}) {
    // Lorentzian wings carry visible mass; integrate its analytic CDF instead
    // of brute trapezoid when checking the 1e-6 contract.
    if (s.kind == ShapeKind::lorentzian) {
      const double span = 0.002 * 4;  // 8x width window per the contract
      const double mass = 2.0 / M_PI * std::atan(span / s.width);
      double num = 0.0;
      const int n = 80001;
      const double h = 2 * span / (n - 1);
      for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        num += w * eval_shape(s, -span + i * h);
      }
      CHECK(num * h == doctest::Approx(mass).epsilon(1e-8));
      continue;
    }
    const double span = 4.0 * s.width;
    const int n = 40001;
    const double h = 2 * span / (n - 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      acc += w * eval_shape(s, -span + i * h);
    }
    CHECK(acc * h == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("tooth_transform closed forms against quadrature") {
  // kappa~(0) = 1 exactly
  CHECK(tooth_transform(LineShape::gaussian(0.3), 0.0) == std::complex<double>(1.0));
  CHECK(tooth_transform(LineShape::rectangular(0.2), 0.0) == std::complex<double>(1.0));

  // gaussian tooth at the revival time: exp(-pi^2 b^2/(zeta delta^2))
  const double b = 0.005, delta = 0.05;
  const double t = 2.0 * M_PI / delta;
  const double expect = std::exp(-M_PI * M_PI * b * b / (kZeta * delta * delta));
  CHECK(std::abs(tooth_transform(LineShape::gaussian(b), t)) ==
        doctest::Approx(expect).epsilon(1e-12));
  // finesse 10 reference number
  CHECK(std::exp(-M_PI * M_PI / (kZeta * 100.0)) == doctest::Approx(0.9650).epsilon(1e-4));

  // rectangle: sinc(pi b / delta)
  const double x = M_PI * b / delta;
  CHECK(tooth_transform(LineShape::rectangular(b), t).real() ==
        doctest::Approx(std::sin(x) / x).epsilon(1e-12));

  // quadrature cross-checks
  auto q1 = transform_by_quadrature(LineShape::gaussian(b), t, 6 * b);
  CHECK(std::abs(q1 - tooth_transform(LineShape::gaussian(b), t)) < 1e-10);
  // keep the quadrature nodes strictly inside the support so the edge
  // midpoint convention does not skew the trapezoid
  auto q2 = transform_by_quadrature(LineShape::rectangular(b), t, 0.5 * b * (1.0 - 1e-12));
  CHECK(std::abs(q2 - tooth_transform(LineShape::rectangular(b), t)) < 1e-10);
}

TEST_CASE("tooth_transform magnitude bounded and even in t") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> tdist(-300.0, 300.0);
  for (auto s : {LineShape::gaussian(0.02), LineShape::rectangular(0.02),
                 LineShape::lorentzian(0.02)}) {
    for (int i = 0; i < 200; ++i) {
      const double t = tdist(rng);
      const auto v = tooth_transform(s, t);
      CHECK(std::abs(v) <= 1.0 + 1e-12);
      CHECK(std::abs(v - tooth_transform(s, -t)) < 1e-14);
    }
  }
}

TEST_CASE("finesse law for gaussian teeth to 1e-10") {
  const double delta = 0.05;
  for (double F : {5.0, 10.0, 20.0}) {
    const double b = delta / F;
    const double t = 2.0 * M_PI / delta;
    const auto kap = tooth_transform(LineShape::gaussian(b), t);
    const double law = std::exp(-2.0 * M_PI * M_PI / (kZeta * F * F));
    CHECK(std::norm(kap) == doctest::Approx(law).epsilon(1e-12));
    const auto quad = transform_by_quadrature(LineShape::gaussian(b), t, 6 * b);
    CHECK(std::abs(std::norm(quad) - law) < 1e-10);
  }
}

TEST_CASE("build_comb matches envelope at tooth tops") {
  CombSpec spec;
  spec.envelope = LineShape::gaussian(1.0);
  spec.tooth = LineShape::gaussian(0.005);
  spec.spacing = 0.05;
  auto grid = DetuningGrid::symmetric(2.0, 4001);  // h = 1e-3 = b/5
  auto comb = build_comb(spec, grid);

  // C(0)/G(0) = 1 within 1%
  const int i0 = grid.nearest_index(0.0);
  CHECK(comb.values[i0] / eval_shape(spec.envelope, 0.0) == doctest::Approx(1.0).epsilon(0.01));
  // several tooth tops across the envelope
  for (int n : {1, 5, 10, 20}) {
    const int i = grid.nearest_index(n * spec.spacing);
    CHECK(comb.values[i] / eval_shape(spec.envelope, grid.at(i)) ==
          doctest::Approx(1.0).epsilon(0.01));
  }
  // midpoint between teeth: suppressed to the tooth tail level
  const int imid = grid.nearest_index(0.5 * spec.spacing);
  const double bound =
      std::exp(-kZeta * std::pow(spec.spacing / (2 * spec.tooth.width), 2)) + 1e-12;
  CHECK(comb.values[imid] / eval_shape(spec.envelope, grid.at(imid)) <= bound);

  // integral = (b/delta) sqrt(pi/zeta) x envelope mass within 2%
  const double envelope_mass = profile_mass(sample_shape(spec.envelope, grid));
  const double expected =
      spec.tooth.width / spec.spacing * std::sqrt(M_PI / kZeta) * envelope_mass;
  CHECK(profile_mass(comb) == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("build_comb rejects an under-resolved grid with the required n") {
  CombSpec spec;
  spec.tooth = LineShape::gaussian(0.005);
  spec.spacing = 0.05;
  auto coarse = DetuningGrid::symmetric(2.0, 801);
  CHECK_THROWS_AS(build_comb(spec, coarse), ResolutionError);
  try {
    build_comb(spec, coarse);
  } catch (const ResolutionError& e) {
    CHECK(std::string(e.what()).find("n >=") != std::string::npos);
  }
}

TEST_CASE("build_comb stable under grid refinement") {
  CombSpec spec;
  spec.tooth = LineShape::gaussian(0.01);
  spec.spacing = 0.1;
  auto g1 = DetuningGrid::symmetric(2.0, 4001);
  auto g2 = DetuningGrid::symmetric(2.0, 8001);
  auto c1 = build_comb(spec, g1);
  auto c2 = build_comb(spec, g2);
  for (int n : {0, 3, 7}) {
    const double top1 = c1.values[g1.nearest_index(n * spec.spacing)];
    const double top2 = c2.values[g2.nearest_index(n * spec.spacing)];
    CHECK(top1 == doctest::Approx(top2).epsilon(1e-3));
  }
}

TEST_CASE("comb spec ordering enforced, ratio warnings emitted") {
  CombSpec bad;
  bad.tooth = LineShape::gaussian(0.2);
  bad.spacing = 0.1;
  CHECK_THROWS_AS(bad.validate(), InputError);

  CombSpec warned;
  warned.tooth = LineShape::gaussian(0.03);
  warned.spacing = 0.09;  // b/delta = 1/3 > 0.2
  std::vector<std::string> w;
  warned.validate(&w);
  CHECK(w.size() == 1);
}

TEST_CASE("special functions against tabulated values") {
  // mpmath, 30 digits
  CHECK(erfi(0.1) == doctest::Approx(0.113215174169599799).epsilon(1e-12));
  CHECK(erfi(0.5) == doctest::Approx(0.614952094696510981).epsilon(1e-12));
  CHECK(erfi(1.0) == doctest::Approx(1.650425758797542876).epsilon(1e-12));
  CHECK(erfi(2.0) == doctest::Approx(18.564802414575552599).epsilon(1e-12));
  CHECK(erfi(3.0) == doctest::Approx(1629.994622601565651).epsilon(1e-12));
  CHECK(erfi(-1.0) == doctest::Approx(-1.650425758797542876).epsilon(1e-12));
  CHECK(erfcx(0.5) == doctest::Approx(0.615690344192925875).epsilon(1e-12));
  CHECK(erfcx(1.0) == doctest::Approx(0.427583576155807004).epsilon(1e-12));
  CHECK(erfcx(2.0) == doctest::Approx(0.255395676310505744).epsilon(1e-12));
  CHECK(erfcx(5.0) == doctest::Approx(0.110704637733068626).epsilon(1e-12));
  CHECK(erfcx(15.0) == doctest::Approx(0.037529606388505766).epsilon(1e-12));
  CHECK(erfcx(30.0) == doctest::Approx(0.018795888861416751).epsilon(1e-12));
  CHECK(dawson(1.0) == doctest::Approx(0.538079506912768419).epsilon(1e-12));
}
