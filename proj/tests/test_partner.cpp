#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/closed_forms.hpp"
#include "susyq/error.hpp"
#include "susyq/oracle.hpp"
#include "susyq/partner.hpp"

namespace {

using namespace susyq;

PartnerPotential quartic_example() {
  return PartnerPotential({make_seed(-5.5, Parity::odd), make_seed(-4.5, Parity::even),
                           make_seed(-3.5, Parity::odd), make_seed(-2.5, Parity::even)});
}

// class B pair, even below odd
PartnerPotential even_odd_pair() {
  return PartnerPotential({make_seed(0.8, Parity::even), make_seed(1.2, Parity::odd)});
}

std::vector<double> sample(double lo, double hi, int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    xs.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return xs;
}

double overlap(const RealFunction& f, const RealFunction& g, const Grid& grid) {
  const int panels = 2 * ((grid.n + 2) / 2);
  const double step = (grid.x_max - grid.x_min) / panels;
  std::vector<double> v(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) {
    const double x = grid.x_min + i * step;
    v[static_cast<std::size_t>(i)] = f(x) * g(x);
  }
  return simpson(v, step);
}

TEST(BaseState, ValuesAndNorms) {
  const auto psi0 = make_base_state(Branch::odd, 0);
  const auto chi0 = make_base_state(Branch::even, 0);
  EXPECT_EQ(base_state_value(psi0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(psi0.energy, 1.5);
  EXPECT_DOUBLE_EQ(chi0.energy, 0.5);
  EXPECT_NEAR(chi0.norm_constant, 1.0 / std::sqrt(std::sqrt(std::numbers::pi) / 2.0), 1e-15);
  EXPECT_NEAR(base_state_value(psi0, 0.7),
              psi0.norm_constant * std::exp(-0.245) * 1.4, 1e-15);
  const Grid grid{1e-12, 12.0, 6000};
  for (int n = 0; n < 5; ++n) {
    for (Branch b : {Branch::odd, Branch::even}) {
      const auto s = make_base_state(b, n);
      const double norm = overlap([&](double x) { return base_state_value(s, x); },
                                  [&](double x) { return base_state_value(s, x); }, grid);
      EXPECT_NEAR(norm, 1.0, 1e-8) << to_string(b) << n;
    }
  }
  EXPECT_THROW(make_base_state(Branch::odd, -1), invalid_parameter);
  EXPECT_THROW(base_state_value(psi0, -0.1), domain_error);
}

TEST(BaseState, HermiteRecurrence) {
  EXPECT_EQ(hermite(0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(hermite(3, 0.5), 8 * 0.125 - 12 * 0.5);
  EXPECT_DOUBLE_EQ(hermite(4, 1.0), 16 - 48 + 12);
}

TEST(PartnerV, FirstOrderOddGroundSeed) {
  const PartnerPotential p({make_seed(1.5, Parity::odd)});
  for (double x : {0.05, 0.3, 1.0, 2.0, 6.0}) {
    const double exact = 0.5 * x * x + 1.0 + 1.0 / (x * x);
    EXPECT_NEAR(partner_v(p, x), exact, 1e-10 * exact);
  }
}

TEST(PartnerV, FlatShiftForGroundPair) {
  const PartnerPotential p({make_seed(0.5, Parity::even), make_seed(1.5, Parity::odd)});
  for (double x : {0.1, 1.0, 3.0, 8.0}) {
    EXPECT_NEAR(partner_v(p, x), 0.5 * x * x + 2.0, 1e-9 * (1 + x * x));
  }
}

TEST(PartnerV, QuarticExampleClosedForm) {
  const auto p = quartic_example();
  EXPECT_NEAR(partner_v(p, 1.0), -92815.0 / 27378.0, 1e-10);
  EXPECT_NEAR(ref::quartic_example_potential(1.0), -92815.0 / 27378.0, 1e-13);
  for (int i = 1; i <= 60; ++i) {
    const double x = 0.1 * i;
    EXPECT_NEAR(partner_v(p, x), ref::quartic_example_potential(x), 1e-8) << x;
  }
}

// Six close class-B seeds: the columns nearly coincide for large x. Values
// from an 80-digit evaluation (hyp1f1 seeds, numerical (ln W)'').
TEST(PartnerV, CloseSeedsAtLargeX) {
  const double e[] = {0.614284, 0.778473, 0.839153, 0.911762, 1.097745, 1.237887};
  std::vector<SeedSolution> seeds;
  for (int i = 0; i < 6; ++i) {
    seeds.push_back(make_seed(e[i], i % 2 == 0 ? Parity::even : Parity::odd));
  }
  const PartnerPotential p(seeds);
  EXPECT_NEAR(partner_v(p, 1.0), 0.10531240908849275321, 1e-11);
  EXPECT_NEAR(partner_v(p, 3.0), -0.93467840205829898617, 1e-11);
  EXPECT_NEAR(partner_v(p, 5.84872), -9.405722667037899521, 1e-10);
  EXPECT_NEAR(partner_v(p, 8.0), 25.523047434515316503, 1e-10);

  const std::vector<SeedSolution> four{make_seed(0.6, Parity::odd), make_seed(0.9, Parity::even),
                                       make_seed(1.0, Parity::odd), make_seed(1.3, Parity::even)};
  const PartnerPotential q(four);
  EXPECT_NEAR(partner_v(q, 5.0), 8.1977083716104596552, 1e-10);
  EXPECT_NEAR(partner_v(q, 9.0), 36.333370995467364208, 1e-10);
}

TEST(PartnerV, EmptyPlanIsOscillator) {
  const PartnerPotential p({});
  EXPECT_EQ(p.order(), 0);
  EXPECT_DOUBLE_EQ(partner_v(p, 3.0), 4.5);
  EXPECT_THROW(partner_v(p, 0.0), domain_error);
}

TEST(PartnerV, RejectsUnorderedSeeds) {
  EXPECT_THROW(PartnerPotential({make_seed(1.2, Parity::odd), make_seed(0.8, Parity::even)}),
               invalid_parameter);
  EXPECT_THROW(PartnerPotential({make_seed(0.8, Parity::odd), make_seed(0.8, Parity::even)}),
               invalid_parameter);
}

TEST(Transformed, EmptyPlanReturnsBaseState) {
  const PartnerPotential p({});
  const auto s = make_base_state(Branch::odd, 2);
  for (double x : {0.2, 1.3}) {
    EXPECT_DOUBLE_EQ(transformed_eigenfunction(p, s, x), base_state_value(s, x));
  }
}

TEST(Transformed, DegenerateEnergy) {
  const PartnerPotential p({make_seed(1.5, Parity::even)});
  EXPECT_THROW(transformed_eigenfunction(p, make_base_state(Branch::odd, 0), 1.0), degenerate_error);
}

TEST(Transformed, FirstOrderEvenSeedMatchesClosedForm) {
  for (double eps : {0.3, -1.7}) {
    const PartnerPotential p({make_seed(eps, Parity::even)});
    for (int n = 0; n < 3; ++n) {
      const auto s = make_base_state(Branch::even, n);
      const double c = transformed_eigenfunction(p, s, 1.0) / ref::first_order_even_image(n, eps, 1.0);
      for (double x : sample(0.15, 5.0, 25)) {
        const double ref_v = ref::first_order_even_image(n, eps, x);
        if (std::abs(ref_v) < 1e-8) {
          continue;  // near a node
        }
        EXPECT_NEAR(transformed_eigenfunction(p, s, x) / (c * ref_v), 1.0, 1e-9)
            << "eps=" << eps << " n=" << n << " x=" << x;
      }
    }
  }
}

TEST(Transformed, FirstOrderOddSeedMatchesClosedForm) {
  for (double eps : {0.3, 1.0}) {
    const PartnerPotential p({make_seed(eps, Parity::odd)});
    for (int n = 0; n < 3; ++n) {
      const auto s = make_base_state(Branch::odd, n);
      const double c = transformed_eigenfunction(p, s, 1.0) / ref::first_order_odd_image(n, eps, 1.0);
      for (double x : sample(0.15, 5.0, 25)) {
        const double ref_v = ref::first_order_odd_image(n, eps, x);
        if (std::abs(ref_v) < 1e-8) {
          continue;
        }
        EXPECT_NEAR(transformed_eigenfunction(p, s, x) / (c * ref_v), 1.0, 1e-9)
            << "eps=" << eps << " n=" << n << " x=" << x;
      }
    }
  }
}

TEST(Transformed, SecondOrderImagesAreNormalized) {
  const auto p = even_odd_pair();
  const Grid grid;
  for (int n = 0; n < 3; ++n) {
    const auto s = make_base_state(Branch::odd, n);
    const RealFunction f = [&](double x) { return transformed_eigenfunction(p, s, x); };
    const double norm = overlap(f, f, grid);
    EXPECT_NEAR(norm, 1.0, 1e-6) << n;
    EXPECT_NEAR(normalize(f, grid), 1.0, 1e-6) << n;
  }
}

TEST(Transformed, FirstOrderImagesAreNormalized) {
  const PartnerPotential p({make_seed(0.3, Parity::even)});
  const Grid grid;
  for (int n = 0; n < 3; ++n) {
    const auto s = make_base_state(Branch::even, n);
    const RealFunction f = [&](double x) { return transformed_eigenfunction(p, s, x); };
    EXPECT_NEAR(overlap(f, f, grid), 1.0, 1e-6) << n;
  }
}

TEST(AddedState, FirstOrderIsReciprocalSeed) {
  for (Parity par : {Parity::odd, Parity::even}) {
    const auto u = make_seed(-0.4, par);
    const PartnerPotential p({u});
    for (double x : {0.3, 1.0, 2.5}) {
      EXPECT_NEAR(added_state(p, 1, x) * seed_value(u, x), 1.0, 1e-13);
    }
  }
  EXPECT_THROW(added_state(PartnerPotential({make_seed(-0.4, Parity::odd)}), 2, 1.0), index_error);
}

TEST(AddedState, QuarticExampleClosedForms) {
  const auto p = quartic_example();
  EXPECT_NEAR(ref::quartic_example_phi2(1.0), -0.7823, 5e-5);
  // -2 e^{-1/2} (16 + 72 - 135) / (sqrt(3) pi^{1/4} 117)
  EXPECT_NEAR(ref::quartic_example_phi4(1.0), 94.0 * std::exp(-0.5) / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25) * 117.0), 1e-15);
  EXPECT_NEAR(ref::quartic_example_phi4(1.0), 0.211323, 5e-6);
  const std::pair<int, double (*)(double)> cases[] = {{2, ref::quartic_example_phi2},
                                                      {4, ref::quartic_example_phi4}};
  for (const auto& [j, phi] : cases) {
    const double c = added_state(p, j, 1.0) / phi(1.0);
    for (double x : sample(0.1, 6.0, 50)) {
      EXPECT_NEAR(added_state(p, j, x) / (c * phi(x)), 1.0, 1e-8) << "j=" << j << " x=" << x;
    }
  }
}

TEST(Normalize, Examples) {
  const Grid grid;
  const auto psi0 = make_base_state(Branch::odd, 0);
  EXPECT_NEAR(normalize([&](double x) { return base_state_value(psi0, x); }, grid), 1.0, 1e-6);
  EXPECT_NEAR(normalize([&](double x) { return 2 * base_state_value(psi0, x); }, grid), 0.5, 1e-6);
  const auto chi0 = make_base_state(Branch::even, 0);
  EXPECT_NEAR(normalize([](double x) { return std::exp(-0.5 * x * x); }, grid), chi0.norm_constant, 1e-6);
}

TEST(Normalize, Rejections) {
  const Grid grid;
  EXPECT_THROW(normalize([](double) { return 1.0; }, grid), non_normalizable);
  EXPECT_THROW(normalize([](double) { return 0.0; }, grid), non_normalizable);
  EXPECT_THROW(normalize([](double x) { return x > 2.0 ? NAN : std::exp(-x * x); }, grid), non_normalizable);
  EXPECT_THROW(normalize([](double) -> double { throw singularity_error("pole"); }, grid), non_normalizable);
  EXPECT_THROW(normalize([](double x) { return std::exp(-x * x); }, Grid{1e-4, 10.0, 10}), invalid_parameter);
}

struct NamedState {
  std::string name;
  double energy;
  RealFunction f;
};

std::vector<NamedState> physical_states(const PartnerPotential& p, Branch branch,
                                        const std::vector<int>& added, const Grid& grid) {
  std::vector<NamedState> states;
  for (int j : added) {
    const RealFunction raw = [&p, j](double x) { return added_state(p, j, x); };
    const double n = normalize(raw, grid);
    states.push_back({"phi" + std::to_string(j), p.seeds()[static_cast<std::size_t>(j - 1)].epsilon,
                      [raw, n](double x) { return n * raw(x); }});
  }
  for (int n = 0; n < 4; ++n) {
    const auto s = make_base_state(branch, n);
    states.push_back({"tilde" + std::to_string(n), s.energy,
                      [&p, s](double x) { return transformed_eigenfunction(p, s, x); }});
  }
  return states;
}

void check_residual_and_orthogonality(const PartnerPotential& p, Branch branch,
                                      const std::vector<int>& added) {
  const Grid grid;
  const auto states = physical_states(p, branch, added, grid);
  const RealFunction v = [&p](double x) { return partner_v(p, x); };
  const auto xs = sample(0.05, 6.0, 120);
  for (const auto& s : states) {
    EXPECT_LE(oracle::residual(v, s.f, s.energy, xs), 1e-4) << s.name;
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      EXPECT_LE(std::abs(overlap(states[i].f, states[j].f, grid)), 1e-5)
          << states[i].name << " " << states[j].name;
    }
  }
}

TEST(PartnerStates, QuarticExampleResidualAndOrthogonality) {
  check_residual_and_orthogonality(quartic_example(), Branch::odd, {2, 4});
}

TEST(PartnerStates, ClassBPairResidualAndOrthogonality) {
  check_residual_and_orthogonality(even_odd_pair(), Branch::odd, {1});
}

TEST(PartnerStates, FirstOrderAddsNoLevel) {
  const Grid grid;
  for (double eps : {-2.3, 0.3, 1.0}) {
    for (Parity par : {Parity::odd, Parity::even}) {
      const PartnerPotential p({make_seed(eps, par)});
      const RealFunction phi = [&p](double x) { return added_state(p, 1, x); };
      // 1/u is either nonzero (or infinite) at the origin or not square-integrable.
      bool rejected = std::abs(phi(1e-4)) >= std::abs(phi(1e-2)) / 5;
      if (!rejected) {
        try {
          normalize(phi, grid);
        } catch (const non_normalizable&) {
          rejected = true;
        }
      }
      EXPECT_TRUE(rejected) << eps << " " << to_string(par);
    }
  }
}

}  // namespace
