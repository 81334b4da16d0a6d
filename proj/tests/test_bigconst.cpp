#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "thetakit/tower.hpp"

using namespace thetakit;
using boost::multiprecision::cpp_int;

namespace {

std::string exact_str(const TowerInt& x) {
  auto v = x.exact();
  return v ? v->get_str() : "?";
}

// Random expression together with its value computed by an independent backend.
struct Sample {
  TowerInt expr;
  cpp_int value;
};

Sample random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    const unsigned long v = rng() % 40;
    return {TowerInt(v), cpp_int(v)};
  }
  Sample a = random_expr(rng, depth - 1);
  switch (rng() % 4) {
    case 0: {
      Sample b = random_expr(rng, depth - 1);
      return {a.expr + b.expr, a.value + b.value};
    }
    case 1: {
      Sample b = random_expr(rng, depth - 1);
      if (a.value < b.value) std::swap(a, b);
      return {a.expr - b.expr, a.value - b.value};
    }
    case 2: {
      Sample b = random_expr(rng, depth - 1);
      return {a.expr * b.expr, a.value * b.value};
    }
    default: {
      // Keep the value below ~10^4 digits.
      const unsigned bits = static_cast<unsigned>(msb(a.value + 1)) + 1;
      const unsigned e = static_cast<unsigned>(rng() % (30000 / bits + 1));
      return {tpow(a.expr, TowerInt(static_cast<unsigned long>(e))), pow(a.value, e)};
    }
  }
}

}  // namespace

TEST(Sigma, Examples) {
  EXPECT_EQ(exact_str(sigma(2, 1)), "2");
  EXPECT_EQ(exact_str(sigma(2, 2)), "256");
  EXPECT_EQ(exact_str(sigma(3, 2)), "531441");
  EXPECT_THROW(sigma(0, 1), InvalidInput);
}

TEST(TreeConstants, Examples) {
  EXPECT_EQ(exact_str(tree_constants(2, 1).theta), "3");
  EXPECT_EQ(exact_str(tree_constants(2, 1).mu), "1");
  EXPECT_EQ(exact_str(tree_constants(2, 1).lambda), "0");
  EXPECT_EQ(exact_str(tree_constants(1, 2).theta), "531441");
  EXPECT_EQ(exact_str(tree_constants(1, 2).lambda), "3188642");
  // mu_2 at a=1 is (3*1+2)^3.
  EXPECT_EQ(exact_str(tree_constants(1, 2).mu), "125");
  // theta_2 at a=2 is 3^1728, 825 digits.
  EXPECT_EQ(tree_constants(2, 2).theta.exact()->get_str().size(), 825U);
  // theta_3 at a=2 stays symbolic.
  EXPECT_FALSE(tree_constants(2, 3).theta.exact().has_value());
  EXPECT_EQ(tree_constants(2, 3).theta.str(), "3^(12^((3*2^(2) - 1)))");
}

TEST(Constants, SepAndMain) {
  EXPECT_EQ(exact_str(sep_constant(TowerInt(125), TowerInt(3188642))), "3188767");
  EXPECT_EQ(exact_str(sep_constant(TowerInt(1), TowerInt(0))), "1");
  auto sym = sep_constant(tree_constants(2, 3).mu, tree_constants(2, 3).lambda);
  EXPECT_EQ(sym.op(), TowerInt::Op::add);
  EXPECT_EQ(exact_str(main_constant(TowerInt(1), TowerInt(1))), "3");
  EXPECT_EQ(exact_str(main_constant(TowerInt(3), TowerInt(2))), "10");
  EXPECT_EQ(main_constant(tree_constants(2, 3).theta, TowerInt(5)).op(), TowerInt::Op::mul);
}

TEST(TowerCompare, Examples) {
  EXPECT_EQ(tower_compare(tpow(3, tpow(12, 3)), tpow(2, tpow(2, 12))), std::strong_ordering::less);
  EXPECT_EQ(tower_compare(tpow(2, 10), TowerInt(1000)), std::strong_ordering::greater);
  auto th = tree_constants(2, 3).theta;
  EXPECT_EQ(tower_compare(th, th), std::strong_ordering::equal);
  CompareOptions sym;
  sym.force_symbolic = true;
  EXPECT_EQ(tower_compare(tpow(3, tpow(12, 3)), tpow(2, tpow(2, 12)), sym), std::strong_ordering::less);
  EXPECT_EQ(tower_compare(tpow(2, 10), TowerInt(1000), sym), std::strong_ordering::greater);
}

TEST(TowerCompare, Towers) {
  // 3^(12^11) against neighbours that differ by one.
  auto th = tree_constants(2, 3).theta;
  EXPECT_EQ(tower_compare(th + TowerInt(1), th), std::strong_ordering::greater);
  EXPECT_EQ(tower_compare(th, th * TowerInt(2) - th), std::strong_ordering::equal);
  EXPECT_EQ(tower_compare(tpow(3, tpow(12, 11)), tpow(2, tpow(12, 11) * TowerInt(2))),
            std::strong_ordering::less);
  EXPECT_EQ(tower_compare(tpow(3, tpow(12, 11)) * TowerInt(4), tpow(3, tpow(12, 11) + TowerInt(1))),
            std::strong_ordering::greater);
  EXPECT_EQ(tower_compare(tpow(2, tpow(2, tpow(2, 20))), tpow(3, tpow(3, 100000))), std::strong_ordering::greater);
}

TEST(TowerCompare, AgreesWithExactComparison) {
  std::mt19937_64 rng(1234);
  int done = 0;
  int beyond_fold = 0;
  CompareOptions sym;
  sym.force_symbolic = true;
  while (done < 100) {
    Sample a = random_expr(rng, 4);
    Sample b = random_expr(rng, 4);
    if (a.value.str().size() > 10000 || b.value.str().size() > 10000) continue;
    ++done;
    if (a.value.str().size() > 2000 || b.value.str().size() > 2000) ++beyond_fold;
    const auto want = a.value.compare(b.value) <=> 0;
    ASSERT_EQ(tower_compare(a.expr, b.expr), want) << a.expr.str() << " vs " << b.expr.str();
    auto got = tower_compare(a.expr, b.expr, sym);
    EXPECT_EQ(got, want) << "symbolic: " << a.expr.str() << " vs " << b.expr.str();
    ASSERT_EQ(a.expr.exact()->get_str(), a.value.str());
  }
  // Enough pairs are large enough to stay unfolded in the canonical form.
  EXPECT_GT(beyond_fold, 20);
}

TEST(TowerInt, CanonicalFormKeepsValue) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    Sample a = random_expr(rng, 4);
    if (a.value.str().size() > 1500) continue;
    // Small canonical forms fold into a single constant.
    const Poly& p = a.expr.canonical();
    if (a.value == 0) {
      EXPECT_TRUE(p.terms.empty());
    } else {
      ASSERT_EQ(p.terms.size(), 1U);
      EXPECT_TRUE(p.terms[0].factors.empty());
      EXPECT_EQ(p.terms[0].coef.get_str(), a.value.str());
    }
  }
}

TEST(SigmaInequalities, Examples) {
  EXPECT_TRUE(verify_sigma_inequalities(2, 2, 2, 2).holds);
  EXPECT_TRUE(verify_sigma_inequalities(3, 3, 2, 3).holds);
  EXPECT_THROW(verify_sigma_inequalities(2, 2, 1, 2), InvalidInput);
  EXPECT_THROW(verify_sigma_inequalities(1, 2, 2, 2), InvalidInput);
  EXPECT_EQ(verify_sigma_inequalities(2, 2, 2, 2).checks.size(), 2U);
  EXPECT_TRUE(verify_sigma_inequalities(2, 2, 2, 1).checks.empty());
}

TEST(SigmaInequalities, WholeGridAndMonotone) {
  for (int s = 2; s <= 3; ++s)
    for (int a = 2; a <= 3; ++a)
      for (int t = 2; t <= 3; ++t) {
        auto r2 = verify_sigma_inequalities(a, t, s, 2);
        auto r3 = verify_sigma_inequalities(a, t, s, 3);
        EXPECT_TRUE(r3.holds) << a << " " << t << " " << s;
        EXPECT_GE(r3.checks.size(), r2.checks.size());
        EXPECT_TRUE(!r3.holds || r2.holds);
      }
}

TEST(TreeConstants, RecursionIdentity) {
  for (int a = 1; a <= 2; ++a)
    for (int t = 2; t <= 3; ++t) {
      auto c1 = tree_constants(a, 1);
      auto c2 = tree_constants(a, 2);
      TowerInt lhs = c2.mu * tpow(t, c2.lambda);
      TowerInt inner = tpow(t, TowerInt(2) * (c2.theta - TowerInt(1))) * c1.mu * tpow(t, c1.lambda);
      TowerInt rhs = tpow((TowerInt(3) * tpow(a, TowerInt(2) * c2.theta) + TowerInt(2)) * inner, 3) * tpow(t, 2);
      EXPECT_TRUE(same_canonical(lhs, rhs)) << "a=" << a << " t=" << t;
      EXPECT_EQ(tower_compare(lhs, rhs), std::strong_ordering::equal);
    }
}

TEST(TowerInt, Rendering) {
  EXPECT_EQ(decimal(TowerInt(42)).value(), "42");
  EXPECT_FALSE(decimal(tree_constants(2, 3).theta).has_value());
  EXPECT_EQ(digit_estimate(tree_constants(2, 2).theta), "825");
  EXPECT_EQ(digit_estimate(tpow(10, 99)), "100");
  EXPECT_THROW(TowerInt(-1), InvalidInput);
  EXPECT_THROW((TowerInt(1) - TowerInt(2)).exact(), InvalidInput);
}
