#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "branching_oracle.hpp"
#include "twistr/errors.hpp"

using namespace twistr;

namespace {

std::set<std::string> labels(const BranchingTable& t) {
  std::set<std::string> out;
  for (const auto& e : t.entries) out.insert(weight_label(t.spec, e.nu));
  return out;
}

bool same_parent(const BranchingTable& t, const std::string& x, const std::string& y) {
  const LParent* px = nullptr;
  const LParent* py = nullptr;
  for (const auto& e : t.entries) {
    if (weight_label(t.spec, e.nu) == x) px = &e.parent;
    if (weight_label(t.spec, e.nu) == y) py = &e.parent;
  }
  REQUIRE(px);
  REQUIRE(py);
  return *px == *py;
}

std::set<std::set<Weight>> library_groups(const BranchingTable& t) {
  std::map<LParent, std::set<Weight>> g;
  for (const auto& e : t.entries) g[e.parent].insert(e.nu);
  std::set<std::set<Weight>> out;
  for (auto& [p, s] : g) out.insert(s);
  return out;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void compare_with_oracle(Family f, int l, int p, int s) {
  INFO(family_name(f), " l=", l, " params=", p, ",", s);
  const BranchingTable t = decompose_tensor_closed_form(family_spec(f, l), {p, s});
  const oracle::TwistedTable o = oracle::twisted_table(f, l, p, s);
  std::map<Weight, long> lib;
  for (const auto& e : t.entries) {
    lib[e.nu] += 1;
    CHECK(e.dim == o.dims.at(e.nu));
  }
  CHECK(lib == o.components);
  CHECK(library_groups(t) == o.groups);
  // direct convolution over the fixed subalgebra agrees too
  std::map<Weight, long> direct;
  for (const auto& [nu, m] : oracle::small_tensor(f, l, p, s)) direct[Weight::doubled(nu)] = m;
  CHECK(direct == o.components);
}

}  // namespace

TEST_CASE("closed-form tables") {
  const BranchingTable a = decompose_tensor_closed_form(family_spec(Family::A2Even, 2), {1, 1});
  CHECK(labels(a) == std::set<std::string>{"2λ1", "λ2", "0"});
  CHECK(weight_label(a.spec, a.entries.front().nu) == "2λ1");

  const BranchingTable b = decompose_tensor_closed_form(family_spec(Family::A2Odd, 3), {1, 2});
  CHECK(labels(b) == std::set<std::string>{"3λ1", "λ1+λ2", "λ1"});
  long total = 0;
  for (const auto& e : b.entries) total += e.dim;
  CHECK(total == 6 * 21);
  CHECK(b.find(Weight::from_ints({3, 0, 0})).dim == 56);
  CHECK(b.find(Weight::from_ints({2, 1, 0})).dim == 64);

  const BranchingTable d = decompose_tensor_closed_form(family_spec(Family::D2, 2), {1, 1});
  CHECK(labels(d) == std::set<std::string>{"2λ2", "λ1", "0"});
}

TEST_CASE("parent grouping") {
  const BranchingTable a = decompose_tensor_closed_form(family_spec(Family::A2Even, 2), {1, 1});
  CHECK(same_parent(a, "0", "2λ1"));
  CHECK_FALSE(same_parent(a, "λ2", "2λ1"));
  const BranchingTable b = decompose_tensor_closed_form(family_spec(Family::A2Odd, 3), {1, 1});
  CHECK(same_parent(b, "λ2", "0"));
  CHECK_FALSE(same_parent(b, "λ2", "2λ1"));
  const BranchingTable d = decompose_tensor_closed_form(family_spec(Family::D2, 2), {1, 1});
  // so(6) spinor square: 10 + 6, and the vector 6 restricts to 5 + 1
  CHECK(same_parent(d, "λ1", "0"));
  CHECK_FALSE(same_parent(d, "2λ2", "0"));
  CHECK(l_parent_of(d, Weight::from_ints({1, 0})) == d.find(Weight::from_ints({1, 0})).parent);
  CHECK_THROWS(l_parent_of(d, Weight::from_ints({3, 0})));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate_params(family_spec(Family::A2Even, 3), {2, 1}), ValidationError);
  CHECK_THROWS_AS(validate_params(family_spec(Family::A2Even, 3), {0, 1}), ValidationError);
  CHECK_THROWS_AS(validate_params(family_spec(Family::A2Even, 3), {1, 4}), ValidationError);
  CHECK_NOTHROW(validate_params(family_spec(Family::A2Even, 3), {3, 3}));
  CHECK_NOTHROW(validate_params(family_spec(Family::A2Odd, 3), {4, 7}));
  CHECK_THROWS_AS(decompose_tensor_closed_form(family_spec(Family::D2, 2), {2, 1}), ValidationError);
}

TEST_CASE("theta0 modules") {
  for (int l = 1; l <= 5; ++l) {
    CHECK(theta0_weights(family_spec(Family::A2Even, l)).size() ==
          static_cast<std::size_t>((2 * l + 1) * (2 * l + 2) / 2 - 1));
    if (l >= 2) CHECK(theta0_weights(family_spec(Family::D2, l)).size() == static_cast<std::size_t>(2 * l + 1));
    if (l >= 3)
      CHECK(theta0_weights(family_spec(Family::A2Odd, l)).size() == static_cast<std::size_t>(l * (2 * l - 1) - 1));
  }
}

TEST_CASE("theta0 containment examples") {
  const FamilySpec b2 = family_spec(Family::A2Even, 2);
  CHECK(contains_in_theta_tensor(b2, Weight::from_ints({0, 0}), Weight::from_ints({2, 0})));
  CHECK(contains_in_theta_tensor(b2, Weight::from_ints({2, 0}), Weight::from_ints({1, 1})));
  const FamilySpec c3 = family_spec(Family::A2Odd, 3);
  CHECK_FALSE(contains_in_theta_tensor(c3, Weight::from_ints({2, 0, 0}), Weight::from_ints({3, 0, 0})));
  CHECK(contains_in_theta_tensor(c3, Weight::from_ints({2, 0, 0}), Weight::from_ints({2, 1, 1})));
}

TEST_CASE("Klimyk multiplicities agree with character convolution") {
  struct Case {
    Family f;
    int l;
    oracle::Algebra g;
  };
  const Case cases[] = {{Family::A2Even, 2, {oracle::Type::B, 2}},
                        {Family::A2Even, 3, {oracle::Type::B, 3}},
                        {Family::A2Odd, 3, {oracle::Type::C, 3}},
                        {Family::D2, 2, {oracle::Type::B, 2}},
                        {Family::D2, 3, {oracle::Type::B, 3}}};
  for (const auto& c : cases) {
    const FamilySpec s = family_spec(c.f, c.l);
    const oracle::W theta = s.theta0.twice_coords();
    // every dominant nu with coordinates up to 2 (half-integral ones for the spinor family)
    std::vector<oracle::W> nus;
    const int step = 2;
    std::function<void(int, int, oracle::W&)> rec = [&](int i, int top, oracle::W& cur) {
      if (i == c.l) {
        nus.push_back(cur);
        return;
      }
      for (int v = top; v >= 0; v -= step) {
        cur[static_cast<std::size_t>(i)] = v;
        rec(i + 1, v, cur);
      }
    };
    for (int start : c.f == Family::D2 ? std::vector<int>{4, 5} : std::vector<int>{4}) {
      oracle::W cur(static_cast<std::size_t>(c.l));
      rec(0, start, cur);
    }
    for (const auto& nu : nus) {
      const auto prod = oracle::tensor_decompose(c.g, theta, nu);
      std::set<oracle::W> candidates;
      for (const auto& [x, m] : prod) candidates.insert(x);
      for (const auto& x : candidates) {
        INFO(family_name(c.f), " l=", c.l);
        CHECK(theta_tensor_multiplicity(s, Weight::doubled(nu), Weight::doubled(x)) == prod.at(x));
      }
      // and nothing outside the oracle's list, probed on nearby weights
      for (const auto& y : nus)
        if (!prod.contains(y)) CHECK(theta_tensor_multiplicity(s, Weight::doubled(nu), Weight::doubled(y)) == 0);
    }
  }
}

TEST_CASE("branching agrees with the brute-force oracle for small ranks") {
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= l; ++k)
      for (int r = k; r <= l; ++r) compare_with_oracle(Family::A2Even, l, k, r);
  for (int k = 1; k <= 2; ++k)
    for (int r = k; r <= 2; ++r) compare_with_oracle(Family::A2Odd, 3, k, r);
  for (int l = 2; l <= 3; ++l)
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 2; ++b) compare_with_oracle(Family::D2, l, a, b);
}

TEST_CASE("dimension formulas for the A2-even tables") {
  for (int l = 1; l <= 4; ++l) {
    const int n = 2 * l + 1;
    const oracle::Algebra gl{oracle::Type::A, n}, b{oracle::Type::B, l};
    // L-irreps lambda_a + lambda_b of gl(n)
    for (int a = 0; a <= n - 1; ++a)
      for (int bb = a; bb <= n - 1; ++bb) {
        oracle::W hw(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < a; ++i) hw[static_cast<std::size_t>(i)] += 2;
        for (int i = 0; i < bb; ++i) hw[static_cast<std::size_t>(i)] += 2;
        const long formula = (bb - a + 1) * binom(n + 1, a) * binom(n + 1, bb + 1) / (n + 1);
        CHECK((bb - a + 1) * binom(n + 1, a) * binom(n + 1, bb + 1) % (n + 1) == 0);
        CHECK(oracle::dimension(gl, hw) == formula);
      }
    // L0-irreps lambda_c + lambda_d of B_l
    for (int c = 0; c <= l; ++c)
      for (int d = c; d <= l; ++d) {
        Weight nu(static_cast<std::size_t>(l));
        for (int i = 0; i < c; ++i) nu.twice(static_cast<std::size_t>(i)) += 2;
        for (int i = 0; i < d; ++i) nu.twice(static_cast<std::size_t>(i)) += 2;
        const long num = (1 + d - c) * (n + 1 - c - d) * binom(n + 2, c) * binom(n + 2, d + 1);
        CHECK(num % ((n + 1) * (n + 2)) == 0);
        CHECK(weyl_dim(RootType::B, nu) == num / ((n + 1) * (n + 2)));
        CHECK(oracle::dimension(b, nu.twice_coords()) == num / ((n + 1) * (n + 2)));
      }
  }
}

TEST_CASE("dimension formulas for the A2-odd tables") {
  for (int l = 3; l <= 4; ++l) {
    const int n = 2 * l;
    const oracle::Algebra gl{oracle::Type::A, n}, c{oracle::Type::C, l};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 4; ++b) {
        oracle::W hw(static_cast<std::size_t>(n), 0);
        hw[0] = 2 * (a + b);
        hw[1] = 2 * a;
        const long num = (b + 1) * binom(a + b + n - 1, n - 2) * binom(a + n - 2, n - 2);
        CHECK(num % (n - 1) == 0);
        CHECK(oracle::dimension(gl, hw) == num / (n - 1));
      }
    for (int cc = 0; cc <= 3; ++cc)
      for (int d = 0; d <= 4; ++d) {
        Weight nu(static_cast<std::size_t>(l));
        nu.twice(0) = 2 * (cc + d);
        nu.twice(1) = 2 * cc;
        const long num = (1 + d) * (2 * cc + d + n - 1) * binom(cc + d + n - 2, n - 3) * binom(cc + n - 3, n - 3);
        CHECK(num % ((n - 1) * (n - 2)) == 0);
        CHECK(weyl_dim(RootType::C, nu) == num / ((n - 1) * (n - 2)));
        CHECK(oracle::dimension(c, nu.twice_coords()) == num / ((n - 1) * (n - 2)));
      }
  }
}

TEST_CASE("Weyl dimensions agree with Freudenthal") {
  for (int l = 2; l <= 4; ++l)
    for (const auto& nu : std::vector<oracle::W>{{2}, {4}, {2, 2}, {1, 1}, {3, 1}, {3, 3}, {4, 2}}) {
      oracle::W x(static_cast<std::size_t>(l), nu.back() % 2 == 0 ? 0 : 1);
      for (std::size_t i = 0; i < nu.size(); ++i) x[i] = nu[i];
      if (!oracle::dominant({oracle::Type::B, l}, x)) continue;
      CHECK(weyl_dim(RootType::B, Weight::doubled(x)) == oracle::dimension({oracle::Type::B, l}, x));
      if (x.back() % 2 == 0)
        CHECK(weyl_dim(RootType::C, Weight::doubled(x)) == oracle::dimension({oracle::Type::C, l}, x));
    }
}
