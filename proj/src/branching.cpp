#include "twistr/branching.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twistr/errors.hpp"

namespace twistr {

std::string LParent::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
  os << ']';
  return os.str();
}

const BranchEntry& BranchingTable::find(const Weight& nu) const {
  for (const auto& e : entries)
    if (e.nu == nu) return e;
  throw ValidationError("component " + nu.str() + " is not in the decomposition");
}

namespace {

// lambda_k = eps_1 + ... + eps_k in rank l (k may be 0).
Weight lam(int l, int k) {
  Weight w(static_cast<std::size_t>(l));
  for (int i = 0; i < k; ++i) w.twice(static_cast<std::size_t>(i)) = 2;
  return w;
}

}  // namespace

Weight factor_weight(const FamilySpec& spec, int p) {
  const auto L = static_cast<std::size_t>(spec.l);
  switch (spec.family) {
    case Family::A2Even: return lam(spec.l, p);
    case Family::A2Odd: return p * Weight::eps(L, 0);
    case Family::D2: return p * spec.seed_weight();
  }
  return {};
}

void validate_params(const FamilySpec& spec, const TensorParams& tp) {
  if (tp.p < 1 || tp.s < tp.p)
    throw ValidationError("tensor parameters must satisfy 1 <= first <= second (got " + std::to_string(tp.p) + ", " +
                          std::to_string(tp.s) + ")");
  if (spec.family == Family::A2Even && tp.s > spec.l)
    throw ValidationError("a2even needs k <= r <= l (got r = " + std::to_string(tp.s) + ", l = " + std::to_string(spec.l) + ")");
}

BranchingTable decompose_tensor_closed_form(const FamilySpec& spec, const TensorParams& tp) {
  validate_params(spec, tp);
  BranchingTable t;
  t.spec = spec;
  t.params = tp;
  t.lambda = factor_weight(spec, tp.p);
  t.mu = factor_weight(spec, tp.s);
  const int l = spec.l;
  const auto L = static_cast<std::size_t>(l);
  const int k = tp.p, r = tp.s;
  switch (spec.family) {
    case Family::A2Even: {
      const int n = 2 * l + 1;
      for (int a = 0; a <= k; ++a)
        for (int c = 0; c <= a; ++c) {
          const int x = k + r - 2 * a + c;
          const int d = std::min(x, n - x);
          t.entries.push_back({lam(l, c) + lam(l, d), LParent{{a}}, 0});
        }
      break;
    }
    case Family::A2Odd:
      for (int a = 0; a <= k; ++a)
        for (int c = 0; c <= a; ++c) {
          Weight nu(L);
          nu.twice(0) = 2 * (k + r - 2 * a + c);
          nu.twice(1) = 2 * c;
          t.entries.push_back({nu, LParent{{a}}, 0});
        }
      break;
    case Family::D2: {
      // a >= Lambda_1 >= ... >= Lambda_l >= 0
      std::vector<int> lam_(L, 0);
      const int a = k, b = r;
      while (true) {
        Weight nu(L);
        for (std::size_t i = 0; i < L; ++i) nu.twice(i) = 2 * lam_[i] + (b - a);
        LParent p;
        for (int j = 1; j <= l; ++j)
          if ((j + l) % 2 == 0) p.key.push_back(lam_[static_cast<std::size_t>(j - 1)]);
        t.entries.push_back({nu, p, 0});
        // next non-increasing sequence (odometer from the right)
        int i = l - 1;
        while (i >= 0) {
          const int cap = i == 0 ? a : lam_[static_cast<std::size_t>(i - 1)];
          if (lam_[static_cast<std::size_t>(i)] < cap) break;
          --i;
        }
        if (i < 0) break;
        ++lam_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < l; ++j) lam_[static_cast<std::size_t>(j)] = 0;
      }
      break;
    }
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const BranchEntry& x, const BranchEntry& y) { return x.nu > y.nu; });
  std::set<Weight> seen;
  long total = 0;
  for (auto& e : t.entries) {
    if (!seen.insert(e.nu).second) throw ContractViolation("component " + e.nu.str() + " occurs twice");
    e.dim = weyl_dim(spec.l0, e.nu);
    total += e.dim;
  }
  const long expect = weyl_dim(spec.l0, t.lambda) * weyl_dim(spec.l0, t.mu);
  if (total != expect)
    throw ContractViolation("decomposition dimensions sum to " + std::to_string(total) + ", expected " + std::to_string(expect));
  if (t.entries.front().nu != t.top()) throw ContractViolation("top component missing");
  return t;
}

LParent l_parent_of(const BranchingTable& table, const Weight& nu) { return table.find(nu).parent; }

std::vector<Weight> theta0_weights(const FamilySpec& spec) {
  const auto vec = vector_weights(spec.l0, spec.l);
  std::vector<Weight> out;
  switch (spec.family) {
    case Family::A2Even:  // symmetric square of the vector minus the singlet
      for (std::size_t i = 0; i < vec.size(); ++i)
        for (std::size_t j = i; j < vec.size(); ++j) out.push_back(vec[i] + vec[j]);
      break;
    case Family::A2Odd:  // alternating square minus the singlet
      for (std::size_t i = 0; i < vec.size(); ++i)
        for (std::size_t j = i + 1; j < vec.size(); ++j) out.push_back(vec[i] + vec[j]);
      break;
    case Family::D2:
      return vec;
  }
  const auto z = std::find_if(out.begin(), out.end(), [](const Weight& w) { return w.is_zero(); });
  out.erase(z);
  return out;
}

long theta_tensor_multiplicity(const FamilySpec& spec, const Weight& nu, const Weight& nu_prime) {
  if (!is_dominant(spec.l0, nu) || !is_dominant(spec.l0, nu_prime))
    throw ValidationError("containment test needs dominant weights");
  const Weight rho = spec.rho0;
  long m = 0;
  for (const auto& w : theta0_weights(spec)) {
    const auto img = reflect_to_dominant(spec.l0, nu + w + rho);
    if (img && img->second - rho == nu_prime) m += img->first;
  }
  return m;
}

bool contains_in_theta_tensor(const FamilySpec& spec, const Weight& nu, const Weight& nu_prime) {
  return theta_tensor_multiplicity(spec, nu, nu_prime) > 0;
}

}  // namespace twistr
