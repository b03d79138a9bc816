#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "twistr/branching.hpp"
#include "twistr/liealg.hpp"
#include "twistr/rational.hpp"

namespace twistr {

enum class Mode { Numeric, Symbolic };

struct RunConfig {
  Family family = Family::A2Even;
  int l = 1;
  TensorParams params;
  Mode mode = Mode::Numeric;
  std::uint64_t seed = 1;
  int samples = 3;
  std::filesystem::path out = "twistr-out";
  std::string format = "text";
  std::optional<Rational> w;  // fixes the base parameter instead of sampling it

  [[nodiscard]] FamilySpec spec() const { return family_spec(family, l); }
  [[nodiscard]] bool seed_pair() const { return params.p == 1 && params.s == 1; }
};

/// Throws ValidationError before any computation.
void validate_config(const RunConfig& cfg);

struct SamplePoint {
  Rational w, u, v;
};

/// Deterministic stream of sample points from a 64-bit seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  Rational draw_w();
  /// Spectral parameter avoiding 0 and +-1.
  Rational draw_u();
  SamplePoint draw(const std::optional<Rational>& fixed_w);

 private:
  long uniform(long lo, long hi);
  std::mt19937_64 gen_;
};

inline constexpr int kMaxRetries = 5;

/// Runs every stage, writes one JSON report per stage plus summary.json.
/// Returns 0 iff every stage passes.
int cmd_verify(const RunConfig& cfg, std::ostream& log);

/// what: graph, eigenvalues, rmatrix or rep. Throws UsageError on an unsupported combination.
int cmd_export(const RunConfig& cfg, const std::string& what, std::ostream& log);

/// Parses argv; exit codes: 0 success, 1 failed check, 2 usage or validation error.
int run_cli(int argc, char** argv);

}  // namespace twistr
