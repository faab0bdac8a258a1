#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilcayley/checks.hpp"
#include "nilcayley/relfree.hpp"
#include "nilcayley/report.hpp"

namespace nilcayley {

/// Invalid flag combination or malformed input; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One resolved backend: the ring itself plus what is known about it.
struct BackendHandle {
  std::variant<RationalRing, GrassmannAlgebra, StructureAlgebra> ring;
  std::string description;
  std::optional<int> lie_index;          // known Lie nilpotency index
  std::optional<int> product_identity_t; // known product-of-double-commutators length
  std::optional<int> commutator_product_t;  // known product-of-commutators length
  std::optional<StructureAlgebra> findim;   // structure-constant view, when available
};

/// Backend specs: rational | grassmann:M | relfree:M,K,D | utri:T:<base>
/// | file:PATH (structure-constant JSON).
BackendHandle parse_backend(const std::string& spec);

struct RunConfig {
  std::string command = "verify";  // verify | charpoly | sdet | adjoint | demo
  std::string check = "all";
  std::string backend = "grassmann:4";
  int n = 2;
  int k = 0;            // 0 = use the backend's Lie index
  int exponent = 0;     // 0 = derive from the backend
  std::uint64_t seed = 0;
  int trials = 10;
  std::string lift = "canonical";  // canonical | randomized
  std::string format = "text";     // text | json
  std::string out;                 // output path; empty = stdout only
  std::string matrix;              // explicit matrix for single-instance runs
  bool slow = false;
  std::size_t max_n = 5;
  int max_k = 4;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 identity failure, 2 usage/config error
  std::string output;
};

/// Executes the configured command. Never throws for user-level errors;
/// they are reported through exit_code 2 and the output text.
RunResult run(const RunConfig& config);

/// The fixed check list behind `verify all`, exposed for the test suites.
std::vector<VerificationReport> run_all_checks(std::uint64_t seed, int trials, bool slow,
                                               const DetCaps& caps = {});

}  // namespace nilcayley
