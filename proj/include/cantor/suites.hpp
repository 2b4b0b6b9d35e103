#pragma once

// Machine-checked counterexamples and the strongly linked positive result,
// at a finite depth.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cantor/forcing.hpp"

namespace cantor {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::size_t checks = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCase> cases;

  bool all_pass() const;
  std::size_t passed() const;
  /// "PASS k/n" or "FAIL k/n"
  std::string summary() const;
};

/// The five counterexample cases; each emptiness claim is checked through the
/// tree operators and again by direct enumeration. Requires depth ≥ 4.
SuiteReport counterexample_suite(std::size_t depth);

/// A random condition of a strongly linked family with a short stem.
ForcingCondition random_condition(Family family, std::mt19937_64& rng);

/// Per family, `samples` random conditions: every node to `depth` (and every
/// out-child one symbol past the window) gets the verdict its membership
/// dictates. Also records the wrong-L_I failure for Hechler.
SuiteReport density_positive_suite(std::size_t depth, std::size_t samples = 100, std::uint64_t seed = 1);

/// `pairs` random pairs from one family: the meet verdict matches brute-force
/// compatibility and the meet's nodes equal the intersection to `depth`.
SuiteCase meet_fuzz(Family family, std::size_t pairs, std::size_t depth, std::uint64_t seed = 1);

}  // namespace cantor
