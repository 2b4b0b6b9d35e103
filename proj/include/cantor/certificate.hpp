#pragma once

// Text form of extraction certificates and their independent verification.
//
//   certificate q=<q> delta=<δ> stages=<K>
//   stage <i> <n_i> <a_i> <a'_i> <a''_i> <b_i> <j_i>     ("-" when absent)
//   <one S_i node per line; "-" is the empty node; a node shorter than n_i
//    stands for all of its extensions to length n_i>
//   bound <measure lower bound>

#include <iosfwd>
#include <string>

#include "cantor/extract.hpp"

namespace cantor {

std::string serialize(const ExtractionCertificate& cert);
void write_certificate(std::ostream& out, const ExtractionCertificate& cert);

/// Throws ParseError with the offending line number.
ExtractionCertificate parse_certificate(std::istream& in);
ExtractionCertificate parse_certificate(const std::string& text);

struct VerifyReport {
  bool ok = true;
  std::size_t inequalities_checked = 0;
  std::string first_violation;
};

/// Re-checks every stage from the weight oracle and tree levels: parameter
/// inequalities, structure of S_i, weights, exclusion caps, goodness
/// (condition (a)), mass ratios (condition (b)) and the final bound.
VerifyReport verify_certificate(const SymbolicTree& tree, const ExtractionCertificate& cert,
                                std::size_t cap = kDefaultExplicitCap);

}  // namespace cantor
