#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "trigpoly.hpp"

namespace zetafree {

// Contents of a polynomial file.  `poly` always holds coefficients: the a
// lines when present, otherwise the normalized autocorrelation of the c
// lines (a_0 = 1 presentation).
struct PolynomialFile {
  std::optional<SpectralFactor> factor;
  CosinePolynomial poly;
};

// Format, one entry per line, '#' starts a comment:
//   n <degree>
//   c <k> <value>   (all k = 0..n)  and/or
//   a <k> <value>   (all k = 0..n)
PolynomialFile read_polynomial(const std::string& path);
PolynomialFile read_polynomial(std::istream& in, const std::string& name);

// Writes both representations when the factor is known.
void write_polynomial(const std::string& path, const CosinePolynomial& poly,
                      const SpectralFactor* factor = nullptr);
void write_polynomial(std::ostream& out, const CosinePolynomial& poly,
                      const SpectralFactor* factor = nullptr);

}  // namespace zetafree
