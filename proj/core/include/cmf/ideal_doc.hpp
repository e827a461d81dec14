#pragma once

#include <string>
#include <vector>

#include "cmf/ideal.hpp"

namespace cmf {

// Parsed form of the line-oriented input format:
//
//   # comment
//   ring F32003 [x, y]
//   ideal
//   x^2 + 3*x*y
//   y^2
//
// Header, literal `ideal` separator, one generator per line.
struct IdealDocument {
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<std::string> generator_texts;
};

IdealDocument parse_document(const std::string& text);

// Parses one polynomial in the given ring.  `line` seeds diagnostics.
Polynomial parse_polynomial(const PolyRing& R, const std::string& text,
                            int line = 0);

Ideal document_to_ideal(const IdealDocument& doc);

std::string print_document(const PolyRing& R,
                           const std::vector<Polynomial>& gens);
std::string print_document(const Ideal& I);

}  // namespace cmf
