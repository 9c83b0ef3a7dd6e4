#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjurina/bounds.hpp"

namespace tjurina {

// Parsed form of the line-oriented input file:
//   field Q | field F <p>
//   curve <poly>
//   foliation <polyA> ; <polyB> ; <polyC>
//   ideal <poly> ; <poly> ; ...
//   meta irreducible true|false|unknown
//   meta description <text>
//   # comment
struct InputDocument {
  FieldSpec field = FieldSpec::rationals();
  std::optional<Polynomial> curve;
  std::optional<std::array<Polynomial, 3>> foliation;
  std::optional<std::vector<Polynomial>> ideal;
  std::optional<std::string> meta_irreducible;
  std::optional<std::string> description;
};

InputDocument parse_input_document(const std::string& text);

std::string invariants_to_json(const CurveInvariants& inv, const std::string& field_name,
                               uint64_t seed, const LeafCheckResult* leaf = nullptr);
std::string invariants_to_text(const CurveInvariants& inv, const std::string& field_name,
                               uint64_t seed, const LeafCheckResult* leaf = nullptr);
std::string report_to_json(const BoundsReport& report);
std::string report_to_text(const BoundsReport& report);

// Foliation-only inputs: degree, singular-scheme data and the tangency
// cross-check.
std::string foliation_to_json(const Foliation& fol, const std::string& field_name, uint64_t seed);
std::string foliation_to_text(const Foliation& fol, const std::string& field_name, uint64_t seed);

std::string coeff_to_string(const Coeff& c);

}  // namespace tjurina
