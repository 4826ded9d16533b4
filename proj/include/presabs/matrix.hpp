// Character matrix ingestion and the inferred presence/absence matrix:
// translate every state annotation, run the absence pipeline, and read the
// per-taxon cells off the final classification.

#ifndef PRESABS_MATRIX_HPP
#define PRESABS_MATRIX_HPP

#include "presabs/pipeline.hpp"

namespace presabs::matrix {

struct CharacterState {
  std::string id;
  std::string label;
  std::vector<eq::EqAnnotation> annotations;
};

struct Character {
  std::string id;
  std::string label;
  std::vector<CharacterState> states;
};

struct Taxon {
  Iri id;
  std::string label;
};

struct Cell {
  Iri taxon;
  std::string character;
  std::string state;
};

struct CharacterMatrix {
  PrefixMap prefixes;
  std::vector<Taxon> taxa;
  std::vector<Character> characters;
  std::vector<Cell> cells;
};

struct MatrixError : std::runtime_error {
  explicit MatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct LoadOptions {
  bool allow_polymorphic = false;  // permit several states per (taxon, character)
};

// Parses and validates the JSON interchange document. Errors carry the
// JSON path and the offending identifier.
CharacterMatrix load_matrix(const std::string& document, const LoadOptions& opts = {});

enum class CellValue : uint8_t {
  Unknown = 0,
  AssertedPresent,
  InferredPresent,
  AssertedAbsent,
  InferredAbsent,
  Conflict,
};

const char* cell_token(CellValue v);  // P! / P / A! / A / C / ""

struct PresenceAbsenceMatrix {
  std::vector<Taxon> taxa;     // input order
  std::vector<Iri> entities;   // lexicographic
  std::vector<std::vector<CellValue>> cells;  // [taxon][entity]

  CellValue at(const Iri& taxon, const Iri& entity) const;
};

struct MatrixStats {
  size_t taxa = 0;
  size_t entity_columns = 0;
  size_t total_cells = 0;
  size_t populated_cells = 0;
  size_t asserted_cells = 0;
  size_t inferred_cells = 0;
  size_t conflict_cells = 0;
  size_t columns_without_assertion = 0;
  size_t count_asserted_present = 0;
  size_t count_inferred_present = 0;
  size_t count_asserted_absent = 0;
  size_t count_inferred_absent = 0;
  double populated_pct = 0.0;             // of total, one decimal
  double inferred_pct_of_populated = 0.0; // one decimal

  std::string to_json() const;
};

struct InferOptions {
  pipeline::PipelineOptions pipeline;
};

struct InferResult {
  PresenceAbsenceMatrix matrix;
  pipeline::PipelineReport report;
};

InferResult infer(const CharacterMatrix& m, const Ontology& anatomy, const Vocabulary& v,
                  const InferOptions& opts = {});

MatrixStats stats(const PresenceAbsenceMatrix& pm);

std::string to_csv(const PresenceAbsenceMatrix& pm);
std::string to_json(const PresenceAbsenceMatrix& pm);

}  // namespace presabs::matrix

#endif  // PRESABS_MATRIX_HPP
