#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "presabs/matrix.hpp"

namespace presabs::matrix {

using nlohmann::json;

namespace {

Iri resolve_iri(const std::string& text, const PrefixMap& prefixes, const std::string& path) {
  if (text.empty()) throw MatrixError(path + ": empty IRI");
  if (text.front() == '<' && text.back() == '>') return Iri{text.substr(1, text.size() - 2)};
  if (text.find("://") != std::string::npos || text.rfind("urn:", 0) == 0) return Iri{text};
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw MatrixError(path + ": '" + text + "' is neither an absolute IRI nor a prefixed name");
  const std::string prefix = text.substr(0, colon);
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) {
    auto builtin = builtin_prefixes().find(prefix);
    if (builtin == builtin_prefixes().end())
      throw MatrixError(path + ": unknown prefix '" + prefix + ":'");
    return Iri{builtin->second + text.substr(colon + 1)};
  }
  return Iri{it->second + text.substr(colon + 1)};
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw MatrixError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw MatrixError(path + ": missing '" + key + "'");
  return *it;
}

std::string text_member(const json& j, const char* key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_string()) throw MatrixError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

CharacterMatrix load_matrix(const std::string& document, const LoadOptions& opts) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw MatrixError(std::string("matrix document is not valid JSON: ") + e.what());
  }
  CharacterMatrix m;
  if (auto it = j.find("prefixes"); it != j.end()) {
    if (!it->is_object()) throw MatrixError("prefixes: expected an object");
    for (const auto& [prefix, ns] : it->items()) {
      if (!ns.is_string()) throw MatrixError("prefixes." + prefix + ": expected a string");
      m.prefixes.emplace(prefix, ns.get<std::string>());
    }
  }

  std::set<std::string> taxon_ids;
  const json& taxa = member(j, "taxa", "$");
  if (!taxa.is_array()) throw MatrixError("taxa: expected an array");
  for (size_t i = 0; i < taxa.size(); ++i) {
    const std::string path = "taxa[" + std::to_string(i) + "]";
    Taxon t;
    t.id = resolve_iri(text_member(taxa[i], "id", path), m.prefixes, path + ".id");
    t.label = text_member(taxa[i], "label", path);
    if (!taxon_ids.insert(t.id.value).second)
      throw MatrixError(path + ": duplicate taxon " + t.id.value);
    m.taxa.push_back(std::move(t));
  }

  std::map<std::string, std::set<std::string>> states_of;
  const json& characters = member(j, "characters", "$");
  if (!characters.is_array()) throw MatrixError("characters: expected an array");
  for (size_t i = 0; i < characters.size(); ++i) {
    const std::string cpath = "characters[" + std::to_string(i) + "]";
    Character c;
    c.id = text_member(characters[i], "id", cpath);
    c.label = text_member(characters[i], "label", cpath);
    if (states_of.count(c.id)) throw MatrixError(cpath + ": duplicate character id '" + c.id + "'");
    const json& states = member(characters[i], "states", cpath);
    if (!states.is_array()) throw MatrixError(cpath + ".states: expected an array");
    for (size_t k = 0; k < states.size(); ++k) {
      const std::string spath = cpath + ".states[" + std::to_string(k) + "]";
      CharacterState s;
      s.id = text_member(states[k], "id", spath);
      s.label = text_member(states[k], "label", spath);
      if (!states_of[c.id].insert(s.id).second)
        throw MatrixError(spath + ": duplicate state id '" + s.id + "'");
      const json& phenotypes = member(states[k], "phenotypes", spath);
      if (!phenotypes.is_array()) throw MatrixError(spath + ".phenotypes: expected an array");
      for (size_t p = 0; p < phenotypes.size(); ++p) {
        const std::string ppath = spath + ".phenotypes[" + std::to_string(p) + "]";
        eq::EqAnnotation a;
        a.entity = resolve_iri(text_member(phenotypes[p], "entity", ppath), m.prefixes,
                               ppath + ".entity");
        a.quality = resolve_iri(text_member(phenotypes[p], "quality", ppath), m.prefixes,
                                ppath + ".quality");
        if (auto re = phenotypes[p].find("related_entity"); re != phenotypes[p].end()) {
          if (!re->is_string()) throw MatrixError(ppath + ".related_entity: expected a string");
          a.related_entity =
              resolve_iri(re->get<std::string>(), m.prefixes, ppath + ".related_entity");
        }
        s.annotations.push_back(std::move(a));
      }
      c.states.push_back(std::move(s));
    }
    m.characters.push_back(std::move(c));
  }

  std::set<std::pair<std::string, std::string>> filled;
  const json& cells = member(j, "cells", "$");
  if (!cells.is_array()) throw MatrixError("cells: expected an array");
  for (size_t i = 0; i < cells.size(); ++i) {
    const std::string path = "cells[" + std::to_string(i) + "]";
    Cell cell;
    cell.taxon = resolve_iri(text_member(cells[i], "taxon", path), m.prefixes, path + ".taxon");
    cell.character = text_member(cells[i], "character", path);
    cell.state = text_member(cells[i], "state", path);
    if (!taxon_ids.count(cell.taxon.value))
      throw MatrixError(path + ": undeclared taxon " + cell.taxon.value);
    auto ch = states_of.find(cell.character);
    if (ch == states_of.end())
      throw MatrixError(path + ": undeclared character '" + cell.character + "'");
    if (!ch->second.count(cell.state))
      throw MatrixError(path + ": character '" + cell.character + "' has no state '" + cell.state +
                        "'");
    if (!filled.emplace(cell.taxon.value, cell.character).second && !opts.allow_polymorphic)
      throw MatrixError(path + ": duplicate cell for taxon " + cell.taxon.value +
                        ", character '" + cell.character +
                        "' (pass allow-polymorphic to accept)");
    m.cells.push_back(std::move(cell));
  }
  return m;
}

const char* cell_token(CellValue v) {
  switch (v) {
    case CellValue::Unknown:
      return "";
    case CellValue::AssertedPresent:
      return "P!";
    case CellValue::InferredPresent:
      return "P";
    case CellValue::AssertedAbsent:
      return "A!";
    case CellValue::InferredAbsent:
      return "A";
    case CellValue::Conflict:
      return "C";
  }
  return "";
}

CellValue PresenceAbsenceMatrix::at(const Iri& taxon, const Iri& entity) const {
  for (size_t t = 0; t < taxa.size(); ++t) {
    if (taxa[t].id != taxon) continue;
    const auto it = std::lower_bound(entities.begin(), entities.end(), entity);
    if (it == entities.end() || *it != entity) throw UnknownIri(entity);
    return cells[t][static_cast<size_t>(it - entities.begin())];
  }
  throw UnknownIri(taxon);
}

InferResult infer(const CharacterMatrix& m, const Ontology& anatomy, const Vocabulary& v,
                  const InferOptions& opts) {
  // Translate every state annotation once; identical annotations share one
  // phenotype class.
  eq::MintRegistry registry;
  std::map<eq::EqAnnotation, eq::PhenotypeClass> phenotypes;
  for (const Character& c : m.characters)
    for (const CharacterState& s : c.states)
      for (const eq::EqAnnotation& a : s.annotations)
        if (!phenotypes.count(a)) phenotypes.emplace(a, eq::translate(a, v, &registry));

  std::vector<Axiom> phenotype_axioms;
  for (const auto& [_, p] : phenotypes) phenotype_axioms.push_back(p.definition());

  pipeline::PipelineResult run = pipeline::run(anatomy, phenotype_axioms, v, opts.pipeline);
  const el::SubsumptionSet& subs = run.final.subsumptions;
  const el::ClassTable& table = subs.classes();

  InferResult out;
  out.report = std::move(run.report);
  out.matrix.taxa = m.taxa;
  for (const auto& [entity, _] : run.names.presence) out.matrix.entities.push_back(entity);
  std::sort(out.matrix.entities.begin(), out.matrix.entities.end());

  std::unordered_map<std::string, size_t> entity_column;
  for (size_t i = 0; i < out.matrix.entities.size(); ++i)
    entity_column.emplace(out.matrix.entities[i].value, i);

  // Per phenotype class: the entity sets its superclasses imply present or
  // absent.
  struct Evidence {
    std::vector<size_t> present, absent;
  };
  std::map<eq::EqAnnotation, Evidence> evidence;
  for (const auto& [annotation, phenotype] : phenotypes) {
    Evidence e;
    const el::ClassId id = table.require(phenotype.iri);
    for (el::ClassId sup : subs.supers(id)) {
      const Iri& sup_iri = table.iri_of(sup);
      if (auto it = run.names.entity_of_presence.find(sup_iri);
          it != run.names.entity_of_presence.end())
        e.present.push_back(entity_column.at(it->second.value));
      else if (auto at = run.names.entity_of_absent.find(sup_iri);
               at != run.names.entity_of_absent.end())
        e.absent.push_back(entity_column.at(at->second.value));
    }
    evidence.emplace(annotation, std::move(e));
  }

  // States held by each taxon, via the filled cells.
  std::map<std::pair<std::string, std::string>, const CharacterState*> state_index;
  for (const Character& c : m.characters)
    for (const CharacterState& s : c.states) state_index.emplace(std::pair(c.id, s.id), &s);
  std::unordered_map<std::string, std::vector<const CharacterState*>> states_by_taxon;
  for (const Cell& cell : m.cells)
    states_by_taxon[cell.taxon.value].push_back(state_index.at({cell.character, cell.state}));

  const size_t columns = out.matrix.entities.size();
  out.matrix.cells.assign(m.taxa.size(), std::vector<CellValue>(columns, CellValue::Unknown));
  for (size_t t = 0; t < m.taxa.size(); ++t) {
    std::vector<uint8_t> present(columns, 0), absent(columns, 0);  // 1 inferred, 2 asserted
    auto held = states_by_taxon.find(m.taxa[t].id.value);
    if (held == states_by_taxon.end()) continue;
    for (const CharacterState* s : held->second) {
      for (const eq::EqAnnotation& a : s->annotations) {
        const Evidence& e = evidence.at(a);
        for (size_t col : e.present) present[col] = std::max<uint8_t>(present[col], 1);
        for (size_t col : e.absent) absent[col] = std::max<uint8_t>(absent[col], 1);
        // Direct assertion: the annotation names the entity with the
        // present/absent quality itself.
        if (auto col = entity_column.find(a.entity.value); col != entity_column.end()) {
          if (a.quality == v.quality_present) present[col->second] = 2;
          if (a.quality == v.quality_absent) absent[col->second] = 2;
        }
      }
    }
    for (size_t col = 0; col < columns; ++col) {
      CellValue& cell = out.matrix.cells[t][col];
      if (present[col] && absent[col])
        cell = CellValue::Conflict;
      else if (present[col])
        cell = present[col] == 2 ? CellValue::AssertedPresent : CellValue::InferredPresent;
      else if (absent[col])
        cell = absent[col] == 2 ? CellValue::AssertedAbsent : CellValue::InferredAbsent;
    }
  }
  return out;
}

MatrixStats stats(const PresenceAbsenceMatrix& pm) {
  MatrixStats s;
  s.taxa = pm.taxa.size();
  s.entity_columns = pm.entities.size();
  s.total_cells = s.taxa * s.entity_columns;
  std::vector<uint8_t> column_asserted(pm.entities.size(), 0);
  for (const auto& row : pm.cells) {
    for (size_t col = 0; col < row.size(); ++col) {
      switch (row[col]) {
        case CellValue::Unknown:
          break;
        case CellValue::AssertedPresent:
          ++s.count_asserted_present;
          column_asserted[col] = 1;
          break;
        case CellValue::InferredPresent:
          ++s.count_inferred_present;
          break;
        case CellValue::AssertedAbsent:
          ++s.count_asserted_absent;
          column_asserted[col] = 1;
          break;
        case CellValue::InferredAbsent:
          ++s.count_inferred_absent;
          break;
        case CellValue::Conflict:
          ++s.conflict_cells;
          break;
      }
    }
  }
  s.asserted_cells = s.count_asserted_present + s.count_asserted_absent;
  s.inferred_cells = s.count_inferred_present + s.count_inferred_absent;
  s.populated_cells = s.asserted_cells + s.inferred_cells + s.conflict_cells;
  for (uint8_t asserted : column_asserted)
    if (!asserted) ++s.columns_without_assertion;
  auto pct = [](size_t num, size_t den) {
    return den == 0 ? 0.0 : std::round(1000.0 * static_cast<double>(num) / static_cast<double>(den)) / 10.0;
  };
  s.populated_pct = pct(s.populated_cells, s.total_cells);
  s.inferred_pct_of_populated = pct(s.inferred_cells, s.populated_cells);
  return s;
}

std::string MatrixStats::to_json() const {
  nlohmann::ordered_json j;
  j["taxa"] = taxa;
  j["entity_columns"] = entity_columns;
  j["total_cells"] = total_cells;
  j["populated_cells"] = populated_cells;
  j["asserted_cells"] = asserted_cells;
  j["inferred_cells"] = inferred_cells;
  j["conflict_cells"] = conflict_cells;
  j["columns_without_assertion"] = columns_without_assertion;
  j["cells_asserted_present"] = count_asserted_present;
  j["cells_inferred_present"] = count_inferred_present;
  j["cells_asserted_absent"] = count_asserted_absent;
  j["cells_inferred_absent"] = count_inferred_absent;
  j["populated_pct"] = populated_pct;
  j["inferred_pct_of_populated"] = inferred_pct_of_populated;
  return j.dump(2) + "\n";
}

std::string to_csv(const PresenceAbsenceMatrix& pm) {
  std::ostringstream out;
  out << "taxon";
  for (const Iri& e : pm.entities) out << "," << e.value;
  out << "\n";
  for (size_t t = 0; t < pm.taxa.size(); ++t) {
    out << pm.taxa[t].id.value;
    for (size_t col = 0; col < pm.entities.size(); ++col)
      out << "," << cell_token(pm.cells[t][col]);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const PresenceAbsenceMatrix& pm) {
  nlohmann::ordered_json j;
  j["entities"] = nlohmann::ordered_json::array();
  for (const Iri& e : pm.entities) j["entities"].push_back(e.value);
  j["rows"] = nlohmann::ordered_json::array();
  for (size_t t = 0; t < pm.taxa.size(); ++t) {
    nlohmann::ordered_json row;
    row["taxon"] = pm.taxa[t].id.value;
    row["label"] = pm.taxa[t].label;
    row["cells"] = nlohmann::ordered_json::array();
    for (size_t col = 0; col < pm.entities.size(); ++col)
      row["cells"].push_back(cell_token(pm.cells[t][col]));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace presabs::matrix
