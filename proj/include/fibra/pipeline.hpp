#pragma once

#include "fibra/construction_file.hpp"
#include "fibra/constructions.hpp"
#include "fibra/piclattice.hpp"
#include "fibra/report.hpp"

namespace fibra {

// Runs the full verification pipeline on one construction file, comparing
// every computed value against the expected block. Variant files resolve
// their standard sibling from `dir`.
ConstructionReport verify_construction(const ConstructionFile& file, const std::string& dir);
ConstructionReport verify_file(const std::string& path);

// The verified surface datum extracted from a finished standard report.
SurfacePair assemble_surface_pair(const ConstructionReport& report);

struct CorpusRow {
  std::string id;
  std::string kind;
  long headline = 0;  // pg_F for standard/literature, g_F for variants
  bool pass = false;
  std::string first_failure;
};
struct CorpusSummary {
  std::vector<CorpusRow> rows;
  std::vector<std::string> missing;
  int passed = 0;
  int total = 0;
};
CorpusSummary corpus_run(const std::string& dir, bool parallel);

// Class-identity checker: expands both sides over the final lattice.
bool verify_class_identity(const DivClass& lhs, const DivClass& rhs);

}  // namespace fibra
