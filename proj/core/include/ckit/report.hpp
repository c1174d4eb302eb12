#pragma once

#include "ckit/json_io.hpp"

namespace ckit {

struct PipelineInput {
  LieAlgebra algebra;
  std::optional<SMat> J;
  std::optional<HypercomplexTriple> triple;
  std::optional<LatticeCertificate> certificate;
  std::vector<Period> periods;

  PipelineInput() : algebra(1) {}
  explicit PipelineInput(LieAlgebra L) : algebra(std::move(L)) {}
};

/// Runs the full diagnostic pipeline: structural checks, complex-structure
/// diagnostics, section construction and lattice invariance, certificate
/// verification, hypercomplex block. A failure in one stage is recorded
/// under that stage without suppressing the others. Deterministic: equal
/// inputs give byte-identical JSON.
json run_pipeline(const PipelineInput& in);

/// 0 = all requested checks pass; 1 = some mathematical verdict is negative
/// (no invariant section when a J was supplied, obstructed, failed
/// certificate, non-invariant section); 2 = input/validation error.
int exit_code_for(const json& report);

/// Catalog entry against its expected table; "pass" is the summary key.
json catalog_report(const CatalogEntry& e);

}  // namespace ckit
