#pragma once

#include <json.hpp>

#include "ckit/catalog.hpp"

namespace ckit {

using nlohmann::json;

json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

json matrix_to_json(const SMat& m);
SMat matrix_from_json(const json& j);

json tmatrix_to_json(const Mat<TScalar>& m);
Mat<TScalar> tmatrix_from_json(const json& j);

json time_to_json(const TimeValue& t);
TimeValue time_from_json(const json& j);

json derivation_to_json(const StructuredDerivation& d);
StructuredDerivation derivation_from_json(const json& j);

json certificate_to_json(const LatticeCertificate& c);
LatticeCertificate certificate_from_json(const json& j);

json verdict_to_json(const LieAlgebra& L, const TrivialityVerdict& v,
                     const ObstructionReport& o);

json descriptor_to_json(const LieAlgebra& L, const SectionDescriptor& S);

json triple_to_json(const HypercomplexTriple& t);
HypercomplexTriple triple_from_json(const json& j);

json entry_to_json(const CatalogEntry& e);

/// Covector as a label → scalar-string map (zero entries omitted).
json covector_to_json(const LieAlgebra& L, const SVec& v);

/// Vector printed through the basis labels ("e0", "e5-1/2*e6", …).
std::string vector_str(const LieAlgebra& L, const SVec& v);

std::string verdict_name(VerdictKind k);
std::string obstruction_name(ObstructionStatus s);

}  // namespace ckit
