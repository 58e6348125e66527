#pragma once

#include <json.hpp>

#include "qorbit/cell_algebra.hpp"
#include "qorbit/report.hpp"
#include "qorbit/rmatrix.hpp"
#include "qorbit/submodule.hpp"

namespace qorbit {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kScalarEncoding = "qorbit-scalar/1";

// bit-exact encodings; every document carries a version field
Json context_to_json(const ParameterContext& ctx);
ParameterContext context_from_json(const Json& j);

Json laurent_to_json(const LaurentScalar& s);
LaurentScalar laurent_from_json(const ParameterContext& ctx, const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const ParameterContext& ctx, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const ParameterContext& ctx, const Json& j);

Json cpoly_to_json(const CPolynomial& p);
CPolynomial cpoly_from_json(const CellPtr& cell, const Json& j);

Json cell_to_json(const CellAlgebra& cell);
CellPtr cell_from_json(const Json& j);

Json action_table_to_json(const ActionTable& t);
ActionPtr action_table_from_json(const GenSetPtr& algebra, const CellPtr& cell,
                                 const Json& j);

Json report_to_json(const Report& r);

/// Serialized cyclic-submodule package: instance descriptor, basis and the
/// generator matrices, bit-exact through load.
struct RepArchive {
    std::string instance;                       // e.g. "sl2", "frt-A2", "adjoint-A1"
    std::vector<std::pair<std::string, std::string>> parameters;
    ParameterContext ctx;
    std::vector<std::string> basis;             // rendered monomials
    std::vector<std::string> generator_names;
    std::vector<Matrix> matrices;               // row-major in JSON
};

RepArchive make_archive(const std::string& instance,
                        std::vector<std::pair<std::string, std::string>> parameters,
                        const CyclicSubmodule& mod);

Json archive_to_json(const RepArchive& a);
RepArchive archive_from_json(const Json& j);

// exact evaluation of every matrix entry at a rational point; key is "q"
// (requires integral q-powers) or "v"
Json archive_evaluated(const RepArchive& a, const std::string& var, const Rational& value);

// structure-set file: R plus optional C (K is derived from C when present,
// from the flip/difference identity otherwise)
StructureSet structure_from_json(const Json& j);

} // namespace qorbit
