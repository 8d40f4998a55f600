#pragma once

#include "ncorder/algebra.hpp"
#include "ncorder/gotcore.hpp"

#include <nlohmann/json.hpp>

namespace ncorder {

/// Polynomial document: {"generators": [{id, tag?, time?}...],
/// "terms": [{"coeff": {"num": "...", "den": "..."}, "word": [refs]}...]}
/// with generators and terms in canonical order and word entries indexing
/// the generator list. num/den are decimal strings so arbitrary-precision
/// values round-trip bit-exactly.
nlohmann::json poly_to_json(const NCPoly& p);
NCPoly poly_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

/// L file: object of rows keyed by Omega label; each row an object of
/// rational strings keyed by Omega' label. Missing entries are zero.
Decomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json decomposition_to_json(const Decomposition& d);

} // namespace ncorder
