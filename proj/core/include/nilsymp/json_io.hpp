#pragma once

#include <json.hpp>

#include "nilsymp/kostant.hpp"
#include "nilsymp/symp.hpp"

namespace nilsymp {

using Json = nlohmann::ordered_json;

Json root_system_json(const RootSystem& rs);
Json structure_table_json(const StructureTable& st);

Json algebra_to_json(const NilAlgebra& n);
/// Validating load: schema, ordered bracket keys, Jacobi, nilpotency.
/// Derives grading from the lower central series when absent.
NilAlgebra algebra_from_json(const Json& j);

Json form_to_json(const ExtForm& f);
ExtForm form_from_json(const Json& j, int dim, int degree = 2);

Json verdict_to_json(const Verdict& v);
Json hwv_report_json(const HwvReport& r);

Json rational_json(const Rational& q);  // exact, as string when non-integer

}  // namespace nilsymp
