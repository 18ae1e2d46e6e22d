#ifndef DBCELL_JSONIO_HPP
#define DBCELL_JSONIO_HPP

#include <string>
#include <vector>

#include "dbcell/cartan.hpp"
#include "dbcell/chart.hpp"
#include "dbcell/identities.hpp"
#include "dbcell/matrix.hpp"
#include "dbcell/seed.hpp"
#include "dbcell/tropical.hpp"

namespace dbcell {

// Seed JSON:
// {"vertices":[{"id":"1:0","frozen":true,"d":1},...],
//  "epsilon":[["0","1/2",...],...]}
std::string seed_to_json(const Seed& seed);
Seed seed_from_json(const std::string& text);

// Transformation JSON: [{"mutate":"1:1"}, {"iso":{"1:1":"2:1",...}}, ...]
std::string steps_to_json(const std::vector<TransformStep>& steps);
std::vector<TransformStep> steps_from_json(const std::string& text);

// Matrices as arrays of "p/q" strings.
std::string matrix_to_json(const MatQ& m);
MatQ matrix_from_json(const std::string& text);

// Cartan input: a type label or an explicit integer matrix in JSON.
CartanMatrix cartan_from_spec(const std::string& label_or_json);

std::string identity_suite_to_json(const IdentitySuiteReport& report);
std::string dt_report_to_json(const DtCheckReport& report);

}  // namespace dbcell

#endif
