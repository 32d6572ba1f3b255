#pragma once

#include <string>

#include <json.hpp>

#include "lie/lspath.hpp"
#include "lie/series.hpp"

// JSON views. Rationals are strings "p/q", weights are coordinate arrays in the simple roots of g,
// object keys are sorted and type lists follow lexicographic weight order, so output is byte-stable.
namespace lie::report {

using json = nlohmann::json;

json weight(const Weight& w);
json rational(const Rational& r);
json types(const TypeMultiset& t);
json row(const ClassificationRow& r);
json datum(const BdsDatum& d);
json cascade(const Cascade& c, const HermitianPair& h);
json schmid(int m, const Cascade& c, const HermitianPair& h);
json common(const CommonReport& r);
json evidence(const AdmissibilityEvidence& e);

std::string dump(const json& j);
// One line per classification row.
std::string classification_csv(const std::vector<ClassificationRow>& rows);

}  // namespace lie::report
