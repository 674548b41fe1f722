#pragma once

#include <json.hpp>

#include "cmod/classify.hpp"
#include "cmod/fibration.hpp"
#include "cmod/moduli.hpp"
#include "cmod/pencil.hpp"
#include "cmod/singular.hpp"
#include "cmod/weierstrass.hpp"

namespace cmod::tool {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
json to_json(const Point3& p);
json to_json(const CPoint3& p);
json to_json(const Matrix3& m);
json to_json(std::complex<double> z);
json to_json(const RootSet& r);

json to_json(const WeierstrassData& w);
json to_json(const ModuliVerdict& v);
json to_json(const OracleVerdict& v);
json to_json(const SpecialLine& l);
json to_json(const TangentReport& t);
json to_json(const LocusReport& l);
json to_json(const SingularPoint& p);
json to_json(const ClassificationResult& c);
json to_json(const WeierstrassFamily& f);
json to_json(const JReport& j);
json to_json(const TrivialityVerdict& v);

/// Base point, coordinate change and pencil data of a setup.
json setup_json(const PencilSetup& s);

}  // namespace cmod::tool
