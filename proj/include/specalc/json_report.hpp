#pragma once

#include <json.hpp>

#include "specalc/block_model.hpp"
#include "specalc/errors.hpp"
#include "specalc/matrix.hpp"
#include "specalc/transfer.hpp"

namespace specalc {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& x);
Json to_json(const PointSet& s);
Json to_json(const SpectralProfile& p);
Json to_json(const OperatorFlags& f);
Json to_json(const DerivedSets& d);
Json to_json(const ProductResult& r, ProductMode mode);
Json to_json(const TransferReport& r);
Json to_json(const AgreementReport& r);
Json to_json(const ExactMatrix& m);
Json to_json(const MatrixPairReport& r);
Json error_json(const Error& e);

}  // namespace specalc
