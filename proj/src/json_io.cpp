#include "pqcalc/json_io.hpp"

namespace pq {

nlohmann::json to_json(const PowerBasisExpansion& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(c.str());
  return {{"a", e.a.str()}, {"orientation", to_string(e.orientation)}, {"coeffs", std::move(coeffs)}};
}

PowerBasisExpansion expansion_from_json(const nlohmann::json& j) {
  try {
    PowerBasisExpansion out;
    out.a = Rational::parse(j.at("a").get<std::string>());
    const auto orientation = j.at("orientation").get<std::string>();
    if (orientation == "x-a") {
      out.orientation = Orientation::XMinusA;
    } else if (orientation == "a-x") {
      out.orientation = Orientation::AMinusX;
    } else {
      throw Error(ErrorCode::Parse, "unknown orientation '" + orientation + "'");
    }
    for (const auto& c : j.at("coeffs")) out.coeffs.push_back(Rational::parse(c.get<std::string>()));
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, ex.what());
  }
}

nlohmann::json to_json(const IntegralResult& r) {
  return {{"value", r.value},
          {"terms", r.terms_used},
          {"tail", r.tail_estimate},
          {"status", to_string(r.status)},
          {"regime", to_string(r.regime)}};
}

IntegralResult integral_result_from_json(const nlohmann::json& j) {
  try {
    IntegralResult r;
    r.value = j.at("value").get<double>();
    r.terms_used = j.at("terms").get<long>();
    r.tail_estimate = j.at("tail").get<double>();
    const auto status = j.at("status").get<std::string>();
    if (status == "converged") {
      r.status = SeriesStatus::Converged;
    } else if (status == "max_terms") {
      r.status = SeriesStatus::MaxTermsReached;
    } else if (status == "divergent") {
      r.status = SeriesStatus::DivergenceDetected;
    } else {
      throw Error(ErrorCode::Parse, "unknown status '" + status + "'");
    }
    const auto regime = j.at("regime").get<std::string>();
    if (regime == "lt1") {
      r.regime = Regime::RatioLtOne;
    } else if (regime == "gt1") {
      r.regime = Regime::RatioGtOne;
    } else {
      throw Error(ErrorCode::Parse, "unknown regime '" + regime + "'");
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, ex.what());
  }
}

}  // namespace pq
