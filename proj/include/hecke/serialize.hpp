#pragma once

#include <json.hpp>

#include "hecke/bernstein.hpp"
#include "hecke/iso.hpp"
#include "hecke/parser.hpp"
#include "hecke/relations.hpp"
#include "hecke/tadic.hpp"

namespace hecke {

// Canonical element form: terms listed in ascending window order, each as
// {"window":[...], "coeff":"..."}.
nlohmann::json element_json(const HeckeElementT<Rat>& e);
nlohmann::json element_json(const HeckeElementT<RatFunc>& e);
nlohmann::json element_json(const ElementVar& e);

nlohmann::json report_json(const RelationReport& r);
nlohmann::json report_json(const IsoReport& r);

namespace bernstein_io {

bernstein::InertialClassDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json report_json(const bernstein::BernsteinReport& r);
nlohmann::json fingerprint_json(const bernstein::MoritaTag& tag);
nlohmann::json census_json(const bernstein::CensusReport& r);
std::vector<bernstein::CensusShape> shapes_from_json(const nlohmann::json& j);

}  // namespace bernstein_io

namespace tadic_io {

struct ClassifyRequest {
    int d = 1;
    tadic::Gl2Rep rep;
    std::optional<tadic::ConstituentChoice> choice;
};

ClassifyRequest request_from_json(const nlohmann::json& j);
nlohmann::json classify_json(const ClassifyRequest& req);
nlohmann::json cuspidal_json(const tadic::TwistedCuspidal& s);

}  // namespace tadic_io

}  // namespace hecke
