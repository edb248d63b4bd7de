#include "hecke/serialize.hpp"

namespace hecke {

namespace {

using nlohmann::json;

template <class K>
json element_json_impl(const HeckeElementT<K>& e, const char* param) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms()) {
        json t;
        t["window"] = w.window();
        t["coeff"] = coeff_str(c);
        terms.push_back(std::move(t));
    }
    return json{{"rank", e.config().rank()}, {"param", param}, {"terms", std::move(terms)}};
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw Error(Errc::BadInput, "expected a rational as integer or \"a/b\" string");
}

json rat_to_json(const Rat& r) {
    if (is_integer(r) && rat_num(r) >= -((Int(1) << 62)) && rat_num(r) <= (Int(1) << 62))
        return static_cast<long long>(rat_num(r));
    return rat_str(r);
}

}  // namespace

json element_json(const HeckeElementT<Rat>& e) {
    return element_json_impl(e, rat_str(e.config().param()).c_str());
}

json element_json(const HeckeElementT<RatFunc>& e) {
    return element_json_impl(e, e.config().param().str().c_str());
}

json element_json(const ElementVar& e) {
    return std::visit([](const auto& x) { return element_json(x); }, e);
}

json report_json(const RelationReport& r) {
    json rel = json::array();
    for (const auto& inst : r.instances) {
        json e{{"relation", inst.relation}, {"instance", inst.instance}, {"pass", inst.pass}};
        if (!inst.pass) e["diff"] = inst.diff;
        rel.push_back(std::move(e));
    }
    return json{{"rank", r.rank}, {"all_pass", r.all_pass}, {"relations", std::move(rel)},
                {"notes", r.notes}};
}

json report_json(const IsoReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(json{{"check", f.check}, {"detail", f.detail}});
    return json{{"header", r.header},
                {"checked_pairs", r.checked_pairs},
                {"roundtrips", r.roundtrips},
                {"passed", r.passed},
                {"failures", std::move(fails)}};
}

namespace bernstein_io {

using bernstein::BernsteinReport;
using bernstein::CensusReport;
using bernstein::CensusShape;
using bernstein::InertialClassDescriptor;
using bernstein::MoritaTag;

InertialClassDescriptor descriptor_from_json(const json& j) {
    try {
        InertialClassDescriptor d;
        const json& alg = j.at("algebra");
        d.algebra.q = Int(alg.at("q").get<long long>());
        d.algebra.d = alg.at("d").get<int>();
        d.N = j.at("N").get<int>();
        d.levi = j.at("levi").get<std::vector<int>>();
        for (const json& fj : j.at("factors")) {
            bernstein::CuspidalFactor f;
            f.label = fj.at("label").get<std::string>();
            f.m = fj.at("m").get<int>();
            f.torsion = fj.at("torsion").get<int>();
            f.reducibility = rat_from_json(fj.at("reducibility"));
            d.factors.push_back(std::move(f));
        }
        return d;
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("malformed descriptor: ") + e.what());
    }
}

json report_json(const BernsteinReport& r) {
    json ss = json::array();
    for (const auto& cls : r.ss.classes) {
        ss.push_back(json{{"indices", cls.indices},
                          {"r", cls.r},
                          {"f", rat_to_json(cls.f)},
                          {"z", rat_str(cls.z)}});
    }
    json out;
    out["trichotomy"] = r.trichotomy ? json(bernstein::gl2_class_str(*r.trichotomy)) : json(nullptr);
    out["ss"] = std::move(ss);
    out["presentation"] = r.presentation.name();
    out["presentation_display"] = r.presentation.display();
    out["normalized"] = r.presentation.normalized;
    out["morita_tag"] = r.tag.strs();
    out["multiplicity"] = "countably-infinite";
    return out;
}

json fingerprint_json(const MoritaTag& tag) {
    return json{{"morita_tag", tag.strs()}, {"multiplicity", "countably-infinite"}};
}

json census_json(const CensusReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json ej{{"shape", e.shape}};
        if (e.unsupported) {
            ej["unsupported"] = true;
            ej["note"] = "no Morita normalization for non-cuspidal blocks beyond rank 2";
        } else {
            ej["tag_a"] = e.tag_a;
            ej["tag_b"] = e.tag_b;
            ej["equal"] = e.equal;
        }
        entries.push_back(std::move(ej));
    }
    auto alg = [](const bernstein::DivisionAlgebra& a) {
        return json{{"q", static_cast<long long>(a.q)}, {"d", a.d}};
    };
    return json{{"algebra_a", alg(r.alg_a)},
                {"algebra_b", alg(r.alg_b)},
                {"shapes", std::move(entries)},
                {"verdict", r.pass ? "PASS" : "FAIL"},
                {"multiplicity", "countably-infinite"}};
}

std::vector<CensusShape> shapes_from_json(const json& j) {
    try {
        std::vector<CensusShape> shapes;
        for (const json& sj : j.at("shapes")) {
            CensusShape s;
            s.name = sj.at("name").get<std::string>();
            s.levi = sj.at("levi").get<std::vector<int>>();
            s.label_class = sj.at("labels").get<std::vector<int>>();
            for (const json& inv : sj.at("invariants"))
                s.invariants.emplace_back(inv.at("torsion").get<int>(),
                                          rat_from_json(inv.at("reducibility")));
            shapes.push_back(std::move(s));
        }
        return shapes;
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("malformed shape list: ") + e.what());
    }
}

}  // namespace bernstein_io

namespace tadic_io {

using tadic::ConstituentChoice;
using tadic::Gl2Rep;
using tadic::TwistedCuspidal;

namespace {

TwistedCuspidal cuspidal_from_json(const json& j) {
    TwistedCuspidal s;
    s.label = j.at("label").get<std::string>();
    s.a = j.at("a").get<int>();
    s.torsion = j.at("torsion").get<int>();
    if (j.contains("r")) s.twist_r = rat_from_json(j.at("r"));
    if (j.contains("theta")) s.twist_theta = rat_from_json(j.at("theta"));
    tadic::validate(s);
    return s;
}

}  // namespace

json cuspidal_json(const TwistedCuspidal& s) {
    return json{{"label", s.label},
                {"a", s.a},
                {"torsion", s.torsion},
                {"r", rat_str(s.twist_r)},
                {"theta", rat_str(s.twist_theta)}};
}

ClassifyRequest request_from_json(const json& j) {
    try {
        ClassifyRequest req;
        req.d = j.value("d", 1);
        if (req.d < 1) throw Error(Errc::BadInput, "d must be >= 1");
        if (j.contains("cuspidal")) {
            req.rep.kind = Gl2Rep::Kind::Cuspidal;
            req.rep.label = j.at("cuspidal").get<std::string>();
        } else if (j.contains("one_dimensional")) {
            req.rep.kind = Gl2Rep::Kind::OneDimensional;
            req.rep.label = j.at("one_dimensional").get<std::string>();
        } else {
            req.rep.kind = Gl2Rep::Kind::Induced;
            req.rep.sigma1 = cuspidal_from_json(j.at("sigma1"));
            req.rep.sigma2 = cuspidal_from_json(j.at("sigma2"));
        }
        if (j.contains("constituent")) {
            std::string c = j.at("constituent").get<std::string>();
            if (c == "St")
                req.choice = ConstituentChoice::St;
            else if (c == "Sp")
                req.choice = ConstituentChoice::Sp;
            else
                throw Error(Errc::BadInput, "constituent must be \"St\" or \"Sp\"");
        }
        return req;
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("malformed classification request: ") + e.what());
    }
}

json classify_json(const ClassifyRequest& req) {
    json out;
    if (req.rep.kind == Gl2Rep::Kind::Induced) {
        const TwistedCuspidal& s1 = *req.rep.sigma1;
        const TwistedCuspidal& s2 = *req.rep.sigma2;
        bool red = tadic::reducible(s1, s2);
        out["reducible"] = red;
        if (red) {
            tadic::ConstituentPair pair = tadic::constituents(s1, s2);
            out["constituents"] = json{{"St", cuspidal_json(pair.core)},
                                       {"Sp", cuspidal_json(pair.core)},
                                       {"branch", pair.branch > 0 ? "+" : "-"}};
            if (req.choice)
                out["kind"] = tadic::rep_kind_str(tadic::classify_kind(req.rep, req.choice));
        } else {
            out["kind"] = tadic::rep_kind_str(tadic::classify_kind(req.rep));
        }
    } else {
        out["kind"] = tadic::rep_kind_str(tadic::classify_kind(req.rep));
    }
    return out;
}

}  // namespace tadic_io

}  // namespace hecke
