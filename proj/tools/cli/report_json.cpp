#include "cli/report_json.hpp"

#include "knotsurg/error.hpp"

namespace knotsurg::cli {

void to_json(json& j, const ReportEnvelope& e)
{
    j = json{{"tool_version", e.tool_version},
             {"command", e.command},
             {"result", e.result},
             {"warnings", e.warnings}};
    if (e.timestamp)
        j["timestamp"] = *e.timestamp;
}

void from_json(const json& j, ReportEnvelope& e)
{
    j.at("tool_version").get_to(e.tool_version);
    e.command = j.at("command");
    e.result = j.at("result");
    j.at("warnings").get_to(e.warnings);
    if (auto it = j.find("timestamp"); it != j.end())
        e.timestamp = it->get<std::string>();
    else
        e.timestamp.reset();
}

std::string emit(const ReportEnvelope& e)
{
    return json(e).dump(2) + "\n";
}

ReportEnvelope parse_envelope(std::string_view text)
{
    return json::parse(text).get<ReportEnvelope>();
}

json big(const Integer& n) { return n.get_str(); }

Integer parse_big(const json& j)
{
    const auto& s = j.get_ref<const std::string&>();
    Integer n;
    if (s.empty() || n.set_str(s, 10) != 0)
        throw ValidationError("not a decimal integer: '" + s + "'");
    return n;
}

json to_json(const ObstructionReport& r)
{
    json j;
    j["theorem"] = std::string(tag(r.theorem));
    j["verdict"] = std::string(to_string(r.verdict.kind));

    json hyps = json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back({{"name", h.name}, {"required", h.required}, {"actual", h.actual}, {"satisfied", h.satisfied}});
    j["hypotheses"] = std::move(hyps);

    json cert = json::object();
    for (const auto& [k, v] : r.certificate)
        cert[k] = big(v);
    j["certificate"] = std::move(cert);

    if (!r.verdict.families.empty()) {
        json fams = json::array();
        for (const auto& f : r.verdict.families) {
            json fixed = json::array();
            for (const auto& x : f.fixed)
                fixed.push_back(big(x));
            fams.push_back({{"multiplicities", to_string(f)},
                            {"scale", f.scale},
                            {"fixed", std::move(fixed)},
                            {"fibers", f.fiber_count()},
                            {"coprimality", f.coprimality}});
        }
        j["families"] = std::move(fams);
    }
    if (r.verdict.fiber_count)
        j["fiber_count"] = {{"kind", std::string(to_string(r.verdict.fiber_count->kind))},
                            {"n_min", r.verdict.fiber_count->n_min}};
    if (r.verdict.excluded)
        j["excluded"] = r.verdict.excluded->to_string();
    if (r.theorem == Theorem::FiberCount && r.verdict.kind == VerdictKind::ConstrainedSeifert &&
        r.certificate.count("lifted_norm_total"))
        j["vanishing_witnesses"] = r.vanishing_witnesses;
    if (!r.verdict.note.empty())
        j["note"] = r.verdict.note;
    return j;
}

json to_json(const KnotInvariants& k, const AlexanderPolynomial& normalized)
{
    return json{{"normalized", to_string(normalized.poly())},
                {"determinant", big(k.determinant)},
                {"a2", big(k.a2)},
                {"det_mod8", k.det_mod8},
                {"arf", k.arf}};
}

} // namespace knotsurg::cli
