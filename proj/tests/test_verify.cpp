#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "esymdom/verify.hpp"

using namespace esymdom;
using nlohmann::json;

namespace {

json parse_report(const VerificationReport& rep)
{
    return json::parse(report_to_json(rep));
}

// Minimal structural validator covering the subset of JSON Schema the
// committed report schema uses: type, required, additionalProperties,
// properties, enum, minimum.
bool validates(const json& schema, const json& value, std::string& why)
{
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && value.is_object()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "number" && value.is_number()) ||
                        (t == "integer" && value.is_number_integer());
        if (!ok) {
            why = "type mismatch, wanted " + t + " got " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit |= (e == value);
        if (!hit) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema["minimum"].get<double>()) {
            why = "below minimum: " + value.dump();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>())) {
                    why = "missing required key " + k.get<std::string>();
                    return false;
                }
        const json props =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (const auto& [k, v] : value.items()) {
            if (props.contains(k)) {
                if (!validates(props[k], v, why)) return false;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                why = "unexpected key " + k;
                return false;
            }
        }
    }
    return true;
}

json load_json_file(const std::string& path)
{
    std::ifstream is(path);
    REQUIRE(is.good());
    return json::parse(is);
}

const std::string kSourceDir = ESYMDOM_SOURCE_DIR;

} // namespace

TEST_CASE("report schema")
{
    const json schema =
        load_json_file(kSourceDir + "/schemas/verification_report.schema.json");

    VerifyConfig cfg;
    cfg.property = PropertyId::SSLI;
    cfg.n = 3;
    cfg.trials = 50;
    cfg.seed = 5;
    const VerificationReport rep = run_property(cfg);
    std::string why;
    CHECK(validates(schema, parse_report(rep), why));
    INFO(why);

    VerifyConfig dd;
    dd.property = PropertyId::DIVDIFF_POWER;
    dd.n = 3;
    dd.trials = 40;
    dd.seed = 6;
    const VerificationReport drep = run_property(dd);
    CHECK(validates(schema, parse_report(drep), why));
    INFO(why);

    VerifyConfig iq;
    iq.property = PropertyId::EQ10_IDENTITY;
    const VerificationReport irep = run_property(iq);
    CHECK(validates(schema, parse_report(irep), why));
    INFO(why);
}

TEST_CASE("report accounting invariants")
{
    VerifyConfig cfg;
    cfg.property = PropertyId::SSLI;
    cfg.n = 5;
    cfg.trials = 100;
    cfg.seed = 17;
    const VerificationReport rep = run_property(cfg);
    CHECK(rep.evaluated() == 100);
    CHECK(rep.passes + rep.failures() == rep.trials - rep.rejections);
    CHECK(rep.passes == 100);
    CHECK(rep.worst_margin >= -1e-8);
    CHECK(rep.property == "SSLI");
    CHECK(rep.library_version == library_version);
}

TEST_CASE("reports are deterministic except for wall time")
{
    VerifyConfig cfg;
    cfg.property = PropertyId::RENYI;
    cfg.n = 4;
    cfg.trials = 40;
    cfg.seed = 23;
    VerificationReport a = run_property(cfg);
    VerificationReport b = run_property(cfg);
    a.wall_time_ms = 0;
    b.wall_time_ms = 0;
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("golden report for seed 42")
{
    VerifyConfig cfg;
    cfg.property = PropertyId::SSLI;
    cfg.n = 4;
    cfg.trials = 200;
    cfg.seed = 42;
    const VerificationReport rep = run_property(cfg);

    json got = parse_report(rep);
    json want = load_json_file(kSourceDir + "/tests/golden/ssli_n4_seed42.json");
    got["wall_time_ms"] = 0;
    want["wall_time_ms"] = 0;
    CHECK(got == want);
}

TEST_CASE("identity properties pass on the stated grids")
{
    for (PropertyId p : {PropertyId::EQ7_IDENTITY, PropertyId::EQ8_IDENTITY,
                         PropertyId::EQ10_IDENTITY}) {
        VerifyConfig cfg;
        cfg.property = p;
        const VerificationReport rep = run_property(cfg);
        INFO(summary_line(rep));
        CHECK(rep.failures() == 0);
        CHECK(rep.worst_margin >= 0.0);
    }
}

TEST_CASE("cross-check and limit properties")
{
    VerifyConfig cfg;
    cfg.property = PropertyId::EQ14_CROSSCHECK;
    cfg.n = 4;
    cfg.trials = 30;
    cfg.seed = 3;
    const VerificationReport rep = run_property(cfg);
    CHECK(rep.failures() == 0);

    VerifyConfig sh;
    sh.property = PropertyId::SHANNON;
    sh.n = 5;
    sh.trials = 50;
    sh.seed = 4;
    const VerificationReport srep = run_property(sh);
    CHECK(srep.failures() == 0);
}

TEST_CASE("divided-difference direction is reported and consistent per n")
{
    for (std::size_t n : {2u, 3u, 4u}) {
        VerifyConfig cfg;
        cfg.property = PropertyId::DIVDIFF_POWER;
        cfg.n = n;
        cfg.trials = 60;
        cfg.seed = 11;
        const VerificationReport rep = run_property(cfg);
        INFO(summary_line(rep));
        CHECK(rep.direction != "mixed");
        CHECK(rep.direction != "not_applicable");
        CHECK(rep.failures() == 0);
        // observed empirically: the plain divided difference flips with the
        // parity of n
        if (n % 2 == 0)
            CHECK(rep.direction == "x_ge_y");
        else
            CHECK(rep.direction == "x_le_y");
    }
}

TEST_CASE("configuration errors")
{
    VerifyConfig cfg;
    cfg.property = PropertyId::RENYI;
    cfg.n = 2; // SimplexStrict infeasible
    CHECK_THROWS_AS(run_property(cfg), ConfigError);

    cfg.property = PropertyId::SSLI;
    cfg.n = 4;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_property(cfg), ConfigError);

    cfg.trials = 10;
    cfg.alpha_grid = {1.0}; // excluded order
    cfg.property = PropertyId::RENYI;
    cfg.n = 3;
    CHECK_THROWS_AS(run_property(cfg), ConfigError);

    cfg.alpha_grid = {0.5};
    cfg.property = PropertyId::EQ8_IDENTITY;
    CHECK_THROWS_AS(run_property(cfg), ConfigError);

    CHECK_FALSE(parse_property("NOT_A_PROPERTY").has_value());
    CHECK(parse_property("SDIV") == PropertyId::SDIV);
}

TEST_CASE("matrix-side properties run clean on small batches")
{
    for (PropertyId p : {PropertyId::LOGDET, PropertyId::RIEMANNIAN,
                         PropertyId::SDIV, PropertyId::QUANTUM_RENYI}) {
        VerifyConfig cfg;
        cfg.property = p;
        cfg.n = (p == PropertyId::QUANTUM_RENYI) ? 4 : 3;
        cfg.trials = 25;
        cfg.seed = 31;
        const VerificationReport rep = run_property(cfg);
        INFO(summary_line(rep));
        CHECK(rep.failures() == 0);
    }
}

TEST_CASE("sampled monotonicity properties run clean on small batches")
{
    for (PropertyId p :
         {PropertyId::SSLI, PropertyId::RENYI, PropertyId::POWER_SUM_DIRECTION,
          PropertyId::SUBENTROPY, PropertyId::SCHUR_CONCAVE,
          PropertyId::GEN_FUNC}) {
        VerifyConfig cfg;
        cfg.property = p;
        cfg.n = 4;
        cfg.trials = 40;
        cfg.seed = 37;
        const VerificationReport rep = run_property(cfg);
        INFO(summary_line(rep));
        CHECK(rep.failures() == 0);
    }
}
