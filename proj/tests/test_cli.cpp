#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mgce/commands.hpp"

#include <cstdio>
#include <cstdlib>

using namespace mgce;

namespace {

std::string fixture_path(const std::string& name)
{
    return std::string(MGCE_FIXTURE_DIR) + "/" + name + ".json";
}

std::string fixture_text(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CliOutput {
    int exit_code;
    std::string stdout_text;
};

CliOutput run_cli(const std::string& args)
{
    const std::string cmd = std::string(MGCE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("manifest parsing")
{
    const Manifest sl2 = parse_manifest(fixture_text("sl2"));
    CHECK(sl2.algebra.dim() == 3);
    CHECK(sl2.representations.count("adjoint") == 1);
    CHECK(!sl2.algebra.validate());

    // round trip through the canonical serializer
    const std::string canon = serialize_manifest(sl2);
    CHECK(serialize_manifest(parse_manifest(canon)) == canon);

    const Manifest empty = parse_manifest(R"({"name":"zero","generators":[]})");
    CHECK(empty.algebra.dim() == 0);
}

TEST_CASE("manifest errors")
{
    CHECK_THROWS_AS(parse_manifest("{"), ManifestError);
    try {
        parse_manifest("{ not json");
    } catch (const ManifestError& e) {
        CHECK(e.kind == ManifestError::Kind::parse);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    const char* unknown = R"({
        "name": "bad",
        "generators": [{"name": "x", "degree": 0}],
        "bracket": [{"left": "x", "right": "w", "value": {"x": "1"}}]
    })";
    try {
        parse_manifest(unknown);
        FAIL("expected UnknownName");
    } catch (const ManifestError& e) {
        CHECK(e.kind == ManifestError::Kind::unknown_name);
    }
    const char* dup = R"({
        "name": "bad",
        "generators": [{"name": "x", "degree": 0}, {"name": "x", "degree": 1}]
    })";
    try {
        parse_manifest(dup);
        FAIL("expected DuplicateName");
    } catch (const ManifestError& e) {
        CHECK(e.kind == ManifestError::Kind::duplicate_name);
    }
    const char* badrat = R"({
        "name": "bad",
        "generators": [{"name": "x", "degree": 0}],
        "bracket": [{"left": "x", "right": "x", "value": {"x": "0.5"}}]
    })";
    try {
        parse_manifest(badrat);
        FAIL("expected BadRational");
    } catch (const ManifestError& e) {
        CHECK(e.kind == ManifestError::Kind::bad_rational);
    }
}

TEST_CASE("manifest requests provide command defaults")
{
    const char* text = R"({
        "name": "tiny",
        "generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}],
        "requests": {"maxweight": 1, "degrees": [0, 1]}
    })";
    const Manifest m = parse_manifest(text);
    REQUIRE(m.default_maxweight);
    CHECK(*m.default_maxweight == 1);
    REQUIRE(m.default_degrees);
    CHECK(m.default_degrees->second == 1);
    // requests round-trip through the serializer
    CHECK(serialize_manifest(parse_manifest(serialize_manifest(m))) == serialize_manifest(m));
    CommandOptions opt;
    opt.command = "betti";
    CommandResult res = run_command(opt, {m});
    CHECK(res.report.at("params").at("max_weight") == 1);
    CHECK(res.exit_code == 3); // maxweight 1 < dim 2 without --allow-truncated
    opt.allow_truncated = true;
    res = run_command(opt, {m});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("tables").at("betti").at("1") == 2);
}

TEST_CASE("run_command: validate")
{
    const Manifest sl2 = parse_manifest(fixture_text("sl2"));
    CommandOptions opt;
    opt.command = "validate";
    CommandResult res = run_command(opt, {sl2});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("checks").at("algebra") == "ok");
    CHECK(res.report.at("checks").at("representation:adjoint") == "ok");

    Manifest broken = sl2;
    broken.algebra.set_bracket(0, 1, {{1, -2}});
    CommandResult bad = run_command(opt, {broken});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("run_command: betti tables")
{
    const Manifest heis = parse_manifest(fixture_text("heis3"));
    CommandOptions opt;
    opt.command = "betti";
    opt.side = "cohom";
    opt.degrees = std::make_pair(0, 3);
    CommandResult res = run_command(opt, {heis});
    CHECK(res.exit_code == 0);
    const auto& table = res.report.at("tables").at("betti");
    CHECK(table.at("0") == 1);
    CHECK(table.at("1") == 2);
    CHECK(table.at("2") == 2);
    CHECK(table.at("3") == 1);
}

TEST_CASE("run_command: window gate")
{
    const Manifest sl2 = parse_manifest(fixture_text("sl2"));
    CommandOptions opt;
    opt.command = "betti";
    opt.max_weight = 1;
    CommandResult res = run_command(opt, {sl2});
    CHECK(res.exit_code == 3);
    opt.allow_truncated = true;
    CHECK(run_command(opt, {sl2}).exit_code == 0);
}

TEST_CASE("run_command: ce weight tables")
{
    const Manifest aff = parse_manifest(fixture_text("aff1"));
    CommandOptions opt;
    opt.command = "ce";
    opt.side = "hom";
    CommandResult res = run_command(opt, {aff});
    CHECK(res.exit_code == 0);
    const auto& dims = res.report.at("tables").at("weight_dims");
    CHECK(dims.at("0").at("0") == 1);
    CHECK(dims.at("1").at("-1") == 2);
    CHECK(dims.at("2").at("-2") == 1);
    CHECK(res.report.at("checks").at("mixed_valid") == "ok");

    opt.side = "cohom";
    opt.coeff = "scaling";
    CommandResult coeff = run_command(opt, {aff});
    CHECK(coeff.exit_code == 0);
    CHECK(coeff.report.at("tables").at("weight_dims").at("-1").at("1") == 2);

    // a non-discrete input needs --allow-truncated to exit 0
    const Manifest shifted = parse_manifest(fixture_text("trivial_shifted"));
    opt = CommandOptions{};
    opt.command = "ce";
    opt.side = "cohom";
    CHECK(run_command(opt, {shifted}).exit_code == 3);
    opt.allow_truncated = true;
    CommandResult sh = run_command(opt, {shifted});
    CHECK(sh.exit_code == 0);
    CHECK(sh.report.at("tables").at("weight_dims").at("-1").at("2") == 1);
}

TEST_CASE("run_command: tate tables")
{
    const Manifest sl2 = parse_manifest(fixture_text("sl2"));
    CommandOptions opt;
    opt.command = "tate";
    opt.side = "hom";
    CommandResult res = run_command(opt, {sl2});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("checks").at("square_zero") == "ok");
    const auto& h = res.report.at("tables").at("homology");
    CHECK(h.at("0") == 1);
    CHECK(h.at("3") == 1);
    CHECK(h.size() == 2);
    const auto& dims = res.report.at("tables").at("total_dims");
    CHECK(dims.at("1") == 3);
}

TEST_CASE("run_command: duality and monoidality")
{
    const Manifest aff = parse_manifest(fixture_text("aff1"));
    const Manifest sl2 = parse_manifest(fixture_text("sl2"));
    CommandOptions opt;
    opt.command = "duality";
    CHECK(run_command(opt, {aff}).exit_code == 0);
    opt.command = "monoidality";
    opt.max_weight = 3;
    CommandResult res = run_command(opt, {aff, sl2});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("checks").at("monoidality") == "ok");
}

TEST_CASE("run_command: the built-in worked example")
{
    CommandOptions opt;
    opt.command = "check-paper-example";
    CommandResult res = run_command(opt, {});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("checks").at("example") == "ok");
    const auto& rows = res.report.at("tables").at("mixed_differential_weight2");
    CHECK(rows.size() == 6);
    CHECK(rows.at("e1~.e2~") == "e1.e2~ - e2.e1~ - e1~");
}

TEST_CASE("cli end to end")
{
    SUBCASE("validate exits 0 and is deterministic")
    {
        CliOutput a = run_cli("validate " + fixture_path("sl2"));
        CliOutput b = run_cli("validate " + fixture_path("sl2"));
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        CHECK(a.stdout_text.find("\"algebra\": \"ok\"") != std::string::npos);
    }
    SUBCASE("betti on heis3")
    {
        CliOutput out = run_cli("betti --side cohom --degrees 0..3 "
                                + fixture_path("heis3"));
        CHECK(out.exit_code == 0);
        CHECK(out.stdout_text.find("\"1\": 2") != std::string::npos);
    }
    SUBCASE("tsv output")
    {
        CliOutput out = run_cli("betti --side cohom --out tsv " + fixture_path("sl2"));
        CHECK(out.exit_code == 0);
        CHECK(out.stdout_text.find("# betti") != std::string::npos);
        CHECK(out.stdout_text.find("0\t1") != std::string::npos);
    }
    SUBCASE("parse failure exits 2")
    {
        CliOutput out = run_cli("validate " + fixture_path("missing_file"));
        CHECK(out.exit_code == 2);
    }
    SUBCASE("violations exit 1")
    {
        const std::string bad = "/tmp/mgce_bad_manifest.json";
        std::ofstream out(bad);
        out << R"({"name":"bad","generators":[{"name":"h","degree":0},
                   {"name":"e","degree":0},{"name":"f","degree":0}],
                   "bracket":[{"left":"h","right":"e","value":{"e":"-2"}},
                              {"left":"h","right":"f","value":{"f":"-2"}},
                              {"left":"e","right":"f","value":{"h":"1"}}]})";
        out.close();
        CliOutput res = run_cli("validate " + bad);
        CHECK(res.exit_code == 1);
        CliOutput broken_json = run_cli("validate /dev/null");
        CHECK(broken_json.exit_code == 2);
    }
    SUBCASE("window gate exits 3 without the flag")
    {
        CliOutput gated = run_cli("betti --max-weight 1 " + fixture_path("sl2"));
        CHECK(gated.exit_code == 3);
        CliOutput allowed = run_cli("betti --max-weight 1 --allow-truncated "
                                    + fixture_path("sl2"));
        CHECK(allowed.exit_code == 0);
    }
    SUBCASE("the worked example runs")
    {
        CliOutput out = run_cli("check-paper-example");
        CHECK(out.exit_code == 0);
    }
    SUBCASE("every bundled fixture validates")
    {
        for (const char* name : {"abelian1", "abelian2", "abelian3", "abelian4", "abelian5",
                                 "aff1", "heis3", "sl2", "aff1_x_sl2", "trivial_shifted"}) {
            CliOutput out = run_cli("validate " + fixture_path(name));
            CHECK(out.exit_code == 0);
        }
    }
}
