#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace seuclid;
namespace cli = seuclid::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int rc;
    std::string out, err;
};

Outcome check(const std::string& d, const std::string& s, std::optional<std::string> kmax = {},
          std::optional<std::string> cert = {}) {
    std::ostringstream out, err;
    int rc = cli::cmd_check(d, s, kmax, cert, out, err);
    return {rc, out.str(), err.str()};
}

Outcome table(const std::string& s, long long d_max, const std::string& format = "text") {
    std::ostringstream out, err;
    int rc = cli::cmd_table(s, d_max, format, out, err);
    return {rc, out.str(), err.str()};
}

Outcome verify(const std::string& path) {
    std::ostringstream out, err;
    int rc = cli::cmd_verify(path, out, err);
    return {rc, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string last_line(const std::string& text) {
    std::string t = text;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("seuclid_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

AnyCertificate certificate_for(long long d, const SSet& s) { return seuclid::check(BigInt(d), s).certificate; }

}  // namespace

TEST(ParseInput, DAndS) {
    EXPECT_EQ(cli::parse_d("67"), 67);
    EXPECT_THROW(cli::parse_d("12"), cli::InputError);
    EXPECT_THROW(cli::parse_d("0"), cli::InputError);
    EXPECT_THROW(cli::parse_d("-5"), cli::InputError);
    EXPECT_THROW(cli::parse_d("five"), cli::InputError);
    EXPECT_EQ(cli::parse_s("5,2,3"), (SSet{2, 3, 5}));
    EXPECT_EQ(cli::parse_s(""), SSet{});
    EXPECT_EQ(cli::parse_s("none"), SSet{});
    EXPECT_THROW(cli::parse_s("2,4"), cli::InputError);
    EXPECT_THROW(cli::parse_s("2,,3"), cli::InputError);
    EXPECT_THROW(cli::parse_s("3,3"), cli::InputError);
    EXPECT_THROW(cli::parse_prime("2,3"), cli::InputError);
}

TEST(CmdCheck, Examples) {
    Outcome r = check("5", "2");
    EXPECT_EQ(r.rc, cli::kOk);
    EXPECT_NE(r.out.find("Euclidean(cover)"), std::string::npos);
    EXPECT_NE(r.out.find("minimal k_max = 2"), std::string::npos);

    r = check("10", "2");
    EXPECT_EQ(r.rc, cli::kOk);
    EXPECT_NE(r.out.find("Euclidean(exceptional)"), std::string::npos);

    r = check("5", "11");
    EXPECT_EQ(r.rc, cli::kOk);
    EXPECT_NE(r.out.find("NonEuclidean(witness)"), std::string::npos);
    EXPECT_NE(r.out.find("xi0 = (1+w)/2"), std::string::npos);
}

TEST(CmdCheck, ExitCodes) {
    EXPECT_EQ(check("12", "2").rc, cli::kInputError);
    EXPECT_EQ(check("5", "4").rc, cli::kInputError);
    EXPECT_EQ(check("5", "2", "zero").rc, cli::kInputError);
    EXPECT_EQ(check("5", "2", "0").rc, cli::kInputError);
    // -31 = 1 mod 8: 2 splits and the cover search stops at X
    Outcome r = check("31", "2");
    EXPECT_EQ(r.rc, cli::kUnknown);
    EXPECT_NE(r.out.find("NotApplicable"), std::string::npos);
    // several primes, far beyond the search bound
    EXPECT_EQ(check("163", "2,3", "8").rc, cli::kUnknown);
    EXPECT_NE(check("12", "2").err.find("not squarefree"), std::string::npos);
}

TEST(CmdTable, KnownLists) {
    EXPECT_EQ(last_line(table("", 11).out), "Euclidean: 1, 2, 3, 7, 11");
    EXPECT_EQ(last_line(table("2", 23).out), "Euclidean: 1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 23");
    EXPECT_EQ(last_line(table("2,3", 71).out),
              "Euclidean: 1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 23, 31, 35, 39, 43, 47, 51, 55, 59, 67, 71");
}

TEST(CmdTable, JsonIsOrderedAndDeterministic) {
    Outcome a = table("2,3", 40, "json");
    ASSERT_EQ(a.rc, cli::kOk);
    const json j = json::parse(a.out);
    long long prev = 0;
    for (const auto& row : j["rows"]) {
        const long long d = std::stoll(row["d"].get<std::string>());
        EXPECT_GT(d, prev);
        prev = d;
    }
    EXPECT_EQ(j["rows"].size(), squarefree_upto(40).size());
    // worker count does not change the bytes
    std::ostringstream one, many, err;
    cli::cmd_table("2,3", 40, "json", one, err, 1);
    cli::cmd_table("2,3", 40, "json", many, err, 4);
    EXPECT_EQ(one.str(), many.str());
    EXPECT_EQ(one.str(), a.out);
    EXPECT_EQ(table("2", 10, "xml").rc, cli::kInputError);
    EXPECT_EQ(table("2", 0).rc, cli::kInputError);
}

TEST(Serialization, RoundTripEveryKind) {
    const std::vector<AnyCertificate> certs = {
        certificate_for(67, SSet{2, 3}), certificate_for(35, SSet{7}), certificate_for(10, SSet{2}),
        certificate_for(15, SSet{5}), certificate_for(5, SSet{11}), certificate_for(13, SSet{2})};
    const std::vector<std::string> kinds = {"cover", "disk", "exceptional-bundle", "exceptional-bundle", "witness",
                                            "witness"};
    for (std::size_t i = 0; i < certs.size(); ++i) {
        ASSERT_EQ(certificate_kind(certs[i]), kinds[i]);
        const std::string text = canonical_string(certs[i]);
        const AnyCertificate back = parse_certificate(text);
        EXPECT_EQ(canonical_string(back), text);
        EXPECT_TRUE(verify_certificate(back).ok) << kinds[i];
        // metadata is ignored on load
        EXPECT_EQ(canonical_string(parse_certificate(file_string(certs[i], "2000-01-01T00:00:00Z"))), text);
    }
}

TEST(Serialization, CanonicalIsDeterministic) {
    EXPECT_EQ(canonical_string(certificate_for(67, SSet{2, 3})), canonical_string(certificate_for(67, SSet{2, 3})));
    EXPECT_EQ(file_string(certificate_for(35, SSet{5}), "t"), file_string(certificate_for(35, SSet{5}), "t"));
}

TEST(Serialization, Golden) {
    const std::string golden = slurp(fs::path(SEUCLID_SOURCE_DIR) / "tests/golden/cover_67_2_3.json");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(canonical_string(certificate_for(67, SSet{2, 3})), golden);
}

TEST(Serialization, BigValuesAreStrings) {
    const json j = to_json(certificate_for(35, SSet{7}));
    EXPECT_TRUE(j["d"].is_string());
    for (const auto& dk : j["payload"]["disks"]) {
        EXPECT_TRUE(dk["a"].is_string());
        EXPECT_TRUE(dk["r_squared"]["den"].is_string());
    }
    EXPECT_EQ(j["payload"]["disks"].size(), 20u);
}

TEST(Serialization, Rejects) {
    EXPECT_THROW(parse_certificate("{"), CertificateParseError);
    EXPECT_THROW(parse_certificate("[]"), CertificateParseError);
    json j = to_json(certificate_for(5, SSet{2}));
    json bad = j;
    bad["schema_version"] = "99";
    EXPECT_THROW(from_json(bad), CertificateParseError);
    bad = j;
    bad["d"] = "12";
    EXPECT_THROW(from_json(bad), CertificateParseError);
    bad = j;
    bad["kind"] = "sketch";
    EXPECT_THROW(from_json(bad), CertificateParseError);
    bad = j;
    bad["payload"].erase("chain");
    EXPECT_THROW(from_json(bad), CertificateParseError);
    bad = to_json(certificate_for(5, SSet{11}));
    bad["s"] = json::array({2, 11});
    EXPECT_THROW(from_json(bad), CertificateParseError);
    bad = to_json(certificate_for(5, SSet{11}));
    bad["payload"]["case_tag"] = "Guess";
    EXPECT_THROW(from_json(bad), CertificateParseError);
}

TEST_F(CliFiles, CheckThenVerify) {
    for (auto [d, s] : std::vector<std::pair<std::string, std::string>>{
             {"67", "2,3"}, {"35", "7"}, {"10", "2"}, {"15", "3"}, {"5", "11"}, {"3", ""}}) {
        const std::string file = path("cert_" + d + ".json");
        ASSERT_EQ(check(d, s, {}, file).rc, cli::kOk);
        Outcome v = verify(file);
        EXPECT_EQ(v.rc, cli::kOk) << d << " " << v.out;
        EXPECT_EQ(v.out.rfind("valid", 0), 0u);
    }
}

TEST_F(CliFiles, VerifyFailures) {
    const std::string file = path("c67.json");
    ASSERT_EQ(check("67", "2,3", {}, file).rc, cli::kOk);
    const std::string text = slurp(file);

    json broken = json::parse(text);
    broken["payload"]["chain"].erase(3);
    spit(path("broken.json"), broken.dump(2));
    Outcome r = verify(path("broken.json"));
    EXPECT_EQ(r.rc, cli::kVerifyFailed);
    EXPECT_EQ(r.out.rfind("INVALID", 0), 0u);

    spit(path("truncated.json"), text.substr(0, text.size() / 2));
    EXPECT_EQ(verify(path("truncated.json")).rc, cli::kInputError);
    EXPECT_EQ(verify(path("missing.json")).rc, cli::kInputError);

    json lowered = json::parse(text);
    lowered["payload"]["k_max"] = "3";
    spit(path("lowered.json"), lowered.dump());
    EXPECT_EQ(verify(path("lowered.json")).rc, cli::kVerifyFailed);

    ASSERT_EQ(check("35", "5", {}, path("disk.json")).rc, cli::kOk);
    json disk = json::parse(slurp(path("disk.json")));
    disk["payload"]["disks"].erase(10);
    spit(path("disk_bad.json"), disk.dump());
    EXPECT_EQ(verify(path("disk_bad.json")).rc, cli::kVerifyFailed);

    ASSERT_EQ(check("17", "2", {}, path("w.json")).rc, cli::kOk);
    json w = json::parse(slurp(path("w.json")));
    w["payload"]["bound"]["num"] = "19";
    spit(path("w_bad.json"), w.dump());
    EXPECT_EQ(verify(path("w_bad.json")).rc, cli::kVerifyFailed);
}

TEST_F(CliFiles, RenderFigures) {
    std::ostringstream out, err;
    ASSERT_EQ(cli::cmd_render("67", "2,3", path("f67.svg"), out, err), cli::kOk);
    const std::string s67 = slurp(path("f67.svg"));
    EXPECT_EQ(count(s67, "class=\"strip\""), 7u);
    EXPECT_EQ(count(s67, "class=\"fundamental-domain\""), 1u);
    EXPECT_NE(s67.find("<title>I_1^4</title>"), std::string::npos);

    ASSERT_EQ(cli::cmd_render("35", "7", path("f35.svg"), out, err), cli::kOk);
    const std::string s35 = slurp(path("f35.svg"));
    EXPECT_EQ(count(s35, "<circle class=\"disk"), 20u);
    EXPECT_EQ(count(s35, "class=\"disk boosted\""), 8u);

    // d = 5, S = {2}: unit disks at the corners of the rectangle plus radius-1/2 disks
    ASSERT_EQ(cli::cmd_render("5", "2", path("f5.svg"), out, err), cli::kOk);
    const std::string s5 = slurp(path("f5.svg"));
    EXPECT_NE(s5.find("points=\"0.000,0.000 200.000,0.000 200.000,447.214 0.000,447.214\""), std::string::npos);
    for (const std::string corner : {"cx=\"0.000\" cy=\"0.000\"", "cx=\"200.000\" cy=\"0.000\"",
                                     "cx=\"0.000\" cy=\"447.214\"", "cx=\"200.000\" cy=\"447.214\""}) {
        EXPECT_NE(s5.find("<circle class=\"disk\" " + corner + " r=\"200.000\""), std::string::npos) << corner;
    }
    EXPECT_GT(count(s5, "r=\"100.000\""), 0u);
    EXPECT_EQ(count(s5, "class=\"strip\""), 3u);

    // the half-integer basis gives a parallelogram
    ASSERT_EQ(cli::cmd_render("15", "3", path("f15.svg"), out, err), cli::kOk);
    const std::string s15 = slurp(path("f15.svg"));
    EXPECT_NE(s15.find("points=\"0.000,0.000 200.000,0.000 300.000,387.298 100.000,387.298\""), std::string::npos);
    EXPECT_EQ(count(s15, "class=\"gap-line\""), 1u);

    ASSERT_EQ(cli::cmd_render("17", "2", path("w17.svg"), out, err), cli::kOk);
    EXPECT_EQ(count(slurp(path("w17.svg")), "class=\"witness\""), 1u);

    EXPECT_EQ(cli::cmd_render("31", "2", path("none.svg"), out, err), cli::kUnknown);
    EXPECT_FALSE(fs::exists(path("none.svg")));
    EXPECT_EQ(cli::cmd_render("8", "2", path("bad.svg"), out, err), cli::kInputError);
}

TEST(SvgStructure, WellFormedTags) {
    const std::string s = render_svg(certificate_for(35, SSet{5}));
    EXPECT_EQ(s.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u);
    EXPECT_EQ(count(s, "<circle"), count(s, "</circle>"));
    EXPECT_EQ(count(s, "<g "), count(s, "</g>"));
    EXPECT_NE(s.find("scale(1,-1)"), std::string::npos);
    EXPECT_THROW(render_svg(AnyCertificate{}), std::invalid_argument);
}

TEST(CmdOracle, Output) {
    std::ostringstream out, err;
    ASSERT_EQ(cli::cmd_oracle("17", "2", 3, 20, out, err), cli::kOk);
    EXPECT_NE(out.str().find("xi0 = (1+w)/3"), std::string::npos);
    EXPECT_NE(out.str().find("analytic lower bound 1"), std::string::npos);
    EXPECT_EQ(cli::cmd_oracle("17", "6", 3, 20, out, err), cli::kInputError);
    EXPECT_EQ(cli::cmd_oracle("17", "2", -1, 20, out, err), cli::kInputError);
}
