#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pisz/canonical.hpp"
#include "pisz/graph6.hpp"

namespace pisz::cli {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

TEST(CliCompute, CycleFiveJson) {
    const std::string c5 = write_graph6(fixtures::load(fixtures::kC5));
    const CliResult r = invoke({"compute", "--format", "json"}, c5 + "\n");
    EXPECT_EQ(r.code, kOk);
    const auto records = json_lines(r.out);
    ASSERT_EQ(records.size(), 1U);
    EXPECT_EQ(records[0]["PIv"], 20);
    EXPECT_EQ(records[0]["Sz"], 20);
    EXPECT_EQ(records[0]["line"], 1);
}

TEST(CliCompute, EmptyInput) {
    const CliResult r = invoke({"compute", "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_TRUE(r.out.empty());
}

TEST(CliCompute, MalformedLineContinues) {
    const CliResult r = invoke({"compute", "--format", "json"}, "C~\nB`\nCl\n");
    EXPECT_EQ(r.code, kParseError);
    const auto records = json_lines(r.out);
    ASSERT_EQ(records.size(), 3U);
    EXPECT_TRUE(records[1].contains("error"));
    EXPECT_EQ(records[1]["input"], "B`");
    EXPECT_EQ(records[2]["graph6"], "Cl");
}

TEST(CliCompute, DisconnectedRecord) {
    const CliResult r = invoke({"compute", "--format", "json"}, "B_\n");
    EXPECT_EQ(r.code, kDisconnected);
    EXPECT_EQ(json_lines(r.out)[0]["error"], "graph is disconnected");
    // A parse error outranks a disconnected input.
    EXPECT_EQ(invoke({"compute"}, "B_\nB`\n").code, kParseError);
}

TEST(CliCompute, FileInputAndIoFailure) {
    const auto path = std::filesystem::temp_directory_path() / "pisz_cli_test.g6";
    {
        std::ofstream f(path);
        f << ">>graph6<<" << fixtures::kPetersen << "\n";
    }
    const CliResult r = invoke({"compute", "--format", "json", "--input", path.string()});
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(json_lines(r.out)[0]["Sz"], 135);
    EXPECT_EQ(invoke({"compute", "--input", "/nonexistent/x.g6"}).code, kIoFailure);
}

TEST(CliCompute, OutputOrderIndependentOfWorkers) {
    std::string input;
    for (const auto& text : {fixtures::kPetersen, fixtures::kC5, fixtures::kK4, fixtures::kBull, fixtures::kK33}) {
        for (int i = 0; i < 1000; ++i) input += std::string(text) + "\n";
    }
    const CliResult one = invoke({"compute", "--format", "csv", "--workers", "1"}, input);
    const CliResult many = invoke({"compute", "--format", "csv", "--workers", "8"}, input);
    EXPECT_EQ(one.code, kOk);
    EXPECT_EQ(one.out, many.out);
}

TEST(CliCompute, CsvRoundTrip) {
    const CliResult r = invoke({"compute", "--format", "csv"}, "IheA@GUAo\nE]~o\nD{O\n");
    std::istringstream rows(r.out);
    std::string header;
    std::getline(rows, header);
    EXPECT_EQ(header, "line,graph6,n,m,W,PI,PIv,Sz,SzE,M1,M2,t,diam,delta,error");
    std::string reemit;
    std::vector<std::string> original;
    for (std::string row; std::getline(rows, row);) {
        original.push_back(row);
        reemit += row.substr(row.find(',') + 1, row.find(',', row.find(',') + 1) - row.find(',') - 1) + "\n";
    }
    const CliResult again = invoke({"compute", "--format", "csv"}, reemit);
    EXPECT_EQ(again.out, r.out);
    EXPECT_EQ(original.size(), 3U);
}

TEST(CliVerify, CycleFour) {
    const CliResult r = invoke({"verify", "--format", "json"}, "Cl\n");
    EXPECT_EQ(r.code, kOk);
    std::set<std::string> equal;
    for (const auto& rec : json_lines(r.out)) {
        if (rec["applicable"] && rec["equality"]) equal.insert(rec["theorem"]);
    }
    EXPECT_TRUE(equal.contains("pi_le_sze_plus_m"));
    EXPECT_TRUE(equal.contains("piv_le_nm_minus_3t"));
    EXPECT_TRUE(equal.contains("sz_le_n2m_over_4_minus_3t"));
}

TEST(CliVerify, BullPassesAndDisconnectedFails) {
    EXPECT_EQ(invoke({"verify"}, std::string(fixtures::kBull) + "\n").code, kOk);
    EXPECT_EQ(invoke({"verify"}, "B_\n").code, kDisconnected);
    // K2 meets the Szeged bound with equality while having a pendant vertex.
    EXPECT_EQ(invoke({"verify"}, "A_\n").code, kCheckFailed);
}

TEST(CliTable1, SingleOrder) {
    const CliResult r = invoke({"table1", "--n", "6"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "n=6: 7 (expected 7) OK\n");
    EXPECT_EQ(invoke({"table1", "--n", "9"}).code, kUsage);
}

TEST(CliSurvey, CapsAndJson) {
    EXPECT_EQ(invoke({"survey", "--n", "9"}).code, kUsage);
    EXPECT_EQ(invoke({"survey", "--n", "2"}).code, kUsage);
    const CliResult r = invoke({"survey", "--n", "5", "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["connected_graphs"], 21);
    EXPECT_EQ(j["clean"], true);
    EXPECT_EQ(invoke({"survey", "--n", "5", "--shard", "3/2"}).code, kUsage);
}

TEST(CliFamilies, YnFive) {
    const CliResult r = invoke({"families", "--yn", "5"});
    EXPECT_EQ(r.code, kOk);
    std::istringstream lines(r.out);
    std::set<Certificate> got;
    for (std::string line; std::getline(lines, line);) got.insert(canonical_form(parse_graph6(line)));
    const std::set<Certificate> want{canonical_form(fixtures::load(fixtures::kBowtie)),
                                     canonical_form(fixtures::load(fixtures::kK23))};
    EXPECT_EQ(got, want);
}

TEST(CliFamilies, Membership) {
    const CliResult r = invoke({"families", "--format", "json"}, "Ds_\nCl\n");
    const auto recs = json_lines(r.out);
    ASSERT_EQ(recs.size(), 2U);
    EXPECT_EQ(recs[0]["in_Xn"], true);
    EXPECT_EQ(recs[1]["in_Yn"], true);
}

TEST(CliFormulas, Values) {
    EXPECT_EQ(invoke({"formulas", "--srg", "10,3,0,1"}).out, "PIv=90 Sz=135\n");
    EXPECT_EQ(invoke({"formulas", "--yn-count", "12"}).out, "|Y_12|=3\n");
    EXPECT_EQ(invoke({"formulas", "--srg", "10,3,1,1"}).code, kUsage);
    EXPECT_EQ(invoke({"formulas"}).code, kUsage);
}

TEST(CliGenerate, ConnectedFive) {
    const CliResult r = invoke({"generate", "--n", "5", "--connected"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);
}

TEST(CliUsage, Errors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"bogus"}).code, kUsage);
    EXPECT_EQ(invoke({"compute", "--format", "xml"}).code, kUsage);
    EXPECT_EQ(invoke({"compute", "--workers", "0"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
}

}  // namespace
}  // namespace pisz::cli
