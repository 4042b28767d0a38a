#include <doctest.h>

#include "tanlaw/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "tanlaw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tanlaw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
    std::istringstream in(text);
    std::getline(in, header);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"seq", "--bogus"}).code == 1);
    CHECK(run({"seq", "--kind", "fibonacci"}).code == 1);
    CHECK(run({"cumulants", "--a", "0.6", "--b", "0.8"}).code == 1);
    CHECK(run({"cumulants", "--law", "general", "--a", "0.6", "--b", "0.9"}).code == 1);
    CHECK(run({"cumulants", "--law", "general", "--a", "0.6", "--b", "-0.8"}).code == 1);
    CHECK(run({"radius", "--alpha", "4"}).code == 1);
    CHECK(run({"simulate", "--model", "gue"}).code == 1);
    CHECK(run({"oracle", "--n", "5"}).code == 1);
    CHECK(run({"oracle", "--family", "custom", "--w-re", "x/y"}).code == 1);
}

TEST_CASE("seq") {
    const auto r = run({"seq", "--kind", "tangent", "--n", "5"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j[3]["value"] == "272");
    CHECK(j[4]["value"] == "7936");
    const auto b = json::parse(run({"seq", "--kind", "bernoulli", "--n", "2"}).out);
    CHECK(b[1]["value"] == "-1/30");
    const auto z = run({"seq", "--kind", "zigzag-identity", "--n", "12"});
    CHECK(z.code == 0);
    CHECK(json::parse(z.out)[11]["equal"] == true);
    CHECK(json::parse(run({"seq", "--kind", "derivative-poly", "--n", "1"}).out)[0]["poly"] == "1 + 1*x^2");
}

TEST_CASE("eig and cotsum emit CSV") {
    std::string header;
    const auto e = run({"eig", "--n", "6", "--a", "0.6", "--b", "0.8"});
    CHECK(e.code == 0);
    const auto rows = parse_csv(e.out, header);
    CHECK(header == "k,direct,closed,absdiff");
    CHECK(rows.size() == 6);
    const auto c = run({"cotsum", "--kind", "shifted", "--n-max", "5", "--m-max", "3"});
    CHECK(c.code == 0);
    CHECK(parse_csv(c.out, header).size() == 15);
    CHECK(header == "n,m,direct,closed,absdiff");
}

TEST_CASE("oracle") {
    const auto r = run({"oracle", "--n", "3", "--rmax", "4", "--family", "zigzag"});
    CHECK(r.code == 0);
    for (const auto& row : json::parse(r.out)) CHECK(row["equal"] == true);
    const auto c = run({"oracle", "--n", "2", "--family", "custom", "--w-re", "1/3", "--w-im", "-2", "--diag", "1/2"});
    CHECK(c.code == 0);
}

TEST_CASE("cumulants") {
    const auto r = run({"cumulants", "--law", "tangent", "--rmax", "6"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j[1]["exact"] == "1");
    CHECK(j[3]["exact"] == "1/3");
    CHECK(j[5]["exact"] == "2/15");
    for (int r2 : {0, 2, 4}) CHECK(j[r2]["exact"] == "0");
    const auto g = json::parse(run({"cumulants", "--law", "general", "--alpha", "1.1", "--rmax", "4"}).out);
    CHECK(g[2]["exact"].is_null());
    const auto q = json::parse(run({"cumulants", "--law", "general", "--a", "0.6", "--b", "0.8", "--rmax", "4"}).out);
    CHECK(q[3]["exact"].is_string());
    const auto w = run({"cumulants", "--law", "general", "--a", "0.6000001", "--b", "0.8", "--rmax", "2"});
    CHECK(w.code == 0);
    CHECK(w.err.find("renormalized") != std::string::npos);
    const auto z = json::parse(run({"cumulants", "--law", "zigzag", "--rmax", "4"}).out);
    CHECK(z[2]["exact"] == "1/4");
    const auto fin = run({"cumulants", "--law", "tangent", "--n", "3", "--rmax", "2"});
    CHECK(fin.code == 0);
    CHECK(json::parse(fin.out)[1]["float"].get<double>() == doctest::Approx(2.0 / 3));
}

TEST_CASE("radius and levy") {
    const auto r = run({"radius", "--alpha", "1.5707963"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rho"].get<double>() == doctest::Approx(2.2644374159).epsilon(1e-7));
    const auto l = run({"levy", "--kmax", "2"});
    REQUIRE(l.code == 0);
    const auto j = json::parse(l.out);
    CHECK(j.size() == 4);
    CHECK(j[0].contains("mass_check"));
}

TEST_CASE("density output keeps full precision") {
    const std::string path = "cli_density_test.csv";
    const auto r = run({"--output", path, "density", "--points", "400"});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string header;
    const auto rows = parse_csv(buf.str(), header);
    CHECK(header == "x_param,psi,f");
    double mass = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        mass += 0.5 * (rows[i + 1][1] - rows[i][1]) * (rows[i][2] + rows[i + 1][2]);
    const double reported = std::stod(r.err.substr(r.err.find("mass=") + 5));
    CHECK(std::abs(mass - reported) < 1e-12);
    std::remove(path.c_str());
}

TEST_CASE("simulate") {
    const auto h = run({"simulate", "--model", "gue", "--N", "30", "--samples", "2", "--seed", "4", "--bins", "8"});
    REQUIRE(h.code == 0);
    std::string header;
    const auto rows = parse_csv(h.out, header);
    CHECK(header == "bin_left,bin_right,count,density");
    double total = 0;
    for (const auto& row : rows) total += row[2];
    CHECK(total == 60);
    const auto j = run({"simulate", "--model", "wishart", "--N", "20", "--M", "20", "--samples", "2", "--seed", "4",
                        "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out)["moments"].size() == 4);
    const auto again = run({"simulate", "--model", "wishart", "--N", "20", "--M", "20", "--samples", "2", "--seed", "4",
                            "--format", "json", "--threads", "2"});
    CHECK(again.out == j.out);
    CHECK(run({"simulate", "--model", "sandwich", "--N", "10", "--samples", "3", "--seed", "1", "--a", "0.6", "--b",
               "0.8"})
              .code == 0);
}

TEST_CASE("verify --quick passes") {
    const auto r = run({"verify", "--quick"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
}

}
