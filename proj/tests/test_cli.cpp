#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dircyc/cli.hpp"
#include "dircyc/serialize.hpp"

using namespace dircyc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csvRows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("norm") {
    const Run r = run({"norm", "-p", "2 - z1 - z2", "--alpha", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "alpha 2\niso 12\naniso 12\nuni n/a\n");
    const Run u = run({"norm", "-p", "1 - z1", "--alpha", "1,2"});
    CHECK(u.out == "alpha 1\niso 3\naniso 3\nuni 3\nalpha 2\niso 5\naniso 5\nuni 5\n");
  }

  TEST_CASE("zeros") {
    const Run r = run({"zeros", "-p", "1 - z1*z2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("torus") == "infinite");
    CHECK(j.at("witness") == "proportional_reflection");
    CHECK(j.at("bidisk").at("tag") == "none_found_heuristic");
    const Run f = run({"zeros", "-p", "2 - z1 - z2"});
    const Json k = Json::parse(f.out);
    CHECK(k.at("points") == Json::parse("[[1.0, 0.0, 1.0, 0.0]]"));
    const Run bad = run({"zeros", "-p", "(2 - z1 - z2)^6"});
    CHECK(bad.code == exit_code::inconclusive);
    CHECK(Json::parse(bad.out).at("torus") == "inconclusive");
  }

  TEST_CASE("classify") {
    const Run r = run({"classify", "-p", "2 - z1 - z2", "--alpha", "3", "--nmax", "40"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("predicted").at("verdict") == "not_cyclic");
    CHECK(j.at("certificate").get<double>() == 0.779696801234);
    CHECK(j.at("consistent") == true);
    const auto back = j.get<ClassificationReport>();
    CHECK(back.distances.size() == 41);

    const Run f = run({"classify", "--factors", "z1 - 2", "3 - z1 - z2", "--alpha", "3", "--nmax", "12"});
    CHECK(f.code == 0);
    CHECK(Json::parse(f.out).at("predicted").at("verdict") == "cyclic");

    const Run many = run({"classify", "-p", "z1 - 2", "--alpha", "0.5,3", "--nmax", "10"});
    CHECK(Json::parse(many.out).size() == 2);
  }

  TEST_CASE("scan") {
    const Run r = run({"scan", "-p", "1 - z1", "--alpha", "2,1", "--nmax", "5"});
    CHECK(r.code == 0);
    const auto rows = csvRows(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == std::vector<std::string>{"alpha", "n", "basis_size", "distance_sq", "distance"});
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][3] == "0.666666666667");
    CHECK(rows[2][3] == "0.545454545455");
    CHECK(rows[7][0] == "2");
    for (std::size_t i = 2; i < rows.size(); ++i)
      if (rows[i][0] == rows[i - 1][0]) CHECK(std::stod(rows[i][4]) <= std::stod(rows[i - 1][4]));
  }

  TEST_CASE("opa") {
    const Run r = run({"opa", "-p", "2 - z1 - z2", "--alpha", "0", "--n", "0"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("distance_sq").get<double>() == 0.333333333333);
    CHECK(j.at("p").at("coeffs")[0].at("re").get<double>() == 0.333333333333);
    const Run b = run({"opa", "-p", "1 - z1", "--alpha", "1", "--basis", "bidegree", "--n1", "2", "--n2", "0"});
    CHECK(Json::parse(b.out).at("distance_sq").get<double>() == 0.48);
  }

  TEST_CASE("recurrence and qsmooth") {
    const Run r = run({"recurrence", "-p", "1", "--K", "1", "--L", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,l,re,im\n0,0,2,0\n1,0,0,0\n");
    const std::string spectrum = "qsmooth_spectrum_test.csv";
    const Run q = run({"qsmooth", "-p", "2 - z1 - z2", "--N", "2", "--config", "qsmooth_test.cfg", "--spectrum", spectrum});
    CHECK(q.code == exit_code::usage);  // config file missing
    {
      std::ofstream cfg("qsmooth_test.cfg");
      cfg << "# small grid\nq_grid = 32\n";
    }
    const Run ok = run({"qsmooth", "-p", "2 - z1 - z2", "--N", "2", "--config", "qsmooth_test.cfg", "--spectrum", spectrum});
    CHECK(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j.at("grid_size") == 32);
    CHECK(j.at("torus_zeros").size() == 1);
    std::ifstream in(spectrum);
    std::string header;
    std::getline(in, header);
    CHECK(header == "k,l,magnitude");
    std::remove(spectrum.c_str());
    std::remove("qsmooth_test.cfg");
  }

  TEST_CASE("output file") {
    const std::string path = "cli_out_test.txt";
    const Run r = run({"norm", "-p", "z1", "--alpha", "3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str() == "alpha 3\niso 8\naniso 8\nuni 8\n");
    std::remove(path.c_str());
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == exit_code::usage);
    CHECK(run({"frobnicate"}).code == exit_code::usage);
    CHECK(run({"norm", "--alpha", "2"}).code == exit_code::usage);
    CHECK(run({"norm", "-p", "2 - z3"}).code == exit_code::parse);
    CHECK(run({"norm", "-p", "2 -", "--alpha", "1"}).code == exit_code::parse);
    CHECK(run({"norm", "-p", "z1", "--alpha", "x"}).code == exit_code::usage);
    CHECK(run({"opa", "-p", "z1", "--basis", "weird"}).code == exit_code::usage);
    CHECK(run({"opa", "-p", "1 + z1", "--n", "3", "--config", "/nonexistent"}).code == exit_code::usage);
    {
      std::ofstream cfg("strict_test.cfg");
      cfg << "pivot_tol = 2\n";
    }
    CHECK(run({"opa", "-p", "1 + z1", "--n", "3", "--config", "strict_test.cfg"}).code == exit_code::numerical);
    {
      std::ofstream cfg("strict_test.cfg");
      cfg << "no_such_key = 2\n";
    }
    CHECK(run({"opa", "-p", "1 + z1", "--config", "strict_test.cfg"}).code == exit_code::usage);
    std::remove("strict_test.cfg");
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("polynomial JSON input and determinism") {
    {
      std::ofstream f("poly_test.json");
      f << R"({"bidegree":[1,1],"coeffs":[{"k":0,"l":0,"re":2,"im":0},{"k":1,"l":0,"re":-1,"im":0},{"k":0,"l":1,"re":-1,"im":0}]})";
    }
    const Run a = run({"zeros", "--poly-json", "poly_test.json"});
    const Run b = run({"zeros", "-p", "2 - z1 - z2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    {
      std::ofstream f("poly_test.json");
      f << "{not json";
    }
    CHECK(run({"zeros", "--poly-json", "poly_test.json"}).code == exit_code::parse);
    std::remove("poly_test.json");
  }
}
