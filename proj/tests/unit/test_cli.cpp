#include <sstream>

#include "doctest.h"
#include "polygroth/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = polygroth::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto a = run({"chi", "-e", "dim 1; x1 >= 0"});
  CHECK(a.code == 0);
  CHECK(a.out == "chi=0 chi_b=1\n");

  auto b = run({"class", "-e", "dim 2; x1 >= 0 & -x1 >= -1 & x2 >= 0 & -x2 >= -1"});
  CHECK(b.code == 0);
  CHECK(b.out == "u^2 + v^2\n");

  auto c = run({"chi-gamma", "--gamma", "1", "-e", "dim 1; x1 >= 1/2 & -x1 >= -1/2"});
  CHECK(c.code == 0);
  CHECK(c.out == "0\n");
}

TEST_CASE("other subcommands") {
  CHECK(run({"ungraded", "-e", "dim 1; x1 > 0"}).out == "(-1, 0)\n");
  CHECK(run({"chi-gamma", "--gamma", "div", "-e", "dim 1; x1 >= 0"}).out == "1\n");
  auto cells = run({"cells", "-e", "dim 2; x1 >= 0 & x2 >= 0 & x1 - x2 >= 0"});
  CHECK(cells.code == 0);
  CHECK(cells.out.rfind("hyperplanes=3 cells=13\n", 0) == 0);
  auto faces = run({"faces", "-e", "1 0 >= 0; 0 1 >= 0; -1 0 >= -1; 0 -1 >= -1"});
  CHECK(faces.code == 0);
  CHECK(faces.out.rfind("faces=9\n", 0) == 0);
  auto bg = run({"bg", "--verify", "-e", "0 1 >= 0; 0 -1 >= -1"});
  CHECK(bg.code == 0);
  CHECK(bg.out.find("verified=true") != std::string::npos);
  auto ext = run({"bg", "--exterior", "0,-1", "-e", "0 1 >= 0; 0 -1 >= -1"});
  CHECK(ext.out.find("chi_U_v=-1") != std::string::npos);
  auto mot = run({"motivic", "-e", "torus 1; val(x1) >= 0; point;"});
  CHECK(mot.code == 0);
  CHECK(mot.out == "f=L g=1\npsi=L\nin_kernel=false\n");
  auto tan = run({"tangent", "--face", "0", "-e", "1 >= 0; -1 >= -1"});
  CHECK(tan.code == 0);
  CHECK(tan.out == "face=0 dim=0\n1 >= 0\n");
  auto rec = run({"recession", "-e", "0 1 >= 0; 0 -1 >= -1"});
  CHECK(rec.code == 0);
  CHECK(rec.out.rfind("ell=1\n", 0) == 0);
}

TEST_CASE("exit codes") {
  auto parse = run({"chi", "-e", "dim 1; x1 >="});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("1:") != std::string::npos);
  CHECK(run({"chi"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"chi", "-e", "dim 1; x1 >= 0", "/nonexistent/file"}).code == 2);
  CHECK(run({"chi", "/nonexistent/file"}).code == 2);
  CHECK(run({"chi-gamma", "--gamma", "-1", "-e", "dim 1; x1 >= 0"}).code == 2);

  std::string many = "dim 1; x1 >= 0";
  for (int i = 1; i <= 14; ++i) many += " | x1 = " + std::to_string(i);
  CHECK(run({"cells", "-e", many}).code == 3);
  CHECK(run({"--max-hyperplanes", "20", "cells", "-e", many}).code == 0);
  CHECK(run({"--max-dim", "1", "chi", "-e", "dim 2; x1 >= 0"}).code == 3);

  CHECK(run({"faces", "-e", "1 >= 1; -1 >= 0"}).code == 1);
  CHECK(run({"bg", "--exterior", "1/2", "-e", "1 >= 0; -1 >= -1"}).code == 1);
  CHECK(run({"motivic", "-e", "torus 1; val(x1 + 1) >= 0"}).code == 2);
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args{"--json", "bg", "-e", "1 0 >= 0; 0 1 >= 0; -1 -1 >= -1"};
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"ell\"") != std::string::npos);
  auto chi = run({"--json", "chi", "-e", "dim 1; x1 > 0"});
  CHECK(chi.out == "{\"chi\":-1,\"chi_b\":0}\n");
}

TEST_CASE("verify-suite filter") {
  auto r = run({"verify-suite", "--filter", "generators_*"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS generators_chi") != std::string::npos);
  CHECK(r.out.find("bg_suite") == std::string::npos);
  CHECK(run({"verify-suite", "--filter", "no_such_check"}).code == 2);
}
