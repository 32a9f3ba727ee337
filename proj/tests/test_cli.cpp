// Copyright 2026 The mfcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "mfcat/andyn.hpp"
#include "mfcat/cli.hpp"
#include "mfcat/error.hpp"
#include "mfcat/io.hpp"

using namespace mfcat;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("mfcat-test-" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string put(const fs::path& dir, const std::string& name, const std::string& text) {
  const auto p = dir / name;
  io::write_file(p, text);
  return p.string();
}

const char* kZ23 = R"({"field": "Q", "vars": ["z"], "weights": [1], "w0": "0", "W": "z^5",
 "rank": 1, "p1": [["z^2"]], "p0": [["z^3"]]})";
const char* kTrivial = R"({"field": "Q", "vars": ["z"], "weights": [1], "W": "z^5",
 "rank": 1, "p1": [["1"]], "p0": [["z^5"]]})";

}  // namespace

TEST_CASE("factorization files round trip") {
  const Ring r = make_ring(Field::prime(7), {"z", "x"}, std::vector<std::int64_t>{1, 2},
                           Scalar(Field::prime(7), 3L));
  const Poly z = Poly::variable(r, "z");
  const Poly x = Poly::variable(r, "x");
  const auto X = MatrixFactorization::create(r, z * z + x + Poly(r, 3L), PolyMatrix::of(z * z + x),
                                             PolyMatrix::of(Poly(r, 1L)));
  const auto j = io::mf_to_json(X);
  CHECK(j["field"]["Fp"] == 7);
  CHECK(j["W"] == "z^2 + x + 3");
  const io::Source src("mem", io::dump(j));
  CHECK(io::mf_from_json(src.parse(), src) == X);
}

TEST_CASE("module files round trip") {
  const Ring r = make_ring(Field::rationals(), {"z"});
  const auto M = module_from_partition(parse_poly("z^4", r), {2, 1});
  const io::Source src("mem", io::dump(io::module_to_json(M)));
  CHECK(io::module_from_json(src.parse(), src) == M);
}

TEST_CASE("field flags") {
  CHECK(io::parse_field_flag("Q").is_rational());
  CHECK(io::parse_field_flag("Fp:101").modulus() == 101);
  CHECK_THROWS_AS(io::parse_field_flag("Fp:100"), Error);
  CHECK_THROWS_AS(io::parse_field_flag("R"), Error);
}

TEST_CASE("an-table") {
  const auto r = call({"an-table", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 1 1\n1 2 2 1\n1 2 2 1\n1 1 1 1\n");
  const auto c = call({"an-table", "3", "--csv", "--brute"});
  CHECK(c.out == "mu\\nu,1,2\n1,1,1\n2,1,1\n");
  CHECK(call({"an-table", "1"}).code == cli::kInputError);
}

TEST_CASE("validate and hom") {
  const auto d = scratch("validate");
  const auto a = put(d, "z23.json", kZ23);
  const auto t = put(d, "triv.json", kTrivial);
  CHECK(call({"validate", a}).code == 0);
  const auto h = call({"hom", a, t});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("dim 0", 0) == 0);
  CHECK(call({"hom", a, a}).out.rfind("dim 2", 0) == 0);
  CHECK(call({"hom", a, a, "--graded", "--bound", "3"}).code == cli::kInputError);

  const auto bad = put(d, "bad.json", R"({"field": "Q", "vars": ["z"], "W": "z^5",
 "p1": [["z^2"]], "p0": [["z^2"]]})");
  const auto r = call({"validate", bad});
  CHECK(r.code == cli::kMathFailure);
  CHECK(r.err.find("not-a-factorization") != std::string::npos);
}

TEST_CASE("diagnostics carry line and column") {
  const auto d = scratch("diag");
  const auto p = put(d, "p.json", "{\"field\": \"Q\", \"vars\": [\"z\"], \"W\": \"z^5\",\n"
                                  " \"p1\": [[\"z^2\"]],\n \"p0\": [[\"z^3 + w\"]]}");
  const auto r = call({"validate", p});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("p.json:3:17") != std::string::npos);
  const auto q = put(d, "q.json", "{\"field\": \"Q\",\n  \"vars\" [\"z\"]}");
  const auto s = call({"validate", q});
  CHECK(s.code == cli::kInputError);
  CHECK(s.err.find("q.json:2:") != std::string::npos);
  CHECK(call({"validate", (d / "missing.json").string()}).code == cli::kInputError);
}

TEST_CASE("witness files re-validate") {
  const auto d = scratch("witness");
  const auto a = put(d, "z23.json", kZ23);
  const auto out = (d / "w").string();
  CHECK(call({"hom", a, a, "--out", out}).code == 0);
  CHECK(call({"validate", out + "/hom-basis-0.json"}).code == 0);

  CHECK(call({"iso", a, a, "--out", out}).code == 0);
  CHECK(call({"validate", out + "/isomorphism.json"}).code == 0);

  const auto m = put(d, "m.json", R"({"source": "z23.json", "target": "z23.json",
 "f1": [["z^3"]], "f0": [["z^3"]]})");
  const auto h = call({"homotopy", m, "--out", out});
  CHECK(h.code == 0);
  CHECK(call({"validate", out + "/homotopy.json"}).code == 0);

  const auto id = put(d, "id.json", R"({"source": "z23.json", "target": "z23.json",
 "f1": [["1"]], "f0": [["1"]]})");
  CHECK(call({"homotopy", id}).code == cli::kMathFailure);
  CHECK(call({"cone", id, "--out", out}).code == 0);
  CHECK(call({"validate", out + "/cone-g.json"}).code == 0);
  CHECK(call({"validate", out + "/cone-h.json"}).code == 0);

  CHECK(call({"an-verify", "3", "--out", out}).code == 0);
  CHECK(call({"validate", out + "/triangle-fst-mu1-nu2.json"}).code == 0);
}

TEST_CASE("outputs are deterministic") {
  const auto d = scratch("det");
  const auto a = put(d, "z23.json", kZ23);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"shift", a}, {"knorrer", a}, {"cok", a}, {"an-verify", "4"}, {"hom", a, a}}) {
    const auto r1 = call(args);
    const auto r2 = call(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("module commands") {
  const auto d = scratch("modules");
  const auto m = put(d, "m.json", R"({"field": "Q", "W": "z^4", "dim": 3,
 "Z": [["0","0","0"],["1","0","0"],["0","0","0"]]})");
  const auto dec = call({"decompose", m});
  CHECK(dec.out == "z^1 1\nz^2 1\n");
  const auto st = call({"stabilize", m});
  REQUIRE(st.code == 0);
  const auto x = put(d, "x.json", st.out);
  CHECK(call({"validate", x}).code == 0);
  const auto back = put(d, "back.json", call({"cok", x}).out);
  CHECK(call({"decompose", back}).out == "z^1 1\nz^2 1\n");
  const auto sh = call({"stable-hom", m, m});
  CHECK(sh.out.find("stable 5") != std::string::npos);

  const auto bad = put(d, "bad.json", R"({"field": "Q", "W": "z^2", "dim": 3,
 "Z": [["0","0","0"],["1","0","0"],["0","1","0"]]})");
  CHECK(call({"validate", bad}).code == cli::kMathFailure);
}

TEST_CASE("critical values and Knorrer verification") {
  CHECK(call({"critical-values", "z^3 - 3*z"}).out == "-2\n2\n");
  CHECK(call({"critical-values", "z^3 - 3*z", "--field", "Fp:5"}).code == cli::kInputError);
  CHECK(call({"critical-values", "z^3 - "}).code == cli::kInputError);
  const auto k = call({"verify-knorrer", "3", "--pairs", "diag"});
  CHECK(k.code == 0);
  CHECK(k.out.find("summary\tn=3\tpass\t2/2") != std::string::npos);
  CHECK(call({"verify-knorrer", "3", "--pairs", "some"}).code == cli::kInputError);
}

TEST_CASE("default bound override") {
  const Ring r = make_ring(Field::rationals(), {"z"});
  const auto p = PolyMatrix::of(parse_poly("z^2", r));
  const Poly W = parse_poly("z^5", r);
  ::unsetenv("MFCAT_DEFAULT_BOUND");
  CHECK(default_bound({&p}, W) == 7);
  ::setenv("MFCAT_DEFAULT_BOUND", "3", 1);
  CHECK(default_bound({&p}, W) == 3);
  ::unsetenv("MFCAT_DEFAULT_BOUND");
}
