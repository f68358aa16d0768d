/*
   Copyright 2026 The qgalois Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "report.hpp"

using qg::report::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + QG_CLI + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const Json& schema() {
    static const Json s = [] {
        std::ifstream in(QG_SCHEMA);
        return Json::parse(in);
    }();
    return s;
}

const char* const commands[] = {
    "galois 'x^4+5x^2+5'",
    "galois --form s4 '(0,1)'",
    "galois 'x^4-1'",
    "intersect 'x^4+x+1' 'x^4+2x^2+x+1'",
    "intersect 'x^4-2' 'x^4+1'",
    "intersect --form d4 '(5,5)' '(10,5)'",
    "isom 'x^4+x+1' 'x^4+2x^2+x+1'",
    "isom --form s4 '(0,1)' '(2,1)' --bound 5",
    "family 'x^4+x+1' s4-p 3",
    "family 'x^4+x+1' s4-uv 2",
    "family 'x^4+3x^2+7' d4-pq 3",
    "family 'x^4+3x^2+7' d4-u 2",
    "family 'x^4-20x^2+80' c4",
    "search table2",
    "search simplest-quartic --range 1:120 --jobs 2",
    "resolvent --form s4 '(0,1)' '(2,1)'",
    "resolvent --form d4 '(5,5)' '(10,5)' --self-check",
    "resolvent --form c4 '(-20,1)' '(-500,11)'",
    "intersect 'x^4-1' 'x^4+x+1'",
    "intersect '(x^2+1)^2' 'x^4+x+1'",
};

}  // namespace

TEST_CASE("reports validate and both output forms agree") {
    for (const char* c : commands) {
        CAPTURE(c);
        Run m = run(std::string(c) + " --machine"), l = run(c);
        CHECK(m.code == l.code);
        Json doc = Json::parse(m.out);
        CHECK(qg::report::validate(doc, schema()) == "");
        CHECK(qg::report::from_lines(l.out) == doc);
        CHECK(qg::report::to_lines(doc) == l.out);
        CHECK(run(c).out == l.out);  // deterministic without --timing
    }
}

TEST_CASE("exit codes") {
    CHECK(run("intersect 'x^4+' 'x^4+x+1'").code == 2);
    CHECK(run("galois --form d4 '(1,2,3)'").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("intersect '(x^2+1)^2' 'x^4+x+1'").code == 3);
    CHECK(run("intersect 'x^4-1' 'x^4+x+1'").code == 4);
    CHECK(run("family 'x^4+x+1' c4").code == 5);
    CHECK(run("family 'x^4+x+1' d4-u").code == 5);
    Run e = run("intersect 'x^4-1' 'x^4+x+1' --machine");
    Json doc = Json::parse(e.out);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"]["kind"] == "out-of-scope");
}

TEST_CASE("answers") {
    Json i = Json::parse(run("intersect 'x^4+x+1' 'x^4+2x^2+x+1' --machine").out);
    CHECK(i["result"]["answer"]["relation"] == "equal");
    CHECK(i["result"]["answer"]["evidence"]["dt"] == "8,6,6,3,1");
    Json typo = Json::parse(run("intersect 'x^4+x+1' 'x^4+2x^3+x+1' --machine").out);
    CHECK(typo["result"]["answer"]["relation"] != "equal");
    Json t2 = Json::parse(run("search table2 --machine").out);
    CHECK(t2["result"]["hits"].size() == 11);
    Json iso = Json::parse(run("isom 'x^4+x+1' 'x^4+2x^2+x+1' --machine").out);
    CHECK(iso["result"]["verdict"] == "equal");
    Json g = Json::parse(run("galois 'x^4+x^3+x^2+x+1' --machine").out);
    CHECK(g["result"]["classification"]["label"] == "C4");
}

TEST_CASE("timing and precision") {
    Json t = Json::parse(run("galois 'x^4+x+1' --machine --timing").out);
    CHECK(t.contains("timing_ms"));
    CHECK(qg::report::validate(t, schema()) == "");
    Json nt = Json::parse(run("galois 'x^4+x+1' --machine").out);
    CHECK_FALSE(nt.contains("timing_ms"));
    Json p = Json::parse(
        run("resolvent --form s4 '(0,1)' '(2,1)' --self-check --machine", "QG_PRECISION_BITS=1024").out);
    CHECK(p["result"]["self_check"]["start_bits"] == 1024);
    CHECK(p["result"]["self_check"]["s4_match"] == true);
}
