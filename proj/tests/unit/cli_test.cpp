#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = optree::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coproduct of a monotone word") {
  const auto r = run({"coproduct", "--operad", "poset:nat", "--tree", "word:2335",
                      "--kind", "cuts"});
  CHECK(r.status == optree::cli::kExitOk);
  CHECK(r.out ==
        "1 · word:23 ⊗ word:335\n"
        "1 · word:233 ⊗ word:35\n"
        "1 · word:2335 ⊗ word:5\n"
        "1 · word:2 ⊗ word:2335\n");
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--operad", "terminal", "--max-nodes", "2",
                      "--max-arity", "1", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"count\":5") != std::string::npos);
  const auto w = run({"enumerate", "--operad", "poset:nat", "--max-nodes", "1"});
  CHECK(w.status == optree::cli::kExitUsage);
  CHECK(w.err.find("bounds_too_large_for_colour_domain") != std::string::npos);
  const auto ok = run({"enumerate", "--operad", "poset:nat", "--max-nodes", "1",
                       "--colours", "1,2"});
  CHECK(ok.status == 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--operad", "terminal", "--max-nodes", "3", "--format",
                      "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"passed\":true") != std::string::npos);
  const auto one = run({"verify", "--operad", "id", "--axiom", "coassoc-cuts"});
  CHECK(one.status == 0);
  const auto bad = run({"verify", "--operad", "id", "--axiom", "nope"});
  CHECK(bad.status == optree::cli::kExitUsage);
}

TEST_CASE("faadibruno, mould, core, bck, cem") {
  CHECK(run({"faadibruno", "--kind", "subst", "--n", "4"}).out.find("engine agrees: yes") !=
        std::string::npos);
  const auto m = run({"mould", "--monoid", "z2", "--op", "check-duality", "--max-len", "3",
                      "--samples", "3"});
  CHECK(m.status == 0);
  CHECK(run({"mould", "--monoid", "z2", "--op", "right-witness"}).status == 0);
  CHECK(run({"mould", "--monoid", "z2", "--max-len", "9"}).status ==
        optree::cli::kExitUsage);
  const auto c = run({"core", "--operad", "terminal", "--tree", "((*) (*))"});
  CHECK(c.status == 0);
  CHECK(c.out == "(()())\n");
  CHECK(run({"core", "--check", "--max-nodes", "3"}).status == 0);
  CHECK(run({"bck", "--tree", "(())"}).out == "1 · 1 ⊗ (())\n1 · (()) ⊗ 1\n1 · () ⊗ ()\n");
  CHECK(run({"cem", "--check", "--max-nodes", "3"}).status == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == optree::cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == optree::cli::kExitUsage);
  CHECK(run({"--help"}).status == optree::cli::kExitOk);
  const auto syntax = run({"coproduct", "--operad", "terminal", "--tree", "((*)",
                           "--kind", "cuts"});
  CHECK(syntax.status == optree::cli::kExitUsage);
  CHECK(syntax.err.find("offset 4") != std::string::npos);
  CHECK(run({"coproduct", "--operad", "terminal", "--tree", "|", "--kind", "blobs"})
            .status == optree::cli::kExitUsage);
}
