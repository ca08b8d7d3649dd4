#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "swf/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = swf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("betti") {
  const Outcome o = call({"betti", "--g", "4", "--d", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == "1 8 29 8 1\n");
  CHECK(call({"betti", "--g", "2", "--d", "0"}).out == "1\n");
  const Outcome bad = call({"betti", "--g", "2", "--d", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("DomainError") != std::string::npos);
}

TEST_CASE("relations") {
  CHECK(call({"sp-relation", "--g", "3", "--d", "1", "--k", "0"}).out == "eta - 1/3*theta\n");
  const Outcome f = call({"floer-relations", "--g", "3", "--r", "1"});
  CHECK(f.code == 0);
  CHECK(f.out ==
        "k=0: eta - 1/3*theta - eta^2 - 2/3*eta*theta - 1/6*theta^2\n"
        "k=1: eta - eta^2 - eta*theta - 1/2*theta^2\n"
        "k=2: 1\n");
  const Outcome rec = call({"floer-relations", "--g", "3", "--r", "2", "--variant", "recursion"});
  CHECK(rec.code == 0);
  CHECK(rec.out == "k=0: eta\nk=1: 1\n");
  CHECK(call({"floer-relations", "--g", "3", "--r", "1", "--variant", "other"}).code == 2);
}

TEST_CASE("dimensions and normal forms") {
  CHECK(call({"floer-dim", "--g", "3", "--r", "1"}).out == "oracle=8 presentation=8\n");
  CHECK(call({"floer-dim", "--g", "4", "--r", "-1"}).out == "oracle=47 presentation=47\n");
  CHECK(call({"floer-nf", "--g", "3", "--r", "1", "--expr", "x"}).out == "1/3*g1*g4 + 1/3*g2*g5 + 1/3*g3*g6\n");
  CHECK(call({"floer-nf", "--g", "3", "--r", "1", "--expr", "x^2"}).out == "0\n");
  const Outcome bad = call({"floer-nf", "--g", "3", "--r", "1", "--expr", "g9"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError") != std::string::npos);
}

TEST_CASE("matrices") {
  CHECK(call({"gram", "--g", "2", "--r", "1"}).out == "e0 deg=0 (k=0,w=0,a=0,b=0) 1\n1\n");
  CHECK(call({"umatrix", "--g", "2", "--r", "1"}).out == "e0 deg=0 (k=0,w=0,a=0,b=0) 1\n1\n");
  const Outcome g31 = call({"gram", "--g", "3", "--r", "1"});
  CHECK(g31.code == 0);
  CHECK(std::count(g31.out.begin(), g31.out.end(), '\n') == 16);
}

TEST_CASE("glue") {
  write_file("cli_t1.txt", "genus 3 r 2\n# constant term only\n1 3/2\n");
  write_file("cli_t2.txt", "genus 3 r 2\n1 -4\n");
  write_file("cli_t3.txt", "genus 4 r 2\n1 1\n");
  write_file("cli_t4.txt", "genus 3 r 2\n1 1\n1 2\n");
  const Outcome o = call({"glue", "--g", "3", "--r", "2", "--t1", "cli_t1.txt", "--t2", "cli_t2.txt"});
  CHECK(o.code == 0);
  CHECK(o.out == "-6\n");
  const Outcome mismatch = call({"glue", "--g", "3", "--r", "2", "--t1", "cli_t1.txt", "--t2", "cli_t3.txt"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("GenusMismatch") != std::string::npos);
  const Outcome dup = call({"glue", "--g", "3", "--r", "2", "--t1", "cli_t1.txt", "--t2", "cli_t4.txt"});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("ParseError") != std::string::npos);
  CHECK(call({"glue", "--g", "3", "--r", "2", "--t1", "missing.txt", "--t2", "cli_t2.txt"}).code == 2);
  for (const char* p : {"cli_t1.txt", "cli_t2.txt", "cli_t3.txt", "cli_t4.txt"}) std::remove(p);
}

TEST_CASE("adjunct") {
  CHECK(call({"adjunct", "--g", "2", "--sigma2", "0", "--c1dot", "-2", "--degb", "1", "--bplus", "2"}).out ==
        "EXCLUDED (thm adjunction, deg form)\n");
  CHECK(call({"adjunct", "--g", "3", "--sigma2", "0", "--c1dot", "-2", "--degb", "2", "--bplus", "2"}).out ==
        "ALLOWED\n");
  CHECK(call({"adjunct", "--g", "4", "--sigma2", "0", "--c1dot", "-2", "--degb", "3", "--bplus", "3", "--l", "2"})
            .out == "EXCLUDED (thm adjunction, vanishing-cycle form)\n");
  CHECK(call({"adjunct", "--g", "3", "--sigma2", "2", "--c1dot", "1", "--degb", "0", "--bplus", "2", "--ds", "1"})
            .out == "EXCLUDED (thm adjunction, dim form)\n");
  CHECK(call({"adjunct", "--g", "3", "--sigma2", "0", "--c1dot", "2", "--degb", "1", "--bplus", "1"}).out ==
        "ALLOWED (not covered)\n");
  CHECK(call({"adjunct", "--g", "2", "--sigma2", "0", "--c1dot", "0", "--degb", "1", "--bplus", "2"}).code == 2);
  CHECK(call({"adjunct", "--g", "2", "--sigma2", "0", "--c1dot", "-2", "--degb", "1", "--bplus", "0"}).code == 2);
}

TEST_CASE("verify and usage") {
  const Outcome v = call({"verify", "--g", "3", "--r", "1"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.rfind("PASS dimension\n", 0) == 0);
  const Outcome bad = call({"verify", "--g", "3", "--r", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL parameters") != std::string::npos);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"betti", "--g", "x", "--d", "1"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
