#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* exe = std::getenv("QBN_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "QBN_CLI must point at the binary");
  std::string cmd = env_prefix + "'" + exe + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), k);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify prints the verdict and encodes it in the exit code") {
  RunResult not_nut = run_cli("classify 'B2(24;4,6,3)'");
  CHECK(not_nut.exit_code == 1);
  CHECK(not_nut.out ==
        "B2(24;4,6,3) is_nut=false reason=violated-(iii) witness_f=12\n");

  RunResult nut = run_cli("classify 'B2(4;1,1,1)'");
  CHECK(nut.exit_code == 0);
  CHECK(nut.out == "B2(4;1,1,1) is_nut=true reason=conditions-satisfied\n");

  RunResult mod30 = run_cli("classify 'B2(30;1,4,6)'");
  CHECK(mod30.exit_code == 1);
  CHECK(contains(mod30.out, "reason=violated-(iv) witness_f=30"));

  RunResult bip = run_cli("classify 'B4(4;1,2,3)'");
  CHECK(bip.exit_code == 1);
  CHECK(contains(bip.out, "reason=bipartite-class"));
}

TEST_CASE("classify rejects invalid specs with exit code 2") {
  RunResult bad = run_cli("classify 'B2(0;1,1,1)'");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "error: B2 requires m >= 3"));

  RunResult garbage = run_cli("classify 'pentagon'");
  CHECK(garbage.exit_code == 2);
  CHECK(contains(garbage.out, "error: cannot parse spec"));
}

TEST_CASE("classify emits json and csv on request") {
  RunResult j = run_cli("--format json classify 'B2(24;4,6,3)'");
  CHECK(j.exit_code == 1);
  CHECK(contains(j.out, "\"class\": \"B2\""));
  CHECK(contains(j.out, "\"is_nut\": false"));
  CHECK(contains(j.out, "\"reason\": \"violated-(iii)\""));
  CHECK(contains(j.out, "\"witness_f\": 12"));

  RunResult c = run_cli("--format csv classify 'B2(24;4,6,3)'");
  CHECK(c.exit_code == 1);
  CHECK(c.out ==
        "class,m,a,b,c,is_nut,reason,witness_f\n"
        "B2,24,4,6,3,false,violated-(iii),12\n");
}

TEST_CASE("oracle reports the exact kernel") {
  RunResult nut = run_cli("oracle 'B2(6;1,2,3)'");
  CHECK(nut.exit_code == 0);
  CHECK(nut.out ==
        "B2(6;1,2,3) dim=1 rank=11 is_nut=true\n"
        "1 1 1 1 1 1 -1 -1 -1 -1 -1 -1\n");

  RunResult k44 = run_cli("oracle 'B4(4;1,2,3)'");
  CHECK(k44.exit_code == 1);
  CHECK(contains(k44.out, "B4(4;1,2,3) dim=6 rank=2 is_nut=false"));

  RunResult csv = run_cli("--format csv oracle 'B2(6;1,2,3)'");
  CHECK(csv.exit_code == 2);
  CHECK(contains(csv.out, "error: --format csv is not available for oracle"));
}

TEST_CASE("enumerate prints both census blocks") {
  RunResult r = run_cli("enumerate --max-order 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,C,B,N,V,Z\n"
        "8,3,2,1,1,1\n"
        "10,4,3,2,1,1\n"
        "12,12,9,3,2,2\n"
        "\n"
        "n,class,C,B,N,V,Z\n"
        "8,B1,1,1,0,0,0\n"
        "8,B2,2,1,1,1,1\n"
        "8,B3,1,1,0,0,0\n"
        "10,B2,3,3,2,1,1\n"
        "12,B1,3,2,1,1,1\n"
        "12,B2,8,7,3,2,2\n"
        "12,B3,3,2,1,1,1\n");

  RunResult csv = run_cli("enumerate --max-order 12 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == r.out);

  RunResult j = run_cli("enumerate --max-order 8 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"aggregate\""));
  CHECK(contains(j.out, "\"per_class\""));
  CHECK(contains(j.out, "\"N\": 1"));
}

TEST_CASE("enumerate output is deterministic and thread-count independent") {
  RunResult base = run_cli("enumerate --max-order 14 --format csv");
  RunResult again = run_cli("enumerate --max-order 14 --format csv");
  RunResult threaded = run_cli("enumerate --max-order 14 --format csv --threads 3");
  RunResult env = run_cli("enumerate --max-order 14 --format csv", "QBN_THREADS=4 ");
  CHECK(base.exit_code == 0);
  CHECK(base.out == again.out);
  CHECK(base.out == threaded.out);
  CHECK(base.out == env.out);
}

TEST_CASE("enumerate validates the order range") {
  CHECK(run_cli("enumerate --max-order 6").exit_code == 2);
  CHECK(run_cli("enumerate --max-order 52").exit_code == 2);
  CHECK(run_cli("enumerate").exit_code == 2);
}

TEST_CASE("crosscheck summarizes the comparisons") {
  RunResult r = run_cli("crosscheck --max-order 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "specs checked: 16"));
  CHECK(contains(r.out, "disagreements: 0"));

  RunResult j = run_cli("crosscheck --max-order 8 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"specs_checked\": 6"));
  CHECK(contains(j.out, "\"disagreements\": []"));
}

TEST_CASE("residue-search lists the deduplicated triples") {
  RunResult r12 = run_cli("residue-search 12");
  CHECK(r12.exit_code == 0);
  CHECK(r12.out ==
        "2,2,3\n2,2,9\n2,10,3\n2,10,9\n"
        "10,2,3\n10,2,9\n10,10,3\n10,10,9\n");

  RunResult csv = run_cli("residue-search 12 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "a_plus_b,a_minus_b,c\n" + r12.out);

  RunResult raw = run_cli("residue-search 12 --raw --format csv");
  CHECK(raw.exit_code == 0);
  CHECK(contains(raw.out, "a,b,c\n"));

  RunResult empty = run_cli("residue-search 7");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.empty());

  RunResult bad = run_cli("residue-search 11");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "error: residue_search: f is outside the divisor pool"));
}

TEST_CASE("poly prints the polynomial and optional divisibility") {
  RunResult r = run_cli("poly P 4 6 3 --phi 12");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "poly_P(4,6,3) = "));
  CHECK(contains(r.out, "Phi_12 = x^4 - x^2 + 1\n"));
  CHECK(contains(r.out, "divides: true\n"));
  CHECK(contains(r.out, "quotient degree: 19\n"));

  RunResult rq = run_cli("poly Q 2 2");
  CHECK(rq.exit_code == 0);
  CHECK(rq.out == "poly_Q(2,2) = x^8 - 2x^6 + 2x^4 - 2x^2 + 1\n");

  RunResult rb3 = run_cli("poly B3 1 3 --phi 2");
  CHECK(rb3.exit_code == 0);
  CHECK(contains(rb3.out, "divides: true\n"));

  CHECK(run_cli("poly X 1 2").exit_code == 2);
  CHECK(run_cli("poly P 1 2").exit_code == 2);
  CHECK(run_cli("poly R 1").exit_code == 2);
}

TEST_CASE("top-level usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
  CHECK(run_cli("--format yaml classify 'B2(4;1,1,1)'").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
