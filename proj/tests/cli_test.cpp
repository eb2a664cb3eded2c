#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is appended when `merge` is set.
Result run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + " " + std::string(WILDCOUNT_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("wildcount_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kH1F9 = R"({"field": {"p": 3, "d": 2},
 "algebra": {"p": 3, "orders": [1, 1, 1], "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}]},
 "support": [{"b": 1, "value": [[0, 1], [1, 0], [0, 0]]}]})";

}  // namespace

TEST(Cli, LastjumpPrintsJumpAndOracle) {
  std::string path = write_temp("h1f9.json", kH1F9);
  Result r = run("lastjump " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lastjump,oracle\n4/3,4/3\n");
  r = run("--format json lastjump " + path);
  EXPECT_EQ(r.out, "{\"lastjump\":\"4/3\",\"oracle\":\"4/3\"}\n");
  std::string zero = write_temp("zero.json", R"({"field": {"p": 3}, "algebra": {"p": 3, "orders": [2]}})");
  EXPECT_EQ(run("lastjump " + zero).out, "lastjump,oracle\n0/1,0/1\n");
}

TEST(Cli, Distribution) {
  EXPECT_EQ(run("distribution --algebra abelian:1 --vmax 2").out, "jump_num,jump_den,count\n0,1,1\n1,1,2\n2,1,6\n");
  Result h = run("distribution --algebra heisenberg:1 --vmax 2 --p 3 --d 1");
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "jump_num,jump_den,count\n0,1,1\n1,1,26\n2,1,270\n");
  EXPECT_EQ(run("distribution --algebra heisenberg:1 --vmax 3/2 --q 9 --format json").out,
            run("--format json distribution --algebra heisenberg:1 --vmax 3/2 --p 3 --d 2").out);
}

TEST(Cli, HeisenbergTables) {
  EXPECT_EQ(run("heisenberg-table akm --k 1 --m 0..2 --q 3").out,
            "k,m,q,a_km,method\n1,0,3,9,bruteforce\n1,1,3,9,bruteforce\n1,2,3,9,bruteforce\n");
  EXPECT_EQ(run("heisenberg-table akm --k 1 --m 1 --q 9 --method charsum").out, "k,m,q,a_km,method\n1,1,9,33,charsum\n");
  EXPECT_EQ(run("heisenberg-table isotropic --p 3 --k 2").out, "p,k,brute_force,formula\n3,2,40,40\n");
  EXPECT_EQ(run("heisenberg-table local --k 1 --m 1 --q 9").out, "k,m,q,local_count\n1,1,9,297\n");
}

TEST(Cli, GlobalSeriesAndAsymptotics) {
  EXPECT_EQ(run("global-series --algebra abelian:1 --nmax 1").out, "N_num,N_den,a_N\n0,1,1\n1,1,8\n");
  Result a = run("asymptotics --heisenberg 3,1");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find(R"("A":"3","B":5,"M":"4")"), std::string::npos) << a.out;
  Result m = run("asymptotics --algebra abelian:2");
  EXPECT_NE(m.out.find(R"("A":"2","B":1,"M":"1")"), std::string::npos) << m.out;
}

TEST(Cli, UserErrorsExitWithTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("distribution --algebra heisenberg:1").code, 2);
  Result bad = run("lastjump " + write_temp("bad.json", "{\n  \"field\": \n"), true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("malformed JSON"), std::string::npos) << bad.out;
  EXPECT_EQ(run("lastjump /nonexistent.json").code, 2);
  EXPECT_EQ(run("distribution --algebra heisenberg:1 --vmax 2 --q 6").code, 2);
  EXPECT_EQ(run("distribution --algebra heisenberg:1 --vmax 1 --p 5").code, 0);
  EXPECT_EQ(run("distribution --algebra heisenberg:1 --vmax 2 --q 25 --p 3").code, 2);
  EXPECT_EQ(run("asymptotics --heisenberg 3").code, 2);
  Result guard = run("distribution --algebra heisenberg:1 --vmax 2", true, "WILDCOUNT_SCALE_GUARD=100");
  EXPECT_EQ(guard.code, 2);
  EXPECT_NE(guard.out.find("too large: required enumeration size 729"), std::string::npos) << guard.out;
  EXPECT_EQ(run("distribution --algebra heisenberg:1 --vmax 2", false, "WILDCOUNT_SCALE_GUARD=1000").code, 0);
  std::string invalid = write_temp("invalid.json", R"({"field": {"p": 3}, "algebra": {"p": 3, "orders": [1, 1, 2],
    "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}]}, "support": []})");
  Result v = run("lastjump " + invalid, true);
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.out.find("torsion incompatibility"), std::string::npos) << v.out;
}

TEST(Cli, OutputIndependentOfJobs) {
  for (const std::string args : {"distribution --algebra heisenberg:1 --vmax 3 --q 3",
                                 "distribution --algebra abelian:2 --vmax 3/2 --q 9",
                                 "heisenberg-table akm --k 2 --m 0..2 --q 3", "global-series --algebra heisenberg:1 --nmax 2"}) {
    Result one = run("--jobs 1 " + args);
    Result eight = run("--jobs 8 " + args);
    EXPECT_EQ(one.code, 0) << args;
    EXPECT_EQ(one.out, eight.out) << args;
  }
}
