#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#ifndef PAL_BIN
#error "PAL_BIN must point at the pal executable"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run pal(const std::string& args) {
  const std::string cmd = std::string(PAL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("pal_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& body) {
  auto path = scratch() / name;
  std::ofstream(path) << body;
  return path.string();
}

std::string v3_file() {
  return write("v3.json", R"({"name":"V3","elements":["a","b","c"],"le":[["a","c"],["b","c"]]})");
}

}  // namespace

TEST_CASE("poset check and show") {
  auto v3 = v3_file();
  auto r = pal("poset check " + v3);
  CHECK(r.code == 0);
  CHECK(r.json() == Json{{"elements", 3}, {"relationPairs", 2}});

  auto show = pal("poset show " + v3);
  CHECK(show.code == 0);
  auto j = show.json();
  CHECK(j["width"] == 2);
  CHECK(j["height"] == 2);
  CHECK(j["maximal"] == Json{"c"});

  // Redundant pairs are accepted and closed.
  auto chain = write("c3.json", R"({"name":"C3","elements":["0","1","2"],"le":[["0","1"],["1","2"],["0","2"]]})");
  CHECK(pal("poset check " + chain).json()["relationPairs"] == 3);
}

TEST_CASE("poset errors") {
  auto cyc = write("cyc.json", R"({"name":"C","elements":["a","b"],"le":[["a","b"],["b","a"]]})");
  auto r = pal("poset check " + cyc);
  CHECK(r.code == 1);
  auto j = r.json();
  CHECK(j["error"] == "cycle");
  CHECK(j["witness"] == Json{"a", "b"});

  auto broken = write("broken.json", "{\"name\": ");
  auto b = pal("poset check " + broken);
  CHECK(b.code == 2);
  CHECK(b.json()["error"] == "parse");

  auto unknown = write("unknown.json", R"({"name":"U","elements":["a"],"le":[["a","z"]]})");
  CHECK(pal("poset check " + unknown).code == 2);
  CHECK(pal("poset check " + (scratch() / "missing.json").string()).code == 2);
}

TEST_CASE("export-dot draws the Hasse diagram") {
  auto r = pal("poset export-dot " + v3_file());
  CHECK(r.code == 0);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = r.out.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 2);
  CHECK(r.out.find("\"a\" -> \"c\"") != std::string::npos);
  CHECK(r.out.find("\"b\" -> \"c\"") != std::string::npos);

  auto out = (scratch() / "v3.dot").string();
  CHECK(pal("poset export-dot " + v3_file() + " --out " + out).code == 0);
  CHECK(fs::file_size(out) > 0);
}

TEST_CASE("alg eq, leq and dnf") {
  auto v3 = v3_file();
  auto eq = pal("alg eq -p " + v3 + " \"x(a) & x(c)\" \"x(a)\"");
  CHECK(eq.code == 0);
  CHECK(eq.json()["result"] == true);
  CHECK(pal("alg eq -p " + v3 + " \"x(a)\" \"x(b)\"").json()["result"] == false);

  auto leq = pal("alg leq -p " + v3 + " \"x(a)\" \"x(c)\" --oracle").json();
  CHECK(leq["result"] == true);
  CHECK(leq["oracle"] == true);
  CHECK(leq["agree"] == true);
  CHECK(pal("alg leq -p " + v3 + " \"x(c)\" \"x(a)\"").json()["result"] == false);

  auto dnf = pal("alg dnf -p " + v3 + " \"!x(c)\"");
  CHECK(dnf.code == 0);
  CHECK(dnf.json()["dnf"] == "-x{c}");
  auto human = pal("--human alg dnf -p " + v3 + " \"!x(c)\"");
  CHECK(human.out.find("-x{c}") != std::string::npos);

  auto norm = pal("alg normalize -p " + v3 + " \"x(a) & x(c)\"").json();
  CHECK(norm["support"] == Json{"a"});
}

TEST_CASE("alg errors exit 2") {
  auto v3 = v3_file();
  auto r = pal("alg eq -p " + v3 + " \"x(a) &\" \"x(a)\"");
  CHECK(r.code == 2);
  CHECK(r.json()["error"] == "parse");
  CHECK(pal("alg eq -p " + v3 + " \"x(q)\" \"x(a)\"").code == 2);
  CHECK(pal("alg eq -p " + v3 + " \"x(a)\"").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(pal("").code == 2);
  CHECK(pal("bogus").code == 2);
  CHECK(pal("verify --suite nope").code == 2);
  CHECK(pal("verify --suite fact24 --max-size 9").code == 2);
  CHECK(pal("--help").code == 0);
}

TEST_CASE("verify single suites") {
  auto fact = pal("verify --suite fact24 --max-size 6 --seed 42");
  CHECK(fact.code == 0);
  auto j = fact.json();
  CHECK(j["failures"] == 0);
  CHECK(j["cases"].get<int>() > 0);
  // Deterministic given suite, caps and seed, apart from timings.
  auto again = pal("verify --suite fact24 --max-size 6 --seed 42").json();
  CHECK(again["cases"] == j["cases"]);
  REQUIRE(again["records"].size() == j["records"].size());
  for (std::size_t i = 0; i < j["records"].size(); ++i) {
    auto a = j["records"][i], b = again["records"][i];
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
  }

  auto rado = pal("verify --suite rado --horizon 12").json();
  CHECK(rado["badArray"] == true);
  CHECK(rado["antichainSize"].get<int>() >= 5);

  auto out = (scratch() / "report.json").string();
  auto lex = pal("verify --suite lex-layering --samples 5 --out " + out);
  CHECK(lex.code == 0);
  CHECK_FALSE(lex.json().contains("records"));
  std::ifstream in(out);
  CHECK(Json::parse(in)["records"].size() == 5);
}

TEST_CASE("verify all") {
  auto r = pal("verify --suite all --max-size 4");
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["failures"] == 0);
  CHECK(j["suites"].size() == 14);
}
