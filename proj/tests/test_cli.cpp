#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "lucas/cli.hpp"
#include "lucas/formats.hpp"

using namespace lucas;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("lucas_cli_" + std::to_string(::rand()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("keygen writes key files") {
  TempDir dir;
  const Run r = cli({"keygen", "--p", "37", "--alpha", "17", "--d", "10", "--out-pub", dir.file("pub"), "--out-sec",
                     dir.file("sec")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "pk(37,17,28)\n");
  CHECK(read_text_file(dir.file("pub")) == "p=37\ne1=17\ne2=28\n");
  CHECK(read_text_file(dir.file("sec")) == "p=37\nd=10\n");

  const Run defaults = cli({"keygen", "--p", "37", "--out-pub", dir.file("pub2"), "--out-sec", dir.file("sec2")});
  CHECK(defaults.code == kExitOk);
  CHECK(parse_public_key(read_text_file(dir.file("pub2"))).e1.value() == 2);
  const auto d = parse_secret_key(read_text_file(dir.file("sec2"))).d;
  CHECK(d > 1);
  CHECK(d < 36);

  const Run bad = cli({"keygen", "--p", "4", "--out-pub", dir.file("x"), "--out-sec", dir.file("y")});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.err.find("not prime") != std::string::npos);
  CHECK(cli({"keygen", "--p", "37", "--alpha", "4", "--out-pub", dir.file("x"), "--out-sec", dir.file("y")}).code ==
        kExitValidation);
  CHECK(cli({"keygen", "--p", "37", "--out-pub", "/nonexistent/dir/pub", "--out-sec", dir.file("y")}).code ==
        kExitIo);
}

TEST_CASE("encrypt and decrypt through files") {
  TempDir dir;
  REQUIRE(cli({"keygen", "--p", "37", "--alpha", "17", "--d", "10", "--out-pub", dir.file("pub"), "--out-sec",
               dir.file("sec")})
              .code == kExitOk);

  const Run enc = cli({"encrypt", "--pub", dir.file("pub"), "--e", "23", "--msg", "NOBLE2022", "--out", dir.file("env")});
  CHECK(enc.code == kExitOk);
  CHECK(enc.out == "s=18\nciphertext: E65BY OZS\n");
  CHECK(read_text_file(dir.file("env")) == "s=18\nc=4,32,31,1,24,36,14,25,18\n");

  const Run dec = cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("env")});
  CHECK(dec.code == kExitOk);
  CHECK(dec.out == "NOBLE2022\n");

  SUBCASE("lowercase folds to uppercase") {
    const Run lower = cli({"encrypt", "--pub", dir.file("pub"), "--e", "23", "--msg", "noble2022", "--out",
                           dir.file("env2")});
    CHECK(lower.out == enc.out);
  }
  SUBCASE("empty message") {
    const Run empty = cli({"encrypt", "--pub", dir.file("pub"), "--e", "23", "--msg", "", "--out", dir.file("env3")});
    CHECK(empty.code == kExitOk);
    CHECK(read_text_file(dir.file("env3")) == "s=18\nc=\n");
    CHECK(cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("env3")}).out == "\n");
  }
  SUBCASE("padding is kept on decrypt") {
    cli({"encrypt", "--pub", dir.file("pub"), "--e", "23", "--msg", "HELLO", "--out", dir.file("env4")});
    CHECK(cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("env4")}).out == "HELLO \n");
  }
  SUBCASE("degenerate lambda asks for a new e") {
    // 28 = 17^10 has order 36 / gcd(10, 36) = 18
    const Run degenerate =
        cli({"encrypt", "--pub", dir.file("pub"), "--e", "18", "--msg", "HI", "--out", dir.file("env5")});
    CHECK(degenerate.code == kExitProtocol);
    CHECK(degenerate.err.find("DegenerateLambda") != std::string::npos);
    CHECK(degenerate.err.find("--e") != std::string::npos);
  }
  SUBCASE("unsupported characters") {
    CHECK(cli({"encrypt", "--pub", dir.file("pub"), "--e", "23", "--msg", "A-B", "--out", dir.file("x")}).code ==
          kExitValidation);
  }
  SUBCASE("corrupted s decrypts to garbage without an error") {
    write_text_file(dir.file("bad_s"), "s=19\nc=4,32,31,1,24,36,14,25,18\n");
    const Run garbled = cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("bad_s")});
    if (garbled.code == kExitOk) CHECK(garbled.out != "NOBLE2022\n");
  }
  SUBCASE("symbol outside the alphabet") {
    write_text_file(dir.file("bad_c"), "s=18\nc=4,32,37\n");
    const Run bad = cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("bad_c")});
    CHECK(bad.code == kExitValidation);
    CHECK(bad.err.find("SymbolOutOfRange") != std::string::npos);
  }
  SUBCASE("malformed envelope and missing files") {
    write_text_file(dir.file("junk"), "hello\n");
    CHECK(cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("junk")}).code == kExitValidation);
    CHECK(cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("missing")}).code == kExitIo);
  }
}

TEST_CASE("raw residue mode for p != 37") {
  TempDir dir;
  REQUIRE(cli({"keygen", "--p", "101", "--alpha", "2", "--d", "57", "--out-pub", dir.file("pub"), "--out-sec",
               dir.file("sec")})
              .code == kExitOk);
  const Run enc = cli({"encrypt", "--pub", dir.file("pub"), "--e", "3", "--msg", "5,100,0,42", "--out", dir.file("env")});
  REQUIRE(enc.code == kExitOk);
  const Run dec = cli({"decrypt", "--sec", dir.file("sec"), "--env", dir.file("env")});
  CHECK(dec.code == kExitOk);
  CHECK(dec.out.starts_with("5,100,0,42"));
}

TEST_CASE("seq, matrix and analyze") {
  const Run seq = cli({"seq", "--k", "3", "--from", "-1", "--to", "6"});
  CHECK(seq.code == kExitOk);
  CHECK(seq.out == "-1\t-1\n0\t3\n1\t1\n2\t3\n3\t7\n4\t11\n5\t21\n6\t39\n");
  CHECK(cli({"seq", "--k", "3", "--from", "0", "--to", "5", "--kind", "fib"}).out ==
        "0\t0\n1\t0\n2\t1\n3\t1\n4\t2\n5\t4\n");
  CHECK(cli({"seq", "--k", "1", "--from", "0", "--to", "3"}).code == kExitValidation);
  CHECK(cli({"seq", "--k", "3", "--from", "4", "--to", "3"}).code == kExitValidation);

  const Run mat = cli({"matrix", "--k", "3", "--n", "18", "--p", "37"});
  CHECK(mat.code == kExitOk);
  CHECK(mat.out == "9 17 35\n35 11 19\n19 16 29\n");
  CHECK(cli({"matrix", "--k", "3", "--n", "18", "--p", "37", "--kind", "glm-inverse"}).out ==
        "18 36 7\n7 11 29\n29 15 19\n");
  CHECK(cli({"matrix", "--k", "2", "--n", "5", "--p", "101", "--kind", "gfm"}).out == "8 5\n5 3\n");
  CHECK(cli({"matrix", "--k", "3", "--n", "-18", "--p", "37"}).code == kExitOk);
  CHECK(cli({"matrix", "--k", "3", "--n", "2", "--p", "11", "--kind", "glm-inverse"}).code == kExitProtocol);
  CHECK(cli({"matrix", "--k", "3", "--n", "2", "--p", "12"}).code == kExitValidation);

  const Run an = cli({"analyze", "--lambda", "2", "--p", "2"});
  CHECK(an.code == kExitOk);
  CHECK(an.out.starts_with("lambda=2 p=2 gl_order=6 magnitude=10^0\n"));
  CHECK(an.out.find("remark:") != std::string::npos);
  const Run big = cli({"analyze", "--lambda", "50", "--p", "37"});
  CHECK(big.out.find("magnitude=10^3920") != std::string::npos);
  CHECK(big.out.find("approx=3.105e3920") != std::string::npos);
}

TEST_CASE("exchange-demo and usage errors") {
  const Run demo = cli({"exchange-demo"});
  CHECK(demo.code == kExitOk);
  CHECK(demo.out.ends_with("MATCH: NOBLE2022\n"));
  const Run wrong = cli({"exchange-demo", "--receiver-d", "11"});
  CHECK(wrong.code == kExitProtocol);
  CHECK(wrong.out.find("MISMATCH") != std::string::npos);

  CHECK(cli({}).code == kExitValidation);
  CHECK(cli({"bogus"}).code == kExitValidation);
  CHECK(cli({"matrix", "--k", "3"}).code == kExitValidation);
  CHECK(cli({"--help"}).code == kExitOk);
}
