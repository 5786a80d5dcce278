#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "../../tools/cli.hpp"
#include "fixtures.hpp"
#include "semikit/srt_io.hpp"

namespace semikit {
  namespace {

    using namespace semikit::testing;
    namespace fs = std::filesystem;

    struct Result {
      int         code;
      std::string out;
      std::string err;
    };

    Result run(std::vector<std::string> args) {
      std::ostringstream out, err;
      int code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }

    std::string data(char const* name) {
      return (data_dir() / name).string();
    }

    bool has_line(Result const& r, std::string const& line) {
      return ("\n" + r.out).find("\n" + line + "\n") != std::string::npos;
    }

    TEST(Cli, ValidateExample) {
      auto r = run({"validate", data("example3.srt")});
      EXPECT_EQ(r.code, cli::kExitSuccess);
      EXPECT_TRUE(has_line(r, "verdict: true")) << r.out;
    }

    TEST(Cli, ValidateFailureIsNegative) {
      auto dir = fs::temp_directory_path() / "semikit-cli-test";
      fs::create_directories(dir);
      write_srt(dir / "xor.srt", xor_xor());
      auto r = run({"validate", (dir / "xor.srt").string()});
      EXPECT_EQ(r.code, cli::kExitNegative);
      EXPECT_TRUE(has_line(r, "verdict: false"));
    }

    TEST(Cli, RaggedRowIsInputError) {
      auto r = run({"validate", data("ragged.srt")});
      EXPECT_EQ(r.code, cli::kExitInput);
      EXPECT_NE(r.err.find("ragged.srt:4"), std::string::npos) << r.err;
    }

    TEST(Cli, UsageErrorsAreInputErrors) {
      EXPECT_EQ(run({}).code, cli::kExitInput);
      EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
      EXPECT_EQ(run({"enumerate", "--order", "5"}).code, cli::kExitInput);
      EXPECT_EQ(run({"enumerate", "--order", "2", "--class", "ring"}).code,
                cli::kExitInput);
    }

    TEST(Cli, ClassifyReportsExample) {
      auto r = run({"classify", "--verify-theorems", data("example3.srt")});
      EXPECT_TRUE(has_line(r, "E+: {0}"));
      EXPECT_TRUE(has_line(r, "Reg+: {0}"));
      EXPECT_TRUE(has_line(r, "class.quasi-skew-ring: true"));
      EXPECT_TRUE(has_line(r, "class.generalized-clifford: false"));
      EXPECT_TRUE(has_line(r, "theorem.QSR3.agreement: true"));
      EXPECT_EQ(r.code, cli::kExitSuccess) << r.out;
      EXPECT_EQ(run({"classify", "--verify-theorems", data("example3.srt")})
                    .out,
                r.out);
    }

    TEST(Cli, DecomposeExample) {
      auto r = run({"decompose", data("example3.srt")});
      EXPECT_EQ(r.code, cli::kExitSuccess);
      EXPECT_TRUE(has_line(r, "psi.a: 0"));
      EXPECT_TRUE(has_line(r, "psi.b: 0"));
      EXPECT_TRUE(has_line(r, "psi-homomorphism: true"));
    }

    TEST(Cli, DecomposeRejectsNonMember) {
      auto dir = fs::temp_directory_path() / "semikit-cli-test";
      fs::create_directories(dir);
      write_srt(dir / "nq.srt",
                parse_srt("elements: 0 1\nadd:\n0 0\n0 1\nmul:\n0 0\n0 0\n"));
      EXPECT_EQ(run({"decompose", (dir / "nq.srt").string()}).code,
                cli::kExitNegative);
    }

    TEST(Cli, CongruencesOfExample) {
      auto r = run({"congruences", data("example3.srt")});
      EXPECT_EQ(r.code, cli::kExitSuccess);
      EXPECT_TRUE(has_line(r, "count: 3"));
      EXPECT_TRUE(has_line(r, "congruence.1: {a} {b,0}"));
    }

    TEST(Cli, ComposeThenMaps) {
      auto dir = fs::temp_directory_path() / "semikit-cli-test";
      fs::create_directories(dir);
      auto out = (dir / "clifford3.srt").string();
      auto c   = run({"compose", data("clifford3.sbl"), "-o", out});
      EXPECT_EQ(c.code, cli::kExitSuccess) << c.err;
      EXPECT_TRUE(validate_semiring(read_srt(out)).verdict());
      auto m = run({"maps", out});
      EXPECT_EQ(m.code, cli::kExitSuccess);
      EXPECT_TRUE(has_line(m, "map.0.1: z->0"));
      EXPECT_TRUE(has_line(m, "strong-b-lattice: true"));
    }

    TEST(Cli, EnumerateCount) {
      auto r = run({"enumerate", "--order", "2", "--count-only"});
      EXPECT_EQ(r.code, cli::kExitSuccess);
      EXPECT_TRUE(has_line(r, "count: 20"));
    }

    TEST(Cli, CounterexampleDumpsWitness) {
      auto dir = fs::temp_directory_path() / "semikit-cli-test";
      fs::create_directories(dir);
      auto out = (dir / "witness.srt").string();
      auto r   = run({"counterexample", "--premise", "quasi-skew-ring",
                      "--conclusion", "skew-ring", "--max-order", "3", "-o",
                      out});
      EXPECT_EQ(r.code, cli::kExitNegative);
      EXPECT_TRUE(has_line(r, "result: counterexample"));
      auto w = read_srt(out);
      EXPECT_TRUE(validate_semiring(w).verdict());
      auto none = run({"counterexample", "--premise", "skew-ring",
                       "--conclusion", "quasi-skew-ring", "--max-order", "3"});
      EXPECT_EQ(none.code, cli::kExitSuccess);
    }

  }  // namespace
}  // namespace semikit
