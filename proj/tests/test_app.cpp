#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgep/app/driver.hpp"
#include "qgep/oracle/oracle.hpp"

using namespace qgep;
using namespace qgep::app;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name)
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    void write(const std::string& file, const std::string& text) const { std::ofstream(path / file) << text; }
    std::string read(const std::string& file) const
    {
        std::ifstream in(path / file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

int error_line(const std::string& text, const fs::path& base)
{
    try {
        parse_input_text(text, base);
    } catch (const InputError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("input parsing")
{
    TempDir dir("qgep_app_parse");
    const auto spec = parse_input_text("runtype = GroundState\nhamiltonian = xx:4,1,open\n# c\n\nSEED=9\n",
                                       dir.path);
    CHECK(spec.n_bits == 4);
    CHECK(spec.evolution.population_size == 100);
    CHECK(spec.evolution.seed == 9);
    CHECK(spec.hamiltonian.boundary == hamiltonian::Boundary::Open);
    CHECK(spec.output_dir == dir.path);
    CHECK(spec.gates.size() == 2);
    const auto ring = parse_input_text("RunType = GroundState\nHamiltonian = xx:5\n", dir.path);
    CHECK(ring.hamiltonian.boundary == hamiltonian::Boundary::Periodic);
    CHECK(ring.hamiltonian.jx == 1.0);

    const auto h2 = parse_input_text("RunType = GroundState\nHamiltonian = heisenberg2d:2,3\nGates = H,CNOT\n"
                                     "AngleGrid = 4\nOutputDir = out\n",
                                     dir.path);
    CHECK(h2.n_bits == 6);
    CHECK(h2.optimizer.grid.size() == 4);
    CHECK(h2.output_dir == dir.path / "out");

    CHECK(error_line("RunType = GroundState\nHamiltonian = xx:4\nColour = red\n", dir.path) == 3);
    CHECK(error_line("RunType = GroundState\nSeed = 1\nSeed = 2\n", dir.path) == 3);
    CHECK(error_line("RunType = GroundState\nno equals sign\n", dir.path) == 2);
    CHECK(error_line("RunType = Sideways\n", dir.path) == 1);
    CHECK(error_line("RunType = GroundState\nHamiltonian = xx:4\nPopulation = many\n", dir.path) == 3);
    CHECK(error_line("RunType = GroundState\nHamiltonian = xx:4\nGates = Ry,Toffoli\n", dir.path) == 3);
    CHECK(error_line("RunType = GroundState\nHamiltonian = xx:4\nNumBits = 5\n", dir.path) == 3);
    CHECK(error_line("Seed = 1\n", dir.path) == 0);
    CHECK(error_line("RunType = GroundState\n", dir.path) == 0);
    CHECK(error_line("RunType = FunctionFit\nTrainingPairs = p.txt\n", dir.path) == 0);
    CHECK_THROWS_AS(parse_input(dir.path / "missing.txt"), InputError);
}

TEST_CASE("state tokens")
{
    CHECK(parse_state("0011", 4)[3] == quantum::Amplitude(1.0));
    CHECK(parse_state("5", 4)[5] == quantum::Amplitude(1.0));
    const auto s = parse_state("[1:0,0:1]", 1);
    CHECK(s.norm_squared() == doctest::Approx(1.0));
    CHECK(std::abs(s[1].imag() - std::sqrt(0.5)) < 1e-15);
    CHECK(parse_state("001", 4)[1] == quantum::Amplitude(1.0));
    CHECK_THROWS(parse_state("0b11", 4));
    CHECK_THROWS(parse_state("16", 4));
    CHECK_THROWS(parse_state("[0:0,0:0]", 1));
}

TEST_CASE("graph run writes trace, circuits and cuts")
{
    TempDir dir("qgep_app_graph");
    dir.write("c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    dir.write("in.txt", "RunType = GroundState\nGraphFile = c4.txt\nPopulation = 20\nGenerations = 1\n"
                        "HeadSize = 6\nSeed = 3\n");
    std::ostringstream log;
    const auto out = run(parse_input(dir.path / "in.txt"), log);
    CHECK(out.exit_code == kExitOk);
    REQUIRE(out.reference);
    CHECK(*out.reference == -4.0);

    const auto trace = dir.read("trace.csv");
    CHECK(trace.starts_with("generation,best_fitness,worst_fitness,delta_e_best,delta_e_pop\n"));
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 2);
    CHECK(dir.read("best.circ").starts_with("# rank fitness circuit\n"));
    CHECK(dir.read("maxcut.txt").starts_with("# index bits weight cut side_one side_zero\n"));
    CHECK(log.str().find("best_fitness") != std::string::npos);
}

TEST_CASE("square graph converges to a maximum cut")
{
    TempDir dir("qgep_app_square");
    dir.write("c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    dir.write("in.txt", "RunType = GroundState\nGraphFile = c4.txt\nPopulation = 40\nGenerations = 30\n"
                        "HeadSize = 6\nSeed = 1\nEarlyStopFitness = 3.999999\n");
    std::ostringstream log;
    const auto out = run(parse_input(dir.path / "in.txt"), log);
    CHECK(out.exit_code == kExitEarlyStop);
    CHECK(out.evolution.best().fitness == doctest::Approx(4.0));
    REQUIRE_FALSE(out.cuts.empty());
    for (const auto& c : out.cuts) {
        CHECK(c.cut == 4);
        CHECK((c.index == 5 || c.index == 10));
    }
}

TEST_CASE("runs are reproducible byte for byte")
{
    TempDir dir("qgep_app_repeat");
    const std::string input = "RunType = GroundState\nHamiltonian = xx:3,1,open\nPopulation = 20\n"
                              "Generations = 5\nHeadSize = 5\nGates = Ry,P,H,CNOT\nSeed = 11\n";
    dir.write("in.txt", input);
    std::ostringstream log1, log2;
    run(parse_input(dir.path / "in.txt"), log1);
    const auto trace1 = dir.read("trace.csv");
    const auto best1 = dir.read("best.circ");
    run(parse_input(dir.path / "in.txt"), log2);
    CHECK(dir.read("trace.csv") == trace1);
    CHECK(dir.read("best.circ") == best1);
    CHECK(log1.str() == log2.str());
}

TEST_CASE("function fit run has no energy columns")
{
    TempDir dir("qgep_app_fit");
    dir.write("pairs.txt", "00 11\n");
    dir.write("in.txt", "RunType = FunctionFit\nNumBits = 2\nTrainingPairs = pairs.txt\nGates = Ry\n"
                        "Population = 20\nGenerations = 10\nHeadSize = 4\n");
    std::ostringstream log;
    const auto out = run(parse_input(dir.path / "in.txt"), log);
    CHECK_FALSE(out.reference);
    CHECK(out.evolution.best().fitness == doctest::Approx(1.0));
    const auto trace = dir.read("trace.csv");
    CHECK(trace.find(",1,") != std::string::npos);
    CHECK(trace.substr(trace.size() - 3) == ",,\n");
    CHECK_FALSE(fs::exists(dir.path / "maxcut.txt"));
}

TEST_CASE("verify reports the gap")
{
    TempDir dir("qgep_app_verify");
    dir.write("zero.ham", "nbits 2\n0 Z0\n");
    dir.write("in.txt", "RunType = GroundState\nHamiltonian = file:zero.ham\nPopulation = 10\nGenerations = 2\n");
    std::ostringstream out;
    const auto report = verify(parse_input(dir.path / "in.txt"), out);
    CHECK(report.oracle_energy == 0.0);
    CHECK(report.best_fitness == 0.0);
    CHECK(report.gap == 0.0);
    CHECK(out.str().find("gap 0") != std::string::npos);

    dir.write("c3.txt", "n 3\n0 1\n1 2\n0 2\n");
    dir.write("g.txt", "RunType = GroundState\nGraphFile = c3.txt\nPopulation = 20\nGenerations = 10\n");
    std::ostringstream out2;
    const auto r2 = verify(parse_input(dir.path / "g.txt"), out2);
    CHECK(r2.oracle_energy == -1.0);
    REQUIRE(r2.oracle_maxcut);
    CHECK(*r2.oracle_maxcut == 2);
    CHECK(r2.gap >= -1e-8);
}

TEST_CASE("energy shift and scale move the reference")
{
    TempDir dir("qgep_app_shift");
    dir.write("in.txt", "RunType = GroundState\nHamiltonian = xx:2,1,open\nEnergyShift = -1\nEnergyScale = 2\n"
                        "Population = 10\nGenerations = 3\n");
    std::ostringstream log;
    const auto out = run(parse_input(dir.path / "in.txt"), log);
    REQUIRE(out.reference);
    // exact energy -1, transformed: 2 * (-1 - (-1)) = 0
    CHECK(*out.reference == doctest::Approx(0.0));
    CHECK(out.evolution.best().fitness <= -*out.reference + 1e-8);

    dir.write("e.txt", "RunType = GroundState\nHamiltonian = xx:2,1,open\nExactEnergy = -7\n"
                       "Population = 10\nGenerations = 1\n");
    const auto forced = run(parse_input(dir.path / "e.txt"), log);
    CHECK(*forced.reference == -7.0);
}
