#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qgep/app/driver.hpp"
#include "qgep/gep/karva.hpp"
#include "qgep/quantum/circuit_text.hpp"
#include "qgep/version.hpp"

namespace {

int decode_command(const std::string& genome, int bits)
{
    using namespace qgep;
    std::istringstream in(genome);
    std::vector<quantum::GateKind> kinds;
    int max_qubit = 0;
    std::string token;
    while (in >> token) {
        if (token == "psi") {
            continue;
        }
        std::size_t pos = 0;
        while (pos < token.size() && std::isalpha(static_cast<unsigned char>(token[pos]))) {
            ++pos;
        }
        const auto kind = quantum::parse_gate_kind(token.substr(0, pos));
        if (!kind) {
            throw std::invalid_argument("unknown gate symbol '" + token + "'");
        }
        if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) {
            kinds.push_back(*kind);
        }
        std::stringstream qubits(token.substr(pos));
        std::string q;
        while (std::getline(qubits, q, ',')) {
            max_qubit = std::max(max_qubit, std::stoi(q));
        }
    }
    std::sort(kinds.begin(), kinds.end());
    if (bits <= 0) {
        bits = max_qubit + 1;
    }
    const auto set = quantum::build_gate_set(bits, kinds);
    const auto gene = gep::parse_gene(genome, set.primitives);
    const auto circuit = quantum::gene_to_circuit(gene, set);
    std::cout << fmt::format("coding_length {}\nslots {}\ncircuit {}\n", gep::coding_length(gene, set.primitives),
                             circuit.num_slots(), quantum::circuit_to_string(circuit));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolve quantum circuits with gene expression programming"};
    app.set_version_flag("--version", std::string(qgep::kVersion));
    app.require_subcommand(1);

    std::string input;
    auto* run_cmd = app.add_subcommand("run", "Evolve circuits for an input file");
    run_cmd->add_option("input", input, "Input file")->required()->check(CLI::ExistingFile);

    auto* verify_cmd = app.add_subcommand("verify", "Run, then compare with the exact oracle");
    verify_cmd->add_option("input", input, "Input file")->required()->check(CLI::ExistingFile);

    std::string genome;
    int bits = 0;
    auto* decode_cmd = app.add_subcommand("decode", "Print the circuit encoded by a genome");
    decode_cmd->add_option("genome", genome, "Whitespace-separated symbols, e.g. \"Ry0 P1 psi\"")->required();
    decode_cmd->add_option("--bits", bits, "Qubit count (default: largest qubit + 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qgep::app::kExitError;
    }

    try {
        if (*run_cmd) {
            return qgep::app::run(qgep::app::parse_input(input), std::cout).exit_code;
        }
        if (*verify_cmd) {
            qgep::app::verify(qgep::app::parse_input(input), std::cout);
            return qgep::app::kExitOk;
        }
        return decode_command(genome, bits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qgep::app::kExitError;
    }
}
