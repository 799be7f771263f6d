#include "qgep/fitness/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgep::fitness {

std::vector<double> OptimizerSettings::uniform_grid(int points)
{
    if (points < 1) {
        throw std::invalid_argument("angle grid needs at least one point");
    }
    std::vector<double> grid;
    for (int k = 0; k < points; ++k) {
        grid.push_back(2.0 * std::numbers::pi * k / points);
    }
    return grid;
}

void OptimizerSettings::validate() const
{
    if (grid.empty()) {
        throw std::invalid_argument("angle grid is empty");
    }
    if (!(fd_step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    if (refine_iterations < 0 || sweep_passes < 1 || tolerance < 0.0) {
        throw std::invalid_argument("optimizer caps must be non-negative");
    }
}

Problem Problem::function_fit(int n_bits, std::vector<TrainingPair> pairs, OptimizerSettings settings)
{
    Problem p;
    p.kind = ProblemKind::FunctionFit;
    p.n_bits = n_bits;
    p.pairs = std::move(pairs);
    p.optimizer = std::move(settings);
    p.validate();
    return p;
}

Problem Problem::ground_state(hamiltonian::PauliSum h, quantum::StateVector initial, OptimizerSettings settings)
{
    Problem p;
    p.kind = ProblemKind::GroundState;
    p.n_bits = h.n_bits;
    p.hamiltonian = std::move(h);
    p.initial = std::move(initial);
    p.optimizer = std::move(settings);
    p.validate();
    return p;
}

void Problem::validate() const
{
    optimizer.validate();
    const auto check_state = [&](const quantum::StateVector& s, const char* what) {
        if (s.n_bits() != n_bits) {
            throw std::invalid_argument(std::string(what) + " has the wrong qubit count");
        }
        if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
            throw std::invalid_argument(std::string(what) + " is not normalized");
        }
    };
    if (kind == ProblemKind::FunctionFit) {
        if (pairs.empty()) {
            throw std::invalid_argument("FunctionFit needs at least one training pair");
        }
        for (const auto& pair : pairs) {
            check_state(pair.input, "training input");
            check_state(pair.output, "training output");
        }
    } else {
        hamiltonian.validate();
        if (hamiltonian.n_bits != n_bits) {
            throw std::invalid_argument("Hamiltonian qubit count differs from the problem");
        }
        check_state(initial, "initial state");
    }
}

std::vector<const quantum::StateVector*> Problem::inputs() const
{
    std::vector<const quantum::StateVector*> out;
    if (kind == ProblemKind::FunctionFit) {
        for (const auto& pair : pairs) {
            out.push_back(&pair.input);
        }
    } else {
        out.push_back(&initial);
    }
    return out;
}

double Problem::score(std::span<const quantum::StateVector> outputs) const
{
    if (kind == ProblemKind::GroundState) {
        return -hamiltonian::expectation(hamiltonian, outputs[0]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        sum += quantum::fidelity(pairs[i].output, outputs[i]);
    }
    return sum / static_cast<double>(pairs.size());
}

double prefitness(const quantum::QuantumCircuit& circuit, std::span<const double> params, const Problem& problem)
{
    if (circuit.n_bits != problem.n_bits) {
        throw std::invalid_argument("circuit and problem qubit counts differ");
    }
    std::vector<quantum::StateVector> outputs;
    for (const auto* in : problem.inputs()) {
        outputs.push_back(quantum::apply_circuit(*in, circuit, params));
    }
    return problem.score(outputs);
}

} // namespace qgep::fitness
