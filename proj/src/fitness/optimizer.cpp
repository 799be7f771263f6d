#include "qgep/fitness/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qgep::fitness {

namespace {

// Evaluates one circuit repeatedly, reusing the state before a slot's gate
// while that slot is being swept.
class SlotEvaluator {
public:
    SlotEvaluator(const quantum::QuantumCircuit& circuit, const Problem& problem)
        : circuit_(circuit), problem_(problem), inputs_(problem.inputs())
    {
        const int k = circuit.num_slots();
        gate_of_slot_.assign(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
            if (const auto* s = std::get_if<quantum::SlotRef>(&circuit.gates[i].param)) {
                gate_of_slot_[static_cast<std::size_t>(s->index)] = i;
            }
        }
    }

    double value(const std::vector<double>& params)
    {
        work_.clear();
        for (const auto* in : inputs_) {
            work_.push_back(*in);
            quantum::apply_gates_inplace(work_.back(), circuit_, 0, circuit_.gates.size(), params);
        }
        return problem_.score(work_);
    }

    /// Best grid value for one slot with the others held; returns true and
    /// updates params/value when it beats `value`.
    ///
    /// With the other angles fixed, the output state is linear in cos(t/2)
    /// and sin(t/2), so both scores are A + B cos(t - t0) + C sin(t - t0).
    /// The current value and two more evaluations fix A, B and C, and every
    /// grid angle is read off the curve.
    bool sweep_slot(std::size_t slot, const std::vector<double>& grid, std::vector<double>& params, double& value)
    {
        const std::size_t first = gate_of_slot_[slot];
        prefix_.clear();
        for (const auto* in : inputs_) {
            prefix_.push_back(*in);
            quantum::apply_gates_inplace(prefix_.back(), circuit_, 0, first, params);
        }
        const double original = params[slot];
        const double quarter = suffix_value(first, slot, original + std::numbers::pi / 2, params);
        const double half = suffix_value(first, slot, original + std::numbers::pi, params);
        params[slot] = original;
        const double a = 0.5 * (value + half);
        const double b = 0.5 * (value - half);
        const double c = quarter - a;

        double best_angle = original;
        double best = value;
        for (double angle : grid) {
            const double v = a + b * std::cos(angle - original) + c * std::sin(angle - original);
            if (v > best + kImprovement) {
                best = v;
                best_angle = angle;
            }
        }
        params[slot] = best_angle;
        if (best_angle != original) {
            value = best;
            return true;
        }
        return false;
    }

private:
    static constexpr double kImprovement = 1e-13;

    double suffix_value(std::size_t first, std::size_t slot, double angle, std::vector<double>& params)
    {
        params[slot] = angle;
        work_ = prefix_;
        for (auto& s : work_) {
            quantum::apply_gates_inplace(s, circuit_, first, circuit_.gates.size(), params);
        }
        return problem_.score(work_);
    }

    const quantum::QuantumCircuit& circuit_;
    const Problem& problem_;
    std::vector<const quantum::StateVector*> inputs_;
    std::vector<std::size_t> gate_of_slot_;
    std::vector<quantum::StateVector> prefix_;
    std::vector<quantum::StateVector> work_;
};

void exhaustive(SlotEvaluator& eval, const std::vector<double>& grid, std::size_t k, OptimizationResult& best)
{
    std::vector<std::size_t> digits(k, 0);
    std::vector<double> params(k, grid[0]);
    while (true) {
        const double v = eval.value(params);
        if (v > best.value) {
            best.value = v;
            best.params = params;
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < grid.size()) {
                params[pos] = grid[digits[pos]];
                break;
            }
            digits[pos] = 0;
            params[pos] = grid[0];
            if (pos == 0) {
                return;
            }
        }
    }
}

void coordinate_sweeps(SlotEvaluator& eval, const OptimizerSettings& settings, std::size_t k,
                       OptimizationResult& best)
{
    for (double start : settings.grid) {
        std::vector<double> params(k, start);
        double value = eval.value(params);
        for (int pass = 0; pass < settings.sweep_passes; ++pass) {
            bool improved = false;
            for (std::size_t slot = 0; slot < k; ++slot) {
                improved = eval.sweep_slot(slot, settings.grid, params, value) || improved;
            }
            if (!improved) {
                break;
            }
        }
        // the sweep tracks values read off fitted curves
        value = eval.value(params);
        if (value > best.value) {
            best.value = value;
            best.params = params;
        }
    }
}

void gradient_refine(const quantum::QuantumCircuit& circuit, const Problem& problem, SlotEvaluator& eval,
                     OptimizationResult& best)
{
    const auto& settings = problem.optimizer;
    for (int it = 0; it < settings.refine_iterations; ++it) {
        const auto grad = finite_difference_gradient(circuit, best.params, problem, settings.fd_step);
        double norm = 0.0;
        for (double g : grad) {
            norm += g * g;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            return;
        }
        bool moved = false;
        for (double step = 0.5; step > 1e-10; step *= 0.5) {
            std::vector<double> trial = best.params;
            for (std::size_t i = 0; i < trial.size(); ++i) {
                trial[i] += step * grad[i] / norm;
            }
            const double v = eval.value(trial);
            if (v > best.value) {
                const double gain = v - best.value;
                best.value = v;
                best.params = std::move(trial);
                moved = gain > settings.tolerance;
                break;
            }
        }
        if (!moved) {
            return;
        }
    }
}

} // namespace

std::vector<double> finite_difference_gradient(const quantum::QuantumCircuit& circuit,
                                               const std::vector<double>& params, const Problem& problem,
                                               double step)
{
    std::vector<double> grad(params.size());
    std::vector<double> x = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        x[i] = params[i] + step;
        const double up = prefitness(circuit, x, problem);
        x[i] = params[i] - step;
        const double down = prefitness(circuit, x, problem);
        x[i] = params[i];
        grad[i] = (up - down) / (2.0 * step);
    }
    return grad;
}

OptimizationResult optimize_params(const quantum::QuantumCircuit& circuit, const Problem& problem)
{
    const auto& settings = problem.optimizer;
    settings.validate();
    SlotEvaluator eval(circuit, problem);
    const auto k = static_cast<std::size_t>(circuit.num_slots());
    if (k == 0) {
        return {{}, eval.value({})};
    }

    OptimizationResult best;
    best.value = -std::numeric_limits<double>::infinity();

    double combos = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        combos *= static_cast<double>(settings.grid.size());
    }
    if (combos <= static_cast<double>(settings.exhaustive_limit)) {
        exhaustive(eval, settings.grid, k, best);
    } else {
        coordinate_sweeps(eval, settings, k, best);
    }
    if (settings.refine) {
        gradient_refine(circuit, problem, eval, best);
    }
    return best;
}

} // namespace qgep::fitness
