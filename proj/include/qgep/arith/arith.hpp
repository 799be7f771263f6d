#pragma once

#include <string>
#include <vector>

#include "qgep/gep/engine.hpp"
#include "qgep/gep/karva.hpp"

namespace qgep::arith {

/// The arithmetic set {Q, +, -, *} with one terminal per variable.
/// Q is the square root.
gep::PrimitiveSet make_primitive_set(const std::vector<std::string>& variables);

/// Recursive evaluation; terminals read inputs in variable order.
/// Square roots of negative values give NaN.
double eval_tree(const gep::ExpressionTree& tree, const gep::PrimitiveSet& pset,
                 const std::vector<double>& inputs);

struct Sample {
    std::vector<double> inputs;
    double target = 0.0;
};

struct ArithProblem {
    std::vector<std::string> variables;
    std::vector<Sample> samples;
    double scale = 100.0;

    void validate() const;
    double max_fitness() const { return scale * static_cast<double>(samples.size()); }
};

/// Sum over samples of max(0, scale - |f(x) - y|); non-finite outputs score 0.
double regression_fitness(const gep::Gene& gene, const gep::PrimitiveSet& pset, const ArithProblem& problem);

/// CSV rows of inputs followed by the target. A non-numeric first row is a
/// header naming the variables; otherwise variables are named a, b, c, ...
ArithProblem load_samples_csv(const std::string& path, double scale = 100.0);

class RegressionProvider : public gep::FitnessProvider {
public:
    explicit RegressionProvider(ArithProblem problem);

    const gep::PrimitiveSet& primitives() const override { return pset_; }
    double fitness(const gep::Gene& gene) const override;
    const ArithProblem& problem() const { return problem_; }

private:
    ArithProblem problem_;
    gep::PrimitiveSet pset_;
};

} // namespace qgep::arith
