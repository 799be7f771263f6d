#include "qgep/arith/arith.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qgep::arith {

namespace {

double eval_node(const gep::ExpressionTree& tree, int index, const std::string* names,
                 const std::vector<double>& inputs, const std::vector<int>& slot_of)
{
    const auto& node = tree.node(index);
    if (node.arity == 0) {
        return inputs[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(node.symbol)])];
    }
    const double x = eval_node(tree, node.first_child, names, inputs, slot_of);
    if (node.arity == 1) {
        return std::sqrt(x); // NaN for x < 0
    }
    const double y = eval_node(tree, node.first_child + 1, names, inputs, slot_of);
    switch (names[node.symbol][0]) {
    case '+':
        return x + y;
    case '-':
        return x - y;
    default:
        return x * y;
    }
}

} // namespace

gep::PrimitiveSet make_primitive_set(const std::vector<std::string>& variables)
{
    gep::PrimitiveSet pset;
    pset.add_function("Q", 1);
    pset.add_function("+", 2);
    pset.add_function("-", 2);
    pset.add_function("*", 2);
    for (const auto& v : variables) {
        pset.add_terminal(v);
    }
    return pset;
}

double eval_tree(const gep::ExpressionTree& tree, const gep::PrimitiveSet& pset,
                 const std::vector<double>& inputs)
{
    std::vector<int> slot_of(pset.size(), -1);
    std::vector<std::string> names(pset.size());
    int slot = 0;
    for (std::size_t i = 0; i < pset.size(); ++i) {
        names[i] = pset.symbol(static_cast<gep::SymbolId>(i)).name;
    }
    for (auto t : pset.terminals()) {
        slot_of[static_cast<std::size_t>(t)] = slot++;
    }
    if (inputs.size() < static_cast<std::size_t>(slot)) {
        throw std::invalid_argument("too few inputs for the primitive set");
    }
    return eval_node(tree, gep::ExpressionTree::root, names.data(), inputs, slot_of);
}

void ArithProblem::validate() const
{
    if (samples.empty()) {
        throw gep::ConfigError("regression problem needs at least one sample");
    }
    for (const auto& s : samples) {
        if (s.inputs.size() != variables.size()) {
            throw gep::ConfigError("sample width does not match the variable count");
        }
    }
}

double regression_fitness(const gep::Gene& gene, const gep::PrimitiveSet& pset, const ArithProblem& problem)
{
    const auto tree = gep::decode(gene, pset);
    double total = 0.0;
    for (const auto& s : problem.samples) {
        const double y = eval_tree(tree, pset, s.inputs);
        if (!std::isfinite(y)) {
            continue;
        }
        total += std::max(0.0, problem.scale - std::abs(y - s.target));
    }
    return total;
}

ArithProblem load_samples_csv(const std::string& path, double scale)
{
    std::ifstream in(path);
    if (!in) {
        throw gep::ConfigError("cannot open samples file " + path);
    }
    ArithProblem problem;
    problem.scale = scale;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() < 2) {
            throw gep::ConfigError(path + ":" + std::to_string(line_no) + ": need inputs and a target");
        }
        std::vector<double> values;
        bool numeric = true;
        for (const auto& c : cells) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(c, &used));
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (!problem.samples.empty() || !problem.variables.empty()) {
                throw gep::ConfigError(path + ":" + std::to_string(line_no) + ": malformed number");
            }
            problem.variables.assign(cells.begin(), cells.end() - 1);
            continue;
        }
        if (problem.variables.empty()) {
            for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
                problem.variables.push_back(std::string(1, static_cast<char>('a' + i)));
            }
        }
        Sample s;
        s.target = values.back();
        values.pop_back();
        s.inputs = std::move(values);
        problem.samples.push_back(std::move(s));
    }
    problem.validate();
    return problem;
}

RegressionProvider::RegressionProvider(ArithProblem problem)
    : problem_(std::move(problem)), pset_(make_primitive_set(problem_.variables))
{
    problem_.validate();
}

double RegressionProvider::fitness(const gep::Gene& gene) const
{
    return regression_fitness(gene, pset_, problem_);
}

} // namespace qgep::arith
