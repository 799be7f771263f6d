#include "qgep/hamiltonian/pauli_sum.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qgep::hamiltonian {

quantum::PauliMask PauliTerm::mask() const
{
    quantum::PauliMask m;
    for (auto [q, p] : factors) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (p != Pauli::Z) {
            m.flip |= bit;
        }
        if (p != Pauli::X) {
            m.phase |= bit;
        }
        if (p == Pauli::Y) {
            ++m.y_count;
        }
    }
    return m;
}

std::string PauliTerm::label() const
{
    std::string out;
    for (auto [q, p] : factors) {
        if (!out.empty()) {
            out += ' ';
        }
        out += static_cast<char>(p);
        out += std::to_string(q);
    }
    return out;
}

void PauliSum::validate() const
{
    if (n_bits < 0 || n_bits > quantum::kMaxQubits) {
        throw std::invalid_argument("Hamiltonian qubit count out of range");
    }
    if (!std::isfinite(shift) || !std::isfinite(scale) || scale <= 0.0) {
        throw std::invalid_argument("energy shift must be finite and scale positive");
    }
    for (const auto& t : terms) {
        if (!std::isfinite(t.coefficient)) {
            throw std::invalid_argument("non-finite Hamiltonian coefficient");
        }
        for (auto [q, p] : t.factors) {
            if (q < 0 || q >= n_bits) {
                throw std::invalid_argument("Pauli factor on qubit " + std::to_string(q) + " outside " +
                                            std::to_string(n_bits) + " qubits");
            }
        }
    }
}

namespace {

void check_dims(const PauliSum& h, const quantum::StateVector& state)
{
    if (h.n_bits != state.n_bits()) {
        throw quantum::SimulationError("Hamiltonian on " + std::to_string(h.n_bits) + " qubits, state on " +
                                       std::to_string(state.n_bits()));
    }
}

} // namespace

double expectation(const PauliSum& h, const quantum::StateVector& state)
{
    check_dims(h, state);
    double raw = 0.0;
    for (const auto& t : h.terms) {
        raw += t.coefficient * quantum::kernels::pauli_expectation_parallel(state.amplitudes(), t.mask());
    }
    return h.transform(raw);
}

double expectation_reference(const PauliSum& h, const quantum::StateVector& state)
{
    check_dims(h, state);
    double raw = 0.0;
    for (const auto& t : h.terms) {
        raw += t.coefficient *
               quantum::kernels::pauli_expectation_serial(state.amplitudes(), state.n_bits(), t.mask());
    }
    return h.transform(raw);
}

PauliSum parse_pauli_sum(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    PauliSum h;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        const auto fail = [&](const std::string& why) {
            throw std::invalid_argument("Hamiltonian line " + std::to_string(line_no) + ": " + why);
        };
        const auto number = [&](const std::string& s) {
            try {
                std::size_t used = 0;
                const double v = std::stod(s, &used);
                if (used == s.size()) {
                    return v;
                }
            } catch (const std::exception&) {
            }
            fail("malformed number '" + s + "'");
            return 0.0;
        };
        if (first == "nbits") {
            std::string n;
            if (have_header || !(fields >> n)) {
                fail("duplicate or incomplete 'nbits' header");
            }
            h.n_bits = static_cast<int>(number(n));
            have_header = true;
            continue;
        }
        if (!have_header) {
            fail("expected header 'nbits <N>'");
        }
        if (first == "shift" || first == "scale") {
            std::string v;
            if (!(fields >> v)) {
                fail("missing value for " + first);
            }
            (first == "shift" ? h.shift : h.scale) = number(v);
            continue;
        }
        PauliTerm term;
        term.coefficient = number(first);
        std::string factor;
        while (fields >> factor) {
            if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'Y' && factor[0] != 'Z')) {
                fail("malformed Pauli factor '" + factor + "'");
            }
            int q = -1;
            try {
                std::size_t used = 0;
                q = std::stoi(factor.substr(1), &used);
                if (used != factor.size() - 1) {
                    q = -1;
                }
            } catch (const std::exception&) {
            }
            if (q < 0 || q >= h.n_bits) {
                fail("bad qubit in factor '" + factor + "'");
            }
            if (!term.factors.emplace(q, static_cast<Pauli>(factor[0])).second) {
                fail("qubit " + std::to_string(q) + " repeated in one term");
            }
        }
        h.terms.push_back(std::move(term));
    }
    if (!have_header) {
        throw std::invalid_argument("Hamiltonian has no 'nbits' header");
    }
    h.validate();
    return h;
}

PauliSum load_pauli_sum(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open Hamiltonian file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_pauli_sum(buffer.str());
}

std::string format_pauli_sum(const PauliSum& h)
{
    std::string out = fmt::format("nbits {}\n", h.n_bits);
    if (h.shift != 0.0) {
        out += fmt::format("shift {:.17g}\n", h.shift);
    }
    if (h.scale != 1.0) {
        out += fmt::format("scale {:.17g}\n", h.scale);
    }
    for (const auto& t : h.terms) {
        out += fmt::format("{:.17g}", t.coefficient);
        if (!t.factors.empty()) {
            out += ' ' + t.label();
        }
        out += '\n';
    }
    return out;
}

void save_pauli_sum(const PauliSum& h, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write Hamiltonian file " + path);
    }
    out << format_pauli_sum(h);
}

} // namespace qgep::hamiltonian
