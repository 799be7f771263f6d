#include "qgep/hamiltonian/maxcut.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

#include <fmt/format.h>

namespace qgep::hamiltonian {

std::vector<CutReading> maxcut_from_state(const quantum::StateVector& state, const Graph& g, double epsilon)
{
    if (state.n_bits() != g.vertex_count()) {
        throw std::invalid_argument("state and graph sizes differ");
    }
    std::vector<CutReading> out;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const double w = std::norm(state[b]);
        if (!(w > epsilon)) {
            continue;
        }
        CutReading r;
        r.index = b;
        r.bits = quantum::bitstring(b, state.n_bits());
        r.weight = w;
        r.cut = g.cut_value(b);
        for (int v = 0; v < g.vertex_count(); ++v) {
            ((b >> v) & 1U ? r.side_one : r.side_zero).push_back(v);
        }
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CutReading& a, const CutReading& b) { return a.weight > b.weight; });
    return out;
}

std::string format_cut_readings(const std::vector<CutReading>& readings)
{
    std::string out = "# index bits weight cut side_one side_zero\n";
    for (const auto& r : readings) {
        out += fmt::format("{} {} {:.10f} {} {{{}}} {{{}}}\n", r.index, r.bits, r.weight, r.cut,
                           fmt::join(r.side_one, ","), fmt::join(r.side_zero, ","));
    }
    return out;
}

} // namespace qgep::hamiltonian
