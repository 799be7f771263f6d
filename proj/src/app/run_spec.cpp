#include "qgep/app/run_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qgep::app {

namespace {

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

class Reader {
public:
    explicit Reader(const Entry& e) : e_(e) {}

    [[noreturn]] void fail(const std::string& why) const { throw InputError(e_.key, e_.line, why); }

    long integer(long min = std::numeric_limits<long>::min()) const
    {
        try {
            std::size_t used = 0;
            const long v = std::stol(e_.value, &used);
            if (used == e_.value.size() && v >= min) {
                return v;
            }
        } catch (const std::exception&) {
        }
        fail("expected an integer >= " + std::to_string(min) + ", got '" + e_.value + "'");
    }

    double real() const
    {
        try {
            std::size_t used = 0;
            const double v = std::stod(e_.value, &used);
            if (used == e_.value.size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        fail("expected a number, got '" + e_.value + "'");
    }

    double rate() const
    {
        const double v = real();
        if (!(v >= 0.0 && v <= 1.0)) {
            fail("rate must lie in [0, 1]");
        }
        return v;
    }

    bool flag() const
    {
        if (e_.value == "0" || e_.value == "1") {
            return e_.value == "1";
        }
        fail("expected 0 or 1");
    }

    const std::string& text() const { return e_.value; }

private:
    const Entry& e_;
};

HamiltonianSource parse_hamiltonian(const Reader& r, const std::filesystem::path& base)
{
    const std::string& v = r.text();
    const auto colon = v.find(':');
    if (colon == std::string::npos) {
        r.fail("expected xx:..., heisenberg2d:... or file:...");
    }
    const std::string kind = lower(trim(v.substr(0, colon)));
    const std::string rest = trim(v.substr(colon + 1));
    HamiltonianSource src;
    const auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const int x = std::stoi(s, &used);
            if (used == s.size()) {
                return x;
            }
        } catch (const std::exception&) {
        }
        r.fail("malformed integer '" + s + "'");
    };
    if (kind == "xx") {
        const auto parts = split(rest, ',');
        if (parts.empty() || parts.size() > 3) {
            r.fail("expected xx:n[,Jx[,open|periodic]]");
        }
        src.kind = HamiltonianSource::Kind::XX;
        src.sites = to_int(parts[0]);
        if (parts.size() > 1) {
            std::size_t used = 0;
            try {
                src.jx = std::stod(parts[1], &used);
            } catch (const std::exception&) {
            }
            if (used == 0 || used != parts[1].size()) {
                r.fail("malformed coupling '" + parts[1] + "'");
            }
        }
        const std::string b = parts.size() > 2 ? lower(parts[2]) : "periodic";
        if (b != "open" && b != "periodic") {
            r.fail("boundary must be open or periodic");
        }
        src.boundary = b == "open" ? hamiltonian::Boundary::Open : hamiltonian::Boundary::Periodic;
        if (src.sites < 2) {
            r.fail("XX chain needs at least two sites");
        }
    } else if (kind == "heisenberg2d") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2) {
            r.fail("expected heisenberg2d:rows,cols");
        }
        src.kind = HamiltonianSource::Kind::Heisenberg2D;
        src.rows = to_int(parts[0]);
        src.cols = to_int(parts[1]);
        if (src.rows < 1 || src.cols < 1 || src.rows * src.cols < 2) {
            r.fail("lattice needs at least two sites");
        }
    } else if (kind == "file") {
        if (rest.empty()) {
            r.fail("missing path");
        }
        src.kind = HamiltonianSource::Kind::File;
        src.path = base / rest;
    } else {
        r.fail("unknown Hamiltonian kind '" + kind + "'");
    }
    return src;
}

using Handler = std::function<void(RunSpec&, const Reader&, const std::filesystem::path&)>;

const std::map<std::string, Handler>& handlers()
{
    using P = std::filesystem::path;
    static const std::map<std::string, Handler> table = {
        {"runtype",
         [](RunSpec& s, const Reader& r, const P&) {
             const std::string v = lower(r.text());
             if (v == "functionfit") {
                 s.run_type = fitness::ProblemKind::FunctionFit;
             } else if (v == "groundstate") {
                 s.run_type = fitness::ProblemKind::GroundState;
             } else {
                 r.fail("expected FunctionFit or GroundState");
             }
         }},
        {"numbits",
         [](RunSpec& s, const Reader& r, const P&) {
             s.n_bits = static_cast<int>(r.integer(1));
             if (s.n_bits > quantum::kMaxQubits) {
                 r.fail("at most " + std::to_string(quantum::kMaxQubits) + " qubits");
             }
         }},
        {"gates",
         [](RunSpec& s, const Reader& r, const P&) {
             s.gates.clear();
             for (const auto& name : split(r.text(), ',')) {
                 const auto kind = quantum::parse_gate_kind(name);
                 if (!kind) {
                     r.fail("unknown gate '" + name + "'");
                 }
                 if (std::find(s.gates.begin(), s.gates.end(), *kind) == s.gates.end()) {
                     s.gates.push_back(*kind);
                 }
             }
             if (s.gates.empty()) {
                 r.fail("gate list is empty");
             }
         }},
        {"phaseangle", [](RunSpec& s, const Reader& r, const P&) { s.phase = r.real(); }},
        {"headsize",
         [](RunSpec& s, const Reader& r, const P&) { s.evolution.head_len = static_cast<int>(r.integer(1)); }},
        {"population",
         [](RunSpec& s, const Reader& r, const P&) {
             s.evolution.population_size = static_cast<int>(r.integer(2));
         }},
        {"generations",
         [](RunSpec& s, const Reader& r, const P&) { s.evolution.generations = static_cast<int>(r.integer(1)); }},
        {"seed",
         [](RunSpec& s, const Reader& r, const P&) { s.evolution.seed = static_cast<std::uint64_t>(r.integer(0)); }},
        {"earlystopfitness", [](RunSpec& s, const Reader& r, const P&) { s.evolution.early_stop_fitness = r.real(); }},
        {"threads",
         [](RunSpec& s, const Reader& r, const P&) { s.evolution.threads = static_cast<int>(r.integer(1)); }},
        {"mutationrate", [](RunSpec& s, const Reader& r, const P&) { s.evolution.mutation_rate = r.rate(); }},
        {"onepointrate", [](RunSpec& s, const Reader& r, const P&) { s.evolution.one_point_prob = r.rate(); }},
        {"twopointrate", [](RunSpec& s, const Reader& r, const P&) { s.evolution.two_point_prob = r.rate(); }},
        {"inversionrate", [](RunSpec& s, const Reader& r, const P&) { s.evolution.inversion_prob = r.rate(); }},
        {"swaprate", [](RunSpec& s, const Reader& r, const P&) { s.evolution.swap_prob = r.rate(); }},
        {"initialstate", [](RunSpec& s, const Reader& r, const P&) { s.initial_state = r.text(); }},
        {"graphfile", [](RunSpec& s, const Reader& r, const P& base) { s.graph_file = base / r.text(); }},
        {"hamiltonian",
         [](RunSpec& s, const Reader& r, const P& base) { s.hamiltonian = parse_hamiltonian(r, base); }},
        {"trainingpairs", [](RunSpec& s, const Reader& r, const P& base) { s.training_pairs = base / r.text(); }},
        {"canonicalize", [](RunSpec& s, const Reader& r, const P&) { s.canonicalize = r.flag(); }},
        {"gradientrefine", [](RunSpec& s, const Reader& r, const P&) { s.optimizer.refine = r.flag(); }},
        {"anglegrid",
         [](RunSpec& s, const Reader& r, const P&) {
             s.optimizer.grid = fitness::OptimizerSettings::uniform_grid(static_cast<int>(r.integer(1)));
         }},
        {"finitedifferencestep",
         [](RunSpec& s, const Reader& r, const P&) {
             s.optimizer.fd_step = r.real();
             if (!(s.optimizer.fd_step > 0.0)) {
                 r.fail("step must be positive");
             }
         }},
        {"refineiterations",
         [](RunSpec& s, const Reader& r, const P&) {
             s.optimizer.refine_iterations = static_cast<int>(r.integer(0));
         }},
        {"refinetolerance",
         [](RunSpec& s, const Reader& r, const P&) {
             s.optimizer.tolerance = r.real();
             if (s.optimizer.tolerance < 0.0) {
                 r.fail("tolerance must be non-negative");
             }
         }},
        {"energyshift", [](RunSpec& s, const Reader& r, const P&) { s.energy_shift = r.real(); }},
        {"energyscale",
         [](RunSpec& s, const Reader& r, const P&) {
             s.energy_scale = r.real();
             if (!(s.energy_scale > 0.0)) {
                 r.fail("scale must be positive");
             }
         }},
        {"exactenergy", [](RunSpec& s, const Reader& r, const P&) { s.exact_energy = r.real(); }},
        {"epsilon",
         [](RunSpec& s, const Reader& r, const P&) {
             s.epsilon = r.real();
             if (s.epsilon < 0.0) {
                 r.fail("threshold must be non-negative");
             }
         }},
        {"topcircuits",
         [](RunSpec& s, const Reader& r, const P&) { s.top_circuits = static_cast<int>(r.integer(1)); }},
        {"outputdir", [](RunSpec& s, const Reader& r, const P& base) { s.output_dir = base / r.text(); }},
    };
    return table;
}

int inferred_bits(const RunSpec& s)
{
    switch (s.hamiltonian.kind) {
    case HamiltonianSource::Kind::XX:
        return s.hamiltonian.sites;
    case HamiltonianSource::Kind::Heisenberg2D:
        return s.hamiltonian.rows * s.hamiltonian.cols;
    default:
        return 0;
    }
}

} // namespace

RunSpec parse_input_text(const std::string& text, const std::filesystem::path& base_dir)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::map<std::string, Entry> entries;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError(line, line_no, "expected 'key = value'");
        }
        Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        const std::string key = lower(e.key);
        if (!handlers().contains(key)) {
            throw InputError(e.key, line_no, "unknown key");
        }
        if (entries.contains(key)) {
            throw InputError(e.key, line_no, "key given twice");
        }
        entries.emplace(key, std::move(e));
    }

    RunSpec spec;
    spec.output_dir = base_dir.empty() ? std::filesystem::path(".") : base_dir;
    for (const auto& [key, entry] : entries) {
        handlers().at(key)(spec, Reader(entry), base_dir);
    }

    if (!entries.contains("runtype")) {
        throw InputError("RunType", 0, "missing mandatory key");
    }
    const bool has_graph = !spec.graph_file.empty();
    const bool has_h = spec.hamiltonian.kind != HamiltonianSource::Kind::None;
    const bool has_pairs = !spec.training_pairs.empty();
    if (spec.run_type == fitness::ProblemKind::GroundState) {
        if (has_graph && has_h) {
            throw InputError("GraphFile", entries.at("graphfile").line, "conflicts with Hamiltonian");
        }
        if (!has_graph && !has_h) {
            throw InputError("Hamiltonian", 0, "GroundState needs GraphFile or Hamiltonian");
        }
        if (has_pairs) {
            throw InputError("TrainingPairs", entries.at("trainingpairs").line, "not used by GroundState");
        }
    } else {
        if (!has_pairs) {
            throw InputError("TrainingPairs", 0, "FunctionFit needs TrainingPairs");
        }
        if (has_graph || has_h) {
            throw InputError(has_graph ? "GraphFile" : "Hamiltonian", 0, "not used by FunctionFit");
        }
        if (!entries.contains("numbits")) {
            throw InputError("NumBits", 0, "FunctionFit needs NumBits");
        }
    }

    const int inferred = inferred_bits(spec);
    if (inferred > 0) {
        if (entries.contains("numbits") && spec.n_bits != inferred) {
            throw InputError("NumBits", entries.at("numbits").line,
                             "Hamiltonian acts on " + std::to_string(inferred) + " qubits");
        }
        spec.n_bits = inferred;
    }
    return spec;
}

RunSpec parse_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("<file>", 0, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_input_text(buffer.str(), path.parent_path());
}

quantum::StateVector parse_state(const std::string& token, int n_bits)
{
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("state '" + token + "': " + why);
    };
    if (token.empty()) {
        fail("empty");
    }
    if (token.front() == '[') {
        if (token.back() != ']') {
            fail("unterminated amplitude list");
        }
        std::vector<quantum::Amplitude> amps;
        for (const auto& item : split(token.substr(1, token.size() - 2), ',')) {
            const auto colon = item.find(':');
            try {
                const double re = std::stod(item.substr(0, colon));
                const double im = colon == std::string::npos ? 0.0 : std::stod(item.substr(colon + 1));
                amps.emplace_back(re, im);
            } catch (const std::exception&) {
                fail("malformed amplitude '" + item + "'");
            }
        }
        if (amps.size() != (std::size_t{1} << n_bits)) {
            fail("expected " + std::to_string(std::size_t{1} << n_bits) + " amplitudes");
        }
        quantum::StateVector s(n_bits, std::move(amps));
        s.normalize();
        return s;
    }
    const bool is_bits = static_cast<int>(token.size()) == n_bits &&
                         token.find_first_not_of("01") == std::string::npos;
    std::uint64_t index = 0;
    if (is_bits) {
        for (char c : token) {
            index = (index << 1) | static_cast<std::uint64_t>(c - '0');
        }
    } else {
        if (token.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a bitstring, an index or an amplitude list");
        }
        index = std::stoull(token);
    }
    return quantum::basis_state(n_bits, index);
}

std::vector<fitness::TrainingPair> load_training_pairs(const std::filesystem::path& path, int n_bits)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open training pairs " + path.string());
    }
    std::vector<fitness::TrainingPair> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string a;
        std::string b;
        std::string extra;
        if (!(fields >> a)) {
            continue;
        }
        if (!(fields >> b) || (fields >> extra)) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": expected '<input> <output>'");
        }
        try {
            pairs.push_back({parse_state(a, n_bits), parse_state(b, n_bits)});
        } catch (const std::exception& e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (pairs.empty()) {
        throw std::invalid_argument(path.string() + ": no training pairs");
    }
    return pairs;
}

} // namespace qgep::app
