#include "cmf/report_io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cmf {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const Report& rep) {
    ordered_json j;
    j["ring"] = {{"p", rep.p}, {"vars", rep.vars}};
    j["generators"] = rep.generators;
    j["mu"] = rep.mu;
    j["t_sequence"] = rep.t_sequence;
    j["B"] = rep.B;
    if (rep.type)
        j["type"] = *rep.type;
    else
        j["type"] = "infinite";
    j["height"] = rep.height;
    j["dim"] = rep.dim;
    j["regularity"] = rep.regularity;
    j["gin"] = rep.gin_gens;
    j["gin_stable"] = rep.gin_stable;
    j["m_full"] = rep.m_full;
    j["completely_m_full_recursive"] = rep.completely_m_full_recursive;
    j["completely_m_full_B"] = rep.completely_m_full_B;
    j["componentwise_linear"] = rep.componentwise_linear;
    j["nagel_romer"] = rep.nagel_romer;
    j["consistent"] = rep.consistent;
    j["seed"] = rep.seed;
    ordered_json betti = ordered_json::array();
    for (const auto& [i, jj, v] : rep.betti)
        betti.push_back(ordered_json::array({i, jj, v}));
    j["betti"] = betti;
    if (!rep.errors.empty()) {
        ordered_json errs;
        for (const auto& [k, v] : rep.errors) errs[k] = v;
        j["errors"] = errs;
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    os << "ring                     F" << rep.p << " [";
    for (std::size_t i = 0; i < rep.vars.size(); ++i)
        os << (i ? ", " : "") << rep.vars[i];
    os << "]\n";
    os << "generators               ";
    for (std::size_t i = 0; i < rep.generators.size(); ++i)
        os << (i ? ", " : "") << rep.generators[i];
    os << "\n";
    os << "mu                       " << rep.mu << "\n";
    os << "t-sequence               (";
    for (std::size_t i = 0; i < rep.t_sequence.size(); ++i)
        os << (i ? ", " : "") << rep.t_sequence[i];
    os << ")\n";
    os << "B                        " << rep.B << "\n";
    os << "type                     ";
    if (rep.type)
        os << *rep.type << "\n";
    else
        os << "infinite\n";
    os << "height                   " << rep.height << "\n";
    os << "dim                      " << rep.dim << "\n";
    os << "regularity               " << rep.regularity << "\n";
    os << "gin                      ";
    for (std::size_t i = 0; i < rep.gin_gens.size(); ++i)
        os << (i ? ", " : "") << rep.gin_gens[i];
    os << "\n";
    os << "gin stable               " << flag(rep.gin_stable) << "\n";
    os << "m-full                   " << flag(rep.m_full) << "\n";
    os << "completely m-full (rec)  " << flag(rep.completely_m_full_recursive) << "\n";
    os << "completely m-full (B)    " << flag(rep.completely_m_full_B) << "\n";
    os << "componentwise linear     " << flag(rep.componentwise_linear) << "\n";
    os << "Nagel-Roemer             " << flag(rep.nagel_romer) << "\n";
    os << "low-type check           " << flag(rep.low_type) << "\n";
    os << "consistent               " << flag(rep.consistent) << "\n";
    os << "seed                     " << rep.seed << "\n";
    if (!rep.betti.empty()) {
        os << "betti (i, j, value)      ";
        for (std::size_t k = 0; k < rep.betti.size(); ++k) {
            const auto& [i, j, v] = rep.betti[k];
            os << (k ? " " : "") << "(" << i << "," << j << ")=" << v;
        }
        os << "\n";
    }
    double total = 0;
    for (const auto& [k, v] : rep.timings) total += v;
    os << "time                     " << std::fixed << std::setprecision(3)
       << total << "s\n";
    for (const auto& [k, v] : rep.errors)
        os << "error[" << k << "]  " << v << "\n";
    return os.str();
}

}  // namespace cmf
