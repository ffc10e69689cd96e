#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbench/circuit.hpp"
#include "qbench/errors.hpp"

namespace qbench {

// Character k of a Pauli string acts on qubit n-1-k.
struct PauliTerm {
    std::string pauli;
    double coeff = 0.0;
    friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

struct ChemInstance {
    std::string instance_name;
    int num_qubits = 0;
    std::vector<PauliTerm> paired_hamiltonian; // document order
    double hf_energy = 0.0;
    double nuclear_repulsion_energy = 0.0;
    double reference_energy_doci = 0.0;
    double reference_energy_fci = 0.0;
    std::vector<double> optimal_parameters;
    int num_occupied = 0; // paired orbitals filled in the reference state

    int num_virtual() const { return num_qubits - num_occupied; }
    int num_pairs() const { return num_occupied * num_virtual(); }

    void validate() const {
        require<SchemaError>(num_qubits >= 1, "num_qubits must be positive");
        require<SchemaError>(num_occupied >= 0 && num_occupied <= num_qubits, "occupied orbital count out of range");
        for (const auto& t : paired_hamiltonian) {
            require<SchemaError>(static_cast<int>(t.pauli.size()) == num_qubits,
                                 "Pauli string '" + t.pauli + "' does not have num_qubits characters");
            char off = 0;
            for (char ch : t.pauli) {
                require<SchemaError>(ch == 'I' || ch == 'X' || ch == 'Y' || ch == 'Z',
                                     "Pauli string '" + t.pauli + "' has a letter outside IXYZ");
                if (ch == 'X' || ch == 'Y') {
                    require<SchemaError>(off == 0 || off == ch,
                                         "off-diagonal term '" + t.pauli + "' mixes X and Y");
                    off = ch;
                }
            }
            if (off != 0)
                for (char ch : t.pauli)
                    require<SchemaError>(ch == 'I' || ch == off,
                                         "off-diagonal term '" + t.pauli + "' must be all-X or all-Y on its support");
        }
    }
};

// Parses the instance document payload (the "data" object of the paired
// hydrogen chain schema). Unknown fields are ignored.
inline ChemInstance chem_instance_from_json(const nlohmann::json& doc) {
    try {
        const auto& d = doc.contains("data") ? doc.at("data") : doc;
        ChemInstance c;
        c.instance_name = doc.value("instance_name", d.value("instance_name", std::string{}));
        c.num_qubits = doc.contains("num_qubits") ? doc.at("num_qubits").get<int>() : d.at("num_qubits").get<int>();
        for (const auto& [k, v] : d.at("paired_hamiltonian_dict").items()) c.paired_hamiltonian.push_back({k, v.get<double>()});
        c.hf_energy = d.at("hf_energy").get<double>();
        c.nuclear_repulsion_energy = d.at("nuclear_repulsion_energy").get<double>();
        c.reference_energy_doci = d.at("reference_energy_doci").get<double>();
        c.reference_energy_fci = d.value("reference_energy_fci", c.reference_energy_doci);
        c.optimal_parameters = d.value("optimal_parameters", std::vector<double>{});
        c.num_occupied = d.contains("num_alpha") ? d.at("num_alpha").get<int>() : c.num_qubits / 2;
        c.validate();
        return c;
    } catch (const nlohmann::json::out_of_range& e) {
        throw SchemaError(std::string("chemistry instance is missing a key: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed chemistry instance: ") + e.what());
    }
}

// Pair rotation |1_i 0_a> -> cos t |1_i 0_a> - sin t |0_i 1_a>, identity on
// |00> and |11>. CX + RY only.
inline std::vector<Gate> givens_rotation(int i, int a, double theta) {
    return {Gate::cx(i, a),        Gate::ry(i, theta), Gate::cx(a, i),
            Gate::ry(i, -theta),   Gate::cx(a, i),     Gate::cx(i, a)};
}

inline Circuit pucc_ansatz(const ChemInstance& inst, const std::vector<double>& params) {
    inst.validate();
    require(static_cast<int>(params.size()) == inst.num_pairs(),
            "expected " + std::to_string(inst.num_pairs()) + " pair parameters, got " + std::to_string(params.size()));
    Circuit c(inst.num_qubits);
    for (int q = 0; q < inst.num_occupied; ++q) c.add(Gate::x(q));
    std::size_t k = 0;
    for (int i = 0; i < inst.num_occupied; ++i)
        for (int a = inst.num_occupied; a < inst.num_qubits; ++a) c.add(givens_rotation(i, a, params[k++]));
    return c;
}

struct PuccCircuits {
    Circuit z, x, y;
};

inline PuccCircuits gen_pucc_circuits(const ChemInstance& inst, const std::vector<double>& params) {
    const Circuit core = pucc_ansatz(inst, params);
    PuccCircuits out{core, core, core};
    for (int q = 0; q < inst.num_qubits; ++q) {
        out.x.add(Gate::h(q));
        out.y.add(Gate::rz(q, -std::numbers::pi / 2)).add(Gate::h(q)); // S^dag then H
    }
    out.z.metadata()["basis"] = "z";
    out.x.metadata()["basis"] = "x";
    out.y.metadata()["basis"] = "y";
    for (Circuit* c : {&out.z, &out.x, &out.y}) {
        c->metadata()["family"] = "chemistry";
        c->metadata()["instance"] = inst.instance_name;
    }
    return out;
}

inline PuccCircuits gen_pucc_circuits(const ChemInstance& inst) {
    return gen_pucc_circuits(inst, inst.optimal_parameters);
}

} // namespace qbench
