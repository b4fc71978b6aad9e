#include "graphscat/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphscat/errors.hpp"

namespace graphscat {

using nlohmann::json;

namespace {

cplx parse_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(where + ": expected a [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json pair_of(cplx v) { return json::array({v.real(), v.imag()}); }

} // namespace

InstanceFile parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("a")) throw ParseError("missing field \"a\"");
    if (!j.contains("b")) throw ParseError("missing field \"b\"");
    if (!j.contains("D")) throw ParseError("missing field \"D\"");
    if (!j["a"].is_number()) throw ParseError("field \"a\" must be a real number");
    if (!j["b"].is_array()) throw ParseError("field \"b\" must be an array of [re, im] pairs");
    if (!j["D"].is_array()) throw ParseError("field \"D\" must be an array of rows");

    const std::size_t m = j["b"].size();
    if (j["D"].size() != m) throw ParseError("\"D\" must have exactly len(b) rows");

    CMatrix raw(m + 1, m + 1);
    raw(0, 0) = j["a"].get<double>();
    for (std::size_t i = 0; i < m; ++i) {
        std::ostringstream bw;
        bw << "b[" << i << "]";
        const cplx bi = parse_pair(j["b"][i], bw.str());
        raw(i + 1, 0) = bi;
        raw(0, i + 1) = std::conj(bi);
        if (!j["D"][i].is_array() || j["D"][i].size() != m) {
            std::ostringstream os;
            os << "D[" << i << "] must be a row of " << m << " [re, im] pairs";
            throw ParseError(os.str());
        }
        for (std::size_t k = 0; k < m; ++k) {
            std::ostringstream dw;
            dw << "D[" << i << "][" << k << "]";
            raw(i + 1, k + 1) = parse_pair(j["D"][i][k], dw.str());
        }
    }

    InstanceFile f;
    f.spec = validate(raw);
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const auto& md = j["metadata"];
        if (md.contains("name") && md["name"].is_string()) f.name = md["name"].get<std::string>();
        if (md.contains("seed") && md["seed"].is_number_unsigned())
            f.seed = md["seed"].get<std::uint64_t>();
    }
    return f;
}

InstanceFile read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string instance_to_json(const GraphSpec& spec, const std::string& name,
                             std::optional<std::uint64_t> seed) {
    json j;
    j["a"] = spec.a;
    j["b"] = json::array();
    for (const auto& v : spec.b) j["b"].push_back(pair_of(v));
    j["D"] = json::array();
    for (std::size_t i = 0; i < spec.m(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < spec.m(); ++k) row.push_back(pair_of(spec.D(i, k)));
        j["D"].push_back(row);
    }
    if (!name.empty() || seed) {
        json md = json::object();
        if (!name.empty()) md["name"] = name;
        if (seed) md["seed"] = *seed;
        j["metadata"] = md;
    }
    return j.dump(2) + "\n";
}

void write_instance(const GraphSpec& spec, const std::string& path, const std::string& name,
                    std::optional<std::uint64_t> seed) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << instance_to_json(spec, name, seed);
}

namespace {

json report_json(const VerificationReport& rep) {
    json j;
    j["m"] = rep.census.m;
    j["n_b"] = rep.census.n_b;
    j["n_h"] = rep.census.n_h;
    j["n_c"] = rep.census.n_c;
    j["w_phase"] = rep.w_phase;
    j["w_roots"] = rep.w_roots;
    j["rhs"] = rep.rhs.value();
    j["rhs_exact"] = {{"num", rep.rhs.num}, {"den", rep.rhs.den}};
    j["holds"] = rep.holds;
    j["reduced"] = rep.reduced;
    j["diagnostics"] = rep.diagnostics;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& rep) {
    return report_json(rep).dump(2) + "\n";
}

std::string fuzz_summary_to_json(const FuzzSummary& sum) {
    json j;
    j["count"] = sum.count;
    j["held"] = sum.held;
    j["violated"] = sum.violated;
    j["flagged"] = sum.flagged;
    j["failures"] = json::array();
    for (const auto& f : sum.failures) {
        json e;
        e["seed"] = f.seed;
        e["m"] = f.m;
        e["report"] = report_json(f.report);
        j["failures"].push_back(e);
    }
    return j.dump(2) + "\n";
}

} // namespace graphscat
