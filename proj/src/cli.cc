// Copyright 2026 The chandisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "chandisc/cli.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "chandisc/discrim.h"
#include "chandisc/error.h"
#include "chandisc/oracle.h"
#include "chandisc/perfect.h"
#include "json.hpp"

namespace chandisc {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr double kUnitaryTol = 1e-9;
constexpr double kPureInputTol = 1e-9;
constexpr double kFormAgreementTol = 1e-12;

/// Malformed field inside a channel entry.
class FieldError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spec-file parsing.
// ---------------------------------------------------------------------------

std::pair<size_t, size_t> line_and_column(const std::string &text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    for (size_t k = 0; k < byte && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return {line, col};
}

/// Line of each element of the top-level "channels" array. Assumes text is
/// valid JSON.
std::vector<size_t> channel_entry_lines(const std::string &text) {
    std::vector<size_t> lines;
    size_t line = 1;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    std::string current;
    std::string last_key;
    bool armed = false;
    bool in_channels = false;
    bool awaiting_element = false;
    for (char ch : text) {
        if (in_string) {
            if (escaped) {
                escaped = false;
                current += ch;
            } else if (ch == '\\') {
                escaped = true;
            } else if (ch == '"') {
                in_string = false;
                if (depth == 1) {
                    last_key = current;
                }
            } else {
                current += ch;
            }
            continue;
        }
        if (ch == '\n') {
            line++;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        if (awaiting_element && depth == 2 && ch != ']') {
            lines.push_back(line);
            awaiting_element = false;
        }
        switch (ch) {
            case '"':
                in_string = true;
                current.clear();
                break;
            case ':':
                armed = depth == 1 && last_key == "channels";
                break;
            case '[':
                depth++;
                if (armed && depth == 2) {
                    in_channels = true;
                    awaiting_element = true;
                }
                armed = false;
                break;
            case '{':
                depth++;
                armed = false;
                break;
            case ']':
            case '}':
                depth--;
                if (in_channels && depth == 1) {
                    in_channels = false;
                    awaiting_element = false;
                }
                break;
            case ',':
                if (in_channels && depth == 2) {
                    awaiting_element = true;
                }
                break;
            default:
                armed = false;
                break;
        }
    }
    return lines;
}

const json &field(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw FieldError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

double real_value(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw FieldError(what + " must be a number");
    }
    return v.get<double>();
}

std::vector<double> real_list(const json &v, const std::string &what) {
    if (!v.is_array()) {
        throw FieldError(what + " must be a list of numbers");
    }
    std::vector<double> out;
    for (size_t k = 0; k < v.size(); k++) {
        out.push_back(real_value(v[k], what + "[" + std::to_string(k) + "]"));
    }
    return out;
}

complex complex_value(const json &v, const std::string &what) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw FieldError(what + " must be [re, im] or a real number");
}

ComplexMatrix matrix_value(const json &v, const std::string &what) {
    if (!v.is_array() || v.empty()) {
        throw FieldError(what + " must be a non-empty list of rows");
    }
    size_t n = v.size();
    std::vector<complex> entries;
    for (size_t r = 0; r < n; r++) {
        const auto &row = v[r];
        if (!row.is_array() || row.size() != n) {
            throw FieldError(what + " must be square; row " + std::to_string(r) + " has the wrong length");
        }
        for (size_t c = 0; c < n; c++) {
            entries.push_back(complex_value(row[c], what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        }
    }
    return ComplexMatrix(n, std::move(entries));
}

PauliProbs pauli_probs(const std::vector<double> &q) {
    if (q.size() != 4) {
        throw FieldError("\"q\" must have 4 entries, found " + std::to_string(q.size()));
    }
    return {q[0], q[1], q[2], q[3]};
}

ChannelSpec parse_channel(const json &entry, size_t line) {
    if (!entry.is_object()) {
        throw FieldError("channel entry must be an object");
    }
    const auto &kind_json = field(entry, "kind");
    if (!kind_json.is_string()) {
        throw FieldError("\"kind\" must be a string");
    }
    ChannelSpec spec{kind_json.get<std::string>(), 0, line, {}, {}, {}, {}};
    const std::string &kind = spec.kind;
    if (kind == "kraus") {
        const auto &ops_json = field(entry, "ops");
        if (!ops_json.is_array() || ops_json.empty()) {
            throw FieldError("\"ops\" must be a non-empty list of matrices");
        }
        std::vector<ComplexMatrix> ops;
        for (size_t k = 0; k < ops_json.size(); k++) {
            ops.push_back(matrix_value(ops_json[k], "ops[" + std::to_string(k) + "]"));
        }
        spec.kraus.emplace(std::move(ops));
    } else if (kind == "pauli") {
        spec.gpc.emplace(GpcChannel::pauli(pauli_probs(real_list(field(entry, "q"), "q"))));
        spec.kraus.emplace(spec.gpc->to_kraus());
        spec.affine.emplace(pauli_to_affine(*spec.gpc));
    } else if (kind == "gpc") {
        const auto &d_json = field(entry, "d");
        if (!d_json.is_number_integer()) {
            throw FieldError("\"d\" must be an integer");
        }
        long long d = d_json.get<long long>();
        if (d < 2 || d > 4) {
            throw Error(ErrorKind::UnsupportedDimension, "gpc dimension must be 2, 3 or 4, got " + std::to_string(d));
        }
        spec.gpc.emplace(GpcChannel::weyl(static_cast<size_t>(d), real_list(field(entry, "q"), "q")));
        spec.kraus.emplace(spec.gpc->to_kraus());
    } else if (kind == "named") {
        const auto &name = field(entry, "name");
        if (!name.is_string()) {
            throw FieldError("\"name\" must be a string");
        }
        spec.kraus.emplace(named_channel(name.get<std::string>(), real_value(field(entry, "param"), "param")));
    } else if (kind == "unitary") {
        auto u = matrix_value(field(entry, "matrix"), "matrix");
        if (!u.is_unitary(kUnitaryTol)) {
            throw Error(ErrorKind::NotUnitary, "matrix is not unitary within 1e-9");
        }
        spec.unitary = u;
        spec.kraus.emplace(std::vector<ComplexMatrix>{u});
    } else if (kind == "affine") {
        const auto &m_json = field(entry, "m");
        std::vector<double> flat;
        if (m_json.size() == 3 && m_json[0].is_array()) {
            for (size_t r = 0; r < 3; r++) {
                auto row = real_list(m_json[r], "m[" + std::to_string(r) + "]");
                if (row.size() != 3) {
                    throw FieldError("\"m\" must be a 3x3 matrix");
                }
                flat.insert(flat.end(), row.begin(), row.end());
            }
        } else {
            throw FieldError("\"m\" must be a 3x3 matrix");
        }
        auto c = real_list(field(entry, "c"), "c");
        if (c.size() != 3) {
            throw FieldError("\"c\" must have 3 entries");
        }
        RealMatrix3 mm;
        std::copy(flat.begin(), flat.end(), mm.a.begin());
        spec.affine.emplace(mm, Vec3{c[0], c[1], c[2]});
        spec.dim = 2;
        return spec;
    } else {
        throw FieldError("unknown channel kind \"" + kind +
                         "\" (expected kraus, pauli, gpc, named, unitary or affine)");
    }
    spec.dim = spec.kraus->dim();
    if (spec.dim == 2 && !spec.affine.has_value()) {
        spec.affine.emplace(kraus_to_affine(*spec.kraus));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Report output.
// ---------------------------------------------------------------------------

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void newline(std::string &out, bool pretty, int depth) {
    if (pretty) {
        out += '\n';
        out.append(2 * static_cast<size_t>(depth), ' ');
    }
}

bool is_flat_array(const ojson &j) {
    for (const auto &v : j) {
        if (v.is_structured()) {
            return false;
        }
    }
    return true;
}

void write_value(const ojson &j, std::string &out, bool pretty, int depth) {
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(out, pretty, depth + 1);
                out += ojson(it.key()).dump();
                out += pretty ? ": " : ":";
                write_value(it.value(), out, pretty, depth + 1);
            }
            newline(out, pretty, depth);
            out += '}';
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool inline_items = !pretty || is_flat_array(j);
            out += '[';
            bool first = true;
            for (const auto &v : j) {
                if (!first) {
                    out += pretty && inline_items ? ", " : ",";
                }
                first = false;
                if (!inline_items) {
                    newline(out, pretty, depth + 1);
                }
                write_value(v, out, pretty, depth + 1);
            }
            if (!inline_items) {
                newline(out, pretty, depth);
            }
            out += ']';
            return;
        }
        case ojson::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string render(const ojson &report, bool pretty) {
    std::string out;
    write_value(report, out, pretty, 0);
    out += '\n';
    return out;
}

ojson vec3_json(const Vec3 &v) {
    return ojson::array({v[0], v[1], v[2]});
}

ojson state_json(std::span<const complex> psi) {
    ojson out = ojson::array();
    for (const auto &z : psi) {
        out.push_back(ojson::array({z.real(), z.imag()}));
    }
    return out;
}

ojson affine_json(const AffineChannel &a) {
    ojson m = ojson::array();
    for (size_t r = 0; r < 3; r++) {
        m.push_back(ojson::array({a.m()(r, 0), a.m()(r, 1), a.m()(r, 2)}));
    }
    return ojson{{"m", m}, {"c", vec3_json(a.c())}};
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

struct Options {
    std::string file;
    double p1 = 0.5;
    bool p1_given = false;
    bool pretty = false;
    std::string strategy = "product";
    uint64_t seed = 0;
    size_t restarts = 16;
    size_t n = 10000;
    bool entangled = false;
    std::string input = "optimal";
    size_t trials = 100000;
};

std::string where(const SpecFile &spec, size_t index) {
    return spec.path + ":" + std::to_string(spec.channels[index].line) + ": channels[" + std::to_string(index) + "]";
}

void require_two(const SpecFile &spec) {
    if (spec.channels.size() != 2) {
        throw CliError(kExitInputError, spec.path + ": expected exactly two channels, found " +
                                            std::to_string(spec.channels.size()));
    }
}

void require_qubits(const SpecFile &spec) {
    for (size_t k = 0; k < spec.channels.size(); k++) {
        if (spec.channels[k].dim != 2) {
            throw CliError(kExitUnsupportedDimension,
                           where(spec, k) + ": dimension " + std::to_string(spec.channels[k].dim) +
                               " is not supported by this command (qubit channels only)");
        }
    }
}

void require_kraus(const SpecFile &spec) {
    for (size_t k = 0; k < spec.channels.size(); k++) {
        if (!spec.channels[k].kraus.has_value()) {
            throw CliError(kExitInputError,
                           where(spec, k) + ": kind \"" + spec.channels[k].kind +
                               "\" has no Kraus representation, which this command needs");
        }
    }
}

PriorPair priors_for(const SpecFile &spec, const Options &opt) {
    double p1 = opt.p1_given ? opt.p1 : spec.p1.value_or(0.5);
    try {
        return PriorPair::from_p1(p1);
    } catch (const Error &e) {
        throw CliError(kExitInputError, spec.path + ": p1: " + e.what());
    }
}

ojson report_header(std::string_view command, const SpecFile &spec) {
    ojson r;
    r["tool"] = "chandisc";
    r["version"] = std::string(kToolVersion);
    r["command"] = std::string(command);
    r["input"] = {{"path", spec.path}, {"sha256", spec.sha256}};
    return r;
}

void add_priors(ojson &r, const PriorPair &pr) {
    r["p1"] = pr.p1();
    r["p2"] = pr.p2();
}

ojson cmd_pe(const SpecFile &spec, const Options &opt) {
    require_two(spec);
    require_qubits(spec);
    auto pr = priors_for(spec, opt);
    const auto &a1 = *spec.channels[0].affine;
    const auto &a2 = *spec.channels[1].affine;
    auto res = min_error_probability(a1, a2, pr);
    auto r = report_header("pe", spec);
    add_priors(r, pr);
    r["p_error"] = res.p_error;
    r["regime"] = std::string(regime_name(res.regime));
    r["optimal_bloch"] = res.optimal_bloch ? vec3_json(*res.optimal_bloch) : ojson(nullptr);
    r["trace_norm_at_opt"] = res.trace_norm_at_opt;
    r["affine_reps"] = ojson::array({affine_json(a1), affine_json(a2)});
    return r;
}

struct CommandFailure {
    ojson report;
    std::string message;
};

ojson cmd_pe_pauli(const SpecFile &spec, const Options &opt, std::optional<CommandFailure> &failure) {
    require_two(spec);
    for (size_t k = 0; k < 2; k++) {
        if (spec.channels[k].kind != "pauli") {
            throw CliError(kExitInputError,
                           where(spec, k) + ": pe-pauli needs pauli-kind channels, got \"" + spec.channels[k].kind + "\"");
        }
    }
    auto pr = priors_for(spec, opt);
    const auto &g1 = *spec.channels[0].gpc;
    const auto &g2 = *spec.channels[1].gpc;
    PauliProbs q1{g1.q()[0], g1.q()[1], g1.q()[2], g1.q()[3]};
    PauliProbs q2{g2.q()[0], g2.q()[1], g2.q()[2], g2.q()[3]};
    auto closed = pauli_closed_form(q1, q2, pr);
    double sacchi = pauli_sacchi_form(q1, q2, pr);
    bool agree = std::abs(closed.p_error - sacchi) <= kFormAgreementTol;

    auto r = report_header("pe-pauli", spec);
    add_priors(r, pr);
    r["p_error"] = closed.p_error;
    r["regime"] = std::string(regime_name(closed.regime));
    ojson axis = nullptr;
    if (closed.optimal_bloch) {
        const Vec3 &b = *closed.optimal_bloch;
        axis = b[0] != 0 ? "x" : b[1] != 0 ? "y" : "z";
    }
    r["c_form"] = {{"p_error", closed.p_error},
                   {"optimal_axis", axis},
                   {"optimal_bloch", closed.optimal_bloch ? vec3_json(*closed.optimal_bloch) : ojson(nullptr)},
                   {"trace_norm_at_opt", closed.trace_norm_at_opt}};
    r["m_form"] = {{"p_error", sacchi}};
    r["forms_agree"] = agree;
    if (!agree) {
        failure = CommandFailure{r, "closed forms disagree: " + format_double(closed.p_error) + " vs " +
                                        format_double(sacchi)};
    }
    return r;
}

StateVector tensor_with_zero(const StateVector &psi) {
    size_t d = psi.size();
    StateVector out(d * d);
    for (size_t i = 0; i < d; i++) {
        out[i * d] = psi[i];
    }
    return out;
}

ojson cmd_perfect(const SpecFile &spec, const Options &opt) {
    require_two(spec);
    require_kraus(spec);
    bool entangled;
    if (opt.strategy == "product") {
        entangled = false;
    } else if (opt.strategy == "entangled") {
        entangled = true;
    } else {
        throw CliError(kExitInputError, "--strategy must be product or entangled, got \"" + opt.strategy + "\"");
    }
    const auto &c1 = spec.channels[0];
    const auto &c2 = spec.channels[1];
    if (c1.dim != c2.dim) {
        throw CliError(kExitInputError, spec.path + ": channels act on different dimensions (" +
                                            std::to_string(c1.dim) + " and " + std::to_string(c2.dim) + ")");
    }
    const auto &k1 = *c1.kraus;
    const auto &k2 = *c2.kraus;
    auto ops = cross_operators(k1, k2);

    PerfectVerdict v;
    if (k1.ops().size() == 1 && k2.ops().size() == 1) {
        // An ancilla does not enlarge the numerical range of a unitary, so the
        // product decision answers both strategies.
        v = unitary_perfect(k1.ops()[0], k2.ops()[0]);
        if (entangled) {
            v.strategy = Strategy::Entangled;
            if (v.certificate) {
                v.certificate = tensor_with_zero(*v.certificate);
                v.residual = max_isotropy_residual(ops, *v.certificate);
            }
        }
    } else if (entangled && c1.gpc && c2.gpc && c1.gpc->same_basis(*c2.gpc)) {
        v = gpc_perfect_entangled(*c1.gpc, *c2.gpc);
    } else if (!entangled && c1.dim == 2) {
        v = qubit_product_perfect(k1, k2);
    } else {
        v = numeric_isotropic_search(ops, entangled, opt.seed, opt.restarts);
    }

    auto r = report_header("perfect", spec);
    r["verdict"] = std::string(verdict_name(v.distinguishable));
    r["strategy"] = std::string(strategy_name(v.strategy));
    r["method"] = std::string(method_name(v.method));
    r["certificate"] = v.certificate ? state_json(*v.certificate) : ojson(nullptr);
    r["residual"] = v.residual;
    if (v.method == Method::NumericSearch) {
        r["seed"] = opt.seed;
        r["restarts"] = opt.restarts;
    }
    return r;
}

ojson cmd_oracle(const SpecFile &spec, const Options &opt) {
    require_two(spec);
    require_qubits(spec);
    require_kraus(spec);
    auto pr = priors_for(spec, opt);
    if (opt.n < 1) {
        throw CliError(kExitInputError, "--n must be at least 1");
    }
    const auto &k1 = *spec.channels[0].kraus;
    const auto &k2 = *spec.channels[1].kraus;
    auto est = sampled_min_error(k1, k2, pr, opt.n, opt.entangled, opt.seed);
    auto r = report_header("oracle", spec);
    add_priors(r, pr);
    r["entangled"] = opt.entangled;
    r["seed"] = opt.seed;
    r["p_error_estimate"] = est.p_error_estimate;
    r["best_input"] = state_json(est.best_input);
    r["samples"] = est.samples;
    if (opt.entangled) {
        r["analytic_p_error"] = nullptr;
        r["gap"] = nullptr;
    } else {
        double analytic = min_error_probability(*spec.channels[0].affine, *spec.channels[1].affine, pr).p_error;
        r["analytic_p_error"] = analytic;
        r["gap"] = est.p_error_estimate - analytic;
    }
    return r;
}

Vec3 parse_bloch_triple(const std::string &text) {
    Vec3 r{};
    std::stringstream ss(text);
    std::string part;
    size_t k = 0;
    while (std::getline(ss, part, ',')) {
        if (k >= 3) {
            k = 4;
            break;
        }
        try {
            size_t used = 0;
            r[k] = std::stod(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) {
                used++;
            }
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
        } catch (const std::exception &) {
            throw CliError(kExitInputError, "--input: cannot parse \"" + part + "\" as a number");
        }
        k++;
    }
    if (k != 3) {
        throw CliError(kExitInputError, "--input must be \"optimal\" or a Bloch triple \"x,y,z\"");
    }
    if (std::abs(norm(r) - 1) > kPureInputTol) {
        throw CliError(kExitInputError, "--input Bloch vector must have unit norm (pure probe), got norm " +
                                            format_double(norm(r)));
    }
    return r;
}

ojson cmd_simulate(const SpecFile &spec, const Options &opt) {
    require_two(spec);
    require_qubits(spec);
    require_kraus(spec);
    auto pr = priors_for(spec, opt);
    if (opt.trials < 1) {
        throw CliError(kExitInputError, "--trials must be at least 1");
    }
    const auto &k1 = *spec.channels[0].kraus;
    const auto &k2 = *spec.channels[1].kraus;
    Vec3 bloch;
    double analytic;
    if (opt.input == "optimal") {
        auto res = min_error_probability(*spec.channels[0].affine, *spec.channels[1].affine, pr);
        if (res.regime == Regime::GuessPrior) {
            throw CliError(kExitMisuse,
                           "--input optimal: the pair is in the guess_prior regime, so there is no optimal probe "
                           "to simulate; pass an explicit Bloch triple instead");
        }
        bloch = *res.optimal_bloch;
        analytic = res.p_error;
    } else {
        bloch = parse_bloch_triple(opt.input);
        analytic = helstrom_error_at(k1, k2, pr, pure_state_from_bloch(bloch));
    }
    auto psi = pure_state_from_bloch(bloch);
    double empirical = simulate_experiment(k1, k2, pr, psi, opt.trials, opt.seed);
    double sigma = std::sqrt(std::max(analytic * (1 - analytic), 0.0) / static_cast<double>(opt.trials));

    auto r = report_header("simulate", spec);
    add_priors(r, pr);
    r["input_bloch"] = vec3_json(bloch);
    r["trials"] = opt.trials;
    r["seed"] = opt.seed;
    r["empirical_error"] = empirical;
    r["analytic_error"] = analytic;
    if (sigma > 0) {
        r["z_score"] = (empirical - analytic) / sigma;
    } else {
        r["z_score"] = empirical == analytic ? ojson(0.0) : ojson(nullptr);
    }
    return r;
}

ojson cmd_convert(const SpecFile &spec) {
    if (spec.channels.empty() || spec.channels.size() > 2) {
        throw CliError(kExitInputError, spec.path + ": expected one or two channels, found " +
                                            std::to_string(spec.channels.size()));
    }
    require_qubits(spec);
    auto r = report_header("convert", spec);
    if (spec.p1) {
        r["p1"] = *spec.p1;
    }
    ojson channels = ojson::array();
    for (const auto &c : spec.channels) {
        ojson entry{{"kind", "affine"}};
        auto a = affine_json(*c.affine);
        entry["m"] = a["m"];
        entry["c"] = a["c"];
        entry["source_kind"] = c.kind;
        channels.push_back(entry);
    }
    r["channels"] = channels;
    return r;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; k++) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 15];
    }
    return out;
}

SpecFile parse_spec_text(const std::string &text, const std::string &path) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        // Drop the library's "[json.exception.parse_error.101] " prefix.
        auto bracket = msg.find("] ");
        if (bracket != std::string::npos) {
            msg = msg.substr(bracket + 2);
        }
        if (msg.rfind("parse error at line", 0) == 0) {
            auto colon = msg.find(": ");
            if (colon != std::string::npos) {
                msg = msg.substr(colon + 2);
            }
        }
        throw CliError(kExitInputError,
                       path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON: " + msg);
    }
    if (!doc.is_object()) {
        throw CliError(kExitInputError, path + ":1: top level must be an object with a \"channels\" list");
    }
    SpecFile spec;
    spec.path = path;
    spec.sha256 = sha256_hex(text);

    auto p1 = doc.find("p1");
    if (p1 != doc.end() && !p1->is_null()) {
        if (!p1->is_number()) {
            throw CliError(kExitInputError, path + ": \"p1\" must be a number");
        }
        spec.p1 = p1->get<double>();
    }
    auto channels = doc.find("channels");
    if (channels == doc.end() || !channels->is_array()) {
        throw CliError(kExitInputError, path + ":1: missing \"channels\" list");
    }
    auto lines = channel_entry_lines(text);
    for (size_t k = 0; k < channels->size(); k++) {
        size_t line = k < lines.size() ? lines[k] : 1;
        std::string prefix = path + ":" + std::to_string(line) + ": channels[" + std::to_string(k) + "]: ";
        try {
            spec.channels.push_back(parse_channel((*channels)[k], line));
        } catch (const Error &e) {
            throw CliError(kExitInputError, prefix + e.what());
        } catch (const FieldError &e) {
            throw CliError(kExitInputError, prefix + e.what());
        } catch (const json::exception &e) {
            throw CliError(kExitInputError, prefix + e.what());
        }
    }
    return spec;
}

SpecFile load_spec_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError(kExitInputError, path + ": cannot open file");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_spec_text(text, path);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Minimum-error and perfect discrimination of quantum channels.", "chandisc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    auto add_file = [&](CLI::App *sub) {
        sub->add_option("file", opt.file, "Channel-spec JSON file")->required();
        sub->add_flag("--pretty", opt.pretty, "Indent the JSON report");
    };
    auto add_p1 = [&](CLI::App *sub) {
        return sub->add_option("--p1", opt.p1, "Prior of the first channel (overrides the file; default 0.5)");
    };

    auto *pe = app.add_subcommand("pe", "Minimum error probability with a single unentangled probe");
    add_file(pe);
    auto *pe_p1 = add_p1(pe);

    auto *pe_pauli = app.add_subcommand("pe-pauli", "Pauli-channel closed forms");
    add_file(pe_pauli);
    auto *pauli_p1 = add_p1(pe_pauli);

    auto *perfect = app.add_subcommand("perfect", "Decide perfect distinguishability");
    add_file(perfect);
    perfect->add_option("--strategy", opt.strategy, "product or entangled")->capture_default_str();
    perfect->add_option("--seed", opt.seed, "Seed for the numeric search")->capture_default_str();
    perfect->add_option("--restarts", opt.restarts, "Random starts for the numeric search")->capture_default_str();

    auto *oracle = app.add_subcommand("oracle", "Sampled brute-force error estimate");
    add_file(oracle);
    auto *oracle_p1 = add_p1(oracle);
    oracle->add_option("--n", opt.n, "Number of random probes")->capture_default_str();
    oracle->add_flag("--entangled", opt.entangled, "Sample bipartite probes with an ancilla");
    oracle->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo run of the Helstrom measurement");
    add_file(simulate);
    auto *simulate_p1 = add_p1(simulate);
    simulate->add_option("--input", opt.input, "optimal, or a Bloch triple x,y,z")->capture_default_str();
    simulate->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
    simulate->add_option("--seed", opt.seed, "Simulation seed")->capture_default_str();

    auto *convert = app.add_subcommand("convert", "Bloch affine form of each channel");
    add_file(convert);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    for (auto *o : {pe_p1, pauli_p1, oracle_p1, simulate_p1}) {
        opt.p1_given |= o->count() > 0;
    }

    try {
        SpecFile spec = load_spec_file(opt.file);
        std::optional<CommandFailure> failure;
        ojson report;
        if (app.got_subcommand(pe)) {
            report = cmd_pe(spec, opt);
        } else if (app.got_subcommand(pe_pauli)) {
            report = cmd_pe_pauli(spec, opt, failure);
        } else if (app.got_subcommand(perfect)) {
            report = cmd_perfect(spec, opt);
        } else if (app.got_subcommand(oracle)) {
            report = cmd_oracle(spec, opt);
        } else if (app.got_subcommand(simulate)) {
            report = cmd_simulate(spec, opt);
        } else {
            report = cmd_convert(spec);
        }
        out << render(report, opt.pretty);
        if (failure) {
            err << "chandisc: " << failure->message << "\n";
            return kExitInternal;
        }
        return kExitOk;
    } catch (const CliError &e) {
        err << "chandisc: " << e.what() << "\n";
        return e.exit_code();
    } catch (const Error &e) {
        err << "chandisc: " << opt.file << ": " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace chandisc
