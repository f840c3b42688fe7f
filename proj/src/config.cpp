#include "stirap/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "stirap/output.hpp"

namespace stirap {

ConfigError::ConfigError(int line, const std::string &field, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + (field.empty() ? "" : ", " + field) + ": " + message),
      line_(line), field_(field) {}

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*, term := unary
// (('*'|'/') unary)*, unary := ('-'|'+') unary | power, power := atom ('^' unary)?
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    double parse() {
        const double value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("bad expression '" + std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double value = term();
        for (;;) {
            if (accept('+')) value += term();
            else if (accept('-')) value -= term();
            else return value;
        }
    }

    double term() {
        double value = unary();
        for (;;) {
            if (accept('*')) value *= unary();
            else if (accept('/')) value /= unary();
            else return value;
        }
    }

    double unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    double power() {
        const double base = atom();
        if (accept('^')) return std::pow(base, unary());
        return base;
    }

    double atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end");
        if (accept('(')) {
            const double value = expr();
            if (!accept(')')) fail("missing ')'");
            return value;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    double number() {
        char *end = nullptr;
        const std::string copy(text_.substr(pos_));
        const double value = std::strtod(copy.c_str(), &end);
        const auto consumed = static_cast<std::size_t>(end - copy.c_str());
        if (consumed == 0) fail("bad number");
        pos_ += consumed;
        return value;
    }

    double identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "pi") return std::numbers::pi;
        static const std::map<std::string, double (*)(double)> functions{
            {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
            {"tan", [](double x) { return std::tan(x); }},   {"sqrt", [](double x) { return std::sqrt(x); }},
            {"exp", [](double x) { return std::exp(x); }},
        };
        const auto fn = functions.find(name);
        if (fn == functions.end()) fail("unknown name '" + name + "'");
        if (!accept('(')) fail("expected '(' after " + name);
        const double arg = expr();
        if (!accept(')')) fail("missing ')'");
        return fn->second(arg);
    }
};

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return !std::isspace(static_cast<unsigned char>(c)); };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

struct FieldContext {
    int line;
    std::string field;
    std::string_view value;
};

double number_of(const FieldContext &ctx) {
    try {
        const double v = evaluate_expression(ctx.value);
        if (!std::isfinite(v)) throw std::invalid_argument("value is not finite");
        return v;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(ctx.line, ctx.field, e.what());
    }
}

double positive_of(const FieldContext &ctx) {
    const double v = number_of(ctx);
    if (!(v > 0.0)) throw ConfigError(ctx.line, ctx.field, "must be positive");
    return v;
}

double non_negative_of(const FieldContext &ctx) {
    const double v = number_of(ctx);
    if (v < 0.0) throw ConfigError(ctx.line, ctx.field, "must be non-negative");
    return v;
}

using Setter = std::function<void(SimulationConfig &, const FieldContext &)>;

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table{
        {"qubit.alpha", [](auto &c, const auto &f) { c.qubit.alpha = number_of(f); }},
        {"qubit.alpha_phase", [](auto &c, const auto &f) { c.qubit.alpha_phase = number_of(f); }},
        {"qubit.beta", [](auto &c, const auto &f) { c.qubit.beta = number_of(f); }},
        {"qubit.beta_phase", [](auto &c, const auto &f) { c.qubit.beta_phase = number_of(f); }},
        {"rotation.chi", [](auto &c, const auto &f) { c.pulses.chi = number_of(f); }},
        {"rotation.eta", [](auto &c, const auto &f) { c.pulses.eta = number_of(f); }},
        {"rotation.delta", [](auto &c, const auto &f) { c.pulses.delta = number_of(f); }},
        {"pulses.omega0", [](auto &c, const auto &f) { c.pulses.omega0 = non_negative_of(f); }},
        {"pulses.tau", [](auto &c, const auto &f) { c.pulses.tau = positive_of(f); }},
        {"pulses.t0", [](auto &c, const auto &f) { c.pulses.t0 = positive_of(f); }},
        {"pulses.T", [](auto &c, const auto &f) { c.pulses.big_t = positive_of(f); }},
        {"pulses.detuning", [](auto &c, const auto &f) { c.pulses.detuning = number_of(f); }},
        {"pulses.shape",
         [](auto &c, const auto &f) {
             try {
                 c.pulses.shape = parse_pulse_shape(f.value);
             } catch (const std::invalid_argument &e) {
                 throw ConfigError(f.line, f.field, e.what());
             }
         }},
        {"numerics.step", [](auto &c, const auto &f) { c.numerics.step = non_negative_of(f); }},
        {"numerics.norm_tolerance", [](auto &c, const auto &f) { c.numerics.norm_tolerance = positive_of(f); }},
        {"numerics.fidelity_threshold", [](auto &c, const auto &f) { c.numerics.fidelity_threshold = number_of(f); }},
        {"numerics.sample_interval", [](auto &c, const auto &f) { c.numerics.sample_interval = positive_of(f); }},
        {"numerics.adiabatic_threshold",
         [](auto &c, const auto &f) { c.numerics.adiabatic_threshold = non_negative_of(f); }},
        {"output.dir", [](auto &c, const auto &f) { c.output.dir = std::string(f.value); }},
        {"output.stride",
         [](auto &c, const auto &f) {
             const double v = positive_of(f);
             if (v != std::floor(v)) throw ConfigError(f.line, f.field, "must be a positive integer");
             c.output.stride = static_cast<int>(v);
         }},
    };
    return table;
}

}  // namespace

double evaluate_expression(std::string_view text) {
    return ExpressionParser(text).parse();
}

QubitState QubitConfig::state() const {
    return {std::polar(1.0, alpha_phase) * alpha, std::polar(1.0, beta_phase) * beta};
}

SimulationConfig default_config() {
    SimulationConfig c;
    c.qubit.alpha = std::cos(std::numbers::pi / 5.0);
    c.qubit.beta = std::sin(std::numbers::pi / 5.0);
    c.pulses.chi = -std::numbers::pi / 12.0;
    c.pulses.eta = 0.0;
    c.pulses.delta = std::numbers::pi;
    return c;
}

SimulationConfig parse_config(std::string_view text) {
    SimulationConfig config;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "", "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            static const std::array known{"qubit", "rotation", "pulses", "numerics", "output"};
            if (std::find(known.begin(), known.end(), section) == known.end()) {
                throw ConfigError(line_no, section, "unknown section");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "", "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) throw ConfigError(line_no, key, "key outside of a section");
        const std::string field = section + "." + key;
        const auto setter = setters().find(field);
        if (setter == setters().end()) throw ConfigError(line_no, field, "unknown key");
        if (value.empty()) throw ConfigError(line_no, field, "missing value");
        setter->second(config, FieldContext{line_no, field, value});
    }

    try {
        (void)config.qubit.state();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(line_no, "qubit", e.what());
    }
    try {
        config.pulses.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(line_no, "pulses", e.what());
    }
    if (config.numerics.fidelity_threshold < 0.0 || config.numerics.fidelity_threshold > 1.0) {
        throw ConfigError(line_no, "numerics.fidelity_threshold", "must lie in [0, 1]");
    }
    return config;
}

SimulationConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "", "cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string format_config(const SimulationConfig &c) {
    std::ostringstream out;
    const auto num = [](double v) { return format_double(v); };
    out << "[qubit]\n"
        << "alpha = " << num(c.qubit.alpha) << "\n"
        << "alpha_phase = " << num(c.qubit.alpha_phase) << "\n"
        << "beta = " << num(c.qubit.beta) << "\n"
        << "beta_phase = " << num(c.qubit.beta_phase) << "\n\n"
        << "[rotation]\n"
        << "chi = " << num(c.pulses.chi) << "\n"
        << "eta = " << num(c.pulses.eta) << "\n"
        << "delta = " << num(c.pulses.delta) << "\n\n"
        << "[pulses]\n"
        << "omega0 = " << num(c.pulses.omega0) << "\n"
        << "tau = " << num(c.pulses.tau) << "\n"
        << "t0 = " << num(c.pulses.t0) << "\n"
        << "T = " << num(c.pulses.big_t) << "\n"
        << "detuning = " << num(c.pulses.detuning) << "\n"
        << "shape = " << to_string(c.pulses.shape) << "\n\n"
        << "[numerics]\n"
        << "step = " << num(c.numerics.step) << "\n"
        << "norm_tolerance = " << num(c.numerics.norm_tolerance) << "\n"
        << "fidelity_threshold = " << num(c.numerics.fidelity_threshold) << "\n"
        << "sample_interval = " << num(c.numerics.sample_interval) << "\n"
        << "adiabatic_threshold = " << num(c.numerics.adiabatic_threshold) << "\n\n"
        << "[output]\n"
        << "dir = " << c.output.dir << "\n"
        << "stride = " << c.output.stride << "\n";
    return out.str();
}

}  // namespace stirap
