#pragma once

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eflab/comparator.hpp"
#include "eflab/explicit_formula.hpp"
#include "eflab/fourier_pair.hpp"
#include "eflab/selberg.hpp"
#include "eflab/zeros.hpp"

namespace eflab {

inline constexpr int kSchemaVersion = 1;

// All floating-point output goes through one 17-significant-digit formatter
// so that reruns of identical configs are byte-identical.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Minimal insertion-ordered JSON value; field order is part of the schema.
class Json {
public:
    Json() : kind_(Kind::object) {}
    static Json number(double v) { return Json(Kind::number, format_g17(v)); }
    static Json integer(long long v) { return Json(Kind::number, std::to_string(v)); }
    static Json string(std::string v) { return Json(Kind::string, std::move(v)); }
    static Json boolean(bool v) { return Json(Kind::boolean, v ? "true" : "false"); }
    static Json array() { return Json(Kind::array, ""); }
    static Json object() { return Json(Kind::object, ""); }

    Json& set(const std::string& key, Json v) {
        fields_.emplace_back(key, std::move(v));
        return *this;
    }
    Json& set(const std::string& key, double v) { return set(key, number(v)); }
    Json& set(const std::string& key, long long v) { return set(key, integer(v)); }
    Json& set(const std::string& key, int v) { return set(key, integer(v)); }
    Json& set(const std::string& key, bool v) { return set(key, boolean(v)); }
    Json& set(const std::string& key, const std::string& v) { return set(key, string(v)); }
    Json& set(const std::string& key, const char* v) { return set(key, string(v)); }
    Json& push(Json v) {
        fields_.emplace_back("", std::move(v));
        return *this;
    }
    Json& push(double v) { return push(number(v)); }

    std::string dump(int indent = 0) const {
        std::string out;
        write(out, indent);
        out.push_back('\n');
        return out;
    }

private:
    enum class Kind { object, array, number, string, boolean };
    Json(Kind k, std::string scalar) : kind_(k), scalar_(std::move(scalar)) {}

    static void escape(std::string& out, const std::string& s) {
        out.push_back('"');
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default: out.push_back(c);
            }
        }
        out.push_back('"');
    }

    void write(std::string& out, int depth) const {
        const std::string pad(2 * depth, ' ');
        const std::string pad1(2 * (depth + 1), ' ');
        switch (kind_) {
            case Kind::number:
            case Kind::boolean: out += scalar_; break;
            case Kind::string: escape(out, scalar_); break;
            case Kind::object: {
                if (fields_.empty()) { out += "{}"; break; }
                out += "{\n";
                for (std::size_t i = 0; i < fields_.size(); ++i) {
                    out += pad1;
                    escape(out, fields_[i].first);
                    out += ": ";
                    fields_[i].second.write(out, depth + 1);
                    if (i + 1 < fields_.size()) out += ",";
                    out += "\n";
                }
                out += pad + "}";
                break;
            }
            case Kind::array: {
                if (fields_.empty()) { out += "[]"; break; }
                out += "[\n";
                for (std::size_t i = 0; i < fields_.size(); ++i) {
                    out += pad1;
                    fields_[i].second.write(out, depth + 1);
                    if (i + 1 < fields_.size()) out += ",";
                    out += "\n";
                }
                out += pad + "]";
                break;
            }
        }
    }

    Kind kind_;
    std::string scalar_;
    std::vector<std::pair<std::string, Json>> fields_;
};

// CSV with comma separator, '.' decimal point, LF line endings.
class Csv {
public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    std::string dump() const {
        std::string out = join(header_);
        for (const auto& r : rows_) out += join(r);
        return out;
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line.push_back(',');
            line += cells[i];
        }
        line.push_back('\n');
        return line;
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// ------------------------------------------------------------------
// Type serializers
// ------------------------------------------------------------------

inline Json to_json(const FourierPair& pair) {
    Json j = Json::object();
    j.set("family", pair.family == FourierPair::Family::sinc_product ? "sinc_product" : "table");
    if (pair.ingham) {
        j.set("N", pair.ingham->N);
        j.set("alpha", pair.ingham->alpha);
        j.set("M", pair.ingham->M);
    } else {
        Json w = Json::array();
        for (double x : pair.widths) w.push(x);
        j.set("widths", std::move(w));
    }
    j.set("support_halfwidth", pair.support_halfwidth);
    return j;
}

inline std::string pair_label(const FourierPair& pair) {
    if (pair.ingham)
        return "ingham:" + std::to_string(pair.ingham->N) + "," + format_g17(pair.ingham->alpha) + "," +
               std::to_string(pair.ingham->M);
    std::string s = "sinc:";
    for (std::size_t i = 0; i < pair.widths.size(); ++i) {
        if (i) s.push_back(',');
        s += format_g17(pair.widths[i]);
    }
    return s;
}

inline Json zero_list_sidecar(const ZeroList& z) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("datum", z.source);
    j.set("t_max", z.t_max);
    j.set("complete", z.complete);
    j.set("count", static_cast<long long>(z.ordinates.size()));
    return j;
}

inline std::string zero_list_csv(const ZeroList& z) {
    Csv csv({"ordinate"});
    for (double g : z.ordinates) csv.add_row({format_g17(g)});
    return csv.dump();
}

inline Json to_json(const EFReport& r) {
    Json params = Json::object();
    params.set("t", r.params.t);
    params.set("L", r.params.L);
    params.set("zero_height", r.params.zero_height);
    params.set("quad_halfwidth", r.params.quad_halfwidth);
    params.set("quad_points", r.params.quad_points);
    params.set("prime_cutoff", r.prime_cutoff_value);

    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("datum", r.datum);
    j.set("params", std::move(params));
    j.set("zero_sum_re", r.zero_sum_value.real());
    j.set("zero_sum_im", r.zero_sum_value.imag());
    j.set("pole_term_re", r.pole_term_value.real());
    j.set("pole_term_im", r.pole_term_value.imag());
    j.set("arch_term_re", r.arch_term_value.real());
    j.set("arch_term_im", r.arch_term_value.imag());
    j.set("prime_term_re", r.prime_term_value.real());
    j.set("prime_term_im", r.prime_term_value.imag());
    j.set("residual", r.residual);
    j.set("budget", r.budget);
    j.set("pass", r.pass);
    return j;
}

inline Json to_json(const CountReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("T", r.T);
    j.set("counted", static_cast<long long>(r.counted));
    j.set("predicted_main", r.predicted_main);
    j.set("discrepancy", r.discrepancy);
    j.set("c_fit", r.c_fit);
    j.set("exact_match", r.exact_match);
    return j;
}

inline Json to_json(const DecayReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("max_ratio", r.max_ratio);
    j.set("worst_t", r.worst_t);
    j.set("holds", r.holds);
    return j;
}

inline Json to_json(const DegreeTestReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("mean_scaled_delta", r.mean_scaled_delta);
    j.set("threshold", r.threshold);
    j.set("verdict", r.verdict);
    return j;
}

inline Json to_json(const ProbeResult& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("m", static_cast<long long>(r.m));
    j.set("estimate_re", r.estimate.real());
    j.set("estimate_im", r.estimate.imag());
    j.set("target_re", r.target.real());
    j.set("target_im", r.target.imag());
    j.set("relative_error", r.relative_error);
    j.set("T", r.T);
    j.set("L", r.L);
    j.set("W", r.W);
    j.set("mode", r.zeros_mode ? "zeros" : "coefficients");
    j.set("mask_fraction", r.mask_fraction);
    j.set("budget", r.budget);
    return j;
}

inline Json to_json(const MeanValueReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("lhs_integral", r.lhs_integral);
    j.set("rhs_bound", r.rhs_bound);
    j.set("ratio", r.ratio);
    j.set("prime_terms", r.prime_terms);
    return j;
}

inline Json to_json(const MaskedZReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("lhs", r.lhs);
    j.set("rhs", r.rhs);
    j.set("ratio", r.ratio);
    j.set("mask_measure", r.mask_measure);
    j.set("lhs_uncertainty", r.lhs_uncertainty);
    return j;
}

inline Json to_json(const ThinnessReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("passes", r.passes);
    j.set("fitted_constant", r.fitted_constant);
    j.set("delta", r.delta);
    j.set("ceiling", r.ceiling);
    return j;
}

inline Json to_json(const GrowthReport& r) {
    Json j = Json::object();
    j.set("schema_version", kSchemaVersion);
    j.set("sum_at_x", r.sum_at_x);
    j.set("bound_1_ratio", r.bound_1_ratio);
    j.set("bound_3_ratio", r.bound_3_ratio);
    return j;
}

} // namespace eflab
