#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "riordan/characterization.hpp"
#include "riordan/matrix.hpp"
#include "riordan/paths.hpp"
#include "riordan/transforms.hpp"

namespace riordan {

enum class Format { text, csv, json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    fail(Errc::usage_error, "unknown format '" + s + "' (expected text, csv or json)");
}

// Numbers are serialized as decimal strings: entries outgrow 64-bit range
// quickly and JSON numbers would lose them.
inline std::string render(const IntMatrix& m, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
                rows.push_back(std::move(row));
            }
            return rows.dump();
        }
        case Format::csv: {
            std::string out;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (j) out += ",";
                    out += m.at(i, j).str();
                }
                out += "\n";
            }
            return out;
        }
        case Format::text: {
            std::vector<std::size_t> width(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    width[j] = std::max(width[j], m.at(i, j).str().size());
            std::string out;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    std::string e = m.at(i, j).str();
                    if (j) out += " ";
                    out += std::string(width[j] - e.size(), ' ') + e;
                }
                out += "\n";
            }
            return out;
        }
    }
    return {};
}

inline std::string render(std::span<const Int> seq, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& v : seq) arr.push_back(v.str());
            return arr.dump();
        }
        case Format::csv: {
            std::string out;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) out += ",";
                out += seq[i].str();
            }
            return out + "\n";
        }
        case Format::text: {
            std::string out;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) out += ", ";
                out += seq[i].str();
            }
            return out + "\n";
        }
    }
    return {};
}

inline std::string render(std::span<const Rat> seq, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& v : seq) arr.push_back(rat_str(v));
            return arr.dump();
        }
        default: {
            std::string out;
            const char* sep = fmt == Format::csv ? "," : ", ";
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) out += sep;
                out += rat_str(seq[i]);
            }
            return out + "\n";
        }
    }
}

inline IntMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.empty() || !j[0].is_array())
        fail(Errc::parse_error, "matrix JSON must be an array of arrays of decimal strings");
    std::size_t rows = j.size(), cols = j[0].size();
    IntMatrix m(rows, cols, MatShape::general);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(Errc::parse_error, "ragged matrix JSON");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = Int(j[i][k].get<std::string>());
    }
    return m;
}

namespace detail {

inline StepSpec stepspec_from_json_obj(const nlohmann::json& j) {
    auto steps_of = [](const nlohmann::json& arr) {
        std::vector<Step> out;
        for (const auto& s : arr) {
            Step st;
            st.dx = s.at("dx").get<long>();
            st.dy = s.at("dy").get<long>();
            if (s.contains("w")) st.weight = Int(s["w"].get<long long>());
            if (st.dx == 0 && st.dy == 0)
                fail(Errc::parse_error, "step (0,0) is not allowed");
            out.push_back(st);
        }
        return out;
    };
    StepSpec spec;
    if (!j.contains("steps")) fail(Errc::parse_error, "step spec needs a \"steps\" array");
    spec.steps = steps_of(j.at("steps"));
    if (j.contains("region")) {
        std::string r = j.at("region").get<std::string>();
        if (r == "triangle") spec.region = Region::triangle;
        else if (r == "quadrant") spec.region = Region::quadrant;
        else if (r == "halfplane") spec.region = Region::halfplane;
        else fail(Errc::parse_error, "unknown region '" + r + "'");
    }
    if (j.contains("levels"))
        for (const auto& [key, val] : j.at("levels").items())
            spec.levels[std::stol(key)] = steps_of(val);
    if (spec.steps.empty()) fail(Errc::parse_error, "empty step set");
    return spec;
}

}  // namespace detail

// { "steps": [{"dx":int,"dy":int,"w":int},...], "region": "triangle|quadrant|halfplane",
//   "levels": {"0": [steps...], ...} }   "w" defaults to 1.
inline StepSpec stepspec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "bad step spec JSON");
    return detail::stepspec_from_json_obj(j);
}

// { "rows": [[int,...],...], "rho": [int,...],
//   "extra_terms": [{"coeff":int,"xpow":int,"upow":nat},...] }
inline AMatrixSpec amatrixspec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "bad A-matrix spec JSON");
    AMatrixSpec spec;
    if (!j.contains("rows")) fail(Errc::parse_error, "A-matrix spec needs \"rows\"");
    for (const auto& row : j.at("rows")) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(Int(v.get<long long>()));
        spec.rows.push_back(std::move(r));
    }
    if (j.contains("rho"))
        for (const auto& v : j.at("rho")) spec.rho.push_back(Int(v.get<long long>()));
    if (j.contains("extra_terms"))
        for (const auto& t : j.at("extra_terms"))
            spec.extra.push_back({Int(t.at("coeff").get<long long>()), t.at("xpow").get<long>(),
                                  t.at("upow").get<unsigned>()});
    spec.validate();
    return spec;
}

// { "kind": "jacobi|thron", "b": ["p/q",...], "lam": ["p/q",...] }
inline CFSpec cfspec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "bad continued fraction JSON");
    CFSpec spec;
    std::string kind = j.value("kind", "jacobi");
    if (kind == "jacobi") spec.kind = CFSpec::Kind::jacobi;
    else if (kind == "thron") spec.kind = CFSpec::Kind::thron;
    else fail(Errc::parse_error, "unknown continued fraction kind '" + kind + "'");
    auto rats = [](const nlohmann::json& arr) {
        std::vector<Rat> out;
        for (const auto& v : arr)
            out.push_back(v.is_string() ? parse_rat(v.get<std::string>())
                                        : Rat(v.get<long long>()));
        return out;
    };
    if (j.contains("b")) spec.b_or_c = rats(j.at("b"));
    if (j.contains("lam")) spec.lam_or_d = rats(j.at("lam"));
    return spec;
}

}  // namespace riordan
