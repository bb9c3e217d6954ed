#pragma once

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "padic.hpp"

namespace qlambda::io {

inline constexpr std::string_view kSchemaVersion = "qlambda.record/1";

enum class Format { Table, Jsonl, Csv };

inline Format parse_format(std::string_view s) {
    if (s == "table") return Format::Table;
    if (s == "jsonl") return Format::Jsonl;
    if (s == "csv") return Format::Csv;
    throw ParseError("unknown format '" + std::string(s) + "' (expected table, jsonl or csv)");
}

inline std::string_view to_string(Format f) {
    switch (f) {
    case Format::Table: return "table";
    case Format::Jsonl: return "jsonl";
    case Format::Csv: return "csv";
    }
    return "table";
}

// ---------------------------------------------------------------------------
// Parameter grammar

/// `re,im`, or a bare real.
inline Complex parse_complex(std::string_view s) {
    const std::string str(s);
    const auto comma = str.find(',');
    const auto to_d = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw ParseError("not a number: '" + t + "'");
        }
        if (used != t.size()) throw ParseError("trailing characters in '" + t + "'");
        return v;
    };
    if (comma == std::string::npos) return {to_d(str), 0.0};
    return {to_d(str.substr(0, comma)), to_d(str.substr(comma + 1))};
}

/// `a/b` or an integer.
inline std::optional<Rational> try_parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    bool digits = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else {
            return std::nullopt;
        }
    }
    if (!digits) return std::nullopt;
    std::string str(s);
    if (str[0] == '+') str.erase(0, 1);
    Rational r;
    if (r.set_str(str, 10) != 0) return std::nullopt;
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

/// `rou:f/a`: exp(2 pi i a/f).
inline std::optional<RootOfUnity> try_parse_root(std::string_view s) {
    if (s.rfind("rou:", 0) != 0) return std::nullopt;
    const std::string body(s.substr(4));
    const auto slash = body.find('/');
    if (slash == std::string::npos) throw ParseError("root of unity needs rou:f/a, got '" + std::string(s) + "'");
    try {
        std::size_t u1 = 0, u2 = 0;
        const long f = std::stol(body.substr(0, slash), &u1);
        const long a = std::stol(body.substr(slash + 1), &u2);
        if (u1 != slash || u2 != body.size() - slash - 1) throw ParseError("bad root of unity '" + std::string(s) + "'");
        if (f <= 0) throw ParseError("root of unity order must be positive");
        return RootOfUnity(f, a);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad root of unity '" + std::string(s) + "'");
    }
}

/// A parsed q or lambda: exact rational, exact root of unity, or complex.
using Param = std::variant<Rational, RootOfUnity, Complex>;

inline Param parse_q(std::string_view s) {
    if (s.rfind("rou:", 0) == 0) throw ParseError("q cannot be a root of unity");
    if (auto r = try_parse_rational(s)) return *r;
    return parse_complex(s);
}

inline Param parse_lambda(std::string_view s) {
    if (auto r = try_parse_root(s)) return *r;
    if (auto r = try_parse_rational(s)) return *r;
    return parse_complex(s);
}

/// x: `a/b`, integer or decimal; real and >= 0 is checked by the callee.
inline double parse_real(std::string_view s) {
    if (auto r = try_parse_rational(s)) return r->get_d();
    const Complex c = parse_complex(s);
    if (c.imag() != 0.0) throw ParseError("expected a real number, got '" + std::string(s) + "'");
    return c.real();
}

inline bool is_exact(const Param& p) { return !std::holds_alternative<Complex>(p); }

inline Complex to_complex(const Param& p) {
    if (const auto* r = std::get_if<Rational>(&p)) return {r->get_d(), 0.0};
    if (const auto* u = std::get_if<RootOfUnity>(&p)) return u->to_complex();
    return std::get<Complex>(p);
}

// ---------------------------------------------------------------------------
// Records

struct PAdicValue {
    unsigned long p = 0;
    long val = 0;
    BigInt unit = 0;
    long precision = 0;

    static PAdicValue from(const padic::PAdicNumber& x) {
        return {x.prime(), x.valuation(), x.is_zero() ? BigInt(0) : x.unit(), x.precision()};
    }
    bool operator==(const PAdicValue&) const = default;
};

using Value = std::variant<std::monostate, Rational, Complex, PAdicValue>;

struct ErrorInfo {
    std::string kind;
    std::string message;
    bool operator==(const ErrorInfo&) const = default;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

struct OutputRecord {
    std::string family;
    std::vector<long> indices;
    Fields params;  // q, lambda, x; p, N, M for p-adic
    Value value;
    std::string mode;
    Fields extra;
    std::optional<ErrorInfo> error;

    bool ok() const { return !error.has_value(); }
    bool operator==(const OutputRecord&) const = default;
};

inline ErrorInfo error_info(const Error& e) { return {std::string(qlambda::to_string(e.kind())), e.what()}; }

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Problems with a record; empty when it is valid.
inline std::vector<std::string> validate_record(const OutputRecord& r) {
    std::vector<std::string> problems;
    if (r.family.empty()) problems.push_back("family is empty");
    if (r.mode.empty()) problems.push_back("mode is empty");
    const bool has_value = !std::holds_alternative<std::monostate>(r.value);
    if (has_value == r.error.has_value()) problems.push_back("exactly one of value and error must be present");
    if (const auto* q = std::get_if<Rational>(&r.value))
        if (sgn(q->get_den()) <= 0) problems.push_back("rational denominator must be positive");
    if (const auto* c = std::get_if<Complex>(&r.value))
        if (!std::isfinite(c->real()) || !std::isfinite(c->imag())) problems.push_back("complex value is not finite");
    if (const auto* p = std::get_if<PAdicValue>(&r.value)) {
        if (p->precision < 0) problems.push_back("p-adic precision is negative");
        if (p->precision == 0 && p->unit != 0) problems.push_back("p-adic zero must have unit 0");
        if (p->precision > 0 && mpz_divisible_ui_p(p->unit.get_mpz_t(), p->p)) problems.push_back("p-adic unit divisible by p");
    }
    if (r.error && r.error->kind.empty()) problems.push_back("error kind is empty");
    return problems;
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::ordered_json value_json(const Value& v) {
    using J = nlohmann::ordered_json;
    if (const auto* q = std::get_if<Rational>(&v)) return J{{"num", q->get_num().get_str()}, {"den", q->get_den().get_str()}};
    if (const auto* c = std::get_if<Complex>(&v)) return J{{"re", c->real()}, {"im", c->imag()}};
    if (const auto* p = std::get_if<PAdicValue>(&v))
        return J{{"p", p->p}, {"val", p->val}, {"unit", p->unit.get_str()}, {"precision", p->precision}};
    return nullptr;
}

inline nlohmann::ordered_json fields_json(const Fields& f) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f) j[k] = v;
    return j;
}

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["family"] = r.family;
    j["indices"] = r.indices;
    j["params"] = fields_json(r.params);
    j["mode"] = r.mode;
    j["value"] = value_json(r.value);
    if (!r.extra.empty()) j["extra"] = fields_json(r.extra);
    if (r.error) j["error"] = {{"kind", r.error->kind}, {"message", r.error->message}};
    return j;
}

inline std::string render_jsonl(const OutputRecord& r) { return to_json(r).dump(); }

inline Value value_from_json(const nlohmann::ordered_json& j) {
    if (j.is_null()) return std::monostate{};
    if (j.contains("num")) {
        Rational q(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
        q.canonicalize();
        return q;
    }
    if (j.contains("re")) return Complex(j.at("re").get<double>(), j.at("im").get<double>());
    if (j.contains("unit"))
        return PAdicValue{j.at("p").get<unsigned long>(), j.at("val").get<long>(), BigInt(j.at("unit").get<std::string>()),
                          j.at("precision").get<long>()};
    throw ParseError("unrecognised value object");
}

inline Fields fields_from_json(const nlohmann::ordered_json& j) {
    Fields f;
    for (auto it = j.begin(); it != j.end(); ++it) f.emplace_back(it.key(), it.value().get<std::string>());
    return f;
}

inline OutputRecord parse_jsonl(std::string_view line) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record: ") + e.what());
    }
    if (!j.contains("schema") || j["schema"] != kSchemaVersion) throw ParseError("record schema is not " + std::string(kSchemaVersion));
    try {
        OutputRecord r;
        r.family = j.at("family").get<std::string>();
        r.indices = j.at("indices").get<std::vector<long>>();
        r.params = fields_from_json(j.at("params"));
        r.mode = j.at("mode").get<std::string>();
        r.value = value_from_json(j.at("value"));
        if (j.contains("extra")) r.extra = fields_from_json(j["extra"]);
        if (j.contains("error")) r.error = ErrorInfo{j["error"].at("kind").get<std::string>(), j["error"].at("message").get<std::string>()};
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record: ") + e.what());
    }
}

// --- CSV --------------------------------------------------------------------

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cells.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back();
        } else {
            cells.back() += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote in CSV line");
    return cells;
}

inline std::string join_indices(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

inline std::string join_fields(const Fields& f, std::initializer_list<std::string_view> skip = {}) {
    std::string s;
    for (const auto& [k, v] : f) {
        bool skipped = false;
        for (auto sk : skip) skipped |= (k == sk);
        if (skipped) continue;
        s += (s.empty() ? "" : ";") + k + "=" + v;
    }
    return s;
}

inline std::string field(const Fields& f, std::string_view key) {
    for (const auto& [k, v] : f)
        if (k == key) return v;
    return "";
}

/// Scalar records: family,n,q,lambda,x,mode,value_re,value_im,... with
/// value_re = "num/den" for exact rationals. p-adic records replace the
/// value columns with val,unit,precision.
inline std::vector<std::string> csv_header(bool padic) {
    if (padic) return {"family", "n", "p", "N", "M", "q", "lambda", "mode", "val", "unit", "precision", "params", "extra", "error"};
    return {"family", "n", "q", "lambda", "x", "mode", "value_re", "value_im", "params", "extra", "error"};
}

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_quote(cells[i]);
    return s;
}

inline bool is_padic_record(const OutputRecord& r) {
    return std::holds_alternative<PAdicValue>(r.value) || !field(r.params, "p").empty();
}

inline std::string render_csv_row(const OutputRecord& r, bool padic) {
    const std::string err = r.error ? r.error->kind + ":" + r.error->message : "";
    if (padic) {
        std::string val, unit, prec;
        if (const auto* p = std::get_if<PAdicValue>(&r.value)) {
            val = std::to_string(p->val);
            unit = p->unit.get_str();
            prec = std::to_string(p->precision);
        }
        return csv_join({r.family, join_indices(r.indices), field(r.params, "p"), field(r.params, "N"), field(r.params, "M"),
                         field(r.params, "q"), field(r.params, "lambda"), r.mode, val, unit, prec,
                         join_fields(r.params, {"p", "N", "M", "q", "lambda"}), join_fields(r.extra), err});
    }
    std::string re, im;
    if (const auto* q = std::get_if<Rational>(&r.value)) {
        re = q->get_str();
        im = "0";
    } else if (const auto* c = std::get_if<Complex>(&r.value)) {
        re = format_double(c->real());
        im = format_double(c->imag());
    }
    return csv_join({r.family, join_indices(r.indices), field(r.params, "q"), field(r.params, "lambda"), field(r.params, "x"),
                     r.mode, re, im, join_fields(r.params, {"q", "lambda", "x"}), join_fields(r.extra), err});
}

namespace detail {

inline std::vector<long> split_indices(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(std::stol(tok));
    return out;
}

inline Fields split_fields(const std::string& s) {
    Fields f;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad key=value cell '" + tok + "'");
        f.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return f;
}

inline void put(Fields& f, const std::string& k, const std::string& v) {
    if (!v.empty()) f.emplace_back(k, v);
}

} // namespace detail

/// Inverse of render_csv_row. Parameter order comes back as the column
/// order, so jsonl is the lossless stream; values round-trip exactly.
inline OutputRecord parse_csv_row(std::string_view line, bool padic) {
    const auto cells = csv_split(line);
    const auto header = csv_header(padic);
    if (cells.size() != header.size())
        throw ParseError("CSV row has " + std::to_string(cells.size()) + " cells, expected " + std::to_string(header.size()));
    OutputRecord r;
    r.family = cells[0];
    r.indices = detail::split_indices(cells[1]);
    std::string err;
    if (padic) {
        detail::put(r.params, "p", cells[2]);
        detail::put(r.params, "N", cells[3]);
        detail::put(r.params, "M", cells[4]);
        detail::put(r.params, "q", cells[5]);
        detail::put(r.params, "lambda", cells[6]);
        r.mode = cells[7];
        if (!cells[8].empty())
            r.value = PAdicValue{std::stoul(cells[2]), std::stol(cells[8]), BigInt(cells[9]), std::stol(cells[10])};
        for (auto& kv : detail::split_fields(cells[11])) r.params.push_back(kv);
        r.extra = detail::split_fields(cells[12]);
        err = cells[13];
    } else {
        detail::put(r.params, "q", cells[2]);
        detail::put(r.params, "lambda", cells[3]);
        detail::put(r.params, "x", cells[4]);
        r.mode = cells[5];
        if (!cells[6].empty()) {
            if (auto q = try_parse_rational(cells[6]); q && cells[7] == "0" && cells[6].find_first_of(".eE") == std::string::npos)
                r.value = *q;
            else
                r.value = Complex(std::stod(cells[6]), std::stod(cells[7]));
        }
        for (auto& kv : detail::split_fields(cells[8])) r.params.push_back(kv);
        r.extra = detail::split_fields(cells[9]);
        err = cells[10];
    }
    if (!err.empty()) {
        const auto colon = err.find(':');
        r.error = ErrorInfo{err.substr(0, colon), colon == std::string::npos ? "" : err.substr(colon + 1)};
    }
    return r;
}

// --- table ------------------------------------------------------------------

inline std::string value_text(const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->get_str();
    if (const auto* c = std::get_if<Complex>(&v)) {
        if (c->imag() == 0.0) return format_short(c->real());
        return format_short(c->real()) + (c->imag() < 0 ? " - " : " + ") + format_short(std::abs(c->imag())) + "i";
    }
    if (const auto* p = std::get_if<PAdicValue>(&v)) {
        const std::string pp = std::to_string(p->p);
        if (p->precision == 0) return "O(" + pp + "^" + std::to_string(p->val) + ")";
        return pp + "^" + std::to_string(p->val) + " * " + p->unit.get_str() + " + O(" + pp + "^" +
               std::to_string(p->val + p->precision) + ")";
    }
    return "";
}

/// Column-aligned text; the first row is the header.
inline std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            const bool last = i + 1 == rows[r].size();
            os << rows[r][i];
            if (!last) os << std::string(width[i] - rows[r][i].size() + 2, ' ');
        }
        os << '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
            os << std::string(total, '-') << '\n';
        }
    }
    return os.str();
}

inline std::string render_table(const std::vector<OutputRecord>& records) {
    std::vector<std::vector<std::string>> rows{{"family", "n", "params", "mode", "value", "extra"}};
    for (const auto& r : records) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
        std::string extra;
        for (const auto& [k, v] : r.extra) extra += (extra.empty() ? "" : " ") + k + "=" + v;
        const std::string value = r.error ? "error[" + r.error->kind + "]: " + r.error->message : value_text(r.value);
        rows.push_back({r.family, join_indices(r.indices), params, r.mode, value, extra});
    }
    return align_rows(rows);
}

inline std::string render(const std::vector<OutputRecord>& records, Format f) {
    std::string out;
    switch (f) {
    case Format::Table: return render_table(records);
    case Format::Jsonl:
        for (const auto& r : records) out += render_jsonl(r) + "\n";
        return out;
    case Format::Csv: {
        const bool padic = !records.empty() && is_padic_record(records.front());
        out = csv_join(csv_header(padic)) + "\n";
        for (const auto& r : records) out += render_csv_row(r, padic) + "\n";
        return out;
    }
    }
    return out;
}

} // namespace qlambda::io
