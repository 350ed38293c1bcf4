#include "horoct/report.hpp"

#include <array>
#include <cstdio>
#include <unordered_map>

namespace horoct {

ReportFormat parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "markdown-summary") return ReportFormat::markdown_summary;
    throw UsageError("unknown format: " + std::string(name));
}

namespace {

void append_json_escaped(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    std::array<char, 8> buf{};
                    std::snprintf(buf.data(), buf.size(), "\\u%04x",
                                  static_cast<unsigned>(static_cast<unsigned char>(c)));
                    out += buf.data();
                } else {
                    out += c;
                }
        }
    }
}

void append_json_string(std::string& out, std::string_view text) {
    out += '"';
    append_json_escaped(out, text);
    out += '"';
}

std::string render_json(const std::vector<Verdict>& verdicts) {
    if (verdicts.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Verdict& v = verdicts[i];
        out += "  {\n    \"identity_id\": ";
        append_json_string(out, v.identity_id);
        out += ",\n    \"params\": {\"a\": ";
        append_json_string(out, to_canonical(v.params.a));
        out += ", \"b\": ";
        append_json_string(out, to_canonical(v.params.b));
        out += ", \"p\": ";
        append_json_string(out, to_canonical(v.params.p));
        out += ", \"q\": ";
        append_json_string(out, to_canonical(v.params.q));
        out += "},\n    \"n\": " + std::to_string(v.n);
        out += ",\n    \"status\": ";
        append_json_string(out, to_string(v.status));
        if (v.witness) {
            out += ",\n    \"witness\": {\n      \"lhs\": ";
            append_json_string(out, v.witness->lhs);
            out += ",\n      \"rhs\": ";
            append_json_string(out, v.witness->rhs);
            out += "\n    }";
        }
        out += "\n  }";
        out += i + 1 < verdicts.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

void append_csv_quoted(std::string& out, std::string_view text) {
    out += '"';
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

std::string render_csv(const std::vector<Verdict>& verdicts) {
    std::string out = "identity_id,a,b,p,q,n,status,witness_lhs,witness_rhs\n";
    for (const Verdict& v : verdicts) {
        out += v.identity_id;
        out += ',' + to_canonical(v.params.a);
        out += ',' + to_canonical(v.params.b);
        out += ',' + to_canonical(v.params.p);
        out += ',' + to_canonical(v.params.q);
        out += ',' + std::to_string(v.n);
        out += ',';
        out += to_string(v.status);
        out += ',';
        append_csv_quoted(out, v.witness ? v.witness->lhs : "");
        out += ',';
        append_csv_quoted(out, v.witness ? v.witness->rhs : "");
        out += '\n';
    }
    return out;
}

struct Tally {
    std::size_t match = 0;
    std::size_t mismatch = 0;
    std::size_t inapplicable = 0;

    std::size_t total() const { return match + mismatch + inapplicable; }
};

std::string render_markdown(const std::vector<Verdict>& verdicts) {
    std::vector<std::pair<std::string, Tally>> rows;
    std::unordered_map<std::string, std::size_t> index;
    for (const Verdict& v : verdicts) {
        auto [it, fresh] = index.try_emplace(v.identity_id, rows.size());
        if (fresh) rows.push_back({v.identity_id, {}});
        Tally& t = rows[it->second].second;
        switch (v.status) {
            case Status::match: ++t.match; break;
            case Status::mismatch: ++t.mismatch; break;
            case Status::inapplicable: ++t.inapplicable; break;
        }
    }

    Tally grand;
    std::string out = "# Verification summary\n\n";
    out += "| identity | match | mismatch | inapplicable | total |\n";
    out += "| --- | ---: | ---: | ---: | ---: |\n";
    for (const auto& [id, t] : rows) {
        out += "| " + id + " | " + std::to_string(t.match) + " | " +
               std::to_string(t.mismatch) + " | " + std::to_string(t.inapplicable) + " | " +
               std::to_string(t.total()) + " |\n";
        grand.match += t.match;
        grand.mismatch += t.mismatch;
        grand.inapplicable += t.inapplicable;
    }
    out += "\nTotal: " + std::to_string(grand.total()) + " verdicts, " +
           std::to_string(grand.match) + " match, " + std::to_string(grand.mismatch) +
           " mismatch, " + std::to_string(grand.inapplicable) + " inapplicable.\n";
    return out;
}

} // namespace

std::string render_report(const std::vector<Verdict>& verdicts, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return render_json(verdicts);
        case ReportFormat::csv: return render_csv(verdicts);
        case ReportFormat::markdown_summary: return render_markdown(verdicts);
    }
    throw std::logic_error("unreachable format");
}

} // namespace horoct
